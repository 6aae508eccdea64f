#include "mould/checks.hpp"
#include "mould/constructions.hpp"
#include "mould/flexion.hpp"
#include "mould/random.hpp"

namespace mould::checks {

namespace {

Bimould power_mould(int e, int maxlen) {
  Bimould f = Bimould::single(1, RatFun::variable(x_var(1)).pow(e), maxlen, Layer::u_const);
  f.set_weight(e + 1);
  return f;
}

std::string power_name(int e) { return "x1^" + std::to_string(e); }

// Random Lie-like element supported in lengths <= 2, extended to the truncation.
Bimould random_generator_mould(std::uint64_t seed, const CheckParams& p) {
  RandomShape s;
  s.maxlen = 2;
  s.degree = p.degree;
  s.max_factors = 1;
  Bimould small = gen_random_bimould(seed, s);
  Bimould l(p.max_length);
  for (int r = 1; r <= std::min(2, p.max_length); ++r) l.set(r, small[r]);
  return l;
}

Bimould random_target(std::uint64_t seed, const CheckParams& p) {
  RandomShape s;
  s.maxlen = p.max_length;
  s.degree = p.degree;
  s.max_factors = 1;
  return gen_random_bimould(seed, s);
}

void thm_main(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  Bimould dp = diri_par(n);
  for (int e : {2, 4}) {
    Bimould f = power_mould(e, n);
    expect_equal(rep, "adari-par", power_name(e), swap(anti(chi_B(f, n))),
                 adari_dilator(dp, swap(anti(f)), SeriesSide::right, n));
  }
}

void cor_ds_lift(const CheckParams& p, CheckReport& rep) {
  for (int e : {2, 4}) {
    Bimould chi = chi_B(power_mould(e, p.max_length), p.max_length);
    absorb(rep, power_name(e) + " ", is_ds(chi, p.max_length, p.parity, p.harmonic));
  }
}

void thm_dilator_series(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  const int targets = 3;
  for (int t = 0; t < p.trials; ++t) {
    Bimould l = random_generator_mould(trial_seed(p, "thm-dilator-series/L", t), p);
    Bimould d = dilator_of(expari(l, n), n);
    Bimould d_inv = dilator_of(expari(-l, n), n);
    for (int b = 0; b < targets; ++b) {
      Bimould target = random_target(trial_seed(p, "thm-dilator-series/B", t * targets + b), p);
      Bimould truth = exp_ad_ari(l, target, n);
      std::string label = "L#" + std::to_string(t) + " B#" + std::to_string(b);
      expect_equal(rep, "left-series", label, adari_dilator(d, target, SeriesSide::left, n), truth);
      expect_equal(rep, "right-series", label, adari_dilator(d_inv, target, SeriesSide::right, n),
                   truth);
    }
  }
}

void lemma_der_series(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  for (int t = 0; t < p.trials; ++t) {
    Bimould l = random_generator_mould(trial_seed(p, "lemma-der-series/L", t), p);
    Bimould b = random_target(trial_seed(p, "lemma-der-series/B", t), p);
    Bimould d = dilator_of(expari(l, n), n);
    Bimould d_inv = dilator_of(expari(-l, n), n);
    auto left = [&](const Bimould& x) { return adari_dilator(d, x, SeriesSide::left, n); };
    auto right = [&](const Bimould& x) { return adari_dilator(d_inv, x, SeriesSide::right, n); };
    std::string label = "trial " + std::to_string(t);
    expect_equal(rep, "left", label, der(left(b)) - left(der(b)), left(ari(d, b)));
    Bimould rb = right(b);
    expect_equal(rep, "right", label, der(rb) - right(der(b)), -ari(d_inv, rb));
  }
}

void lemma_der_adjoint(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  for (int t = 0; t < p.trials; ++t) {
    Bimould l = random_generator_mould(trial_seed(p, "lemma-der-adjoint/L", t), p);
    Bimould b = random_target(trial_seed(p, "lemma-der-adjoint/B", t), p);
    Bimould d = dilator_of(expari(l, n), n);
    auto ad = [&](const Bimould& x) { return exp_ad_ari(l, x, n); };
    expect_equal(rep, "commutator", "trial " + std::to_string(t), der(ad(b)) - ad(der(b)),
                 ad(ari(d, b)));
  }
}

void dilator_roundtrip(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "dilator-roundtrip", t));
    RandomShape s;
    s.maxlen = n;
    s.degree = p.degree;
    s.max_factors = 1;
    Bimould d = gen_random_bimould(rng, s);
    s.lu = false;
    Bimould m = gen_random_bimould(rng, s);
    m.set(0, RatFun(1));
    std::string label = "trial " + std::to_string(t);
    Bimould sd = mould_from_dilator(d, n);
    expect_equal(rep, "defining-equation", label, der(sd), preari(sd, d));
    expect_equal(rep, "dilator-of-mould", label, dilator_of(sd, n), d);
    expect_equal(rep, "mould-of-dilator", label, mould_from_dilator(dilator_of(m, n), n), m);
  }
  expect_equal(rep, "units", "dilator_of(1)", dilator_of(Bimould::unit(n), n), Bimould(n));
  expect_equal(rep, "units", "mould_from_dilator(0)", mould_from_dilator(Bimould(n), n),
               Bimould::unit(n));
  // First correction of the series: coefficient 1/r on ari(leng_r D, B).
  Bimould b = random_target(trial_seed(p, "dilator-roundtrip/B", 0), p);
  Bimould d = random_target(trial_seed(p, "dilator-roundtrip/D", 0), p);
  for (int r = 1; r < n; ++r) {
    Bimould dr = leng(r, d);
    Bimould b1 = leng(1, b);
    expect_equal(rep, "first-correction", "r=" + std::to_string(r),
                 adari_dilator(dr, b1, SeriesSide::left, n)[1 + r],
                 ari(dr, b1)[1 + r].scaled(Rat(1, r)));
  }
}

void darapir(const CheckParams& p, CheckReport& rep) {
  expect_equal(rep, "closed-form", "darapir = anti(psi0)/2", darapir_closed_form(p.max_length),
               scale(rat(1, 2), anti(psi0(p.max_length))));
}

void pic_push(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  Bimould q = pic(n);
  expect_equal(rep, "invmu", "pic = invmu(1 - Pi)", q, pic_via_invmu(n));
  for (int r = 1; r <= n; ++r) {
    RatFun total;
    Bimould x = q;
    for (int k = 0; k <= r; ++k) {
      total += x[r];
      x = push(x);
    }
    expect_equal(rep, "push-neutral", "r=" + std::to_string(r), total, RatFun());
  }
}

void witt(const CheckParams& p, CheckReport& rep, int sign) {
  for (int m = 1; m <= p.max_length; ++m) {
    for (int k = 1; k <= p.max_length; ++k) {
      int len = m + k;
      if (len > kMaxLength) continue;
      Bimould sm = witt_generator(m, len), sk = witt_generator(k, len);
      Bimould rhs = scale(Rat(sign * (m - k)), witt_generator(len, len));
      expect_equal(rep, "bracket", "{s" + std::to_string(m) + ", s" + std::to_string(k) + "}",
                   ihara_bracket(sm, sk), rhs);
    }
  }
}

void homogeneity(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  Bimould ps = psi0(n);
  for (int r = 1; r <= n; ++r) {
    auto deg = ps[r].homogeneous_degree();
    expect_true(rep, "psi0-degree", "length " + std::to_string(r), deg && *deg == -r);
  }
  for (int e : {2, 4}) {
    Bimould chi = chi_B(power_mould(e, n), n);
    expect_true(rep, "chi-weight-flag", power_name(e), chi.weight() == std::optional<int>(e + 1));
    for (int r = 1; r <= n; ++r) {
      if (chi[r].is_zero()) continue;
      auto deg = chi[r].homogeneous_degree();
      expect_true(rep, "chi-degree", power_name(e) + " length " + std::to_string(r),
                  deg && *deg == e + 1 - r);
    }
  }
}

void chi_forms(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  Bimould ps = psi0(n);
  for (int e : {2, 4}) {
    Bimould f = power_mould(e, n);
    Bimould chi = chi_B(f, n);
    expect_equal(rep, "closed-form", power_name(e), chi, chi_closed_form(ps, f, n));
    expect_equal(rep, "chi-psi-specializes", power_name(e), chi_psi(ps, f, n), chi);
    expect_equal(rep, "chi-psi-zero", power_name(e), chi_psi(Bimould(n, Layer::u_const), f, n), f);
    Bimould twice = chi_psi(scale(Rat(2), ps), f, n);
    Bimould first = ihara_bracket(Bimould::single(1, ps[1], n, Layer::u_const), f);
    expect_equal(rep, "chi-psi-linear-step", power_name(e), leng(2, twice), leng(2, first));
    expect_equal(rep, "sharp-is-swap-anti", power_name(e), sharp(chi), swap(anti(chi)));
  }
}

}  // namespace

void register_constructions(std::vector<CheckInfo>& out) {
  out.push_back({"thm-main", "constructions",
                 "swap o anti o chi_B = adari(par) o swap o anti on x1^2 and x1^4", 4, 1, thm_main});
  out.push_back({"cor-ds-lift", "constructions", "chi_B(x1^2) and chi_B(x1^4) lie in ds", 4, 1,
                 cor_ds_lift});
  out.push_back({"thm-dilator-series", "constructions",
                 "left and right dilator series both equal exp(ad ari L), 3 targets per L", 4, 5,
                 thm_dilator_series});
  out.push_back({"lemma-der-series", "constructions",
                 "[der, L(S)] = L(S) o ari(di S) and [der, R(S)] = -ari(di ri S) o R(S)", 4, 2,
                 lemma_der_series});
  out.push_back({"lemma-der-adjoint", "constructions",
                 "[der, exp(ad ari L)] = exp(ad ari L) o ari(di expari L)", 4, 2,
                 lemma_der_adjoint});
  out.push_back({"dilator-roundtrip", "constructions",
                 "dilator_of and mould_from_dilator are inverse; first series correction", 4, 3,
                 dilator_roundtrip});
  out.push_back({"darapir", "constructions", "darapir closed form = (1/2) anti(psi0)", 4, 1,
                 darapir});
  out.push_back({"pic-push-neutral", "constructions",
                 "pic = invmu(1 - Pi) and sum_k push^k(pic) vanishes", 5, 1, pic_push});
  out.push_back({"witt-identity", "constructions", "{s_m, s_n} = (m - n) s_(m+n)", 4, 1,
                 [](const CheckParams& p, CheckReport& rep) { witt(p, rep, 1); }});
  out.push_back({"witt-identity-reversed", "constructions", "{s_m, s_n} = (n - m) s_(m+n)", 4, 1,
                 [](const CheckParams& p, CheckReport& rep) { witt(p, rep, -1); }});
  out.push_back({"weight-grading", "constructions",
                 "psi0 has degree -r in length r; chi_B keeps the weight", 4, 1, homogeneity});
  out.push_back({"chi-forms", "constructions",
                 "chi_B recursion = nested brackets; chi_psi specializations", 4, 1, chi_forms});
}

}  // namespace mould::checks
