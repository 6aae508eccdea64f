#include "mould/checks.hpp"
#include "mould/constructions.hpp"
#include "mould/error.hpp"
#include "mould/flexion.hpp"
#include "mould/random.hpp"

namespace mould::checks {

namespace {

RandomShape shape_of(const CheckParams& p, Layer layer = Layer::general, bool lu = true) {
  RandomShape s;
  s.maxlen = p.max_length;
  s.degree = p.degree;
  s.layer = layer;
  s.lu = lu;
  // One denominator form per component keeps the flexion sums small.
  s.max_factors = 1;
  return s;
}

std::string trial(int t) { return "trial " + std::to_string(t); }

void schneps_amit(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "schneps-amit", t));
    Bimould a = gen_random_bimould(rng, shape_of(p));
    Bimould b = gen_random_bimould(rng, shape_of(p, Layer::general, false));
    expect_equal(rep, "swap-amit", trial(t), swap(amit(swap(a), swap(b))),
                 amit(a, b) + mu(b, a) - swap(mu(swap(b), swap(a))));
  }
}

void schneps_anit(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "schneps-anit", t));
    Bimould a = gen_random_bimould(rng, shape_of(p));
    Bimould b = gen_random_bimould(rng, shape_of(p, Layer::general, false));
    expect_equal(rep, "swap-anit", trial(t), swap(anit(swap(a), swap(b))), anit(push(a), b));
  }
}

void anti_amit(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "anti-amit-anit", t));
    Bimould a = gen_random_bimould(rng, shape_of(p));
    Bimould b = gen_random_bimould(rng, shape_of(p, Layer::general, false));
    expect_equal(rep, "conjugate", trial(t), anti(amit(anti(a), anti(b))), anit(a, b));
  }
}

void ari_antisymmetry(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "ari-antisymmetry", t));
    Bimould a = gen_random_bimould(rng, shape_of(p));
    Bimould b = gen_random_bimould(rng, shape_of(p));
    expect_equal(rep, "self", trial(t), ari(a, a), Bimould(p.max_length));
    expect_equal(rep, "swap-arguments", trial(t), ari(a, b), -ari(b, a));
    expect_equal(rep, "ila-self", trial(t), ila(a, a), Bimould(p.max_length));
  }
}

void ari_jacobi(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "ari-jacobi", t));
    Bimould a = gen_random_bimould(rng, shape_of(p));
    Bimould b = gen_random_bimould(rng, shape_of(p));
    Bimould c = gen_random_bimould(rng, shape_of(p));
    expect_equal(rep, "jacobi", trial(t), ari(a, ari(b, c)) + ari(b, ari(c, a)) + ari(c, ari(a, b)),
                 Bimould(p.max_length));
  }
}

void der_derivation(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "der-derivation", t));
    Bimould a = gen_random_bimould(rng, shape_of(p));
    Bimould b = gen_random_bimould(rng, shape_of(p, Layer::general, false));
    Bimould c = gen_random_bimould(rng, shape_of(p));
    expect_equal(rep, "mu", trial(t), der(mu(b, a)), mu(der(b), a) + mu(b, der(a)));
    expect_equal(rep, "amit", trial(t), der(amit(a, b)), amit(der(a), b) + amit(a, der(b)));
    expect_equal(rep, "anit", trial(t), der(anit(a, b)), anit(der(a), b) + anit(a, der(b)));
    expect_equal(rep, "preari", trial(t), der(preari(b, a)), preari(der(b), a) + preari(b, der(a)));
    expect_equal(rep, "ari", trial(t), der(ari(c, a)), ari(der(c), a) + ari(c, der(a)));
  }
}

void ihara_axit(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "ihara-axit", t));
    Bimould f = gen_random_bimould(rng, shape_of(p, Layer::u_const));
    Bimould g = gen_random_bimould(rng, shape_of(p, Layer::u_const));
    expect_equal(rep, "action", trial(t), ihara_action(f, g),
                 axit(neg(pari(anti(f))), f, g) + mu(f, g));
  }
}

void ihara_ila(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "ihara-ila", t));
    Bimould f = gen_random_bimould(rng, shape_of(p, Layer::u_const));
    Bimould g = gen_random_bimould(rng, shape_of(p, Layer::u_const));
    expect_equal(rep, "bracket", trial(t), ihara_bracket(f, g), anti(ila(anti(g), anti(f))));
  }
}

// Samples of the mantar-fixed space: upper-layer copies of lower-layer
// objects, plus symmetrized random moulds.
std::vector<std::pair<std::string, Bimould>> mantar_samples(const CheckParams& p) {
  const int n = p.max_length;
  std::vector<std::pair<std::string, Bimould>> out;
  out.emplace_back("sharp(psi0)", sharp(psi0(n)));
  for (int e : {2, 4}) {
    Bimould x = Bimould::single(1, RatFun::variable(x_var(1)).pow(e), n, Layer::u_const);
    out.emplace_back("sharp(x1^" + std::to_string(e) + ")", sharp(x));
  }
  for (int t = 0; t < p.trials; ++t) {
    Bimould f = gen_random_bimould(trial_seed(p, "ari-flat-ihara", t), shape_of(p, Layer::v_const));
    out.emplace_back("F+mantar(F) #" + std::to_string(t), f + mantar(f));
  }
  return out;
}

void ari_flat_ihara(const CheckParams& p, CheckReport& rep) {
  auto samples = mantar_samples(p);
  for (const auto& [name, f] : samples) {
    auto inv = is_mantar_invariant(f, p.max_length);
    expect_true(rep, "sample-in-V", name, inv.pass);
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const auto& [fn, f] = samples[i];
      const auto& [gn, g] = samples[j];
      expect_equal(rep, "flat-intertwines", fn + ", " + gn, flat(ari(g, f)),
                   ihara_bracket(flat(f), flat(g)));
    }
  }
}

void ari_action_upper_check(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "ari-action-upper", t));
    Bimould f = gen_random_bimould(rng, shape_of(p, Layer::v_const));
    Bimould g = gen_random_bimould(rng, shape_of(p, Layer::v_const));
    expect_equal(rep, "preari", trial(t), ari_action_upper(f, g), preari(g, f));
  }
}

void flexion_examples(const CheckParams&, CheckReport& rep) {
  const int n = 3;
  RatFun u1 = RatFun::variable(u_var(1)), u2 = RatFun::variable(u_var(2));
  RatFun v1 = RatFun::variable(v_var(1)), v2 = RatFun::variable(v_var(2));
  RatFun av = u1 * u1 + RatFun(2) * v1 + RatFun(1);
  RatFun bv = u1 * v1 - RatFun(3) * u1 + RatFun::inverse_linear(lin_var(v_var(1)));
  Bimould a = Bimould::single(1, av, n);
  Bimould b = Bimould::single(1, bv, n);

  Substitution a_amit;  // A(u1+u2; v2)
  a_amit.set(u_var(1), lin_var(u_var(1)) + lin_var(u_var(2)));
  a_amit.set(v_var(1), lin_var(v_var(2)));
  Substitution b_amit;  // B(u1; v1-v2)
  b_amit.set(v_var(1), lin_var(v_var(1)) - lin_var(v_var(2)));
  Substitution a_anit;  // A(u1+u2; v1)
  a_anit.set(u_var(1), lin_var(u_var(1)) + lin_var(u_var(2)));
  Substitution b_anit;  // B(u2; v2-v1)
  b_anit.set(u_var(1), lin_var(u_var(2)));
  b_anit.set(v_var(1), lin_var(v_var(2)) - lin_var(v_var(1)));
  RatFun amit2 = av.substitute(a_amit) * bv.substitute(b_amit);
  RatFun anit2 = av.substitute(a_anit) * bv.substitute(b_anit);
  Substitution shift2;  // w1 -> w2
  shift2.set(u_var(1), lin_var(u_var(2)));
  shift2.set(v_var(1), lin_var(v_var(2)));
  RatFun mu2 = av * bv.substitute(shift2);

  expect_equal(rep, "amit", "length-1 factors", amit(b, a)[2], amit2);
  expect_equal(rep, "amit", "A of length 0", amit(b, Bimould::unit(n)), Bimould(n));
  expect_equal(rep, "amit", "B = 0", amit(Bimould(n), a), Bimould(n));
  expect_equal(rep, "anit", "length-1 factors", anit(b, a)[2], anit2);
  expect_equal(rep, "anit", "A = 1", anit(b, Bimould::unit(n)), Bimould(n));
  expect_equal(rep, "axit", "axit(B, B)", axit(b, b, a)[2], amit2 + anit2);
  expect_equal(rep, "arit", "amit - anit", arit(b, a)[2], amit2 - anit2);
  expect_equal(rep, "ilat", "B = 0", ilat(Bimould(n), a), Bimould(n));
  expect_equal(rep, "preari", "length-1 factors", preari(a, b)[2], amit2 - anit2 + mu2);
  expect_equal(rep, "preila", "B = 0", preila(a, Bimould(n)), Bimould(n));

  Bimould l1 = Bimould::single(1, bv, n);
  Bimould e = expari(l1, n);
  expect_equal(rep, "expari", "L = 0", expari(Bimould(n), n), Bimould::unit(n));
  expect_true(rep, "expari", "constant term", e[0] == RatFun(1), e[0] - RatFun(1));
  expect_equal(rep, "expari", "length 2", e[2], preari(l1, l1)[2].scaled(rat(1, 2)));
  expect_equal(rep, "expari", "length 1", e[1], bv);
  Bimould bb = Bimould::single(2, av * v2 + u2, n);
  expect_equal(rep, "exp-ad-ari", "L = 0", exp_ad_ari(Bimould(n), bb, n), bb);
  expect_equal(rep, "exp-ad-ari", "lowest length", exp_ad_ari(l1, bb, n)[2], bb[2]);

  RatFun fv = v1 * v1 + RatFun(1);
  RatFun gv = v1 + RatFun::inverse_linear(lin_var(v_var(1)));
  Bimould f = Bimould::single(1, fv, n, Layer::u_const);
  Bimould g = Bimould::single(1, gv, n, Layer::u_const);
  Substitution at2;
  at2.set(v_var(1), lin_var(v_var(2)));
  Substitution diff;
  diff.set(v_var(1), lin_var(v_var(2)) - lin_var(v_var(1)));
  RatFun expected = fv * gv.substitute(at2) + fv.substitute(diff) * gv -
                    fv.substitute(diff) * gv.substitute(at2);
  expect_equal(rep, "ihara", "r = s = 1", ihara_action(f, g)[2], expected);
  expect_equal(rep, "ihara", "{f, f} = 0", ihara_bracket(f, f), Bimould(n, Layer::u_const));

  bool threw = false;
  try {
    amit(Bimould::unit(n), a);
  } catch (const Error& err) {
    threw = err.code() == Errc::not_lu;
  }
  expect_true(rep, "requires-lu", "amit with B_0 = 1", threw);
}

}  // namespace

void register_flexion(std::vector<CheckInfo>& out) {
  out.push_back({"schneps-amit", "flexion",
                 "swap o amit(swap A) o swap = amit(A) + mu(., A) - swap(mu(swap ., swap A))", 4, 3,
                 schneps_amit});
  out.push_back({"schneps-anit", "flexion", "swap o anit(swap A) o swap = anit(push A)", 4, 3,
                 schneps_anit});
  out.push_back({"anti-amit-anit", "flexion", "anti o amit(anti A) o anti = anit(A)", 4, 3,
                 anti_amit});
  out.push_back({"ari-antisymmetry", "flexion", "ari and ila are antisymmetric", 4, 3,
                 ari_antisymmetry});
  out.push_back({"ari-jacobi", "flexion", "Jacobi identity for ari", 3, 3, ari_jacobi});
  out.push_back({"der-derivation", "flexion", "der is a derivation of mu, amit, anit, preari, ari",
                 4, 3, der_derivation});
  out.push_back({"ihara-axit", "flexion",
                 "Ihara action = axit(neg o pari o anti f, f)(g) + mu(f, g)", 4, 3, ihara_axit});
  out.push_back({"ihara-ila", "flexion", "{f, g} = anti(ila(anti g, anti f))", 4, 3, ihara_ila});
  out.push_back({"ari-flat-ihara", "flexion",
                 "on mantar-invariant moulds flat(ari(g, f)) = {flat f, flat g}", 4, 2,
                 ari_flat_ihara});
  out.push_back({"ari-action-upper", "flexion", "upper-layer action equals preari(g, f)", 4, 3,
                 ari_action_upper_check});
  out.push_back({"flexion-examples", "flexion", "hand-expanded low-length flexion sums", 3, 1,
                 flexion_examples});
}

}  // namespace mould::checks
