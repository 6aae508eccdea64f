#include "mould/checks.hpp"
#include "mould/constructions.hpp"
#include "mould/random.hpp"

namespace mould::checks {

namespace {

RandomShape shape_of(const CheckParams& p, Layer layer = Layer::general, bool lu = true) {
  RandomShape s;
  s.maxlen = p.max_length;
  s.degree = p.degree;
  s.layer = layer;
  s.lu = lu;
  return s;
}

std::string trial(int t) { return "trial " + std::to_string(t); }

void involutions(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Bimould a = gen_random_bimould(trial_seed(p, "unary-involutions", t), shape_of(p, Layer::general, false));
    expect_equal(rep, "anti", trial(t), anti(anti(a)), a);
    expect_equal(rep, "neg", trial(t), neg(neg(a)), a);
    expect_equal(rep, "pari", trial(t), pari(pari(a)), a);
    expect_equal(rep, "swap", trial(t), swap(swap(a)), a);
    expect_equal(rep, "mantar", trial(t), mantar(mantar(a)), a);
  }
}

void push_order(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Bimould a = gen_random_bimould(trial_seed(p, "push-order", t), shape_of(p));
    for (int r = 1; r <= p.max_length; ++r) {
      expect_equal(rep, "order", trial(t) + " r=" + std::to_string(r), leng(r, pushpow(r + 1, a)),
                   leng(r, a));
    }
  }
}

void push_identity(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Bimould a = gen_random_bimould(trial_seed(p, "push-identity", t), shape_of(p));
    expect_equal(rep, "push", trial(t), push(a), neg(mantar(swap(mantar(swap(a))))));
  }
}

void mu_algebra(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "mu-algebra", t));
    Bimould a = gen_random_bimould(rng, shape_of(p, Layer::general, false));
    Bimould b = gen_random_bimould(rng, shape_of(p));
    Bimould c = gen_random_bimould(rng, shape_of(p, Layer::general, false));
    Bimould one = Bimould::unit(p.max_length);
    expect_equal(rep, "associative", trial(t), mu(mu(a, b), c), mu(a, mu(b, c)));
    expect_equal(rep, "left-unit", trial(t), mu(one, a), a);
    expect_equal(rep, "right-unit", trial(t), mu(a, one), a);
    expect_equal(rep, "der-derivation", trial(t), der(mu(a, b)), mu(der(a), b) + mu(a, der(b)));
    expect_equal(rep, "anti-reverses", trial(t), anti(mu(a, b)), mu(anti(b), anti(a)));
  }
}

void invmu_roundtrip(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Bimould s = gen_random_bimould(trial_seed(p, "invmu-roundtrip", t), shape_of(p, Layer::general, false));
    Bimould inv = invmu(s);
    Bimould one = Bimould::unit(p.max_length);
    expect_equal(rep, "right-inverse", trial(t), mu(s, inv), one);
    expect_equal(rep, "left-inverse", trial(t), mu(inv, s), one);
  }
}

void sharp_flat(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "sharp-flat", t));
    Bimould f = gen_random_bimould(rng, shape_of(p, Layer::u_const));
    Bimould g = gen_random_bimould(rng, shape_of(p, Layer::v_const));
    expect_equal(rep, "sharp-is-swap-anti", trial(t), sharp(f), swap(anti(f)));
    expect_equal(rep, "flat-is-anti-swap", trial(t), flat(g), anti(swap(g)));
    expect_equal(rep, "flat-sharp", trial(t), flat(sharp(f)), f);
    expect_equal(rep, "sharp-flat", trial(t), sharp(flat(g)), g);
  }
}

void weight_homogeneity(const CheckParams& p, CheckReport& rep) {
  const int n = p.max_length;
  Bimould x2 = Bimould::single(1, RatFun::variable(x_var(1)).pow(2), n, Layer::u_const);
  x2.set_weight(3);
  std::vector<std::pair<std::string, Bimould>> samples = {
      {"psi0", psi0(n)}, {"pic", pic(n)}, {"chi_B(x1^2)", chi_B(x2, n)}};
  samples[1].second.set_weight(0);
  samples[2].second.set_weight(3);
  for (const auto& [name, a] : samples) {
    int k = *a.weight();
    expect_true(rep, "input", name, a.satisfies_weight(k));
    const std::vector<std::pair<std::string, Bimould>> images = {
        {"anti", anti(a)},     {"pari", pari(a)},      {"neg", neg(a)},   {"mantar", mantar(a)},
        {"swap", swap(a)},     {"push", push(a)},      {"der", der(a)},   {"leng2", leng(2, a)},
        {"pushpow3", pushpow(3, a)}};
    for (const auto& [op, img] : images) {
      expect_true(rep, "preserved", op + "(" + name + ")", img.satisfies_weight(k));
    }
  }
}

void bimould_examples(const CheckParams&, CheckReport& rep) {
  const int n = 3;
  RatFun u1 = RatFun::variable(u_var(1)), u2 = RatFun::variable(u_var(2));
  RatFun v1 = RatFun::variable(v_var(1)), v2 = RatFun::variable(v_var(2));
  auto inv = [](int var) { return RatFun::inverse_linear(lin_var(var)); };
  expect_equal(rep, "swap", "swap(Pa) = Pi", swap(pa(n)), pi_unit(n));

  Rng rng(7);
  RandomShape shape;
  shape.maxlen = n;
  Bimould a = gen_random_bimould(rng, shape);
  Bimould b = gen_random_bimould(rng, shape);
  expect_equal(rep, "der", "der at length 2", der(a)[2], a[2].scaled(2));
  expect_equal(rep, "push", "push at length 1", push(a)[1], neg(a)[1]);

  expect_equal(rep, "mu", "mu(Pa, Pa) at length 2", mu(pa(n), pa(n))[2], inv(u_var(1)) * inv(u_var(2)));
  expect_equal(rep, "mu", "mu(A, 1) = A", mu(a, Bimould::unit(n)), a);
  expect_equal(rep, "invmu", "invmu(1) = 1", invmu(Bimould::unit(n)), Bimould::unit(n));
  Bimould one_minus_pi = Bimould::unit(n) - pi_unit(n);
  expect_equal(rep, "invmu", "invmu(1 - Pi) at length 2", invmu(one_minus_pi)[2],
               inv(v_var(1)) * inv(v_var(2)));

  Bimould x2 = Bimould::single(1, RatFun::variable(x_var(1)).pow(2), n, Layer::u_const);
  expect_equal(rep, "sharp", "sharp(x1^2)", sharp(x2)[1], u1.pow(2));
  Bimould x1x2 = Bimould::single(2, v1 * v2, n, Layer::u_const);
  expect_equal(rep, "sharp", "sharp(x1 x2)", sharp(x1x2)[2], u1 * (u1 + u2));

  std::vector<Rat> c1 = {Rat(1), Rat(-1)};
  std::vector<Bimould> ab = {a, a};
  expect_equal(rep, "linear-combine", "A - A", linear_combine(c1, ab), Bimould(n));
  std::vector<Rat> c2 = {Rat(0), Rat(1)};
  std::vector<Bimould> ab2 = {a, b};
  expect_equal(rep, "linear-combine", "0 A + B", linear_combine(c2, ab2), b);
}

}  // namespace

void register_bimould(std::vector<CheckInfo>& out) {
  out.push_back({"unary-involutions", "bimould", "anti, neg, pari, swap and mantar are involutions",
                 4, 4, involutions});
  out.push_back({"push-order", "bimould", "push^(r+1) is the identity in length r", 4, 3, push_order});
  out.push_back({"push-identity", "bimould", "push = neg o mantar o swap o mantar o swap", 4, 4,
                 push_identity});
  out.push_back({"mu-algebra", "bimould",
                 "mu is associative and unital, der is a derivation, anti reverses mu", 4, 3,
                 mu_algebra});
  out.push_back({"invmu-roundtrip", "bimould", "invmu is a two-sided mu-inverse", 4, 3,
                 invmu_roundtrip});
  out.push_back({"sharp-flat", "bimould",
                 "sharp = swap o anti, flat = anti o swap, and they are mutually inverse", 4, 4,
                 sharp_flat});
  out.push_back({"weight-homogeneity", "bimould", "unary operators preserve the weight grade", 4, 1,
                 weight_homogeneity});
  out.push_back({"bimould-examples", "bimould", "worked unary, mu and invmu examples", 3, 1,
                 bimould_examples});
}

}  // namespace mould::checks
