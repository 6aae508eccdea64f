#include "mould/checks.hpp"
#include "mould/error.hpp"
#include "mould/random.hpp"

namespace mould::checks {

namespace {

RatFun random_fun(Rng& rng, int maxlen, int degree) {
  RandomShape shape;
  shape.degree = degree;
  return gen_random_component(rng, rng.between(1, maxlen), shape);
}

LinComb compose(const LinComb& outer_image, const Substitution& inner) {
  LinComb out{};
  for (int k = 0; k < kNumVars; ++k) {
    if (outer_image[k] != 0) out = out + outer_image[k] * inner.image(k);
  }
  return out;
}

// x_i -> x_i + sum_{j > i} c_ij x_j on both families, all c small.
Substitution random_unitriangular(Rng& rng, int maxlen) {
  Substitution s;
  for (Family fam : {Family::u, Family::v}) {
    for (int i = 1; i <= maxlen; ++i) {
      LinComb img = lin_var(var_of(fam, i));
      for (int j = i + 1; j <= maxlen; ++j) img[var_of(fam, j)] = rng.between(-2, 2);
      s.set(var_of(fam, i), img);
    }
  }
  return s;
}

RatPoint random_point(Rng& rng) {
  RatPoint pt;
  for (auto& q : pt) q = rat(rng.between(-40, 40) * 2 + 1, rng.between(1, 9));
  return pt;
}

// Value at a point, or nullopt when the point is a pole.
std::optional<Rat> value_at(const RatFun& f, const RatPoint& pt) {
  for (const auto& d : f.denominator()) {
    Rat v = 0;
    for (int k = 0; k < kNumVars; ++k) v += Rat(Int(static_cast<long>(d.form.coeffs()[k]))) * pt[k];
    if (sgn(v) == 0) return std::nullopt;
  }
  return f.evaluate(pt);
}

void field_axioms(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "field-axioms", t));
    RatFun a = random_fun(rng, p.max_length, p.degree);
    RatFun b = random_fun(rng, p.max_length, p.degree);
    RatFun c = random_fun(rng, p.max_length, p.degree);
    std::string l = "trial " + std::to_string(t);
    expect_equal(rep, "add-associative", l, (a + b) + c, a + (b + c));
    expect_equal(rep, "add-commutative", l, a + b, b + a);
    expect_equal(rep, "mul-associative", l, (a * b) * c, a * (b * c));
    expect_equal(rep, "mul-commutative", l, a * b, b * a);
    expect_equal(rep, "distributive", l, a * (b + c), a * b + a * c);
    expect_equal(rep, "additive-inverse", l, (a + b) - b, a);
    expect_equal(rep, "zero", l, a - a, RatFun());
    expect_true(rep, "product-cross-multiplication", l, is_product(a * b, a, b));
    expect_true(rep, "product-cross-multiplication", l + " (perturbed)",
                !is_product(a * b + RatFun(1), a, b));
    // Exact inverse of a linear factor.
    LinComb form = lin_var(v_var(1)) - lin_var(u_var(2), rng.between(1, 3));
    expect_equal(rep, "linear-inverse", l,
                 a * RatFun::linear(form) * RatFun::inverse_linear(form), a);
  }
}

void substitute_composition(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "substitute-composition", t));
    RatFun f = random_fun(rng, p.max_length, p.degree);
    Substitution sigma = random_unitriangular(rng, p.max_length);
    Substitution tau = random_unitriangular(rng, p.max_length);
    Substitution both;
    for (int k = 0; k < kNumVars; ++k) both.set(k, compose(sigma.image(k), tau));
    std::string l = "trial " + std::to_string(t);
    expect_equal(rep, "composition", l, f.substitute(sigma).substitute(tau), f.substitute(both));
    // Homomorphism for the ring operations.
    RatFun g = random_fun(rng, p.max_length, p.degree);
    expect_equal(rep, "homomorphism-add", l, (f + g).substitute(sigma),
                 f.substitute(sigma) + g.substitute(sigma));
    expect_equal(rep, "homomorphism-mul", l, (f * g).substitute(sigma),
                 f.substitute(sigma) * g.substitute(sigma));
  }
}

void reduce_idempotent(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "reduce-idempotent", t));
    RatFun f = random_fun(rng, p.max_length, p.degree);
    std::string l = "trial " + std::to_string(t);
    expect_equal(rep, "idempotent", l, reduce(raw_of(f)), f);

    // Blow f up by a common linear factor and a scalar, then reduce again.
    RawFraction raw = raw_of(f);
    LinComb extra = lin_var(v_var(1)) + lin_var(v_var(2), rng.between(-2, 2));
    auto [form, k] = LinForm::normalize(extra);
    raw.num = raw.num.times_linear(form.coeffs()).times(Int(6));
    raw.scalar /= 6;
    raw.den.push_back({form, 1});
    RatFun again = reduce(raw);
    expect_equal(rep, "cancels", l, again, f);
    for (const auto& d : again.denominator()) {
      expect_true(rep, "no-divisible-factor", l, !again.numerator().divide_linear(d.form.coeffs()));
    }
    RatPoint pt = random_point(rng);
    auto before = value_at(f, pt);
    auto after = value_at(again, pt);
    expect_true(rep, "value-preserving", l, before.has_value() == after.has_value() &&
                                                (!before || *before == *after));
  }
}

void rf_equal_equivalence(const CheckParams& p, CheckReport& rep) {
  for (int t = 0; t < p.trials; ++t) {
    Rng rng(trial_seed(p, "rf-equal-equivalence", t));
    RatFun f = random_fun(rng, p.max_length, p.degree);
    RatFun h = random_fun(rng, p.max_length, p.degree);
    LinComb form = lin_var(v_var(1)) - lin_var(v_var(2));
    RatFun g = (f + h) - h;
    RatFun k = f * RatFun::linear(form) * RatFun::inverse_linear(form);
    std::string l = "trial " + std::to_string(t);
    expect_true(rep, "reflexive", l, rf_equal(f, f));
    expect_true(rep, "symmetric", l, rf_equal(f, g) == rf_equal(g, f));
    expect_true(rep, "transitive", l, rf_equal(f, g) && rf_equal(g, k) && rf_equal(f, k));
    RatFun other = f + RatFun::inverse_linear(lin_var(v_var(1)));
    expect_true(rep, "distinguishes", l, !rf_equal(f, other), f - other);
    // Structural and exact equality agree on canonical forms.
    expect_true(rep, "canonical", l, (f == g) == rf_equal(f, g));
    // Modular evaluation only ever confirms, never contradicts.
    ModPoint mp;
    for (auto& x : mp) x = rng.next() % modp::kPrime;
    auto ef = f.eval_mod(mp);
    auto eg = g.eval_mod(mp);
    expect_true(rep, "modular-cross-check", l, !ef || !eg || *ef == *eg);
  }
}

void exactalg_examples(const CheckParams&, CheckReport& rep) {
  RatFun x1 = RatFun::variable(x_var(1));
  RatFun x2 = RatFun::variable(x_var(2));
  RatFun inv1 = RatFun::inverse_linear(lin_var(x_var(1)));
  RatFun inv2 = RatFun::inverse_linear(lin_var(x_var(2)));
  LinComb d21 = lin_var(x_var(2)) - lin_var(x_var(1));
  RatFun inv21 = RatFun::inverse_linear(d21);
  expect_equal(rep, "arith", "1/x1 - 1/x1", inv1 - inv1, RatFun());
  RawFraction r0;
  r0.num = Poly::constant(Int(1));
  r0.den = {{LinForm::normalize(lin_var(x_var(1))).first, 1},
            {LinForm::normalize(lin_var(x_var(2))).first, 1}};
  expect_equal(rep, "arith", "1/x1 * 1/x2", inv1 * inv2, reduce(r0));
  RatFun pf = x2 * inv1 * inv21;
  expect_equal(rep, "arith", "1/x1 + 1/(x2-x1)", inv1 + inv21, pf);
  expect_true(rep, "equal", "partial fractions", rf_equal(pf, inv1 + inv21));
  expect_true(rep, "equal", "1/x1 vs 1/x2", !rf_equal(inv1, inv2));
  expect_true(rep, "equal", "zero", rf_equal(RatFun() * inv21, RatFun()));

  Substitution shift;
  shift.set(x_var(1), lin_var(x_var(1)) + lin_var(x_var(2)));
  expect_equal(rep, "substitute", "1/x1 at x1 -> x1+x2", inv1.substitute(shift),
               RatFun::inverse_linear(lin_var(x_var(1)) + lin_var(x_var(2))));
  Substitution swap12;
  swap12.set(x_var(1), lin_var(x_var(2)));
  swap12.set(x_var(2), lin_var(x_var(1)));
  expect_equal(rep, "substitute", "1/(x2-x1) swapped", inv21.substitute(swap12), -inv21);
  Substitution degenerate;
  degenerate.set(x_var(2), lin_var(x_var(1)));
  bool threw = false;
  try {
    (x1 * inv21).substitute(degenerate);
  } catch (const Error& e) {
    threw = e.code() == Errc::zero_denominator;
  }
  expect_true(rep, "substitute", "x2 -> x1 hits a pole", threw);

  RawFraction r1;
  r1.num = Poly::linear(d21);
  auto [f21, k21] = LinForm::normalize(d21);
  r1.scalar = rat(1, k21);
  r1.den = {{f21, 1}, {LinForm::normalize(lin_var(x_var(1))).first, 1}};
  expect_equal(rep, "reduce", "(x2-x1)/((x2-x1)x1)", reduce(r1), inv1);
  RawFraction r2;
  r2.num = Poly::variable(x_var(1)) * Poly::variable(x_var(2)) +
           Poly::variable(x_var(2)) * Poly::variable(x_var(2));
  r2.den = {{LinForm::normalize(lin_var(x_var(2))).first, 1}};
  expect_equal(rep, "reduce", "(x1x2+x2^2)/x2", reduce(r2), x1 + x2);
  expect_equal(rep, "reduce", "x2/(x1(x2-x1))", reduce(raw_of(pf)), pf);
  expect_true(rep, "reduce", "x2/(x1(x2-x1)) keeps its denominator", pf.den_degree() == 2);
}

}  // namespace

void register_exactalg(std::vector<CheckInfo>& out) {
  out.push_back({"field-axioms", "exactalg",
                 "associativity, commutativity, distributivity and exact inverses", 3, 12,
                 field_axioms});
  out.push_back({"substitute-composition", "exactalg",
                 "substituting sigma then tau equals substituting tau o sigma", 3, 10,
                 substitute_composition});
  out.push_back({"reduce-idempotent", "exactalg", "reduce is idempotent and value-preserving", 3,
                 10, reduce_idempotent});
  out.push_back({"rf-equal-equivalence", "exactalg",
                 "exact equality is an equivalence relation", 3, 10, rf_equal_equivalence});
  out.push_back({"exactalg-examples", "exactalg", "worked arithmetic and substitution examples", 2,
                 1, exactalg_examples});
}

}  // namespace mould::checks
