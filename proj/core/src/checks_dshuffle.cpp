#include "mould/checks.hpp"
#include "mould/constructions.hpp"
#include "mould/error.hpp"
#include "mould/flexion.hpp"

namespace mould::checks {

namespace {

std::string seq_label(const VarSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += "x" + std::to_string(s[i]);
  }
  return out + ")";
}

// First sequence whose coefficients differ, with coefficient(a) - coefficient(b).
std::optional<std::pair<VarSeq, RatFun>> first_seq_difference(const FormalSeqSum& a,
                                                              const FormalSeqSum& b) {
  FormalSeqSum d = a;
  d.add(b, RatFun(-1));
  if (d.empty()) return std::nullopt;
  return *d.terms().begin();
}

void expect_same_sum(CheckReport& rep, const std::string& cname, const std::string& label,
                     const FormalSeqSum& a, const FormalSeqSum& b) {
  auto& cond = rep.condition(cname);
  if (auto d = first_seq_difference(a, b)) cond.fail(label + " at " + seq_label(d->first), d->second);
}

FormalSeqSum from_seq(const VarSeq& s) { return FormalSeqSum::single(s); }

Bimould power_mould(int e, int maxlen) {
  Bimould f = Bimould::single(1, RatFun::variable(x_var(1)).pow(e), maxlen, Layer::u_const);
  f.set_weight(e + 1);
  return f;
}

RatFun x(int i) { return RatFun::variable(x_var(i)); }
RatFun inv_x(int i) { return RatFun::inverse_linear(lin_var(x_var(i))); }

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Disjoint sequence pairs (a, b) with |a| + |b| <= maxlen, plus a third
// sequence c disjoint from both for associativity.
struct Triple {
  VarSeq a, b, c;
};
std::vector<Triple> small_triples(int maxlen) {
  std::vector<Triple> out;
  for (int p = 0; p <= maxlen; ++p) {
    for (int q = 0; p + q <= maxlen; ++q) {
      for (int r = 0; p + q + r <= maxlen; ++r) {
        VarSeq a = p ? seq_range(1, p) : VarSeq{};
        VarSeq b = q ? seq_range(p + 1, p + q) : VarSeq{};
        VarSeq c = r ? seq_range(p + q + 1, p + q + r) : VarSeq{};
        // Interleaved indices exercise non-monotone sequences as well.
        if (q >= 2) std::swap(b[0], b[1]);
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

void shuffle_properties(const CheckParams& p, CheckReport& rep) {
  for (const auto& [a, b, c] : small_triples(p.max_length)) {
    std::string l = seq_label(a) + " sh " + seq_label(b);
    FormalSeqSum ab = shuffle_expand(a, b);
    long expected = binomial(static_cast<int>(a.size() + b.size()), static_cast<int>(a.size()));
    expect_true(rep, "count", l, static_cast<long>(ab.size()) == expected,
                RatFun(static_cast<long>(ab.size()) - expected));
    expect_same_sum(rep, "commutative", l, ab, shuffle_expand(b, a));
    if (!c.empty()) {
      expect_same_sum(rep, "associative", l + " sh " + seq_label(c),
                      shuffle(ab, from_seq(c)), shuffle(from_seq(a), shuffle_expand(b, c)));
    }
  }
  FormalSeqSum ex;
  ex.add(VarSeq{1, 2, 3}, RatFun(1));
  ex.add(VarSeq{1, 3, 2}, RatFun(1));
  ex.add(VarSeq{3, 1, 2}, RatFun(1));
  expect_same_sum(rep, "examples", "(x1,x2) sh (x3)", shuffle_expand({1, 2}, {3}), ex);
  expect_same_sum(rep, "examples", "() sh (x1,x2)", shuffle_expand({}, {1, 2}), from_seq({1, 2}));
  FormalSeqSum two;
  two.add(VarSeq{1, 2}, RatFun(1));
  two.add(VarSeq{2, 1}, RatFun(1));
  expect_same_sum(rep, "examples", "(x1) sh (x2)", shuffle_expand({1}, {2}), two);
  bool threw = false;
  try {
    shuffle_expand({1, 2}, {2});
  } catch (const Error& e) {
    threw = e.code() == Errc::overlapping_indices;
  }
  expect_true(rep, "examples", "overlapping indices rejected", threw);
}

void harmonic_commutativity(const CheckParams& p, CheckReport& rep) {
  for (const auto& [a, b, c] : small_triples(p.max_length)) {
    if (!c.empty()) continue;
    expect_same_sum(rep, "commutative", seq_label(a) + "*" + seq_label(b),
                    harmonic_expand(a, b, p.harmonic), harmonic_expand(b, a, p.harmonic));
  }
}

void harmonic_associativity(const CheckParams& p, CheckReport& rep) {
  for (const auto& [a, b, c] : small_triples(p.max_length)) {
    if (a.empty() || b.empty() || c.empty()) continue;
    expect_same_sum(rep, "associative", seq_label(a) + "*" + seq_label(b) + "*" + seq_label(c),
                    harmonic(harmonic_expand(a, b, p.harmonic), from_seq(c), p.harmonic),
                    harmonic(from_seq(a), harmonic_expand(b, c, p.harmonic), p.harmonic));
  }
  for (const auto& [a, b, c] : small_triples(p.max_length)) {
    if (!a.empty() || c.size()) continue;
    expect_same_sum(rep, "unit", "()*" + seq_label(b), harmonic_expand(a, b, p.harmonic),
                    from_seq(b));
  }
  RatFun k = RatFun::inverse_linear(lin_var(x_var(1)) - lin_var(x_var(2)));
  FormalSeqSum base;
  base.add(VarSeq{1, 2}, RatFun(1));
  base.add(VarSeq{2, 1}, RatFun(1));
  base.add(VarSeq{1}, k);
  base.add(VarSeq{2}, -k);
  expect_same_sum(rep, "base-case", "(x1)*(x2)",
                  harmonic_expand({1}, {2}, HarmonicRule::symmetrized), base);
}

void eval_examples(const CheckParams&, CheckReport& rep) {
  Bimould f(3, Layer::u_const);
  RatFun f2 = x(1) * x(2) * x(2) + inv_x(1);
  f.set(2, f2);
  Substitution sw;
  sw.set(x_var(1), lin_var(x_var(2)));
  sw.set(x_var(2), lin_var(x_var(1)));
  expect_equal(rep, "eval", "single sequence", eval_on_sum(f, from_seq({1, 2})), f2);
  expect_equal(rep, "eval", "on a shuffle", eval_on_sum(f, shuffle_expand({1}, {2})),
               f2 + f2.substitute(sw));
  bool threw = false;
  try {
    eval_on_sum(f, from_seq({1, 2, 3, 4}));
  } catch (const Error& e) {
    threw = e.code() == Errc::truncation_exceeded;
  }
  expect_true(rep, "eval", "sequence longer than the truncation", threw);
}

void ls_negative_controls(const CheckParams& p, CheckReport& rep) {
  const int n = std::max(p.max_length, 2);
  expect_true(rep, "x1^2-in-ls", "x1^2", is_ls(power_mould(2, n), n).pass);

  auto odd = is_ls(power_mould(3, n), n);
  const Condition* par = odd.find(kParity);
  expect_true(rep, "x1^3-fails-parity", "x1^3", !odd.pass && par && !par->pass);

  Bimould f(n, Layer::u_const);
  f.set(2, x(1) * x(2));
  auto sh = is_ls(f, n);
  const Condition* shc = sh.find(kShuffle);
  bool witness = shc && !shc->pass && shc->failures.front().delta == RatFun(2) * x(1) * x(2);
  expect_true(rep, "x1x2-fails-shuffle", "witness 2 x1 x2", !sh.pass && witness);

  auto ds = is_ds(power_mould(2, n), n, p.parity, HarmonicRule::symmetrized);
  const Condition* hc = ds.find(kHarmonic);
  bool il = hc && !hc->pass && hc->failures.front().delta == x(1) + x(2);
  expect_true(rep, "x1^2-fails-harmonic", "witness x1 + x2", !ds.pass && il);

  auto lit1 = harmonic_expand({1}, {2}, HarmonicRule::literal);
  auto lit2 = harmonic_expand({2}, {1}, HarmonicRule::literal);
  auto d = first_seq_difference(lit1, lit2);
  RatFun expected = RatFun::inverse_linear(lin_var(x_var(1)) - lin_var(x_var(2))).scaled(2);
  expect_true(rep, "literal-harmonic-not-commutative", "(x1)*(x2) vs (x2)*(x1)",
              d && d->first.empty() && d->second == expected);
  expect_true(rep, "zero-in-ds", "0", is_ds(Bimould(n, Layer::u_const), n, p.parity).pass);
}

void ds_psi0(const CheckParams& p, CheckReport& rep) {
  auto r = is_ds(psi0(p.max_length), p.max_length, p.parity, p.harmonic);
  absorb(rep, "", r);
}

void psi0_harmonic_base(const CheckParams&, CheckReport& rep) {
  Bimould ps = psi0(2);
  RatFun sym = eval_on_sum(ps, harmonic_expand({1}, {2}, HarmonicRule::symmetrized));
  expect_equal(rep, "symmetrized-vanishes", "psi0((x1)*(x2))", sym, RatFun());
  RatFun lit = eval_on_sum(ps, harmonic_expand({1}, {2}, HarmonicRule::literal));
  expect_equal(rep, "literal-witness", "psi0((x1)*(x2)) literal", lit, inv_x(1) * inv_x(2));
}

std::vector<std::pair<std::string, Bimould>> ls_samples(int n) {
  Bimould x2 = power_mould(2, n), x4 = power_mould(4, n);
  Bimould b = ihara_bracket(x2, x4);
  return {{"x1^2", x2},
          {"x1^4", x4},
          {"{x1^2, x1^4}", b},
          {"{x1^2, {x1^2, x1^4}}", ihara_bracket(x2, b)}};
}

void ls_sharp_in_v(const CheckParams& p, CheckReport& rep) {
  for (const auto& [name, f] : ls_samples(p.max_length)) {
    expect_true(rep, "sample-in-ls", name, is_ls(f, p.max_length).pass);
    auto v = is_mantar_invariant(sharp(f), p.max_length);
    const Condition* c = v.find(kMantar);
    expect_true(rep, "sharp-in-V", name, v.pass,
                c && !c->failures.empty() ? c->failures.front().delta : RatFun());
  }
}

void psi0_sharp_in_v(const CheckParams& p, CheckReport& rep) {
  Bimould ps = psi0(p.max_length);
  absorb(rep, "sharp-", is_mantar_invariant(sharp(ps), p.max_length));
  // The lower-layer copy is reported for reference only: it is not fixed by mantar.
  auto lower = is_mantar_invariant(ps, p.max_length);
  auto& c = rep.condition("lower-copy (informational)", false);
  for (const auto& f : lower.failures) c.fail(f.where, f.delta);
  if (!lower.pass) c.pass = false;
}

void ls_ds_base_case(const CheckParams& p, CheckReport& rep) {
  std::vector<std::pair<std::string, Bimould>> samples = {
      {"psi0", psi0(2)},
      {"x1^2", power_mould(2, 2)},
      {"chi_B(x1^2)", chi_B(power_mould(2, 4), 4).truncated(2)},
      {"pic", [] {
         Bimould q = pic(2);
         q.set(0, RatFun());
         q.set_layer(Layer::u_const);
         return q;
       }()}};
  for (const auto& [name, f] : samples) {
    auto ls = is_ls(f, 2);
    auto ds = is_ds(f, 2, p.parity, p.harmonic);
    const Condition* a = ls.find(kSharpShuffle);
    const Condition* b = ds.find(kSharpShuffle);
    expect_true(rep, "sharp-shuffle-agrees", name, a && b && a->pass == b->pass);
    RatFun f1x1 = f[1];
    Substitution to2;
    to2.set(x_var(1), lin_var(x_var(2)));
    RatFun contraction = (f1x1 - f1x1.substitute(to2)) *
                         RatFun::inverse_linear(lin_var(x_var(1)) - lin_var(x_var(2)));
    RatFun st = eval_on_sum(f, harmonic_expand({1}, {2}, HarmonicRule::symmetrized));
    RatFun sh = eval_on_sum(f, shuffle_expand({1}, {2}));
    expect_equal(rep, "harmonic-minus-shuffle", name, st - sh, contraction);
  }
}

}  // namespace

void register_dshuffle(std::vector<CheckInfo>& out) {
  out.push_back({"shuffle-properties", "dshuffle",
                 "shuffle has binomial size and is commutative and associative", 4, 1,
                 shuffle_properties});
  out.push_back({"harmonic-commutativity", "dshuffle",
                 "the selected harmonic rule is commutative", 3, 1, harmonic_commutativity});
  out.push_back({"harmonic-associativity", "dshuffle",
                 "the selected harmonic rule is associative with the empty unit", 3, 1,
                 harmonic_associativity});
  out.push_back({"eval-on-sum", "dshuffle", "evaluation on formal sums", 3, 1, eval_examples});
  out.push_back({"ls-negative-controls", "dshuffle",
                 "x1^3, x1 x2, x1^2 and the literal harmonic rule fail with the expected witnesses",
                 3, 1, ls_negative_controls});
  out.push_back({"ds-psi0", "dshuffle", "psi0 satisfies sharp-shuffle and the harmonic equations",
                 4, 1, ds_psi0});
  out.push_back({"psi0-harmonic-base", "dshuffle",
                 "psi0 kills (x1)*(x2); the literal rule leaves 1/(x1 x2)", 2, 1,
                 psi0_harmonic_base});
  out.push_back({"ls-sharp-in-V", "dshuffle", "sharp maps ls samples into the mantar-fixed space",
                 4, 1, ls_sharp_in_v});
  out.push_back({"psi0-sharp-in-V", "dshuffle", "sharp(psi0) is mantar-invariant", 5, 1,
                 psi0_sharp_in_v});
  out.push_back({"ls-ds-base-case", "dshuffle",
                 "ls and ds agree at total length 2 up to the harmonic contraction term", 2, 1,
                 ls_ds_base_case});
}

}  // namespace mould::checks
