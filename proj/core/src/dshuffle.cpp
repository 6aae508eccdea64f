#include "mould/dshuffle.hpp"

#include <algorithm>
#include <functional>

#include "mould/error.hpp"

namespace mould {

FormalSeqSum FormalSeqSum::single(VarSeq seq, RatFun coef) {
  FormalSeqSum s;
  s.add(seq, coef);
  return s;
}

void FormalSeqSum::add(const VarSeq& seq, const RatFun& coef) {
  if (coef.is_zero()) return;
  auto it = terms_.find(seq);
  if (it == terms_.end()) {
    terms_.emplace(seq, coef);
    return;
  }
  it->second += coef;
  if (it->second.is_zero()) terms_.erase(it);
}

void FormalSeqSum::add(const FormalSeqSum& other, const RatFun& k) {
  for (const auto& [seq, c] : other.terms_) add(seq, c * k);
}

FormalSeqSum FormalSeqSum::prepended(int i) const {
  FormalSeqSum out;
  for (const auto& [seq, c] : terms_) {
    VarSeq s{i};
    s.insert(s.end(), seq.begin(), seq.end());
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

std::string_view harmonic_rule_name(HarmonicRule rule) {
  return rule == HarmonicRule::symmetrized ? "symmetrized" : "literal";
}

std::string_view parity_mode_name(ParityMode mode) {
  return mode == ParityMode::literal ? "literal" : "homogeneity";
}

std::optional<HarmonicRule> parse_harmonic_rule(std::string_view name) {
  if (name == "symmetrized") return HarmonicRule::symmetrized;
  if (name == "literal") return HarmonicRule::literal;
  return std::nullopt;
}

std::optional<ParityMode> parse_parity_mode(std::string_view name) {
  if (name == "literal") return ParityMode::literal;
  if (name == "homogeneity") return ParityMode::homogeneity;
  return std::nullopt;
}

namespace {

void require_disjoint(const VarSeq& a, const VarSeq& b) {
  for (int i : a) {
    if (std::count(a.begin(), a.end(), i) > 1 || std::find(b.begin(), b.end(), i) != b.end()) {
      throw Error(Errc::overlapping_indices, "index " + std::to_string(i) + " repeated");
    }
  }
  for (int j : b) {
    if (std::count(b.begin(), b.end(), j) > 1) {
      throw Error(Errc::overlapping_indices, "index " + std::to_string(j) + " repeated");
    }
    if (j < 1 || j > kMaxLength) throw Error(Errc::invalid_argument, "index out of range");
  }
  for (int i : a) {
    if (i < 1 || i > kMaxLength) throw Error(Errc::invalid_argument, "index out of range");
  }
}

VarSeq tail(const VarSeq& s) { return VarSeq(s.begin() + 1, s.end()); }

FormalSeqSum shuffle_rec(const VarSeq& a, const VarSeq& b) {
  if (a.empty()) return FormalSeqSum::single(b);
  if (b.empty()) return FormalSeqSum::single(a);
  FormalSeqSum out = shuffle_rec(tail(a), b).prepended(a[0]);
  out.add(shuffle_rec(a, tail(b)).prepended(b[0]));
  return out;
}

FormalSeqSum harmonic_rec(const VarSeq& a, const VarSeq& b, HarmonicRule rule) {
  if (a.empty()) return FormalSeqSum::single(b);
  if (b.empty()) return FormalSeqSum::single(a);
  const int i = a[0];
  const int j = b[0];
  FormalSeqSum out = harmonic_rec(tail(a), b, rule).prepended(i);
  out.add(harmonic_rec(a, tail(b), rule).prepended(j));
  FormalSeqSum inner = harmonic_rec(tail(a), tail(b), rule);
  RatFun k = RatFun::inverse_linear(lin_var(x_var(i)) - lin_var(x_var(j)));
  if (rule == HarmonicRule::symmetrized) {
    out.add(inner.prepended(i), k);
    out.add(inner.prepended(j), -k);
  } else {
    out.add(inner, k);
  }
  return out;
}

std::string pair_label(int r, int s) {
  return "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

void require_lower(const Bimould& f, const char* who) {
  if (f.layer() != Layer::u_const && !f.satisfies_layer(Layer::u_const)) {
    throw Error(Errc::layer_mismatch, std::string(who) + " expects a u-const bimould");
  }
}

}  // namespace

FormalSeqSum shuffle_expand(const VarSeq& a, const VarSeq& b) {
  require_disjoint(a, b);
  return shuffle_rec(a, b);
}

FormalSeqSum harmonic_expand(const VarSeq& a, const VarSeq& b, HarmonicRule rule) {
  require_disjoint(a, b);
  return harmonic_rec(a, b, rule);
}

FormalSeqSum shuffle(const FormalSeqSum& a, const FormalSeqSum& b) {
  FormalSeqSum out;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) out.add(shuffle_expand(sa, sb), ca * cb);
  }
  return out;
}

FormalSeqSum harmonic(const FormalSeqSum& a, const FormalSeqSum& b, HarmonicRule rule) {
  FormalSeqSum out;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) out.add(harmonic_expand(sa, sb, rule), ca * cb);
  }
  return out;
}

VarSeq seq_range(int from, int to) {
  VarSeq s;
  for (int i = from; i <= to; ++i) s.push_back(i);
  return s;
}

RatFun eval_on_sum(const Bimould& f, const FormalSeqSum& s) {
  const bool upper = f.layer() == Layer::v_const;
  Substitution to_upper;
  if (upper) {
    for (int i = 1; i <= kMaxLength; ++i) to_upper.set(v_var(i), lin_var(u_var(i)));
  }
  RatFunSum acc;
  for (const auto& [seq, coef] : s.terms()) {
    const int r = static_cast<int>(seq.size());
    if (r > f.truncation()) {
      throw Error(Errc::truncation_exceeded,
                  "sequence of length " + std::to_string(r) + " beyond the truncation");
    }
    if (f[r].is_zero()) continue;
    std::vector<Letter> letters;
    for (int i : seq) {
      letters.push_back(upper ? Letter{lin_var(u_var(i)), LinComb{}}
                              : Letter{LinComb{}, lin_var(v_var(i))});
    }
    acc.add(eval_component(f, letters) * (upper ? coef.substitute(to_upper) : coef));
  }
  return acc.take();
}

bool parity_holds(const Bimould& f, ParityMode mode, RatFun* delta) {
  if (f.truncation() < 1) return true;
  const RatFun& f1 = f[1];
  Substitution flip;
  flip.set(u_var(1), lin_var(u_var(1), -1));
  flip.set(v_var(1), lin_var(v_var(1), -1));
  RatFun flipped = f1.substitute(flip);
  RatFun d = mode == ParityMode::literal ? f1 - flipped : f1 + flipped;
  if (delta) *delta = d;
  return d.is_zero();
}

namespace {

void run_pairs(Condition& cond, int maxlen, const std::function<RatFun(int, int)>& residual) {
  for (int n = 2; n <= maxlen; ++n) {
    for (int r = 1; r < n; ++r) {
      RatFun d = residual(r, n - r);
      if (!d.is_zero()) cond.fail(pair_label(r, n - r), d);
    }
  }
}

void parity_condition(CheckReport& rep, const Bimould& f, ParityMode mode, bool required) {
  Condition& c = rep.condition(kParity, required);
  RatFun d;
  if (!parity_holds(f, mode, &d)) c.fail(std::string("length 1, ") + std::string(parity_mode_name(mode)), d);
}

void sharp_shuffle_condition(CheckReport& rep, const Bimould& f, int maxlen) {
  Bimould fs = sharp(f);
  run_pairs(rep.condition(kSharpShuffle), maxlen, [&](int r, int s) {
    return eval_on_sum(fs, shuffle_expand(seq_range(1, r), seq_range(r + 1, r + s)));
  });
}

}  // namespace

CheckReport is_ls(const Bimould& f, int maxlen) {
  require_lower(f, "is_ls");
  Bimould g = f;
  g.set_layer(Layer::u_const);
  CheckReport rep;
  rep.name = "ls";
  rep.params = {{"max_length", maxlen}};
  parity_condition(rep, g, ParityMode::literal, true);
  run_pairs(rep.condition(kShuffle), maxlen, [&](int r, int s) {
    return eval_on_sum(g, shuffle_expand(seq_range(1, r), seq_range(r + 1, r + s)));
  });
  sharp_shuffle_condition(rep, g, maxlen);
  rep.finalize();
  return rep;
}

CheckReport is_ds(const Bimould& f, int maxlen, ParityMode parity, HarmonicRule rule) {
  require_lower(f, "is_ds");
  Bimould g = f;
  g.set_layer(Layer::u_const);
  CheckReport rep;
  rep.name = "ds";
  rep.params = {{"max_length", maxlen},
                {"parity", std::string(parity_mode_name(parity))},
                {"harmonic", std::string(harmonic_rule_name(rule))}};
  parity_condition(rep, g, parity, false);
  sharp_shuffle_condition(rep, g, maxlen);
  run_pairs(rep.condition(kHarmonic), maxlen, [&](int r, int s) {
    return eval_on_sum(g, harmonic_expand(seq_range(1, r), seq_range(r + 1, r + s), rule));
  });
  rep.finalize();
  return rep;
}

CheckReport is_mantar_invariant(const Bimould& f, int maxlen) {
  if (maxlen > f.truncation()) {
    throw Error(Errc::truncation_exceeded, "max length beyond the truncation");
  }
  CheckReport rep;
  rep.name = "V";
  rep.params = {{"max_length", maxlen}};
  Condition& c = rep.condition(kMantar);
  Bimould m = mantar(f);
  for (int r = 1; r <= maxlen; ++r) {
    RatFun d = f[r] - m[r];
    if (!d.is_zero()) c.fail("length " + std::to_string(r), d);
  }
  rep.finalize();
  return rep;
}

}  // namespace mould
