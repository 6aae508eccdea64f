#pragma once

#include <map>
#include <vector>

#include "mould/bimould.hpp"
#include "mould/report.hpp"

namespace mould {

// Ordered list of distinct variable indices i, standing for (x_i, ...).
using VarSeq = std::vector<int>;

// Finite linear combination of variable sequences with rational-function
// coefficients in the x variables. Zero coefficients are never stored.
class FormalSeqSum {
 public:
  FormalSeqSum() = default;
  static FormalSeqSum single(VarSeq seq, RatFun coef = RatFun(1));

  void add(const VarSeq& seq, const RatFun& coef);
  void add(const FormalSeqSum& other, const RatFun& k = RatFun(1));

  const std::map<VarSeq, RatFun>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Prepends index i to every sequence.
  FormalSeqSum prepended(int i) const;

  friend bool operator==(const FormalSeqSum& a, const FormalSeqSum& b) { return a.terms_ == b.terms_; }

 private:
  std::map<VarSeq, RatFun> terms_;
};

enum class HarmonicRule { symmetrized, literal };
enum class ParityMode { literal, homogeneity };

std::string_view harmonic_rule_name(HarmonicRule rule);
std::string_view parity_mode_name(ParityMode mode);
std::optional<HarmonicRule> parse_harmonic_rule(std::string_view name);
std::optional<ParityMode> parse_parity_mode(std::string_view name);

FormalSeqSum shuffle_expand(const VarSeq& a, const VarSeq& b);
FormalSeqSum harmonic_expand(const VarSeq& a, const VarSeq& b,
                             HarmonicRule rule = HarmonicRule::symmetrized);
// Bilinear extensions to formal sums.
FormalSeqSum shuffle(const FormalSeqSum& a, const FormalSeqSum& b);
FormalSeqSum harmonic(const FormalSeqSum& a, const FormalSeqSum& b,
                      HarmonicRule rule = HarmonicRule::symmetrized);

// sum coef * f_{|seq|}(x_seq). For a v-const f the x_i are read as u_i.
RatFun eval_on_sum(const Bimould& f, const FormalSeqSum& s);

VarSeq seq_range(int from, int to);

// Condition names used in the reports below.
inline constexpr const char* kParity = "parity";
inline constexpr const char* kShuffle = "shuffle";
inline constexpr const char* kSharpShuffle = "sharp-shuffle";
inline constexpr const char* kHarmonic = "harmonic";
inline constexpr const char* kMantar = "mantar";

// Parity of f^(1) in the given mode: literal asks f(x) = f(-x), homogeneity
// asks invariance under pari o neg, i.e. f(x) = -f(-x).
bool parity_holds(const Bimould& f, ParityMode mode, RatFun* delta = nullptr);

CheckReport is_ls(const Bimould& f, int maxlen);
// Overall verdict needs the sharp-shuffle and harmonic conditions; parity is
// reported in the chosen mode without deciding the verdict.
CheckReport is_ds(const Bimould& f, int maxlen, ParityMode parity = ParityMode::homogeneity,
                  HarmonicRule rule = HarmonicRule::symmetrized);
CheckReport is_mantar_invariant(const Bimould& f, int maxlen);

}  // namespace mould
