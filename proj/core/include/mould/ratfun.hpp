#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mould/poly.hpp"

namespace mould {

// Primitive integer linear form whose first nonzero coefficient is positive.
// Two forms are proportional over Q iff their normalizations are equal.
class LinForm {
 public:
  // Returns (form, k) with comb == k * form. Throws ZeroDenominator on 0.
  static std::pair<LinForm, std::int64_t> normalize(const LinComb& comb);

  const LinComb& coeffs() const { return coeffs_; }
  int lead_var() const;
  std::string to_string() const { return mould::to_string(coeffs_); }

  friend auto operator<=>(const LinForm&, const LinForm&) = default;

 private:
  LinComb coeffs_{};
};

struct DenFactor {
  LinForm form;
  int mult = 1;

  friend auto operator<=>(const DenFactor&, const DenFactor&) = default;
};

// Unreduced numerator / denominator data, as read from input or built by hand.
struct RawFraction {
  Rat scalar{1};
  Poly num;
  std::vector<DenFactor> den;
};

// Exact rational function scalar * num / prod(den). Always stored reduced:
// no denominator form divides num, num is primitive with a positive leading
// coefficient, and the zero function has scalar 0 with empty num and den.
// With these rules the stored form is canonical.
class RatFun {
 public:
  RatFun() = default;
  RatFun(const Rat& c);  // NOLINT: constants convert implicitly
  RatFun(long c) : RatFun(Rat(c)) {}  // NOLINT

  static RatFun from_poly(const Poly& p, const Rat& scalar = Rat(1));
  static RatFun variable(int var);
  static RatFun linear(const LinComb& comb);
  static RatFun inverse_linear(const LinComb& comb);

  const Rat& scalar() const { return scalar_; }
  const Poly& numerator() const { return num_; }
  const std::vector<DenFactor>& denominator() const { return den_; }

  bool is_zero() const { return sgn(scalar_) == 0; }
  std::optional<Rat> as_constant() const;
  std::optional<int> homogeneous_degree() const;
  std::uint32_t var_mask() const;
  bool uses_family(Family fam) const;
  int den_degree() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& other);
  RatFun& operator-=(const RatFun& other);
  RatFun& operator*=(const RatFun& other);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  RatFun scaled(const Rat& k) const;
  RatFun pow(unsigned e) const;

  // f o sub. Throws ZeroDenominator if a denominator form maps to 0.
  RatFun substitute(const Substitution& sub) const;

  // Throws ZeroDenominator if the point is a pole.
  Rat evaluate(const RatPoint& point) const;
  // nullopt when the point hits a pole mod p.
  std::optional<std::uint64_t> eval_mod(const ModPoint& point) const;

  std::string to_string() const;

  // Structural equality of canonical forms.
  friend bool operator==(const RatFun& a, const RatFun& b);

 private:
  friend RatFun reduce(RawFraction raw);
  friend class RatFunSum;

  Rat scalar_{0};
  Poly num_;
  std::vector<DenFactor> den_;
};

// Brings raw data to canonical reduced form by trial division of the
// numerator by every denominator form.
RatFun reduce(RawFraction raw);
RawFraction raw_of(const RatFun& f);

// Exact equality decided by clearing denominators: the numerator of f - g
// over the common denominator must vanish. A mod-p evaluation may only
// shortcut the negative case.
bool rf_equal(const RatFun& f, const RatFun& g);

// Cross-multiplication test h == f * g without forming the product.
bool is_product(const RatFun& h, const RatFun& f, const RatFun& g);

// Accumulates many terms and combines them over one common denominator.
class RatFunSum {
 public:
  void add(RatFun term);
  void add_scaled(const RatFun& term, const Rat& k);
  bool empty() const { return terms_.empty(); }
  RatFun take();

 private:
  std::vector<RatFun> terms_;
};

RatFun sum(std::span<const RatFun> terms);

}  // namespace mould
