#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mould {

using Int = mpz_class;
using Rat = mpq_class;

// p/q in canonical form; q must be nonzero.
Rat rat(long p, long q = 1);

// Variables live in one indexed alphabet: u_1..u_N occupy slots [0, N) and
// v_1..v_N occupy [N, 2N). The x_i of lower-layer functions are the v_i.
inline constexpr int kMaxLength = 10;
inline constexpr int kNumVars = 2 * kMaxLength;

enum class Family : std::uint8_t { u, v };

constexpr int u_var(int i) { return i - 1; }
constexpr int v_var(int i) { return kMaxLength + i - 1; }
constexpr int x_var(int i) { return v_var(i); }
constexpr int var_of(Family f, int i) { return f == Family::u ? u_var(i) : v_var(i); }
constexpr Family family_of(int var) { return var < kMaxLength ? Family::u : Family::v; }
constexpr int position_of(int var) { return var % kMaxLength + 1; }

std::string var_name(int var);
std::optional<int> parse_var_name(std::string_view name);

// Integer linear combination of the alphabet.
using LinComb = std::array<std::int64_t, kNumVars>;

LinComb lin_var(int var, std::int64_t coef = 1);
LinComb operator+(const LinComb& a, const LinComb& b);
LinComb operator-(const LinComb& a, const LinComb& b);
LinComb operator-(const LinComb& a);
LinComb operator*(std::int64_t k, const LinComb& a);
bool is_zero(const LinComb& a);
std::string to_string(const LinComb& a);

struct Monomial {
  std::array<std::uint8_t, kNumVars> exp{};

  int degree() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Simultaneous linear substitution var -> image(var); identity by default.
class Substitution {
 public:
  Substitution();

  void set(int var, const LinComb& image) { images_[var] = image; }
  const LinComb& image(int var) const { return images_[var]; }

 private:
  std::array<LinComb, kNumVars> images_;
};

// Arithmetic in Z/pZ with p = 2^61 - 1, used for probabilistic shortcuts only.
namespace modp {
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
std::uint64_t reduce(const Int& z);
std::uint64_t from_signed(std::int64_t z);
}  // namespace modp

using ModPoint = std::array<std::uint64_t, kNumVars>;
using RatPoint = std::array<Rat, kNumVars>;

// Sparse polynomial with integer coefficients. Terms are kept sorted by
// monomial (ascending lexicographic exponent order) with no zero coefficient.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Int coef;
  };

  Poly() = default;

  static Poly constant(const Int& c);
  static Poly variable(int var);
  static Poly linear(const LinComb& comb);
  // Sorts, merges and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.back(); }

  int total_degree() const;
  std::optional<int> homogeneous_degree() const;
  std::uint32_t var_mask() const;
  Int content() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly times(const Int& k) const;
  Poly times_linear(const LinComb& comb) const;
  // Requires every coefficient divisible by k.
  void divide_exact(const Int& k);

  // Exact division by a primitive linear form; nullopt when it does not divide.
  std::optional<Poly> divide_linear(const LinComb& form) const;

  Poly substitute(const Substitution& sub) const;

  std::uint64_t eval_mod(const ModPoint& point) const;
  // One pass over the terms for several points.
  std::vector<std::uint64_t> eval_mod_many(std::span<const ModPoint> points) const;
  Rat eval(const RatPoint& point) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  friend Poly merge_sum(std::vector<Poly> parts);
  std::vector<Term> terms_;
};

// Sum of polynomials by pairwise merging.
Poly merge_sum(std::vector<Poly> parts);

}  // namespace mould
