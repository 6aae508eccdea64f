#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mould/ratfun.hpp"

namespace mould {

// u_const: no upper-layer variable appears (functions of v_i, the x_i copy).
// v_const: no lower-layer variable appears (functions of u_i).
enum class Layer { general, u_const, v_const };

std::string_view layer_name(Layer layer);
std::optional<Layer> parse_layer(std::string_view name);

// Length-graded family of rational functions; component r lives in
// u_1..u_r, v_1..v_r. Components above the truncation are unknown, never zero.
class Bimould {
 public:
  explicit Bimould(int truncation = 0, Layer layer = Layer::general,
                   std::optional<int> weight = std::nullopt);

  static Bimould unit(int truncation, Layer layer = Layer::general);
  static Bimould single(int length, RatFun value, int truncation, Layer layer = Layer::general);

  int truncation() const { return static_cast<int>(components_.size()) - 1; }
  Layer layer() const { return layer_; }
  std::optional<int> weight() const { return weight_; }

  const RatFun& operator[](int r) const;
  const RatFun& component(int r) const { return (*this)[r]; }
  void set(int r, RatFun value);

  void set_layer(Layer layer) { layer_ = layer; }
  void set_weight(std::optional<int> w) { weight_ = w; }

  bool is_lu() const { return components_[0].is_zero(); }
  bool is_grouplike_constant() const;  // component 0 equals 1
  bool is_zero() const;
  // Smallest r with a nonzero component, or truncation + 1 when zero.
  int min_length() const;

  Bimould truncated(int truncation) const;

  // Layer actually satisfied by the components (u_const, v_const or general).
  bool satisfies_layer(Layer layer) const;
  // Every nonzero component r homogeneous of degree k - r.
  bool satisfies_weight(int k) const;
  // Throws LayerMismatch if the declared layer is violated.
  void validate() const;

  std::string to_string() const;

 private:
  std::vector<RatFun> components_;
  Layer layer_;
  std::optional<int> weight_;
};

// Lowest length where a and b differ, with the difference a - b there.
struct Difference {
  int length;
  RatFun delta;
};
std::optional<Difference> first_difference(const Bimould& a, const Bimould& b);
bool operator==(const Bimould& a, const Bimould& b);

Layer common_layer(Layer a, Layer b);
std::optional<int> common_weight(std::optional<int> a, std::optional<int> b);

// Evaluates component `length` of a after substituting, for each position j,
// u_j -> letters[j].u and v_j -> letters[j].v.
struct Letter {
  LinComb u{};
  LinComb v{};
};
Letter plain_letter(int position);
RatFun eval_component(const Bimould& a, std::span<const Letter> letters);

// Unary flexion operators.
enum class UnaryOp { anti, pari, neg, mantar, der, swap, push, leng, pushpow };

struct UnaryOpName {
  UnaryOp op;
  int param = 0;  // length for leng, exponent for pushpow
};

Bimould unary(UnaryOpName name, const Bimould& a);

Bimould anti(const Bimould& a);
Bimould pari(const Bimould& a);
Bimould neg(const Bimould& a);
Bimould mantar(const Bimould& a);
Bimould der(const Bimould& a);
Bimould swap(const Bimould& a);
Bimould push(const Bimould& a);
Bimould leng(int r, const Bimould& a);
Bimould pushpow(int k, const Bimould& a);

// Lower-layer copy (x_i = v_i) to upper-layer copy and back:
// sharp f (x) = f(x1, x1+x2, ..., x1+..+xr), flat F (x) = F(x1, x2-x1, ...).
Bimould sharp(const Bimould& f);
Bimould flat(const Bimould& F);

Bimould mu(const Bimould& a, const Bimould& b);
Bimould invmu(const Bimould& s);

Bimould linear_combine(std::span<const Rat> coeffs, std::span<const Bimould> moulds);
Bimould operator+(const Bimould& a, const Bimould& b);
Bimould operator-(const Bimould& a, const Bimould& b);
Bimould operator-(const Bimould& a);
Bimould scale(const Rat& k, const Bimould& a);

}  // namespace mould
