#include "mould/bimould.hpp"

#include <sstream>

#include "mould/error.hpp"
#include "mould/parallel.hpp"

namespace mould {

std::string_view layer_name(Layer layer) {
  switch (layer) {
    case Layer::general: return "general";
    case Layer::u_const: return "u-const";
    case Layer::v_const: return "v-const";
  }
  return "general";
}

std::optional<Layer> parse_layer(std::string_view name) {
  if (name == "general") return Layer::general;
  if (name == "u-const") return Layer::u_const;
  if (name == "v-const") return Layer::v_const;
  return std::nullopt;
}

Bimould::Bimould(int truncation, Layer layer, std::optional<int> weight)
    : layer_(layer), weight_(weight) {
  if (truncation < 0 || truncation > kMaxLength) {
    throw Error(Errc::invalid_argument, "truncation must lie in [0, " +
                                            std::to_string(kMaxLength) + "]");
  }
  components_.resize(static_cast<std::size_t>(truncation) + 1);
}

Bimould Bimould::unit(int truncation, Layer layer) {
  Bimould m(truncation, layer);
  m.components_[0] = RatFun(1);
  return m;
}

Bimould Bimould::single(int length, RatFun value, int truncation, Layer layer) {
  Bimould m(truncation, layer);
  m.set(length, std::move(value));
  return m;
}

const RatFun& Bimould::operator[](int r) const {
  if (r < 0 || r > truncation()) {
    throw Error(Errc::truncation_exceeded, "component " + std::to_string(r) +
                                               " beyond truncation " +
                                               std::to_string(truncation()));
  }
  return components_[r];
}

void Bimould::set(int r, RatFun value) {
  if (r < 0 || r > truncation()) {
    throw Error(Errc::truncation_exceeded, "component " + std::to_string(r) +
                                               " beyond truncation " +
                                               std::to_string(truncation()));
  }
  components_[r] = std::move(value);
}

bool Bimould::is_grouplike_constant() const {
  auto c = components_[0].as_constant();
  return c && *c == 1;
}

bool Bimould::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

int Bimould::min_length() const {
  for (int r = 0; r <= truncation(); ++r) {
    if (!components_[r].is_zero()) return r;
  }
  return truncation() + 1;
}

Bimould Bimould::truncated(int truncation) const {
  if (truncation > this->truncation()) {
    throw Error(Errc::truncation_exceeded, "cannot extend a truncated bimould");
  }
  Bimould m(truncation, layer_, weight_);
  for (int r = 0; r <= truncation; ++r) m.components_[r] = components_[r];
  return m;
}

bool Bimould::satisfies_layer(Layer layer) const {
  for (int r = 0; r <= truncation(); ++r) {
    const RatFun& c = components_[r];
    std::uint32_t mask = c.var_mask();
    // Component r may only mention u_1..u_r, v_1..v_r.
    for (int i = 0; i < kNumVars; ++i) {
      if ((mask >> i & 1u) && position_of(i) > r) return false;
    }
    if (layer == Layer::u_const && c.uses_family(Family::u)) return false;
    if (layer == Layer::v_const && c.uses_family(Family::v)) return false;
  }
  return true;
}

bool Bimould::satisfies_weight(int k) const {
  for (int r = 0; r <= truncation(); ++r) {
    const RatFun& c = components_[r];
    if (c.is_zero()) continue;
    auto d = c.homogeneous_degree();
    if (!d || *d != k - r) return false;
  }
  return true;
}

void Bimould::validate() const {
  if (!satisfies_layer(layer_)) {
    throw Error(Errc::layer_mismatch,
                "components violate declared layer " + std::string(layer_name(layer_)));
  }
  if (weight_ && !satisfies_weight(*weight_)) {
    throw Error(Errc::invalid_argument, "components are not homogeneous of weight " +
                                            std::to_string(*weight_));
  }
}

std::string Bimould::to_string() const {
  std::ostringstream os;
  os << "Bimould[trunc=" << truncation() << ", " << layer_name(layer_);
  if (weight_) os << ", weight=" << *weight_;
  os << "]\n";
  for (int r = 0; r <= truncation(); ++r) {
    if (components_[r].is_zero()) continue;
    os << "  [" << r << "] " << components_[r].to_string() << "\n";
  }
  return os.str();
}

std::optional<Difference> first_difference(const Bimould& a, const Bimould& b) {
  int L = std::min(a.truncation(), b.truncation());
  for (int r = 0; r <= L; ++r) {
    if (a[r] == b[r]) continue;
    RatFun delta = a[r] - b[r];
    if (!delta.is_zero()) return Difference{r, std::move(delta)};
  }
  return std::nullopt;
}

bool operator==(const Bimould& a, const Bimould& b) { return !first_difference(a, b); }

Layer common_layer(Layer a, Layer b) { return a == b ? a : Layer::general; }

std::optional<int> common_weight(std::optional<int> a, std::optional<int> b) {
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

Letter plain_letter(int position) { return {lin_var(u_var(position)), lin_var(v_var(position))}; }

RatFun eval_component(const Bimould& a, std::span<const Letter> letters) {
  const int m = static_cast<int>(letters.size());
  const RatFun& f = a[m];
  if (f.is_zero()) return RatFun();
  bool identity = true;
  for (int j = 1; j <= m && identity; ++j) {
    const Letter& l = letters[j - 1];
    identity = l.u == lin_var(u_var(j)) && l.v == lin_var(v_var(j));
  }
  if (identity) return f;
  Substitution sub;
  for (int j = 1; j <= m; ++j) {
    sub.set(u_var(j), letters[j - 1].u);
    sub.set(v_var(j), letters[j - 1].v);
  }
  return f.substitute(sub);
}

namespace {

// Applies a per-length substitution to every component.
template <typename MakeSub>
Bimould map_components(const Bimould& a, Layer layer, MakeSub make_sub) {
  Bimould out(a.truncation(), layer, a.weight());
  out.set(0, a[0]);
  parallel_for(1, a.truncation() + 1, [&](int r) {
    if (a[r].is_zero()) return;
    out.set(r, a[r].substitute(make_sub(r)));
  });
  return out;
}

template <typename ScaleOf>
Bimould scale_components(const Bimould& a, ScaleOf scale_of) {
  Bimould out(a.truncation(), a.layer(), a.weight());
  for (int r = 0; r <= a.truncation(); ++r) out.set(r, a[r].scaled(scale_of(r)));
  return out;
}

Layer swapped(Layer layer) {
  switch (layer) {
    case Layer::u_const: return Layer::v_const;
    case Layer::v_const: return Layer::u_const;
    case Layer::general: return Layer::general;
  }
  return Layer::general;
}

LinComb sum_u(int from, int to) {
  LinComb c{};
  for (int j = from; j <= to; ++j) c[u_var(j)] = 1;
  return c;
}

}  // namespace

Bimould anti(const Bimould& a) {
  return map_components(a, a.layer(), [](int r) {
    Substitution s;
    for (int i = 1; i <= r; ++i) {
      s.set(u_var(i), lin_var(u_var(r + 1 - i)));
      s.set(v_var(i), lin_var(v_var(r + 1 - i)));
    }
    return s;
  });
}

Bimould pari(const Bimould& a) {
  return scale_components(a, [](int r) { return Rat(r % 2 ? -1 : 1); });
}

Bimould neg(const Bimould& a) {
  return map_components(a, a.layer(), [](int r) {
    Substitution s;
    for (int i = 1; i <= r; ++i) {
      s.set(u_var(i), lin_var(u_var(i), -1));
      s.set(v_var(i), lin_var(v_var(i), -1));
    }
    return s;
  });
}

Bimould mantar(const Bimould& a) {
  Bimould r = anti(a);
  // (-1)^(r-1)
  return scale_components(r, [](int len) { return Rat(len % 2 ? 1 : -1); });
}

Bimould der(const Bimould& a) {
  return scale_components(a, [](int r) { return Rat(r); });
}

Bimould swap(const Bimould& a) {
  return map_components(a, swapped(a.layer()), [](int r) {
    Substitution s;
    for (int i = 1; i <= r; ++i) {
      LinComb ui = lin_var(v_var(r + 1 - i));
      if (i >= 2) ui[v_var(r + 2 - i)] = -1;
      s.set(u_var(i), ui);
      s.set(v_var(i), sum_u(1, r + 1 - i));
    }
    return s;
  });
}

Bimould push(const Bimould& a) {
  return map_components(a, a.layer(), [](int r) {
    Substitution s;
    s.set(u_var(1), -sum_u(1, r));
    s.set(v_var(1), lin_var(v_var(r), -1));
    for (int i = 2; i <= r; ++i) {
      s.set(u_var(i), lin_var(u_var(i - 1)));
      LinComb vi = lin_var(v_var(i - 1));
      vi[v_var(r)] -= 1;
      s.set(v_var(i), vi);
    }
    return s;
  });
}

Bimould leng(int r, const Bimould& a) {
  Bimould out(a.truncation(), a.layer(), a.weight());
  if (r >= 0 && r <= a.truncation()) out.set(r, a[r]);
  return out;
}

Bimould pushpow(int k, const Bimould& a) {
  Bimould out = a;
  for (int i = 0; i < k; ++i) out = push(out);
  return out;
}

Bimould unary(UnaryOpName name, const Bimould& a) {
  switch (name.op) {
    case UnaryOp::anti: return anti(a);
    case UnaryOp::pari: return pari(a);
    case UnaryOp::neg: return neg(a);
    case UnaryOp::mantar: return mantar(a);
    case UnaryOp::der: return der(a);
    case UnaryOp::swap: return swap(a);
    case UnaryOp::push: return push(a);
    case UnaryOp::leng: return leng(name.param, a);
    case UnaryOp::pushpow: return pushpow(name.param, a);
  }
  throw Error(Errc::invalid_argument, "unknown unary operator");
}

Bimould sharp(const Bimould& f) {
  if (f.layer() != Layer::u_const) {
    throw Error(Errc::layer_mismatch, "sharp expects a lower-layer (u-const) bimould");
  }
  return map_components(f, Layer::v_const, [](int r) {
    Substitution s;
    for (int i = 1; i <= r; ++i) {
      s.set(v_var(i), sum_u(1, i));
      s.set(u_var(i), lin_var(u_var(i)));
    }
    return s;
  });
}

Bimould flat(const Bimould& F) {
  if (F.layer() != Layer::v_const) {
    throw Error(Errc::layer_mismatch, "flat expects an upper-layer (v-const) bimould");
  }
  return map_components(F, Layer::u_const, [](int r) {
    Substitution s;
    for (int i = 1; i <= r; ++i) {
      LinComb c = lin_var(v_var(i));
      if (i >= 2) c[v_var(i - 1)] = -1;
      s.set(u_var(i), c);
      s.set(v_var(i), lin_var(v_var(i)));
    }
    return s;
  });
}

namespace {

std::vector<Letter> plain_range(int from, int to) {
  std::vector<Letter> out;
  for (int j = from; j <= to; ++j) out.push_back(plain_letter(j));
  return out;
}

RatFun mu_component(const Bimould& a, const Bimould& b, int r) {
  RatFunSum acc;
  for (int i = 0; i <= r; ++i) {
    if (a[i].is_zero() || b[r - i].is_zero()) continue;
    auto la = plain_range(1, i);
    auto lb = plain_range(i + 1, r);
    acc.add(eval_component(a, la) * eval_component(b, lb));
  }
  return acc.take();
}

std::optional<int> sum_weight(std::optional<int> a, std::optional<int> b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

}  // namespace

Bimould mu(const Bimould& a, const Bimould& b) {
  int L = std::min(a.truncation(), b.truncation());
  Bimould out(L, common_layer(a.layer(), b.layer()), sum_weight(a.weight(), b.weight()));
  parallel_for(0, L + 1, [&](int r) { out.set(r, mu_component(a, b, r)); });
  return out;
}

Bimould invmu(const Bimould& s) {
  if (!s.is_grouplike_constant()) {
    throw Error(Errc::not_invertible, "invmu requires component 0 equal to 1");
  }
  Bimould t = Bimould::unit(s.truncation(), s.layer());
  for (int r = 1; r <= s.truncation(); ++r) {
    RatFunSum acc;
    for (int i = 1; i <= r; ++i) {
      if (s[i].is_zero() || t[r - i].is_zero()) continue;
      auto ls = plain_range(1, i);
      auto lt = plain_range(i + 1, r);
      acc.add(-(eval_component(s, ls) * eval_component(t, lt)));
    }
    t.set(r, acc.take());
  }
  return t;
}

Bimould linear_combine(std::span<const Rat> coeffs, std::span<const Bimould> moulds) {
  if (coeffs.size() != moulds.size() || moulds.empty()) {
    throw Error(Errc::invalid_argument, "linear_combine needs matching nonempty lists");
  }
  int L = moulds[0].truncation();
  Layer layer = moulds[0].layer();
  std::optional<int> weight = moulds[0].weight();
  for (const auto& m : moulds) {
    L = std::min(L, m.truncation());
    layer = common_layer(layer, m.layer());
    weight = common_weight(weight, m.weight());
  }
  Bimould out(L, layer, weight);
  for (int r = 0; r <= L; ++r) {
    RatFunSum acc;
    for (std::size_t k = 0; k < moulds.size(); ++k) acc.add_scaled(moulds[k][r], coeffs[k]);
    out.set(r, acc.take());
  }
  return out;
}

Bimould operator+(const Bimould& a, const Bimould& b) {
  Rat c[] = {1, 1};
  Bimould m[] = {a, b};
  return linear_combine(c, m);
}

Bimould operator-(const Bimould& a, const Bimould& b) {
  Rat c[] = {1, -1};
  Bimould m[] = {a, b};
  return linear_combine(c, m);
}

Bimould operator-(const Bimould& a) { return scale(Rat(-1), a); }

Bimould scale(const Rat& k, const Bimould& a) {
  Bimould out(a.truncation(), a.layer(), a.weight());
  for (int r = 0; r <= a.truncation(); ++r) out.set(r, a[r].scaled(k));
  return out;
}

}  // namespace mould
