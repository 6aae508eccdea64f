#include "mould/ratfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mould/error.hpp"

namespace mould {

std::pair<LinForm, std::int64_t> LinForm::normalize(const LinComb& comb) {
  std::int64_t g = 0;
  std::int64_t first = 0;
  for (auto c : comb) {
    if (c == 0) continue;
    if (first == 0) first = c;
    g = std::gcd(g, c < 0 ? -c : c);
  }
  if (g == 0) throw Error(Errc::zero_denominator, "linear form is identically zero");
  std::int64_t k = first < 0 ? -g : g;
  LinForm f;
  for (int i = 0; i < kNumVars; ++i) f.coeffs_[i] = comb[i] / k;
  return {f, k};
}

int LinForm::lead_var() const {
  for (int i = 0; i < kNumVars; ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return -1;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_form(const LinComb& c) {
  std::uint64_t h = 0x1234567;
  for (auto x : c) h = mix64(h ^ static_cast<std::uint64_t>(x));
  return h;
}

// Deterministic point on the hyperplane form = 0, mod p.
ModPoint point_on_hyperplane(const LinForm& form, std::uint64_t salt) {
  ModPoint pt;
  std::uint64_t h = hash_form(form.coeffs()) ^ salt;
  for (int i = 0; i < kNumVars; ++i) {
    h = mix64(h + static_cast<std::uint64_t>(i));
    pt[i] = h % modp::kPrime;
  }
  int lead = form.lead_var();
  std::uint64_t rest = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (i == lead || form.coeffs()[i] == 0) continue;
    rest = modp::add(rest, modp::mul(modp::from_signed(form.coeffs()[i]), pt[i]));
  }
  std::uint64_t c = modp::from_signed(form.coeffs()[lead]);
  pt[lead] = modp::mul(modp::sub(0, rest), modp::inv(c));
  return pt;
}

bool maybe_divisible(const Poly& p, const LinForm& form) {
  // A nonzero value on the hyperplane certifies non-divisibility.
  return p.eval_mod(point_on_hyperplane(form, 0xabcdef)) == 0;
}

void merge_factors(std::vector<DenFactor>& den) {
  std::sort(den.begin(), den.end(),
            [](const DenFactor& a, const DenFactor& b) { return a.form < b.form; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (out > 0 && den[out - 1].form == den[i].form) {
      den[out - 1].mult += den[i].mult;
    } else {
      den[out++] = den[i];
    }
  }
  den.resize(out);
  den.erase(std::remove_if(den.begin(), den.end(), [](const DenFactor& f) { return f.mult <= 0; }),
            den.end());
}

// Divides out of num every copy of each factor of den it contains.
void cancel_common(Poly& num, std::vector<DenFactor>& den) {
  if (den.empty() || num.is_constant()) return;
  std::vector<ModPoint> points;
  points.reserve(den.size());
  for (const auto& f : den) points.push_back(point_on_hyperplane(f.form, 0xabcdef));
  // A nonzero value on the hyperplane certifies non-divisibility.
  std::vector<std::uint64_t> values = num.eval_mod_many(points);
  for (std::size_t k = 0; k < den.size(); ++k) {
    if (values[k] != 0) continue;
    auto& f = den[k];
    bool first = true;
    while (f.mult > 0 && (first || maybe_divisible(num, f.form))) {
      first = false;
      auto q = num.divide_linear(f.form.coeffs());
      if (!q) break;
      num = std::move(*q);
      --f.mult;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const DenFactor& f) { return f.mult == 0; }),
            den.end());
}

Rat int_pow(const Rat& base, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// lcm of denominators and the cofactor lists lcm / den_i.
std::vector<DenFactor> lcm_of(const std::vector<const std::vector<DenFactor>*>& dens) {
  std::map<LinForm, int> m;
  for (const auto* d : dens) {
    for (const auto& f : *d) {
      auto& slot = m[f.form];
      slot = std::max(slot, f.mult);
    }
  }
  std::vector<DenFactor> out;
  out.reserve(m.size());
  for (const auto& [form, mult] : m) out.push_back({form, mult});
  return out;
}

struct Pending {
  Poly num;
  std::map<LinForm, int> missing;  // lcm / den of this group
};

std::map<LinForm, int> cofactor(const std::vector<DenFactor>& lcm, const std::vector<DenFactor>& den) {
  std::map<LinForm, int> out;
  std::size_t j = 0;
  for (const auto& f : lcm) {
    int have = 0;
    while (j < den.size() && den[j].form < f.form) ++j;
    if (j < den.size() && den[j].form == f.form) have = den[j].mult;
    if (f.mult > have) out[f.form] = f.mult - have;
  }
  return out;
}

// Sum of num * prod(missing) over the groups. The most widely shared form is
// pulled out first, so a common factor multiplies a partial sum only once.
Poly combine(std::vector<Pending> groups) {
  std::map<LinForm, int> count;
  for (const auto& g : groups) {
    for (const auto& entry : g.missing) ++count[entry.first];
  }
  if (count.empty()) {
    std::vector<Poly> parts;
    for (auto& g : groups) parts.push_back(std::move(g.num));
    return merge_sum(std::move(parts));
  }
  auto best = std::max_element(count.begin(), count.end(),
                               [](const auto& x, const auto& y) { return x.second < y.second; });
  const LinForm form = best->first;
  std::vector<Pending> with;
  std::vector<Pending> without;
  for (auto& g : groups) {
    auto it = g.missing.find(form);
    if (it == g.missing.end()) {
      without.push_back(std::move(g));
      continue;
    }
    if (--it->second == 0) g.missing.erase(it);
    with.push_back(std::move(g));
  }
  std::vector<Poly> parts;
  parts.push_back(combine(std::move(with)).times_linear(form.coeffs()));
  if (!without.empty()) parts.push_back(combine(std::move(without)));
  return merge_sum(std::move(parts));
}

}  // namespace

RatFun reduce(RawFraction raw) {
  RatFun out;
  raw.scalar.canonicalize();
  if (raw.num.is_zero() || sgn(raw.scalar) == 0) return out;
  merge_factors(raw.den);
  cancel_common(raw.num, raw.den);
  Int g = raw.num.content();
  Rat scalar = raw.scalar * g;
  raw.num.divide_exact(g);
  if (sgn(raw.num.leading().coef) < 0) {
    raw.num = -raw.num;
    scalar = -scalar;
  }
  out.scalar_ = std::move(scalar);
  out.num_ = std::move(raw.num);
  out.den_ = std::move(raw.den);
  return out;
}

RawFraction raw_of(const RatFun& f) { return {f.scalar(), f.numerator(), f.denominator()}; }

RatFun::RatFun(const Rat& c) {
  if (sgn(c) != 0) {
    scalar_ = c;
    scalar_.canonicalize();
    num_ = Poly::constant(Int(1));
  }
}

RatFun RatFun::from_poly(const Poly& p, const Rat& scalar) { return reduce({scalar, p, {}}); }

RatFun RatFun::variable(int var) { return from_poly(Poly::variable(var)); }

RatFun RatFun::linear(const LinComb& comb) { return from_poly(Poly::linear(comb)); }

RatFun RatFun::inverse_linear(const LinComb& comb) {
  auto [form, k] = LinForm::normalize(comb);
  RatFun f;
  f.scalar_ = Rat(Int(1), Int(static_cast<long>(k)));
  f.scalar_.canonicalize();
  f.num_ = Poly::constant(Int(1));
  f.den_.push_back({form, 1});
  return f;
}

std::optional<Rat> RatFun::as_constant() const {
  if (is_zero()) return Rat(0);
  if (den_.empty() && num_.is_constant()) return scalar_;
  return std::nullopt;
}

std::optional<int> RatFun::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  auto d = num_.homogeneous_degree();
  if (!d) return std::nullopt;
  return *d - den_degree();
}

int RatFun::den_degree() const {
  int d = 0;
  for (const auto& f : den_) d += f.mult;
  return d;
}

std::uint32_t RatFun::var_mask() const {
  std::uint32_t mask = num_.var_mask();
  for (const auto& f : den_) {
    for (int i = 0; i < kNumVars; ++i) {
      if (f.form.coeffs()[i] != 0) mask |= std::uint32_t{1} << i;
    }
  }
  return mask;
}

bool RatFun::uses_family(Family fam) const {
  std::uint32_t block = (std::uint32_t{1} << kMaxLength) - 1;
  if (fam == Family::v) block <<= kMaxLength;
  return (var_mask() & block) != 0;
}

RatFun RatFun::operator-() const {
  RatFun f = *this;
  f.scalar_ = -f.scalar_;
  return f;
}

RatFun& RatFun::operator+=(const RatFun& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  RatFunSum s;
  s.add(std::move(*this));
  s.add(other);
  return *this = s.take();
}

RatFun& RatFun::operator-=(const RatFun& other) { return *this += -other; }

RatFun& RatFun::operator*=(const RatFun& other) {
  if (is_zero() || other.is_zero()) return *this = RatFun();
  // Cancel each side's denominator against the other side's numerator first
  // so the product is formed from smaller pieces.
  Poly a = num_;
  Poly b = other.num_;
  std::vector<DenFactor> da = den_;
  std::vector<DenFactor> db = other.den_;
  cancel_common(b, da);
  cancel_common(a, db);
  RawFraction raw;
  raw.scalar = scalar_ * other.scalar_;
  raw.num = a * b;
  raw.den = std::move(da);
  raw.den.insert(raw.den.end(), db.begin(), db.end());
  merge_factors(raw.den);
  // Both inputs were reduced, and cross factors were removed above.
  Int g = raw.num.content();
  raw.scalar *= g;
  raw.num.divide_exact(g);
  if (sgn(raw.num.leading().coef) < 0) {
    raw.num = -raw.num;
    raw.scalar = -raw.scalar;
  }
  scalar_ = std::move(raw.scalar);
  num_ = std::move(raw.num);
  den_ = std::move(raw.den);
  return *this;
}

RatFun RatFun::scaled(const Rat& k) const {
  if (sgn(k) == 0 || is_zero()) return RatFun();
  RatFun f = *this;
  f.scalar_ *= k;
  return f;
}

RatFun RatFun::pow(unsigned e) const {
  RatFun r(Rat(1));
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

RatFun RatFun::substitute(const Substitution& sub) const {
  if (is_zero()) return RatFun();
  RawFraction raw;
  raw.scalar = scalar_;
  for (const auto& f : den_) {
    LinComb img{};
    for (int i = 0; i < kNumVars; ++i) {
      if (f.form.coeffs()[i] != 0) img = img + f.form.coeffs()[i] * sub.image(i);
    }
    if (::mould::is_zero(img)) {
      throw Error(Errc::zero_denominator,
                  "factor " + f.form.to_string() + " maps to zero under substitution");
    }
    auto [form, k] = LinForm::normalize(img);
    raw.scalar /= int_pow(Rat(static_cast<long>(k)), f.mult);
    raw.den.push_back({form, f.mult});
  }
  raw.num = num_.substitute(sub);
  return reduce(std::move(raw));
}

Rat RatFun::evaluate(const RatPoint& point) const {
  if (is_zero()) return 0;
  Rat d = 1;
  for (const auto& f : den_) {
    Rat v = 0;
    for (int i = 0; i < kNumVars; ++i) {
      if (f.form.coeffs()[i] != 0) v += Rat(static_cast<long>(f.form.coeffs()[i])) * point[i];
    }
    if (sgn(v) == 0) throw Error(Errc::zero_denominator, "evaluation at a pole");
    d *= int_pow(v, f.mult);
  }
  return scalar_ * num_.eval(point) / d;
}

std::optional<std::uint64_t> RatFun::eval_mod(const ModPoint& point) const {
  if (is_zero()) return 0;
  std::uint64_t sden = modp::reduce(scalar_.get_den());
  if (sden == 0) return std::nullopt;
  std::uint64_t d = sden;
  for (const auto& f : den_) {
    std::uint64_t v = 0;
    for (int i = 0; i < kNumVars; ++i) {
      if (f.form.coeffs()[i] != 0) {
        v = modp::add(v, modp::mul(modp::from_signed(f.form.coeffs()[i]), point[i]));
      }
    }
    if (v == 0) return std::nullopt;
    d = modp::mul(d, modp::pow(v, static_cast<std::uint64_t>(f.mult)));
  }
  std::uint64_t n = modp::mul(modp::reduce(scalar_.get_num()), num_.eval_mod(point));
  return modp::mul(n, modp::inv(d));
}

std::string RatFun::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool num_is_one = num_.is_constant();
  if (scalar_ != 1 || num_is_one) {
    if (scalar_ == -1 && !num_is_one) {
      os << "-";
    } else {
      os << scalar_.get_str();
      if (!num_is_one) os << "*";
    }
  }
  if (!num_is_one) {
    if (num_.size() > 1) {
      os << "(" << num_.to_string() << ")";
    } else {
      os << num_.to_string();
    }
  }
  if (!den_.empty()) {
    os << "/(";
    bool first = true;
    for (const auto& f : den_) {
      if (!first) os << "*";
      os << "(" << f.form.to_string() << ")";
      if (f.mult > 1) os << "^" << f.mult;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.scalar_ == b.scalar_ && a.num_ == b.num_ && a.den_ == b.den_;
}

bool rf_equal(const RatFun& f, const RatFun& g) {
  if (f.is_zero() && g.is_zero()) return true;
  // Fast negative path at a fixed pseudo-random point.
  ModPoint pt;
  std::uint64_t h = 0x5eed;
  for (int i = 0; i < kNumVars; ++i) {
    h = mix64(h + static_cast<std::uint64_t>(i));
    pt[i] = h % modp::kPrime;
  }
  auto a = f.eval_mod(pt);
  auto b = g.eval_mod(pt);
  if (a && b && *a != *b) return false;
  return (f - g).is_zero();
}

bool is_product(const RatFun& h, const RatFun& f, const RatFun& g) {
  // h.scalar * h.num * den_f * den_g == f.scalar * g.scalar * f.num * g.num * den_h
  auto expand = [](const std::vector<DenFactor>& den) {
    Poly p = Poly::constant(Int(1));
    for (const auto& fac : den) {
      for (int k = 0; k < fac.mult; ++k) p = p.times_linear(fac.form.coeffs());
    }
    return p;
  };
  Rat lhs_s = h.scalar();
  Rat rhs_s = f.scalar() * g.scalar();
  Poly lhs = h.numerator() * expand(f.denominator()) * expand(g.denominator());
  Poly rhs = f.numerator() * g.numerator() * expand(h.denominator());
  // Clear the rational scalars.
  Int ln = lhs_s.get_num() * rhs_s.get_den();
  Int rn = rhs_s.get_num() * lhs_s.get_den();
  return (lhs.times(ln) - rhs.times(rn)).is_zero();
}

void RatFunSum::add(RatFun term) {
  if (!term.is_zero()) terms_.push_back(std::move(term));
}

void RatFunSum::add_scaled(const RatFun& term, const Rat& k) {
  if (!term.is_zero() && sgn(k) != 0) terms_.push_back(term.scaled(k));
}

RatFun RatFunSum::take() {
  std::vector<RatFun> terms = std::move(terms_);
  terms_.clear();
  if (terms.empty()) return RatFun();
  if (terms.size() == 1) return std::move(terms[0]);

  // Group terms sharing a denominator and add their numerators directly.
  struct Group {
    const std::vector<DenFactor>* den;
    std::vector<const RatFun*> members;
  };
  std::map<std::vector<DenFactor>, std::size_t> index;
  std::vector<Group> groups;
  for (const auto& t : terms) {
    auto [it, fresh] = index.try_emplace(t.den_, groups.size());
    if (fresh) groups.push_back({&t.den_, {}});
    groups[it->second].members.push_back(&t);
  }

  // Common scalar denominator.
  Int sden = 1;
  for (const auto& t : terms) mpz_lcm(sden.get_mpz_t(), sden.get_mpz_t(), t.scalar_.get_den_mpz_t());

  std::vector<const std::vector<DenFactor>*> dens;
  for (const auto& g : groups) dens.push_back(g.den);
  std::vector<DenFactor> lcm = lcm_of(dens);

  std::vector<Pending> pending;
  for (const auto& g : groups) {
    std::vector<Poly::Term> gt;
    for (const auto* m : g.members) {
      Int k = m->scalar_.get_num() * (sden / m->scalar_.get_den());
      for (const auto& t : m->num_.terms()) gt.push_back({t.mono, t.coef * k});
    }
    Poly gp = Poly::from_terms(std::move(gt));
    if (gp.is_zero()) continue;
    pending.push_back({std::move(gp), cofactor(lcm, *g.den)});
  }
  RawFraction raw;
  raw.scalar = Rat(Int(1), sden);
  raw.scalar.canonicalize();
  raw.num = combine(std::move(pending));
  raw.den = std::move(lcm);
  return reduce(std::move(raw));
}

RatFun sum(std::span<const RatFun> terms) {
  RatFunSum s;
  for (const auto& t : terms) s.add(t);
  return s.take();
}

}  // namespace mould
