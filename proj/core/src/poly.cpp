#include "mould/poly.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

#include "mould/error.hpp"

namespace mould {

Rat rat(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}


std::string var_name(int var) {
  return (family_of(var) == Family::u ? "u" : "v") + std::to_string(position_of(var));
}

std::optional<int> parse_var_name(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  Family fam;
  if (name[0] == 'u') {
    fam = Family::u;
  } else if (name[0] == 'v' || name[0] == 'x') {
    fam = Family::v;
  } else {
    return std::nullopt;
  }
  int idx = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    idx = idx * 10 + (ch - '0');
    if (idx > kMaxLength) return std::nullopt;
  }
  if (idx < 1) return std::nullopt;
  return var_of(fam, idx);
}

LinComb lin_var(int var, std::int64_t coef) {
  LinComb c{};
  c[var] = coef;
  return c;
}

LinComb operator+(const LinComb& a, const LinComb& b) {
  LinComb c;
  for (int i = 0; i < kNumVars; ++i) c[i] = a[i] + b[i];
  return c;
}

LinComb operator-(const LinComb& a, const LinComb& b) {
  LinComb c;
  for (int i = 0; i < kNumVars; ++i) c[i] = a[i] - b[i];
  return c;
}

LinComb operator-(const LinComb& a) {
  LinComb c;
  for (int i = 0; i < kNumVars; ++i) c[i] = -a[i];
  return c;
}

LinComb operator*(std::int64_t k, const LinComb& a) {
  LinComb c;
  for (int i = 0; i < kNumVars; ++i) c[i] = k * a[i];
  return c;
}

bool is_zero(const LinComb& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::string to_string(const LinComb& a) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kNumVars; ++i) {
    std::int64_t c = a[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) os << m << "*";
    os << var_name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Substitution::Substitution() {
  for (int i = 0; i < kNumVars; ++i) images_[i] = lin_var(i);
}

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  return add(lo, hi);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

std::uint64_t reduce(const Int& z) {
  // mpz_fdiv_ui returns the non-negative residue.
  return mpz_fdiv_ui(z.get_mpz_t(), kPrime);
}

std::uint64_t from_signed(std::int64_t z) {
  if (z >= 0) return static_cast<std::uint64_t>(z) % kPrime;
  return sub(0, static_cast<std::uint64_t>(-z) % kPrime);
}

}  // namespace modp

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) {
    unsigned s = unsigned{a.exp[i]} + b.exp[i];
    if (s > 255) throw Error(Errc::invalid_argument, "exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(s);
  }
  return m;
}

void canonicalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.mono < b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Int acc = std::move(terms[i].coef);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      acc += terms[j].coef;
      ++j;
    }
    if (sgn(acc) != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coef = std::move(acc);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly Poly::constant(const Int& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(int var) {
  Poly p;
  Monomial m;
  m.exp[var] = 1;
  p.terms_.push_back({m, Int(1)});
  return p;
}

Poly Poly::linear(const LinComb& comb) {
  std::vector<Term> terms;
  for (int i = 0; i < kNumVars; ++i) {
    if (comb[i] == 0) continue;
    Monomial m;
    m.exp[i] = 1;
    terms.push_back({m, Int(static_cast<long>(comb[i]))});
  }
  return from_terms(std::move(terms));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_[0].mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return std::nullopt;
  }
  return d;
}

std::uint32_t Poly::var_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (int i = 0; i < kNumVars; ++i) {
      if (t.mono.exp[i]) mask |= std::uint32_t{1} << i;
    }
  }
  return mask;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      Int s = a->coef + b->coef;
      if (sgn(s) != 0) out.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].mono == Monomial{}) return b.times(a.terms_[0].coef);
  if (b.size() == 1 && b.terms_[0].mono == Monomial{}) return a.times(b.terms_[0].coef);
  std::vector<Poly::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({mono_mul(s.mono, t.mono), s.coef * t.coef});
  }
  return Poly::from_terms(std::move(out));
}

Poly Poly::times(const Int& k) const {
  if (sgn(k) == 0) return {};
  Poly p = *this;
  if (k != 1) {
    for (auto& t : p.terms_) t.coef *= k;
  }
  return p;
}

namespace {

// Merges two sorted term lists, adding coefficients of equal monomials.
std::vector<Poly::Term> merge_terms(std::vector<Poly::Term>&& a, std::vector<Poly::Term>&& b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->mono < j->mono) {
      out.push_back(std::move(*i++));
    } else if (j->mono < i->mono) {
      out.push_back(std::move(*j++));
    } else {
      i->coef += j->coef;
      if (sgn(i->coef) != 0) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  std::move(i, a.end(), std::back_inserter(out));
  std::move(j, b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Poly merge_sum(std::vector<Poly> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<Poly> next;
    for (std::size_t k = 0; k + 1 < parts.size(); k += 2) {
      Poly m;
      m.terms_ = merge_terms(std::move(parts[k].terms_), std::move(parts[k + 1].terms_));
      next.push_back(std::move(m));
    }
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts[0]);
}

Poly Poly::times_linear(const LinComb& comb) const {
  // Multiplying by one variable keeps the term order, so the shifted copies
  // only need merging.
  std::vector<Poly> shifted;
  for (int i = 0; i < kNumVars; ++i) {
    if (comb[i] == 0) continue;
    Int c(static_cast<long>(comb[i]));
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term nt{t.mono, t.coef * c};
      if (nt.mono.exp[i] == 255) throw Error(Errc::invalid_argument, "exponent overflow");
      ++nt.mono.exp[i];
      p.terms_.push_back(std::move(nt));
    }
    shifted.push_back(std::move(p));
  }
  return merge_sum(std::move(shifted));
}

void Poly::divide_exact(const Int& k) {
  if (k == 1) return;
  for (auto& t : terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), k.get_mpz_t());
}

std::optional<Poly> Poly::divide_linear(const LinComb& form) const {
  if (is_zero()) return Poly{};
  int lead = -1;
  for (int i = 0; i < kNumVars; ++i) {
    if (form[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw Error(Errc::zero_denominator, "division by the zero form");

  // Slice by the exponent of the lead variable; the rest of the form is m.
  int n = 0;
  for (const auto& t : terms_) n = std::max<int>(n, t.mono.exp[lead]);
  if (n == 0) return std::nullopt;
  std::vector<std::vector<Term>> slices(n + 1);
  for (const auto& t : terms_) {
    Term s = t;
    s.mono.exp[lead] = 0;
    slices[t.mono.exp[lead]].push_back(std::move(s));
  }
  std::vector<Poly> p(n + 1);
  for (int j = 0; j <= n; ++j) p[j] = from_terms(std::move(slices[j]));

  Int c(static_cast<long>(form[lead]));
  LinComb rest = form;
  rest[lead] = 0;

  auto div_by_c = [&c](Poly& q) {
    for (auto& t : q.terms_) {
      if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t())) return false;
      mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    }
    return true;
  };

  std::vector<Poly> q(n);
  q[n - 1] = p[n];
  if (!div_by_c(q[n - 1])) return std::nullopt;
  for (int j = n - 1; j >= 1; --j) {
    q[j - 1] = p[j] - q[j].times_linear(rest);
    if (!div_by_c(q[j - 1])) return std::nullopt;
  }
  if (!(p[0] - q[0].times_linear(rest)).is_zero()) return std::nullopt;

  std::vector<Term> out;
  for (int j = 0; j < n; ++j) {
    for (auto& t : q[j].terms_) {
      t.mono.exp[lead] = static_cast<std::uint8_t>(j);
      out.push_back(std::move(t));
    }
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute(const Substitution& sub) const {
  if (is_zero()) return {};
  const std::uint32_t used = var_mask();

  // A variable is "simple" when its image is k * y for a single variable y
  // (or zero); the rest are expanded through cached powers.
  struct Simple {
    int target = -1;
    std::int64_t coef = 0;
  };
  std::array<Simple, kNumVars> simple{};
  std::array<bool, kNumVars> is_simple{};
  std::vector<int> complex_vars;
  for (int i = 0; i < kNumVars; ++i) {
    if (!(used & (std::uint32_t{1} << i))) continue;
    const LinComb& img = sub.image(i);
    int nz = 0;
    for (int j = 0; j < kNumVars; ++j) {
      if (img[j] != 0) {
        ++nz;
        simple[i] = {j, img[j]};
      }
    }
    if (nz <= 1) {
      is_simple[i] = true;
    } else {
      complex_vars.push_back(i);
    }
  }

  auto map_simple = [&](const Term& t, Term& out) {
    out.coef = t.coef;
    out.mono = Monomial{};
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono.exp[i];
      if (e == 0 || !is_simple[i]) continue;
      if (simple[i].coef == 0) return false;
      if (simple[i].coef != 1) {
        Int k(static_cast<long>(simple[i].coef));
        Int kp;
        mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(), e);
        out.coef *= kp;
      }
      unsigned s = unsigned{out.mono.exp[simple[i].target]} + e;
      if (s > 255) throw Error(Errc::invalid_argument, "exponent overflow");
      out.mono.exp[simple[i].target] = static_cast<std::uint8_t>(s);
    }
    return true;
  };

  if (complex_vars.empty()) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term nt;
      if (map_simple(t, nt)) out.push_back(std::move(nt));
    }
    return from_terms(std::move(out));
  }

  // Group by exponents on complex variables.
  std::map<std::vector<std::uint8_t>, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    std::vector<std::uint8_t> key(complex_vars.size());
    for (std::size_t k = 0; k < complex_vars.size(); ++k) key[k] = t.mono.exp[complex_vars[k]];
    Term nt;
    if (map_simple(t, nt)) groups[key].push_back(std::move(nt));
  }

  std::vector<std::vector<Poly>> powers(complex_vars.size());
  auto power = [&](std::size_t k, unsigned e) -> const Poly& {
    auto& pw = powers[k];
    if (pw.empty()) {
      pw.push_back(constant(Int(1)));
      pw.push_back(linear(sub.image(complex_vars[k])));
    }
    while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
    return pw[e];
  };

  std::vector<Term> out;
  for (auto& [key, terms] : groups) {
    Poly factor = constant(Int(1));
    for (std::size_t k = 0; k < complex_vars.size(); ++k) {
      if (key[k]) factor = factor * power(k, key[k]);
    }
    Poly rest = from_terms(std::move(terms));
    Poly prod = factor * rest;
    for (auto& t : prod.terms_) out.push_back(std::move(t));
  }
  return from_terms(std::move(out));
}

std::uint64_t Poly::eval_mod(const ModPoint& point) const {
  return eval_mod_many(std::span<const ModPoint>(&point, 1))[0];
}

std::vector<std::uint64_t> Poly::eval_mod_many(std::span<const ModPoint> points) const {
  const std::size_t np = points.size();
  std::vector<std::uint64_t> acc(np, 0);
  // pw[i][e * np + k] = points[k][i]^e
  std::array<std::vector<std::uint64_t>, kNumVars> pw;
  std::vector<std::uint64_t> v(np);
  for (const auto& t : terms_) {
    std::uint64_t c = modp::reduce(t.coef);
    std::fill(v.begin(), v.end(), c);
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono.exp[i];
      if (!e) continue;
      auto& table = pw[i];
      if (table.empty()) table.assign(np, 1);
      while (table.size() <= (e + std::size_t{1}) * np - 1) {
        std::size_t base = table.size() - np;
        for (std::size_t k = 0; k < np; ++k) table.push_back(modp::mul(table[base + k], points[k][i]));
      }
      const std::uint64_t* row = table.data() + e * np;
      for (std::size_t k = 0; k < np; ++k) v[k] = modp::mul(v[k], row[k]);
    }
    for (std::size_t k = 0; k < np; ++k) acc[k] = modp::add(acc[k], v[k]);
  }
  return acc;
}

Rat Poly::eval(const RatPoint& point) const {
  Rat acc = 0;
  for (const auto& t : terms_) {
    Rat v = t.coef;
    for (int i = 0; i < kNumVars; ++i) {
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomial first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    bool is_one = it->mono == Monomial{};
    if (c != 1 || is_one) {
      os << c.get_str();
      if (!is_one) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = it->mono.exp[i];
      if (!e) continue;
      if (!first_var) os << "*";
      os << var_name(i);
      if (e > 1) os << "^" << e;
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

}  // namespace mould
