#include "mould/constructions.hpp"

#include <functional>

#include "mould/error.hpp"
#include "mould/flexion.hpp"

namespace mould {

namespace {

RatFun inv_x(int i) { return RatFun::inverse_linear(lin_var(x_var(i))); }

RatFun inv_diff(int j, int k) {
  return RatFun::inverse_linear(lin_var(x_var(j)) - lin_var(x_var(k)));
}

Rat binom2(int d) { return rat(d * (d + 1), 2); }

// Bracket of s_d before rescaling: d/(x_1..x_d) + sum_k (d-k)/((-x_k) prod_{j!=k} (x_j - x_k)).
RatFun s_component(int d) {
  RatFunSum acc;
  RatFun lead{Rat(d)};
  for (int i = 1; i <= d; ++i) lead *= inv_x(i);
  acc.add(lead);
  for (int k = 1; k < d; ++k) {
    RatFun t{Rat(-(d - k))};
    t *= inv_x(k);
    for (int j = 1; j <= d; ++j) {
      if (j != k) t *= inv_diff(j, k);
    }
    acc.add(t);
  }
  return acc.take();
}

}  // namespace

Bimould pa(int maxlen) {
  return Bimould::single(1, RatFun::inverse_linear(lin_var(u_var(1))), maxlen, Layer::v_const);
}

Bimould pi_unit(int maxlen) {
  return Bimould::single(1, RatFun::inverse_linear(lin_var(v_var(1))), maxlen, Layer::u_const);
}

Bimould pic(int maxlen) {
  Bimould out = Bimould::unit(maxlen, Layer::u_const);
  RatFun p(1);
  for (int r = 1; r <= maxlen; ++r) {
    p *= RatFun::inverse_linear(lin_var(v_var(r)));
    out.set(r, p);
  }
  return out;
}

Bimould pic_via_invmu(int maxlen) {
  return invmu(Bimould::unit(maxlen, Layer::u_const) - pi_unit(maxlen));
}

Bimould psi0(int maxlen) {
  Bimould out(maxlen, Layer::u_const, 0);
  for (int d = 1; d <= maxlen; ++d) out.set(d, s_component(d).scaled(1 / binom2(d)));
  return out;
}

Bimould witt_generator(int d, int maxlen) {
  if (d < 1 || d > maxlen) throw Error(Errc::invalid_argument, "s_d needs 1 <= d <= maxlen");
  Bimould out = Bimould::single(d, s_component(d), maxlen, Layer::u_const);
  out.set_weight(0);
  return out;
}

std::vector<Bimould> witt_generators(int maxd, int maxlen) {
  std::vector<Bimould> out;
  for (int d = 1; d <= maxd; ++d) out.push_back(witt_generator(d, maxlen));
  return out;
}

Bimould diri_par(int maxlen) { return swap(scale(Rat(1, 2), anti(psi0(maxlen)))); }

Bimould darapir_closed_form(int maxlen) {
  const Bimould p = pic(maxlen);
  const Bimould unit = pi_unit(maxlen);
  Bimould out(maxlen, Layer::u_const, 0);
  for (int r = 1; r <= maxlen; ++r) {
    LinComb all_u{};
    for (int j = 1; j <= r; ++j) all_u[u_var(j)] = 1;
    RatFunSum acc;
    for (int i = 1; i <= r; ++i) {
      auto lowered = [&](int j) {
        LinComb v = lin_var(v_var(j));
        v[v_var(i)] -= 1;
        return Letter{lin_var(u_var(j)), v};
      };
      std::vector<Letter> left, mid{Letter{all_u, lin_var(v_var(i))}}, right;
      for (int j = 1; j < i; ++j) left.push_back(lowered(j));
      for (int j = i + 1; j <= r; ++j) right.push_back(lowered(j));
      RatFun t = eval_component(p, left) * eval_component(unit, mid) * eval_component(p, right);
      acc.add(t.scaled(Rat(r + 1 - i)));
    }
    out.set(r, acc.take().scaled(Rat(1, r * (r + 1))));
  }
  return out;
}

Bimould dilator_of(const Bimould& s, int maxlen) {
  if (!s.is_grouplike_constant()) {
    throw Error(Errc::not_grouplike_constant, "dilator_of needs component 0 equal to 1");
  }
  const int L = std::min(maxlen, s.truncation());
  const Bimould st = s.truncated(L);
  Bimould d(L, s.layer());
  for (int r = 1; r <= L; ++r) {
    d.set(r, st[r].scaled(Rat(r)) - preari_at(st, d, r));
  }
  return d;
}

Bimould mould_from_dilator(const Bimould& d, int maxlen) {
  if (!d.is_lu()) throw Error(Errc::not_lu, "mould_from_dilator needs component 0 equal to 0");
  const int L = std::min(maxlen, d.truncation());
  const Bimould dt = d.truncated(L);
  Bimould s = Bimould::unit(L, d.layer());
  for (int r = 1; r <= L; ++r) s.set(r, preari_at(s, dt, r).scaled(Rat(1, r)));
  return s;
}

namespace {

Rat prefix_coefficient(const std::vector<int>& r) {
  Rat c = 1;
  int partial = 0;
  for (int x : r) {
    partial += x;
    c /= partial;
  }
  return c;
}

// Walks all operator words a_1 a_2 ... (applied in that order, each raising
// the length by a_j) that fit under the truncation, calling visit on each.
void walk_words(const Bimould& start, int budget, const std::function<Bimould(int, const Bimould&)>& step,
                const std::function<void(const std::vector<int>&, const Bimould&)>& visit) {
  std::vector<int> word;
  std::function<void(const Bimould&, int)> rec = [&](const Bimould& x, int left) {
    visit(word, x);
    for (int k = 1; k <= left; ++k) {
      Bimould y = step(k, x);
      if (y.is_zero()) continue;
      word.push_back(k);
      rec(y, left - k);
      word.pop_back();
    }
  };
  rec(start, budget);
}

}  // namespace

Bimould adari_dilator(const Bimould& d, const Bimould& b, SeriesSide side, int maxlen) {
  if (!d.is_lu()) throw Error(Errc::not_lu, "dilator series needs D_0 = 0");
  if (!b.is_lu()) throw Error(Errc::not_lu, "dilator series acts on LU");
  const int L = std::min({maxlen, d.truncation(), b.truncation()});
  const Bimould dt = d.truncated(L);
  const Bimould bt = b.truncated(L);
  std::vector<Bimould> pieces(L + 1);
  for (int k = 1; k <= L; ++k) pieces[k] = leng(k, dt);

  std::vector<Rat> coeffs;
  std::vector<Bimould> terms;
  walk_words(
      bt, L - bt.min_length(), [&](int k, const Bimould& x) { return ari(pieces[k], x); },
      [&](const std::vector<int>& word, const Bimould& x) {
        Rat c;
        if (side == SeriesSide::left) {
          // the first operator applied is the innermost, i.e. r_s
          c = prefix_coefficient(std::vector<int>(word.rbegin(), word.rend()));
        } else {
          c = prefix_coefficient(word);
          if (side == SeriesSide::right && word.size() % 2 == 1) c = -c;
        }
        coeffs.push_back(c);
        terms.push_back(x);
      });
  return linear_combine(coeffs, terms);
}

std::optional<int> homogeneous_length(const Bimould& f) {
  std::optional<int> len;
  for (int r = 0; r <= f.truncation(); ++r) {
    if (f[r].is_zero()) continue;
    if (len) throw Error(Errc::not_length_homogeneous, "input has more than one nonzero length");
    len = r;
  }
  return len;
}

namespace {

void require_lower(const Bimould& f, const char* who) {
  if (f.layer() != Layer::u_const && !f.satisfies_layer(Layer::u_const)) {
    throw Error(Errc::layer_mismatch, std::string(who) + " expects a u-const bimould");
  }
}

Bimould lower_copy(const Bimould& f) {
  Bimould g = f;
  g.set_layer(Layer::u_const);
  return g;
}

}  // namespace

Bimould chi_psi(const Bimould& psi_in, const Bimould& f_in, int maxlen) {
  require_lower(psi_in, "chi_psi");
  require_lower(f_in, "chi_psi");
  const Bimould psi = lower_copy(psi_in);
  const Bimould f = lower_copy(f_in);
  Bimould chi(maxlen, Layer::u_const, f.weight());
  auto d = homogeneous_length(f);
  if (!d) return chi;
  if (*d == 0) throw Error(Errc::not_lu, "the lifting needs a positive length");
  if (*d > maxlen) return chi;
  chi.set(*d, f[*d]);
  for (int r = 1; *d + r <= maxlen; ++r) {
    RatFunSum acc;
    for (int i = 1; i <= r; ++i) {
      if (psi[i].is_zero()) continue;
      Bimould pi = Bimould::single(i, psi[i], maxlen, Layer::u_const);
      Bimould lower = leng(*d + r - i, chi);
      acc.add(ihara_bracket(pi, lower)[*d + r]);
    }
    chi.set(*d + r, acc.take().scaled(Rat(1, 2 * r)));
  }
  return chi;
}

Bimould chi_B(const Bimould& f, int maxlen) { return chi_psi(psi0(maxlen), f, maxlen); }

Bimould chi_closed_form(const Bimould& psi_in, const Bimould& f_in, int maxlen) {
  require_lower(psi_in, "chi_closed_form");
  require_lower(f_in, "chi_closed_form");
  const Bimould f = lower_copy(f_in);
  Bimould zero(maxlen, Layer::u_const, f.weight());
  auto d = homogeneous_length(f);
  if (!d || *d > maxlen) return zero;
  const Bimould ft = zero + leng(*d, f.truncated(std::min(f.truncation(), maxlen)));
  const int avail = std::min(psi_in.truncation(), maxlen);
  std::vector<Bimould> halves(maxlen + 1);
  for (int k = 1; k <= maxlen; ++k) {
    halves[k] = Bimould(maxlen, Layer::u_const);
    if (k <= avail) halves[k].set(k, psi_in[k].scaled(Rat(1, 2)));
  }
  std::vector<Rat> coeffs;
  std::vector<Bimould> terms;
  // Innermost bracket first: the word lists r_s, r_{s-1}, ..., r_1.
  walk_words(
      ft, maxlen - *d, [&](int k, const Bimould& x) { return ihara_bracket(halves[k], x); },
      [&](const std::vector<int>& word, const Bimould& x) {
        coeffs.push_back(prefix_coefficient(word));
        terms.push_back(x);
      });
  Bimould out = linear_combine(coeffs, terms);
  out.set_weight(f.weight());
  return out;
}

}  // namespace mould
