#include "mould/flexion.hpp"

#include "mould/error.hpp"
#include "mould/parallel.hpp"

namespace mould {

namespace {

LinComb sum_u(int from, int to) {
  LinComb c{};
  for (int j = from; j <= to; ++j) c[u_var(j)] = 1;
  return c;
}

void require_lu(const Bimould& b, const char* who) {
  if (!b.is_lu()) throw Error(Errc::not_lu, std::string(who) + " requires an LU argument");
}

std::optional<int> sum_weight(std::optional<int> a, std::optional<int> b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

Bimould result_shell(const Bimould& a, const Bimould& b) {
  return Bimould(std::min(a.truncation(), b.truncation()), common_layer(a.layer(), b.layer()),
                 sum_weight(a.weight(), b.weight()));
}

enum class Side { amit, anit };

RatFun flexion_sum(Side side, const Bimould& b, const Bimould& a, int r) {
  RatFunSum acc;
  for (int pa = 0; pa <= r; ++pa) {
    for (int pb = 1; pa + pb <= r; ++pb) {
      int pc = r - pa - pb;
      if (side == Side::amit && pc < 1) continue;
      if (side == Side::anit && pa < 1) continue;
      if (a[pa + pc].is_zero() || b[pb].is_zero()) continue;
      Decomposition d{pa, pb, pc};
      FlexedFactors f = side == Side::amit ? amit_letters(d) : anit_letters(d);
      RatFun x = eval_component(a, f.acted);
      if (x.is_zero()) continue;
      acc.add(x * eval_component(b, f.acting));
    }
  }
  return acc.take();
}

RatFun mu_component(const Bimould& a, const Bimould& b, int r) {
  RatFunSum acc;
  for (int i = 0; i <= r; ++i) {
    if (a[i].is_zero() || b[r - i].is_zero()) continue;
    std::vector<Letter> la, lb;
    for (int j = 1; j <= i; ++j) la.push_back(plain_letter(j));
    for (int j = i + 1; j <= r; ++j) lb.push_back(plain_letter(j));
    acc.add(eval_component(a, la) * eval_component(b, lb));
  }
  return acc.take();
}

template <typename Component>
Bimould build(Bimould shell, Component component) {
  parallel_for(0, shell.truncation() + 1, [&](int r) { shell.set(r, component(r)); });
  return shell;
}

}  // namespace

FlexedFactors amit_letters(const Decomposition& d) {
  FlexedFactors f;
  const int r = d.length();
  const int first_c = d.a + d.b + 1;
  for (int j = 1; j <= d.a; ++j) f.acted.push_back(plain_letter(j));
  f.acted.push_back({sum_u(d.a + 1, first_c), lin_var(v_var(first_c))});
  for (int j = first_c + 1; j <= r; ++j) f.acted.push_back(plain_letter(j));
  for (int j = d.a + 1; j < first_c; ++j) {
    LinComb v = lin_var(v_var(j));
    v[v_var(first_c)] -= 1;
    f.acting.push_back({lin_var(u_var(j)), v});
  }
  return f;
}

FlexedFactors anit_letters(const Decomposition& d) {
  FlexedFactors f;
  const int r = d.length();
  const int last_a = d.a;
  for (int j = 1; j < last_a; ++j) f.acted.push_back(plain_letter(j));
  f.acted.push_back({sum_u(last_a, last_a + d.b), lin_var(v_var(last_a))});
  for (int j = last_a + d.b + 1; j <= r; ++j) f.acted.push_back(plain_letter(j));
  for (int j = last_a + 1; j <= last_a + d.b; ++j) {
    LinComb v = lin_var(v_var(j));
    v[v_var(last_a)] -= 1;
    f.acting.push_back({lin_var(u_var(j)), v});
  }
  return f;
}

Bimould amit(const Bimould& b, const Bimould& a) {
  require_lu(b, "amit");
  return build(result_shell(a, b), [&](int r) { return flexion_sum(Side::amit, b, a, r); });
}

Bimould anit(const Bimould& b, const Bimould& a) {
  require_lu(b, "anit");
  return build(result_shell(a, b), [&](int r) { return flexion_sum(Side::anit, b, a, r); });
}

Bimould axit_family(AxitKind kind, const Bimould& b, const Bimould& c, const Bimould& a) {
  switch (kind) {
    case AxitKind::arit: return arit(b, a);
    case AxitKind::axit: return axit(b, c, a);
    case AxitKind::ilat: return ilat(b, a);
  }
  throw Error(Errc::invalid_argument, "unknown axit kind");
}

Bimould arit(const Bimould& b, const Bimould& a) {
  require_lu(b, "arit");
  return build(result_shell(a, b), [&](int r) {
    return flexion_sum(Side::amit, b, a, r) - flexion_sum(Side::anit, b, a, r);
  });
}

Bimould axit(const Bimould& b, const Bimould& c, const Bimould& a) {
  require_lu(b, "axit");
  require_lu(c, "axit");
  Bimould shell = result_shell(a, b);
  shell = Bimould(std::min(shell.truncation(), c.truncation()),
                  common_layer(shell.layer(), c.layer()), shell.weight());
  return build(std::move(shell), [&](int r) {
    return flexion_sum(Side::amit, b, a, r) + flexion_sum(Side::anit, c, a, r);
  });
}

Bimould ilat(const Bimould& b, const Bimould& a) { return axit(b, neg(pari(anti(b))), a); }

namespace {

RatFun preari_unchecked(const Bimould& a, const Bimould& b, int r) {
  RatFunSum acc;
  acc.add(flexion_sum(Side::amit, b, a, r));
  acc.add(-flexion_sum(Side::anit, b, a, r));
  acc.add(mu_component(a, b, r));
  return acc.take();
}

RatFun ari_unchecked(const Bimould& a, const Bimould& b, int r) {
  RatFunSum acc;
  acc.add(flexion_sum(Side::amit, b, a, r));
  acc.add(-flexion_sum(Side::anit, b, a, r));
  acc.add(-flexion_sum(Side::amit, a, b, r));
  acc.add(flexion_sum(Side::anit, a, b, r));
  acc.add(mu_component(a, b, r));
  acc.add(-mu_component(b, a, r));
  return acc.take();
}

}  // namespace

RatFun preari_at(const Bimould& a, const Bimould& b, int r) {
  require_lu(b, "preari");
  return preari_unchecked(a, b, r);
}

RatFun ari_at(const Bimould& a, const Bimould& b, int r) {
  require_lu(a, "ari");
  require_lu(b, "ari");
  return ari_unchecked(a, b, r);
}

Bimould preari(const Bimould& a, const Bimould& b) {
  require_lu(b, "preari");
  return build(result_shell(a, b), [&](int r) { return preari_unchecked(a, b, r); });
}

Bimould ari(const Bimould& a, const Bimould& b) {
  require_lu(a, "ari");
  require_lu(b, "ari");
  return build(result_shell(a, b), [&](int r) { return ari_unchecked(a, b, r); });
}

Bimould preila(const Bimould& a, const Bimould& b) {
  require_lu(a, "preila");
  require_lu(b, "preila");
  return ilat(b, a) + mu(a, b);
}

Bimould ila(const Bimould& a, const Bimould& b) { return preila(a, b) - preila(b, a); }

Bimould expari(const Bimould& l, int maxlen) {
  require_lu(l, "expari");
  int L = std::min(maxlen, l.truncation());
  Bimould lt = l.truncated(L);
  Bimould term = Bimould::unit(L, l.layer());
  Bimould total = term;
  for (int n = 1; n <= L; ++n) {
    term = scale(Rat(1, n), preari(term, lt));
    if (term.is_zero()) break;
    total = total + term;
  }
  return total;
}

Bimould expari_right_nested(const Bimould& l, int maxlen) {
  require_lu(l, "expari");
  int L = std::min(maxlen, l.truncation());
  Bimould lt = l.truncated(L);
  Bimould nested = lt;
  Bimould total = Bimould::unit(L, l.layer()) + lt;
  Rat factorial = 1;
  for (int n = 2; n <= L; ++n) {
    nested = preari(lt, nested);
    factorial *= n;
    if (nested.is_zero()) break;
    total = total + scale(1 / factorial, nested);
  }
  return total;
}

Bimould exp_ad_ari(const Bimould& l, const Bimould& b, int maxlen) {
  require_lu(l, "exp_ad_ari");
  require_lu(b, "exp_ad_ari");
  int L = std::min({maxlen, l.truncation(), b.truncation()});
  Bimould lt = l.truncated(L);
  Bimould term = b.truncated(L);
  Bimould total = term;
  for (int n = 1; n <= L; ++n) {
    term = scale(Rat(1, n), ari(lt, term));
    if (term.is_zero()) break;
    total = total + term;
  }
  return total;
}

namespace {

Letter lower(const LinComb& x) { return {LinComb{}, x}; }
Letter upper(const LinComb& x) { return {x, LinComb{}}; }

LinComb x_lower(int i) { return i == 0 ? LinComb{} : lin_var(v_var(i)); }

RatFun ihara_pair(const Bimould& f, int r, const Bimould& g, int s) {
  RatFunSum acc;
  const int n = r + s;
  for (int i = 0; i <= s; ++i) {
    std::vector<Letter> lf, lg;
    for (int k = 1; k <= r; ++k) lf.push_back(lower(x_lower(i + k) - x_lower(i)));
    for (int j = 1; j <= i; ++j) lg.push_back(lower(x_lower(j)));
    for (int j = i + r + 1; j <= n; ++j) lg.push_back(lower(x_lower(j)));
    acc.add(eval_component(f, lf) * eval_component(g, lg));
  }
  const Rat sign = r % 2 ? -1 : 1;
  for (int i = 1; i <= s; ++i) {
    std::vector<Letter> lf, lg;
    for (int k = 1; k <= r; ++k) lf.push_back(lower(x_lower(i + r) - x_lower(i + r - k)));
    for (int j = 1; j <= i - 1; ++j) lg.push_back(lower(x_lower(j)));
    for (int j = i + r; j <= n; ++j) lg.push_back(lower(x_lower(j)));
    acc.add((eval_component(f, lf) * eval_component(g, lg)).scaled(sign));
  }
  return acc.take();
}

void require_layer(const Bimould& m, Layer layer, const char* who) {
  if (m.layer() != layer && !(m.satisfies_layer(layer))) {
    throw Error(Errc::layer_mismatch, std::string(who) + " expects a " +
                                          std::string(layer_name(layer)) + " bimould");
  }
}

}  // namespace

Bimould ihara_action(const Bimould& f, const Bimould& g) {
  require_layer(f, Layer::u_const, "ihara_action");
  require_layer(g, Layer::u_const, "ihara_action");
  require_lu(f, "ihara_action");
  require_lu(g, "ihara_action");
  Bimould shell(std::min(f.truncation(), g.truncation()), Layer::u_const,
                sum_weight(f.weight(), g.weight()));
  return build(std::move(shell), [&](int n) {
    RatFunSum acc;
    for (int r = 1; r < n; ++r) {
      int s = n - r;
      if (f[r].is_zero() || g[s].is_zero()) continue;
      acc.add(ihara_pair(f, r, g, s));
    }
    return acc.take();
  });
}

Bimould ihara_bracket(const Bimould& f, const Bimould& g) {
  return ihara_action(f, g) - ihara_action(g, f);
}

Bimould ari_action_upper(const Bimould& f, const Bimould& g) {
  require_layer(f, Layer::v_const, "ari_action_upper");
  require_layer(g, Layer::v_const, "ari_action_upper");
  require_lu(f, "ari_action_upper");
  Bimould shell(std::min(f.truncation(), g.truncation()), Layer::v_const,
                sum_weight(f.weight(), g.weight()));
  auto x = [](int i) { return lin_var(u_var(i)); };
  auto xsum = [](int from, int to) {
    LinComb c{};
    for (int j = from; j <= to; ++j) c[u_var(j)] = 1;
    return c;
  };
  return build(std::move(shell), [&](int n) {
    RatFunSum acc;
    for (int r = 1; r <= n; ++r) {
      int s = n - r;
      if (f[r].is_zero() || g[s].is_zero()) continue;
      std::vector<Letter> lf;
      for (int i = 0; i < s; ++i) {
        std::vector<Letter> lg, lfi;
        for (int k = 1; k <= r; ++k) lfi.push_back(upper(x(i + k)));
        for (int j = 1; j <= i; ++j) lg.push_back(upper(x(j)));
        lg.push_back(upper(xsum(i + 1, i + r + 1)));
        for (int j = i + r + 2; j <= n; ++j) lg.push_back(upper(x(j)));
        acc.add(eval_component(f, lfi) * eval_component(g, lg));
      }
      for (int i = 1; i <= s; ++i) {
        std::vector<Letter> lg, lfi;
        for (int k = 1; k <= r; ++k) lfi.push_back(upper(x(i + k)));
        for (int j = 1; j < i; ++j) lg.push_back(upper(x(j)));
        lg.push_back(upper(xsum(i, i + r)));
        for (int j = i + r + 1; j <= n; ++j) lg.push_back(upper(x(j)));
        acc.add(-(eval_component(f, lfi) * eval_component(g, lg)));
      }
      std::vector<Letter> lg, lfs;
      for (int j = 1; j <= s; ++j) lg.push_back(upper(x(j)));
      for (int j = s + 1; j <= n; ++j) lfs.push_back(upper(x(j)));
      acc.add(eval_component(g, lg) * eval_component(f, lfs));
    }
    return acc.take();
  });
}

}  // namespace mould
