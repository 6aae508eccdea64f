// Numeric cross-checks: the exact sums are compared against direct
// evaluation of the defining formulas at random rational points.
#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "mould/constructions.hpp"
#include "mould/error.hpp"
#include "mould/flexion.hpp"
#include "mould/random.hpp"

using namespace mould;

namespace {

struct W {
  Rat u, v;
};
using Word = std::vector<W>;

std::optional<Rat> at(const Bimould& a, const Word& w) {
  RatPoint pt;
  for (auto& q : pt) q = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    pt[u_var(static_cast<int>(i) + 1)] = w[i].u;
    pt[v_var(static_cast<int>(i) + 1)] = w[i].v;
  }
  try {
    return a[static_cast<int>(w.size())].evaluate(pt);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Word slice(const Word& w, int from, int len) {
  return Word(w.begin() + from, w.begin() + from + len);
}

// amit(B, A)(w) = sum over w = a b c, b and c nonempty, of A(a, ⌈c) B(b⌋).
std::optional<Rat> amit_at(const Bimould& b, const Bimould& a, const Word& w) {
  const int r = static_cast<int>(w.size());
  Rat total = 0;
  for (int la = 0; la <= r; ++la) {
    for (int lb = 1; la + lb < r; ++lb) {
      Word acted = slice(w, 0, la);
      Word bw = slice(w, la, lb);
      Word cw = slice(w, la + lb, r - la - lb);
      for (const auto& x : bw) cw[0].u += x.u;
      for (auto& x : bw) x.v -= w[la + lb].v;
      acted.insert(acted.end(), cw.begin(), cw.end());
      auto fa = at(a, acted), fb = at(b, bw);
      if (!fa || !fb) return std::nullopt;
      total += *fa * *fb;
    }
  }
  return total;
}

// anit(B, A)(w) = sum over w = a b c, a and b nonempty, of A(a⌉, c) B(⌊b).
std::optional<Rat> anit_at(const Bimould& b, const Bimould& a, const Word& w) {
  const int r = static_cast<int>(w.size());
  Rat total = 0;
  for (int la = 1; la < r; ++la) {
    for (int lb = 1; la + lb <= r; ++lb) {
      Word acted = slice(w, 0, la);
      Word bw = slice(w, la, lb);
      Word cw = slice(w, la + lb, r - la - lb);
      for (const auto& x : bw) acted.back().u += x.u;
      for (auto& x : bw) x.v -= w[la - 1].v;
      acted.insert(acted.end(), cw.begin(), cw.end());
      auto fa = at(a, acted), fb = at(b, bw);
      if (!fa || !fb) return std::nullopt;
      total += *fa * *fb;
    }
  }
  return total;
}

std::optional<Rat> mu_at(const Bimould& a, const Bimould& b, const Word& w) {
  const int r = static_cast<int>(w.size());
  Rat total = 0;
  for (int i = 0; i <= r; ++i) {
    auto fa = at(a, slice(w, 0, i)), fb = at(b, slice(w, i, r - i));
    if (!fa || !fb) return std::nullopt;
    total += *fa * *fb;
  }
  return total;
}

std::optional<Rat> ari_at_point(const Bimould& a, const Bimould& b, const Word& w) {
  auto p1 = amit_at(b, a, w), p2 = anit_at(b, a, w), p3 = amit_at(a, b, w),
       p4 = anit_at(a, b, w), p5 = mu_at(a, b, w), p6 = mu_at(b, a, w);
  if (!p1 || !p2 || !p3 || !p4 || !p5 || !p6) return std::nullopt;
  return *p1 - *p2 - *p3 + *p4 + *p5 - *p6;
}

// Ihara action on lower bimoulds, with x_0 = 0; the second sum carries (-1)^r.
std::optional<Rat> ihara_at(const Bimould& f, const Bimould& g, const std::vector<Rat>& x) {
  const int n = static_cast<int>(x.size()) - 1;
  auto lower = [](const std::vector<Rat>& xs) {
    Word w;
    for (const auto& q : xs) w.push_back({0, q});
    return w;
  };
  Rat total = 0;
  for (int r = 1; r < n; ++r) {
    const int s = n - r;
    for (int i = 0; i <= s; ++i) {
      std::vector<Rat> xf, xg;
      for (int k = 1; k <= r; ++k) xf.push_back(x[i + k] - x[i]);
      for (int j = 1; j <= i; ++j) xg.push_back(x[j]);
      for (int j = i + r + 1; j <= n; ++j) xg.push_back(x[j]);
      auto a = at(f, lower(xf)), b = at(g, lower(xg));
      if (!a || !b) return std::nullopt;
      total += *a * *b;
    }
    for (int i = 1; i <= s; ++i) {
      std::vector<Rat> xf, xg;
      for (int k = 1; k <= r; ++k) xf.push_back(x[i + r] - x[i + r - k]);
      for (int j = 1; j < i; ++j) xg.push_back(x[j]);
      for (int j = i + r; j <= n; ++j) xg.push_back(x[j]);
      auto a = at(f, lower(xf)), b = at(g, lower(xg));
      if (!a || !b) return std::nullopt;
      total += (r % 2 ? -1 : 1) * *a * *b;
    }
  }
  return total;
}

Word random_word(Rng& rng, int r) {
  Word w;
  for (int i = 0; i < r; ++i) {
    w.push_back({rat(rng.between(-300, 300), rng.between(1, 41)),
                 rat(rng.between(-300, 300), rng.between(1, 43))});
  }
  return w;
}

Bimould sample(std::uint64_t seed, Layer layer = Layer::general) {
  RandomShape s;
  s.maxlen = 4;
  s.max_factors = 1;
  s.layer = layer;
  return gen_random_bimould(seed, s);
}

}  // namespace

class FlexionOracle : public ::testing::TestWithParam<int> {};

TEST_P(FlexionOracle, ExactSumsMatchPointwiseDefinition) {
  const int seed = GetParam();
  Bimould a = sample(1000 + seed), b = sample(2000 + seed);
  Bimould am = amit(b, a), an = anit(b, a), m = mu(a, b), br = ari(a, b);
  Rng rng(seed);
  for (int r = 1; r <= 4; ++r) {
    int checked = 0;
    for (int attempt = 0; attempt < 10 && checked < 2; ++attempt) {
      Word w = random_word(rng, r);
      auto e1 = amit_at(b, a, w), e2 = anit_at(b, a, w), e3 = mu_at(a, b, w),
           e4 = ari_at_point(a, b, w);
      auto g1 = at(am, w), g2 = at(an, w), g3 = at(m, w), g4 = at(br, w);
      if (!e1 || !e2 || !e3 || !e4 || !g1 || !g2 || !g3 || !g4) continue;
      EXPECT_EQ(*g1, *e1) << "amit, length " << r;
      EXPECT_EQ(*g2, *e2) << "anit, length " << r;
      EXPECT_EQ(*g3, *e3) << "mu, length " << r;
      EXPECT_EQ(*g4, *e4) << "ari, length " << r;
      ++checked;
    }
    EXPECT_GT(checked, 0) << "no pole-free point at length " << r;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FlexionOracle, ::testing::Values(1, 2, 3));

TEST(IharaOracle, ExactActionMatchesPointwiseDefinition) {
  Bimould f = sample(31, Layer::u_const), g = sample(32, Layer::u_const);
  Bimould act = ihara_action(f, g);
  Rng rng(7);
  for (int n = 2; n <= 4; ++n) {
    std::vector<Rat> x{Rat(0)};
    Word w;
    for (int i = 1; i <= n; ++i) {
      x.push_back(rat(rng.between(-200, 200), rng.between(1, 37)));
      w.push_back({0, x.back()});
    }
    auto e = ihara_at(f, g, x);
    auto got = at(act, w);
    ASSERT_TRUE(e && got) << "pole at length " << n;
    EXPECT_EQ(*got, *e) << "length " << n;
  }
}

TEST(Psi0Oracle, ComponentsMatchTheClosedFormula) {
  Bimould p = psi0(5);
  Rng rng(11);
  for (int d = 1; d <= 5; ++d) {
    std::vector<Rat> x(d + 1);
    Word w;
    for (int i = 1; i <= d; ++i) {
      x[i] = rat(rng.between(1, 400), rng.between(1, 29)) * (i % 2 == 0 ? -1 : 1);
      w.push_back({0, x[i]});
    }
    // (2/(d(d+1))) [ d/(x_1..x_d) - sum_{k<d} (d-k)/(x_k prod_{j!=k}(x_j - x_k)) ]
    Rat lead = d;
    for (int i = 1; i <= d; ++i) lead /= x[i];
    Rat rest = 0;
    for (int k = 1; k < d; ++k) {
      Rat t = Rat(d - k) / x[k];
      for (int j = 1; j <= d; ++j) {
        if (j != k) t /= x[j] - x[k];
      }
      rest += t;
    }
    Rat expected = (lead - rest) * rat(2, d * (d + 1));
    auto got = at(p, w);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, expected) << "length " << d;
  }
}
