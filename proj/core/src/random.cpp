#include "mould/random.hpp"

namespace mould {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Family pick_family(Rng& rng, Layer layer) {
  switch (layer) {
    case Layer::u_const: return Family::v;
    case Layer::v_const: return Family::u;
    case Layer::general: break;
  }
  return rng.below(2) ? Family::v : Family::u;
}

}  // namespace

RatFun gen_random_component(Rng& rng, int length, const RandomShape& shape) {
  if (length == 0) return RatFun(Rat(rng.between(1, 3)));
  std::vector<Poly::Term> terms;
  int nterms = rng.between(1, 3);
  for (int t = 0; t < nterms; ++t) {
    Monomial m{};
    int deg = rng.between(0, shape.degree);
    for (int d = 0; d < deg; ++d) {
      ++m.exp[var_of(pick_family(rng, shape.layer), rng.between(1, length))];
    }
    int c = rng.between(1, 3) * (rng.below(2) ? 1 : -1);
    terms.push_back({m, Int(c)});
  }
  Poly num = Poly::from_terms(std::move(terms));
  if (num.is_zero()) num = Poly::constant(Int(1));

  RawFraction raw;
  raw.num = num;
  int nf = rng.between(0, shape.max_factors);
  for (int f = 0; f < nf; ++f) {
    Family fam = pick_family(rng, shape.layer);
    int i = rng.between(1, length);
    LinComb form = lin_var(var_of(fam, i));
    if (length >= 2 && rng.below(2)) {
      int j = rng.between(1, length - 1);
      if (j >= i) ++j;
      form[var_of(fam, j)] -= 1;
    }
    auto [lf, k] = LinForm::normalize(form);
    raw.scalar /= Rat(static_cast<long>(k));
    raw.den.push_back({lf, 1});
  }
  return reduce(std::move(raw));
}

Bimould gen_random_bimould(Rng& rng, const RandomShape& shape) {
  Bimould out(shape.maxlen, shape.layer);
  out.set(0, RatFun(Rat(shape.lu ? 0 : 1)));
  for (int r = 1; r <= shape.maxlen; ++r) out.set(r, gen_random_component(rng, r, shape));
  return out;
}

Bimould gen_random_bimould(std::uint64_t seed, const RandomShape& shape) {
  Rng rng(seed);
  return gen_random_bimould(rng, shape);
}

}  // namespace mould
