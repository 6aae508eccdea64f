#pragma once

#include <cstdint>

#include "mould/bimould.hpp"

namespace mould {

// splitmix64; portable so a seed gives the same inputs everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, n).
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  Rng fork(std::uint64_t stream) { return Rng(next() ^ (stream * 0x9e3779b97f4a7c15ULL)); }

 private:
  std::uint64_t state_;
};

struct RandomShape {
  int maxlen = 4;
  int degree = 2;  // bound on the total degree of numerator monomials
  Layer layer = Layer::general;
  bool lu = true;  // component 0 is 0; otherwise it is 1
  int max_factors = 2;
};

// Numerators are short random polynomials; denominators are products of at
// most max_factors forms x_i or x_i - x_j.
Bimould gen_random_bimould(std::uint64_t seed, const RandomShape& shape);
Bimould gen_random_bimould(Rng& rng, const RandomShape& shape);

RatFun gen_random_component(Rng& rng, int length, const RandomShape& shape);

}  // namespace mould
