#pragma once

#include "mould/bimould.hpp"

namespace mould {

// A cut of the word w_1..w_r into consecutive blocks a, b, c.
struct Decomposition {
  int a = 0;
  int b = 0;
  int c = 0;
  int length() const { return a + b + c; }
};

// Letters of the factors in the two flexion sums over w = abc.
//   amit: A(a ⌈c) B(b⌋)   first u of c absorbs the u's of b; v's of b
//                         lowered by the first v of c.
//   anit: A(a⌉ c) B(⌊b)   last u of a absorbs the u's of b; v's of b
//                         lowered by the last v of a.
struct FlexedFactors {
  std::vector<Letter> acted;
  std::vector<Letter> acting;
};
FlexedFactors amit_letters(const Decomposition& d);
FlexedFactors anit_letters(const Decomposition& d);

// amit(B)(A), anit(B)(A); B must be in LU.
Bimould amit(const Bimould& b, const Bimould& a);
Bimould anit(const Bimould& b, const Bimould& a);

enum class AxitKind { arit, axit, ilat };
// arit: args = (B, -, A) -> amit(B)(A) - anit(B)(A)
// axit: args = (B, C, A) -> amit(B)(A) + anit(C)(A)
// ilat: args = (B, -, A) -> axit(B, (neg o pari o anti)(B))(A)
Bimould axit_family(AxitKind kind, const Bimould& b, const Bimould& c, const Bimould& a);
Bimould arit(const Bimould& b, const Bimould& a);
Bimould axit(const Bimould& b, const Bimould& c, const Bimould& a);
Bimould ilat(const Bimould& b, const Bimould& a);

// preari(A, B) = arit(B)(A) + mu(A, B);  ari(A, B) = preari(A, B) - preari(B, A).
Bimould preari(const Bimould& a, const Bimould& b);
Bimould ari(const Bimould& a, const Bimould& b);
// Single length-r components of the above.
RatFun preari_at(const Bimould& a, const Bimould& b, int r);
RatFun ari_at(const Bimould& a, const Bimould& b, int r);

// preila(A, B) = ilat(B)(A) + mu(A, B);  ila(A, B) = preila(A, B) - preila(B, A).
Bimould preila(const Bimould& a, const Bimould& b);
Bimould ila(const Bimould& a, const Bimould& b);

// sum_n (1/n!) R_n with R_0 = 1, R_n = preari(R_{n-1}, L): the one-parameter
// subgroup generated by L.
Bimould expari(const Bimould& l, int maxlen);
// Right-nested variant sum_n (1/n!) preari(L, preari(L, ..., L)).
Bimould expari_right_nested(const Bimould& l, int maxlen);

// sum_n (1/n!) ari(L, ari(L, ..., ari(L, B))).
Bimould exp_ad_ari(const Bimould& l, const Bimould& b, int maxlen);

// Ihara action on the lower-layer copy, with x_i = v_i and x_0 = 0.
Bimould ihara_action(const Bimould& f, const Bimould& g);
Bimould ihara_bracket(const Bimould& f, const Bimould& g);

// Auxiliary action on the upper-layer copy, written out in x_i = u_i:
//   (f o g)(x) = sum_{i<s} f(x_{i+1..i+r}) g(x_1..x_i, x_{i+1}+..+x_{i+r+1}, ..)
//              - sum_{i>=1} f(x_{i+1..i+r}) g(x_1..x_{i-1}, x_i+..+x_{i+r}, ..)
//              + g(x_1..x_s) f(x_{s+1}..x_{s+r}).
Bimould ari_action_upper(const Bimould& f, const Bimould& g);

}  // namespace mould
