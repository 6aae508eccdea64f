#pragma once

#include <vector>

#include "mould/bimould.hpp"

namespace mould {

// Polar flexion units Pa = 1/u_1 and Pi = 1/v_1 (length 1 only).
Bimould pa(int maxlen);
Bimould pi_unit(int maxlen);

// pic_r = 1/(v_1 ... v_r), by the product formula and as invmu(1 - Pi).
Bimould pic(int maxlen);
Bimould pic_via_invmu(int maxlen);

// Lower-layer psi_0 with components in x_i = v_i, weight 0.
Bimould psi0(int maxlen);
// s_d = C(d+1, 2) psi_0^(d), as a bimould supported in length d.
Bimould witt_generator(int d, int maxlen);
std::vector<Bimould> witt_generators(int maxd, int maxlen);

// swap((1/2) anti(psi_0)).
Bimould diri_par(int maxlen);
// Explicit flexion sum
//   (1/(r(r+1))) sum_i (r+1-i) pic(w_1..w_{i-1} lowered by v_i) Pi(w_i) pic(w_{i+1}..w_r lowered by v_i)
// where the middle letter absorbs every u.
Bimould darapir_closed_form(int maxlen);

// Solves der(S) = preari(S, D) for D given S (S_0 = 1), or for S given D (D_0 = 0).
Bimould dilator_of(const Bimould& s, int maxlen);
Bimould mould_from_dilator(const Bimould& d, int maxlen);

// left:  sum coeff * ari(D_{r_1}) o ... o ari(D_{r_s}) applied to B, D = di S.
// right: sum (-1)^s coeff * ari(D_{r_s}) o ... o ari(D_{r_1}) applied to B, D = di ri S.
// right_unsigned drops the (-1)^s; kept only to show that it is needed.
// coeff = 1/(r_1 (r_1 + r_2) ... (r_1 + ... + r_s)).
enum class SeriesSide { left, right, right_unsigned };
Bimould adari_dilator(const Bimould& d, const Bimould& b, SeriesSide side, int maxlen);

// Brown-type lifting of a length-homogeneous f by the recursion
//   chi^(d+r) = (1/2r) sum_{i=1..r} {psi^(i), chi^(d+r-i)}.
Bimould chi_psi(const Bimould& psi, const Bimould& f, int maxlen);
Bimould chi_B(const Bimould& f, int maxlen);
// The same lifting written as nested brackets
//   sum 1/((r_1+..+r_s)...(r_{s-1}+r_s) r_s) {psi^(r_1)/2, {..., {psi^(r_s)/2, f}}}.
Bimould chi_closed_form(const Bimould& psi, const Bimould& f, int maxlen);

// Single nonzero length of f; throws NotLengthHomogeneous otherwise. nullopt for f = 0.
std::optional<int> homogeneous_length(const Bimould& f);

}  // namespace mould
