#ifndef ASMKIT_TILINGS_HPP
#define ASMKIT_TILINGS_HPP

#include <asmkit/linalg.hpp>

#include <random>

namespace asmkit {

// Quartered-hexagon tiling counts via non-intersecting lattice paths.
// Path endpoints in the normalized coordinate system: starts
// s_j = (j-1, 2j-1) for j <= 2n, s_{2n+1} = (2n-1+i, 4n-1); ends
// e_j = (a_j - 1, 0) with a_j = floor((3j-1)/2); steps east and down.

inline int endpoint_offset(int j) { return (3 * j - 1) / 2; }  // a_j

Matrix<Int> lgv_matrix(int n, int i);
Int q_ni_det(int n, int i);

/// Closed-form minor value D_{n,j} (always positive).
Rat d_nj(int n, int j);

/// Q via the alternating D-expansion; must land on a non-negative integer.
Int q_ni_expand(int n, int i);

/// Exhaustive vertex-disjoint path-family count; oracle scale n <= 3.
Int brute_paths(int n, int i);

/// Generating function of the weighted quartered hexagon, three routes that
/// must agree: the Q-table expansion, the geometric-sum expansion, and the
/// binomial determinant that keeps the top two rows.
RatPoly genfun_qh(int n);
RatPoly genfun_qh_expansion(int n);
RatPoly genfun_qh_determinant(int n);

/// Krattenthaler determinant identity behind the D evaluation, checked at a
/// random rational instantiation of size r.
bool check_lemma_a2(int r, std::mt19937_64& rng);

}  // namespace asmkit

#endif
