#ifndef ASMKIT_CLOSED_FORMS_HPP
#define ASMKIT_CLOSED_FORMS_HPP

#include <asmkit/enumerate.hpp>

#include <optional>

namespace asmkit {

/// prod_{i=0}^{n-1} (3i+1)!/(n+i)!
Int asm_total(int n);

/// Zeilberger's refined count A(n,i), 1 <= i <= n.
Int a_plain(int n, int i);

/// A_O(2n,i): off-diagonally symmetric with the first-row 1 at position i.
/// Zero for i in {0,1} (no OSASM puts its first-row 1 there); out of [0, 2n] is an
/// error. a_o_safe extends by zero everywhere outside the support.
Int a_o(int twoN, int i);
Int a_o_safe(int twoN, int i);

/// A_V(2n+1, i): VSASMs with the first 1 of the second row at position i.
Int a_v(int order, int i);

/// Stroganov's even half-turn refinement. The published expression does not
/// parse to the right values; a_ht_even_published evaluates it literally
/// (1/(-k)! = 0 in denominators), a_ht_even_reconstructed applies the
/// grouping (n^2-nj+(j-1)^2)*(n+j-3)! that brute force confirms. Both are
/// undefined at order 2 where (-1)! appears in the numerator.
std::optional<Rat> a_ht_even_published(int twoN, int i);
std::optional<Int> a_ht_even_reconstructed(int twoN, int i);

struct HtReconciliation {
    int order = 0;
    bool published_defined = false;
    bool published_matches = false;
    bool reconstructed_defined = false;
    bool reconstructed_matches = false;
    std::string note;
};

HtReconciliation reconcile_a_ht(int twoN, const RefinedTable& brute);

/// VHP refined counts as convolutions of A_O (valid positions: rows
/// 2..2n+1, columns 2..2n; the convolution extends formally outside).
Int a_vhp_row(int order, int i);
Int a_vhp_col(int order, int i);

/// Q_{n,i}: Pochhammer closed form (reconstructed reading), equal to the
/// lattice-path determinant for all checked n.
Int q_ni(int n, int i);

/// Table of a closed-form family with ClosedForm provenance (Plain, VS, OS,
/// VHP) or Convolution provenance (QTS, QQTS, whose formulas convolve
/// Zeilberger's A with brute-force half-turn tables).
RefinedTable closed_form_table(SymmetryClass cls, int order, BoundaryStat stat, int jobs = 1);

}  // namespace asmkit

#endif
