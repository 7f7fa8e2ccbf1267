#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"
#include "finring/structure.hpp"

namespace finring {

// The eight named n x n matrix-subring families over a base ring. Formulas
// are evaluated literally, index splits at floor(n/2); some members are not
// multiplicatively closed over every base, which the builder reports instead
// of papering over.
enum class Family { Tn, Sn, Sprime, TRn, TprimeRn, An, Bn, Un };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct MatrixEntrySpec {
    // For each (i,j), 0-based: which coefficient domain fills the cell.
    // "zero"; "R" / "N" (an independent scalar over the base / its nilpotent
    // elements); "diag" (one scalar shared along the main diagonal, the R*I_n
    // slot); "V^l" (one scalar shared along superdiagonal l, the R*V^l slot).
    // Cells carrying several summands join them with "+" ("N+R").
    std::vector<std::string> cells;
    int n = 0;
    const std::string& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
};

// The cell scheme the builder enumerated, for tracing and for tests.
MatrixEntrySpec family_scheme(Family f, int n);

struct BuildOutcome {
    std::optional<FiniteRing> ring;
    // Matrices as flattened base-element rows, parallel to ring element order
    // (only kept for small results; empty if ring absent).
    std::vector<std::vector<Elem>> matrices;
    bool closed = true;
    // When !closed: two member matrices whose product leaves the set.
    std::vector<Elem> bad_left, bad_right, bad_product;
    std::vector<std::string> trace;
};

// Enumerates the family members over `base`, checks additive/multiplicative
// closure, and builds the subring when closed. Throws SizeCapExceeded when
// the member count would pass limits.size_cap.
BuildOutcome build_matrix_subring(Family f, const FiniteRing& base, int n,
                                  const Limits& limits = {});

// The strictly-upper-triangular shift pattern: V = sum of E_{i,i+1}.
std::vector<Elem> v_matrix(const FiniteRing& base, int n);

// Polynomials as coefficient vectors, low degree first, over a finite ring.
// poly_mul never truncates; when a degree_cap is given, products that would
// exceed it raise DegreeOverflow instead.
using Poly = std::vector<Elem>;
Poly poly_mul(const FiniteRing& r, const Poly& f, const Poly& g,
              std::optional<int> degree_cap = std::nullopt);
bool poly_is_zero(const Poly& f);
Poly poly_trim(Poly f);

struct ArmendarizReport {
    bool holds = true;
    Poly f, g;
    std::size_t bad_i = 0, bad_j = 0;  // coefficient pair with f_i g_j != 0
};

// Bounded Armendariz test: over all pairs of polynomials of degree <= d with
// fg = 0, every coefficient product must vanish. Throws SizeCapExceeded when
// the pair count would pass limits.poly_pair_budget.
ArmendarizReport armendariz_check(const FiniteRing& r, int degree_bound,
                                  const Limits& limits = {});

struct PolyextReport {
    bool holds = true;
    Poly f, g;
    Elem r_elem = 0;
    std::size_t bad_degree = 0;  // coefficient degree of f*r*g outside T(R)
    std::string equation;
};

// Bounded surrogate for polynomial-ring membership: fg = 0 must put every
// coefficient of f*r*g inside T(R), for every ring element r. Throws
// SizeCapExceeded past the pair budget.
PolyextReport polyext_h_check(RingAnalysis& a, int degree_bound, const Limits& limits = {});

}  // namespace finring
