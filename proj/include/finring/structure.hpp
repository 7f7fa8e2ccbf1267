#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finring/ring.hpp"
#include "finring/types.hpp"
#include "finring/verdict.hpp"

namespace finring {

enum class Side { Left, Right };

// {a : ax = xa for all x}.
ElemSet center(const FiniteRing& r);

// {a : for every x some power x^n (1 <= n <= |R|) commutes with a}. The bound
// |R| is exact: powers of x repeat with index+period <= |R|+1, so every value
// x^n is reached with an exponent <= |R|.
ElemSet hypercenter(const FiniteRing& r);

// Reference implementation for tests: scans exponents 1..bound with no power
// caching. Agrees with hypercenter() whenever bound >= |R|.
ElemSet hypercenter_naive(const FiniteRing& r, std::size_t bound);

struct Radicals {
    ElemSet nil;       // all nilpotent elements (an ideal iff the ring is NI)
    ElemSet jacobson;
    ElemSet prime;     // {x : two-sided ideal generated by x is nilpotent}
    bool nil_is_ideal = false;
    bool is_nil_ring = false;
};

Radicals radicals(const FiniteRing& r);

ElemSet nilpotent_elements(const FiniteRing& r);

// Unital rings: {a : 1 - ra is left invertible for all r} (the classical
// characterization). Nil rings: all of R. Otherwise: circle-operation
// quasi-regularity, a in J iff every element of the left ideal generated by a
// is left quasi-regular under a o b = a + b - ab.
ElemSet jacobson_radical(const FiniteRing& r);

ElemSet prime_radical(const FiniteRing& r);

// l(X) or r(X); X must be non-empty (EmptySet otherwise).
ElemSet annihilator(const FiniteRing& r, const ElemSet& x, Side side);
ElemSet annihilator_one(const FiniteRing& r, Elem x, Side side);

enum class GenKind { TwoSided, Left, Right, Subring };

// Closure of the generators under addition/negation plus the absorption of
// the requested kind (x itself, Rx, xR, RxR as appropriate, with no unity
// assumed).
ElemSet ideal_generated(const FiniteRing& r, Elem x, GenKind kind);
ElemSet ideal_generated(const FiniteRing& r, const ElemSet& gens, GenKind kind);

// Holds iff the ideal meets every nonzero one-sided ideal of that side, which
// reduces to meeting every nonzero principal one. Fails carries the witness
// element whose principal ideal avoids I. NotAnIdeal if I lacks the needed
// closure.
Verdict is_essential(const FiniteRing& r, const Subset& ideal, Side side);

struct SingularIdeals {
    ElemSet left;   // Z_l = {a : l(a) essential as a left ideal}
    ElemSet right;  // Z_r = {a : r(a) essential as a right ideal}
};

SingularIdeals singular_ideals(const FiniteRing& r);

// All maximal proper left (right) ideals of a unital ring, each a sorted
// element list, ordered lexicographically. Computed through the semisimple
// quotient R/J, where every left ideal is principal and maximal left ideals
// correspond to maximal left ideals of R.
std::vector<std::vector<Elem>> maximal_one_sided_ideals(const FiniteRing& r, Side side);

// Oracles for tiny rings (size <= 16): enumerate every subset containing 0,
// keep the one-sided ideals, and read the answer off the full lattice.
std::vector<ElemSet> all_one_sided_ideals_bruteforce(const FiniteRing& r, Side side);
std::vector<std::vector<Elem>> maximal_one_sided_ideals_bruteforce(const FiniteRing& r, Side side);
bool is_essential_bruteforce(const FiniteRing& r, const ElemSet& ideal, Side side);

struct PowerProfile {
    std::vector<std::vector<Elem>> powers;   // powers[x] = x^1, x^2, ... all distinct values
    std::vector<std::uint32_t> index;        // least i with x^i inside the cycle
    std::vector<std::uint32_t> period;
    std::vector<std::uint32_t> nil_index;    // least k with x^k = 0, or 0 if none
    std::vector<char> satisfies_p;           // x^n = x for some n >= 2

    bool nilpotent(Elem x) const { return nil_index[x] != 0; }
};

// Eventual behaviour of x, x^2, ...; the sequence enters its cycle within
// |R| steps, so index + period <= |R| + 1.
PowerProfile power_profile(const FiniteRing& r);

// Distinct powers x^1, x^2, ... as a set.
ElemSet power_set(const FiniteRing& r, Elem x);

ElemSet idempotents(const FiniteRing& r);
ElemSet units(const FiniteRing& r);  // two-sided units; empty for non-unital rings

// Shared lazily-built caches for one ring, so a catalog pass computes each
// invariant once. Not thread-safe; clone per worker if parallelizing.
class RingAnalysis {
public:
    explicit RingAnalysis(const FiniteRing& r) : r_(r) {}
    // The analysis only references the ring; a temporary would dangle.
    explicit RingAnalysis(FiniteRing&&) = delete;
    const FiniteRing& ring() const { return r_; }

    const ElemSet& center();
    const ElemSet& hypercenter();
    bool hypercenter_full();  // T(R) = R
    const ElemSet& nil();
    bool nil_is_ideal();
    bool is_nil_ring();
    const ElemSet& jacobson();
    const ElemSet& prime();
    const ElemSet& idempotents();
    const ElemSet& units();
    const PowerProfile& powers();

    const ElemSet& left_ann(Elem x);
    const ElemSet& right_ann(Elem x);
    const ElemSet& principal_left(Elem x);       // left ideal generated by x
    const ElemSet& principal_right(Elem x);
    const ElemSet& principal_two_sided(Elem x);
    const ElemSet& left_image(Elem x);           // {r x : r in R}
    const ElemSet& right_image(Elem x);          // {x r : r in R}

    // Pairs (u, v), both nonzero, with uv = 0, lexicographic.
    const std::vector<std::pair<Elem, Elem>>& zero_pairs();

    const std::vector<std::vector<Elem>>& maximal_left_ideals();
    const std::vector<std::vector<Elem>>& maximal_right_ideals();
    const SingularIdeals& singular();

    bool essential_left(const ElemSet& ideal);   // memoized by ideal value
    bool essential_right(const ElemSet& ideal);

private:
    const FiniteRing& r_;
    std::optional<ElemSet> center_, hyper_, nil_, jacobson_, prime_, idem_, units_;
    std::optional<bool> nil_ideal_;
    std::optional<PowerProfile> powers_;
    std::vector<std::optional<ElemSet>> lann_, rann_, pleft_, pright_, ptwo_;
    std::optional<std::vector<ElemSet>> limg_, rimg_;
    std::optional<std::vector<std::pair<Elem, Elem>>> zero_pairs_;
    std::optional<std::vector<std::vector<Elem>>> max_left_, max_right_;
    std::optional<SingularIdeals> singular_;
    std::unordered_map<ElemSet, bool, ElemSetHash> ess_left_, ess_right_;
};

}  // namespace finring
