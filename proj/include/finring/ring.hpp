#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finring/types.hpp"

namespace finring {

struct SubsetFlags {
    bool additive_subgroup = false;
    bool left_ideal = false;
    bool right_ideal = false;
    bool subring = false;
    bool contains_one = false;
};

// An element-index set of some ring, sorted ascending. Flags are recomputed
// from the members by make_subset, never taken from input.
struct Subset {
    std::vector<Elem> members;
    SubsetFlags flags;

    bool contains(Elem x) const {
        for (Elem m : members) {
            if (m == x) return true;
            if (m > x) break;
        }
        return false;
    }
    std::size_t size() const { return members.size(); }
};

enum class ValidationMode {
    Full,      // every law checked exhaustively, O(n^3)
    Sampled,   // closure + identities exhaustive, ternary laws on seeded samples
};

// A finite ring given by total addition/multiplication tables over indices
// [0, size). Immutable after construction; element 0 is the additive zero.
class FiniteRing {
public:
    std::size_t size() const { return size_; }
    Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    bool unital() const { return one_.has_value(); }
    std::optional<Elem> one() const { return one_; }

    bool commutative() const { return commutative_; }

    // x^n for n >= 1.
    Elem pow(Elem x, unsigned long long n) const {
        Elem acc = x;
        for (unsigned long long i = 1; i < n; ++i) acc = mul(acc, x);
        return acc;
    }

    const std::string& label(Elem a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::vector<Elem>& add_table() const { return add_; }
    const std::vector<Elem>& mul_table() const { return mul_; }

    // Tables equal (size, add, mul, one); labels ignored.
    bool same_tables(const FiniteRing& o) const {
        return size_ == o.size_ && add_ == o.add_ && mul_ == o.mul_ && one_ == o.one_;
    }

private:
    friend FiniteRing validate_tables(std::size_t, std::vector<Elem>, std::vector<Elem>,
                                      std::optional<Elem>, std::vector<std::string>,
                                      ValidationMode);
    FiniteRing() = default;

    std::size_t size_ = 0;
    std::vector<Elem> add_, mul_, neg_;
    std::optional<Elem> one_;
    std::vector<std::string> labels_;
    bool commutative_ = false;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// Checks the ring axioms on the given tables and builds the ring. neg is
// derived from the addition table. A claimed unity is verified; when no unity
// is claimed the identity element is searched for and recorded if present, so
// predicates see the ring itself rather than the caller's claim.
// Throws AxiomViolation{law, witness} / UnityMismatch.
FiniteRing validate_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
                           std::optional<Elem> one = std::nullopt,
                           std::vector<std::string> labels = {},
                           ValidationMode mode = ValidationMode::Full);

// Size above which ternary laws are sampled instead of fully enumerated when
// callers ask for default validation of constructed rings.
inline constexpr std::size_t kFullCheckMax = 512;

FiniteRing cyclic_ring(std::size_t n);

// q in {2,3,4,5,7,8,9}; prime-power fields use fixed irreducible polynomials.
FiniteRing finite_field(std::size_t q);

FiniteRing matrix_ring(const FiniteRing& base, int n, const Limits& limits = {});

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b, const Limits& limits = {});

struct QuotientResult {
    FiniteRing ring;
    std::vector<Elem> projection;  // projection[x] = index of the coset of x
};

// I must be a verified two-sided ideal (throws NotAnIdeal with a witness
// otherwise). The projection is checked to be a surjective ring morphism.
QuotientResult quotient_ring(const FiniteRing& r, const Subset& ideal);

// e central idempotent; the ring on eR with unity e.
FiniteRing corner_ring(const FiniteRing& r, Elem e);

FiniteRing opposite_ring(const FiniteRing& r);

// Recomputes all closure flags of `members` within r.
Subset make_subset(const FiniteRing& r, std::vector<Elem> members);
Subset subset_from_set(const FiniteRing& r, const ElemSet& s);
ElemSet to_set(const FiniteRing& r, const Subset& s);

// Brute-force ring isomorphism search, permitted only for size <= 16.
bool isomorphic(const FiniteRing& a, const FiniteRing& b);

}  // namespace finring
