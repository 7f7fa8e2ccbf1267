#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace finring {

// Element index into a ring's operation tables. Index 0 is always the
// additive zero of its ring.
using Elem = std::uint16_t;

// Budgets for constructions and scans. size_cap bounds the element count of
// any constructed ring; enum_budget bounds raw coefficient tuples enumerated
// by the matrix-subring builders; poly_pair_budget bounds (f, g) pairs in the
// bounded-degree polynomial scans.
struct Limits {
    std::size_t size_cap = 65536;
    std::size_t enum_budget = std::size_t{1} << 20;
    std::size_t poly_pair_budget = std::size_t{1} << 25;
};

// Structured error for every precondition / validation failure. `kind` is a
// stable identifier ("AxiomViolation", "ParseError", ...); `tag` names the
// violated law where applicable; `aux` holds witness element indices.
class RingError : public std::runtime_error {
public:
    RingError(std::string kind, std::string detail, std::string tag = {},
              std::vector<Elem> aux = {})
        : std::runtime_error(kind + ": " + detail),
          kind_(std::move(kind)),
          detail_(std::move(detail)),
          tag_(std::move(tag)),
          aux_(std::move(aux)) {}

    const std::string& kind() const { return kind_; }
    const std::string& detail() const { return detail_; }
    const std::string& tag() const { return tag_; }
    const std::vector<Elem>& aux() const { return aux_; }

private:
    std::string kind_;
    std::string detail_;
    std::string tag_;
    std::vector<Elem> aux_;
};

[[noreturn]] inline void raise(std::string kind, std::string detail,
                               std::string tag = {}, std::vector<Elem> aux = {}) {
    throw RingError(std::move(kind), std::move(detail), std::move(tag), std::move(aux));
}

// Dense bitset over element indices [0, n). The workhorse for subset and
// annihilator computations.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static ElemSet full(std::size_t n) {
        ElemSet s(n);
        for (std::size_t i = 0; i < n; ++i) s.set(i);
        return s;
    }

    std::size_t universe() const { return n_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    ElemSet& operator&=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    ElemSet& operator|=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    bool subset_of(const ElemSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const ElemSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::vector<Elem> to_sorted() const {
        std::vector<Elem> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = n_;
        for (auto w : w_) h = h * 1099511628211ull + static_cast<std::size_t>(w);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct ElemSetHash {
    std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace finring
