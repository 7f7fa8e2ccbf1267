#include "finring/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace finring {
namespace {

// splitmix64, fixed seed: sampled validation must be deterministic.
struct SampleGen {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    Elem pick(std::size_t n) { return static_cast<Elem>(next() % n); }
};

constexpr std::size_t kSampleTriples = 1u << 17;

std::string default_label(std::size_t i) { return std::to_string(i); }

}  // namespace

FiniteRing validate_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
                           std::optional<Elem> one, std::vector<std::string> labels,
                           ValidationMode mode) {
    if (size == 0) raise("AxiomViolation", "empty carrier");
    if (add.size() != size * size || mul.size() != size * size)
        raise("AxiomViolation", "table shape is not size x size");
    for (std::size_t i = 0; i < size * size; ++i) {
        if (add[i] >= size) raise("AxiomViolation", "add entry out of range", "range", {static_cast<Elem>(i / size), static_cast<Elem>(i % size)});
        if (mul[i] >= size) raise("AxiomViolation", "mul entry out of range", "range", {static_cast<Elem>(i / size), static_cast<Elem>(i % size)});
    }
    auto at = [size](const std::vector<Elem>& t, std::size_t a, std::size_t b) {
        return t[a * size + b];
    };

    for (std::size_t a = 0; a < size; ++a) {
        if (at(add, a, 0) != a || at(add, 0, a) != a)
            raise("AxiomViolation", "0 is not the additive identity", "zero", {static_cast<Elem>(a)});
    }
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
            if (at(add, a, b) != at(add, b, a))
                raise("AxiomViolation", "addition is not commutative", "add_comm",
                      {static_cast<Elem>(a), static_cast<Elem>(b)});

    std::vector<Elem> neg(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < size; ++b) {
            if (at(add, a, b) == 0) {
                neg[a] = static_cast<Elem>(b);
                found = true;
                break;
            }
        }
        if (!found)
            raise("AxiomViolation", "element has no additive inverse", "neg", {static_cast<Elem>(a)});
    }

    auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
            raise("AxiomViolation", "addition is not associative", "add_assoc",
                  {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)});
        if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
            raise("AxiomViolation", "multiplication is not associative", "mul_assoc",
                  {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)});
        if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
            raise("AxiomViolation", "left distributivity fails", "distl",
                  {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)});
        if (at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c)))
            raise("AxiomViolation", "right distributivity fails", "distr",
                  {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)});
    };

    if (mode == ValidationMode::Full) {
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b)
                for (std::size_t c = 0; c < size; ++c) check_triple(a, b, c);
    } else {
        SampleGen gen;
        for (std::size_t i = 0; i < kSampleTriples; ++i)
            check_triple(gen.pick(size), gen.pick(size), gen.pick(size));
    }

    if (one) {
        Elem e = *one;
        if (e >= size) raise("UnityMismatch", "claimed unity out of range");
        for (std::size_t a = 0; a < size; ++a)
            if (at(mul, e, a) != a || at(mul, a, e) != a)
                raise("UnityMismatch", "claimed unity is not an identity", "one",
                      {e, static_cast<Elem>(a)});
        if (e == 0 && size > 1) raise("UnityMismatch", "unity equals zero in a nonzero ring");
    } else {
        for (std::size_t e = 0; e < size; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < size && ok; ++a)
                ok = at(mul, e, a) == a && at(mul, a, e) == a;
            if (ok) {
                one = static_cast<Elem>(e);
                break;
            }
        }
    }

    bool comm = true;
    for (std::size_t a = 0; a < size && comm; ++a)
        for (std::size_t b = a + 1; b < size && comm; ++b)
            comm = at(mul, a, b) == at(mul, b, a);

    if (labels.empty()) {
        labels.reserve(size);
        for (std::size_t i = 0; i < size; ++i) labels.push_back(default_label(i));
    } else if (labels.size() != size) {
        raise("AxiomViolation", "label count does not match size");
    }

    FiniteRing r;
    r.size_ = size;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.neg_ = std::move(neg);
    r.one_ = one;
    r.labels_ = std::move(labels);
    r.commutative_ = comm;
    return r;
}

FiniteRing cyclic_ring(std::size_t n) {
    if (n == 0) raise("PreconditionViolated", "cyclic ring needs n >= 1");
    if (n > 65535) raise("SizeCapExceeded", "cyclic ring larger than the element type");
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    std::optional<Elem> one;
    if (n >= 2) one = 1;
    else one = 0;
    return validate_tables(n, std::move(add), std::move(mul), one, {},
                           n <= kFullCheckMax ? ValidationMode::Full : ValidationMode::Sampled);
}

namespace {

// GF(p^k) as F_p[x] modulo a fixed irreducible; element index reads as base-p
// digits, digit i = coefficient of x^i.
FiniteRing prime_power_field(std::size_t p, std::size_t k, const std::vector<std::size_t>& irred) {
    std::size_t q = 1;
    for (std::size_t i = 0; i < k; ++i) q *= p;
    auto decode = [&](std::size_t v) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = v % p;
            v /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::size_t>& c) {
        std::size_t v = 0;
        for (std::size_t i = k; i-- > 0;) v = v * p + c[i];
        return v;
    };
    std::vector<Elem> add(q * q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a) {
        auto ca = decode(a);
        for (std::size_t b = 0; b < q; ++b) {
            auto cb = decode(b);
            std::vector<std::size_t> s(k);
            for (std::size_t i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
            add[a * q + b] = static_cast<Elem>(encode(s));
            std::vector<std::size_t> prod(2 * k - 1, 0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (std::size_t d = 2 * k - 2; d + 1 > k; --d) {
                // x^d = x^(d-k) * (x^k mod irred); irred holds -coefficients of x^k
                std::size_t coef = prod[d];
                if (coef == 0) continue;
                prod[d] = 0;
                for (std::size_t i = 0; i < k; ++i)
                    prod[d - k + i] = (prod[d - k + i] + coef * irred[i]) % p;
            }
            std::vector<std::size_t> m(prod.begin(), prod.begin() + k);
            mul[a * q + b] = static_cast<Elem>(encode(m));
        }
    }
    std::vector<std::string> labels(q);
    for (std::size_t v = 0; v < q; ++v) {
        auto c = decode(v);
        std::string s;
        for (std::size_t i = k; i-- > 0;) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || c[i] > 1) s += std::to_string(c[i]);
            if (i >= 1) {
                if (c[i] == 1) s += "x";
                else s += "*x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        labels[v] = s.empty() ? "0" : s;
    }
    return validate_tables(q, std::move(add), std::move(mul), Elem{1}, std::move(labels));
}

}  // namespace

FiniteRing finite_field(std::size_t q) {
    switch (q) {
        case 2:
        case 3:
        case 5:
        case 7:
            return cyclic_ring(q);
        case 4:
            // x^2 = x + 1
            return prime_power_field(2, 2, {1, 1});
        case 8:
            // x^3 = x + 1
            return prime_power_field(2, 3, {1, 1, 0});
        case 9:
            // x^2 = -1 = 2
            return prime_power_field(3, 2, {2, 0});
        default:
            raise("UnsupportedOrder", "finite_field supports q in {2,3,4,5,7,8,9}");
    }
}

FiniteRing matrix_ring(const FiniteRing& base, int n, const Limits& limits) {
    if (n < 1) raise("PreconditionViolated", "matrix ring needs n >= 1");
    std::size_t cells = static_cast<std::size_t>(n) * n;
    std::size_t size = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        size *= base.size();
        if (size > limits.size_cap) raise("SizeCapExceeded", "matrix ring too large");
    }

    auto decode = [&](std::size_t v, std::vector<Elem>& m) {
        for (std::size_t i = 0; i < cells; ++i) {
            m[i] = static_cast<Elem>(v % base.size());
            v /= base.size();
        }
    };
    auto encode = [&](const std::vector<Elem>& m) {
        std::size_t v = 0;
        for (std::size_t i = cells; i-- > 0;) v = v * base.size() + m[i];
        return v;
    };
    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<Elem> ma(cells), mb(cells), mc(cells);
    for (std::size_t a = 0; a < size; ++a) {
        decode(a, ma);
        for (std::size_t b = 0; b < size; ++b) {
            decode(b, mb);
            for (std::size_t i = 0; i < cells; ++i) mc[i] = base.add(ma[i], mb[i]);
            add[a * size + b] = static_cast<Elem>(encode(mc));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Elem acc = 0;
                    for (int t = 0; t < n; ++t)
                        acc = base.add(acc, base.mul(ma[static_cast<std::size_t>(i) * n + t],
                                                     mb[static_cast<std::size_t>(t) * n + j]));
                    mc[static_cast<std::size_t>(i) * n + j] = acc;
                }
            mul[a * size + b] = static_cast<Elem>(encode(mc));
        }
    }
    std::optional<Elem> one;
    if (base.unital()) {
        std::vector<Elem> id(cells, 0);
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = *base.one();
        one = static_cast<Elem>(encode(id));
    }
    std::vector<std::string> labels(size);
    std::vector<Elem> m(cells);
    for (std::size_t v = 0; v < size; ++v) {
        decode(v, m);
        std::string s = "[";
        for (int i = 0; i < n; ++i) {
            s += "[";
            for (int j = 0; j < n; ++j) {
                s += base.label(m[static_cast<std::size_t>(i) * n + j]);
                if (j + 1 < n) s += ",";
            }
            s += "]";
            if (i + 1 < n) s += ",";
        }
        s += "]";
        labels[v] = s;
    }
    return validate_tables(size, std::move(add), std::move(mul), one, std::move(labels),
                           size <= kFullCheckMax ? ValidationMode::Full : ValidationMode::Sampled);
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b, const Limits& limits) {
    std::size_t size = a.size() * b.size();
    if (size > limits.size_cap) raise("SizeCapExceeded", "product too large");
    std::vector<Elem> add(size * size), mul(size * size);
    auto pack = [&](std::size_t x, std::size_t y) { return x * b.size() + y; };
    for (std::size_t xa = 0; xa < a.size(); ++xa)
        for (std::size_t ya = 0; ya < b.size(); ++ya)
            for (std::size_t xb = 0; xb < a.size(); ++xb)
                for (std::size_t yb = 0; yb < b.size(); ++yb) {
                    std::size_t i = pack(xa, ya), j = pack(xb, yb);
                    add[i * size + j] = static_cast<Elem>(
                        pack(a.add(static_cast<Elem>(xa), static_cast<Elem>(xb)),
                             b.add(static_cast<Elem>(ya), static_cast<Elem>(yb))));
                    mul[i * size + j] = static_cast<Elem>(
                        pack(a.mul(static_cast<Elem>(xa), static_cast<Elem>(xb)),
                             b.mul(static_cast<Elem>(ya), static_cast<Elem>(yb))));
                }
    std::optional<Elem> one;
    if (a.unital() && b.unital()) one = static_cast<Elem>(pack(*a.one(), *b.one()));
    std::vector<std::string> labels(size);
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y)
            labels[pack(x, y)] = "(" + a.label(static_cast<Elem>(x)) + "," +
                                 b.label(static_cast<Elem>(y)) + ")";
    return validate_tables(size, std::move(add), std::move(mul), one, std::move(labels),
                           size <= kFullCheckMax ? ValidationMode::Full : ValidationMode::Sampled);
}

Subset make_subset(const FiniteRing& r, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Elem m : members)
        if (m >= r.size()) raise("PreconditionViolated", "subset member out of range");
    ElemSet in(r.size());
    for (Elem m : members) in.set(m);

    Subset s;
    s.members = std::move(members);
    auto& f = s.flags;
    f.additive_subgroup = in.test(0);
    for (std::size_t i = 0; i < s.members.size() && f.additive_subgroup; ++i)
        for (std::size_t j = i; j < s.members.size() && f.additive_subgroup; ++j)
            f.additive_subgroup = in.test(r.add(s.members[i], s.members[j]));
    if (f.additive_subgroup) {
        f.left_ideal = true;
        f.right_ideal = true;
        for (Elem m : s.members) {
            for (std::size_t x = 0; x < r.size(); ++x) {
                if (!in.test(r.mul(static_cast<Elem>(x), m))) f.left_ideal = false;
                if (!in.test(r.mul(m, static_cast<Elem>(x)))) f.right_ideal = false;
                if (!f.left_ideal && !f.right_ideal) break;
            }
            if (!f.left_ideal && !f.right_ideal) break;
        }
        f.subring = true;
        for (std::size_t i = 0; i < s.members.size() && f.subring; ++i)
            for (std::size_t j = 0; j < s.members.size() && f.subring; ++j)
                f.subring = in.test(r.mul(s.members[i], s.members[j]));
    }
    f.contains_one = r.unital() && in.test(*r.one());
    return s;
}

Subset subset_from_set(const FiniteRing& r, const ElemSet& s) {
    return make_subset(r, s.to_sorted());
}

ElemSet to_set(const FiniteRing& r, const Subset& s) {
    ElemSet out(r.size());
    for (Elem m : s.members) out.set(m);
    return out;
}

QuotientResult quotient_ring(const FiniteRing& r, const Subset& ideal) {
    Subset checked = make_subset(r, ideal.members);
    if (!checked.flags.additive_subgroup)
        raise("NotAnIdeal", "not an additive subgroup");
    if (!checked.flags.left_ideal || !checked.flags.right_ideal) {
        // find a concrete absorption failure for the message
        for (Elem m : checked.members)
            for (std::size_t x = 0; x < r.size(); ++x) {
                ElemSet in = to_set(r, checked);
                if (!in.test(r.mul(static_cast<Elem>(x), m)))
                    raise("NotAnIdeal", "left absorption fails", "absorb", {static_cast<Elem>(x), m});
                if (!in.test(r.mul(m, static_cast<Elem>(x))))
                    raise("NotAnIdeal", "right absorption fails", "absorb", {m, static_cast<Elem>(x)});
            }
        raise("NotAnIdeal", "not two-sided");
    }

    ElemSet in = to_set(r, checked);
    std::vector<Elem> coset_of(r.size(), 0);
    std::vector<Elem> reps;
    std::vector<char> seen(r.size(), 0);
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (seen[x]) continue;
        Elem c = static_cast<Elem>(reps.size());
        reps.push_back(static_cast<Elem>(x));
        for (Elem m : checked.members) {
            Elem y = r.add(static_cast<Elem>(x), m);
            if (seen[y] && coset_of[y] != c)
                raise("NotAnIdeal", "cosets are not disjoint");
            seen[y] = 1;
            coset_of[y] = c;
        }
    }
    std::size_t q = reps.size();
    std::vector<Elem> add(q * q), mul(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            add[i * q + j] = coset_of[r.add(reps[i], reps[j])];
            mul[i * q + j] = coset_of[r.mul(reps[i], reps[j])];
        }
    std::optional<Elem> one;
    if (r.unital()) one = coset_of[*r.one()];
    std::vector<std::string> labels(q);
    for (std::size_t i = 0; i < q; ++i) labels[i] = "~" + r.label(reps[i]);
    QuotientResult out{validate_tables(q, std::move(add), std::move(mul), one, std::move(labels),
                                       q <= kFullCheckMax ? ValidationMode::Full
                                                          : ValidationMode::Sampled),
                       std::move(coset_of)};
    return out;
}

FiniteRing corner_ring(const FiniteRing& r, Elem e) {
    if (e >= r.size()) raise("NotIdempotent", "element out of range");
    if (r.mul(e, e) != e) raise("NotIdempotent", "element is not idempotent", "idem", {e});
    for (std::size_t x = 0; x < r.size(); ++x)
        if (r.mul(e, static_cast<Elem>(x)) != r.mul(static_cast<Elem>(x), e))
            raise("NotCentral", "idempotent is not central", "central",
                  {e, static_cast<Elem>(x)});
    std::vector<Elem> members;
    {
        ElemSet in(r.size());
        for (std::size_t x = 0; x < r.size(); ++x) {
            Elem y = r.mul(e, static_cast<Elem>(x));
            if (!in.test(y)) {
                in.set(y);
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
    }
    std::size_t q = members.size();
    std::vector<Elem> idx(r.size(), 0);
    for (std::size_t i = 0; i < q; ++i) idx[members[i]] = static_cast<Elem>(i);
    std::vector<Elem> add(q * q), mul(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            add[i * q + j] = idx[r.add(members[i], members[j])];
            mul[i * q + j] = idx[r.mul(members[i], members[j])];
        }
    std::vector<std::string> labels(q);
    for (std::size_t i = 0; i < q; ++i) labels[i] = r.label(members[i]);
    return validate_tables(q, std::move(add), std::move(mul), idx[e], std::move(labels),
                           q <= kFullCheckMax ? ValidationMode::Full : ValidationMode::Sampled);
}

FiniteRing opposite_ring(const FiniteRing& r) {
    std::size_t n = r.size();
    std::vector<Elem> add(r.add_table());
    std::vector<Elem> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = r.mul(static_cast<Elem>(b), static_cast<Elem>(a));
    return validate_tables(n, std::move(add), std::move(mul), r.one(),
                           std::vector<std::string>(r.labels()),
                           n <= kFullCheckMax ? ValidationMode::Full : ValidationMode::Sampled);
}

namespace {

std::vector<std::size_t> additive_order_profile(const FiniteRing& r) {
    std::vector<std::size_t> prof(r.size());
    for (std::size_t x = 0; x < r.size(); ++x) {
        Elem acc = static_cast<Elem>(x);
        std::size_t ord = 1;
        while (acc != 0) {
            acc = r.add(acc, static_cast<Elem>(x));
            ++ord;
        }
        prof[x] = ord;
    }
    return prof;
}

bool iso_full_check(const FiniteRing& a, const FiniteRing& b, const std::vector<int>& map) {
    std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Elem ix = static_cast<Elem>(map[x]), iy = static_cast<Elem>(map[y]);
            if (static_cast<Elem>(map[a.add(static_cast<Elem>(x), static_cast<Elem>(y))]) !=
                b.add(ix, iy))
                return false;
            if (static_cast<Elem>(map[a.mul(static_cast<Elem>(x), static_cast<Elem>(y))]) !=
                b.mul(ix, iy))
                return false;
        }
    return true;
}

bool iso_backtrack(const FiniteRing& a, const FiniteRing& b, std::vector<int>& map,
                   std::vector<char>& used, std::size_t next,
                   const std::vector<std::size_t>& pa, const std::vector<std::size_t>& pb) {
    std::size_t n = a.size();
    if (next == n) return iso_full_check(a, b, map);
    if (map[next] >= 0) return iso_backtrack(a, b, map, used, next + 1, pa, pb);
    for (std::size_t img = 0; img < n; ++img) {
        if (used[img] || pa[next] != pb[img]) continue;
        bool ok = true;
        // partial pruning: relations among already-mapped elements must agree
        for (std::size_t prev = 0; prev <= next && ok; ++prev) {
            if (map[prev] < 0) continue;
            Elem p = static_cast<Elem>(prev), q = static_cast<Elem>(next);
            Elem ip = static_cast<Elem>(map[prev]), iq = static_cast<Elem>(img);
            auto chk = [&](Elem x, Elem y, Elem ix, Elem iy) {
                Elem s = a.add(x, y);
                if ((s == q ? static_cast<int>(iq) : map[s]) >= 0 &&
                    static_cast<Elem>(s == q ? iq : static_cast<Elem>(map[s])) != b.add(ix, iy))
                    return false;
                Elem m = a.mul(x, y);
                if ((m == q ? static_cast<int>(iq) : map[m]) >= 0 &&
                    static_cast<Elem>(m == q ? iq : static_cast<Elem>(map[m])) != b.mul(ix, iy))
                    return false;
                return true;
            };
            ok = chk(p, q, ip, iq) && chk(q, p, iq, ip) && chk(q, q, iq, iq);
        }
        if (!ok) continue;
        map[next] = static_cast<int>(img);
        used[img] = 1;
        if (iso_backtrack(a, b, map, used, next + 1, pa, pb)) return true;
        map[next] = -1;
        used[img] = 0;
    }
    return false;
}

}  // namespace

bool isomorphic(const FiniteRing& a, const FiniteRing& b) {
    if (a.size() != b.size()) return false;
    if (a.size() > 16) raise("SizeCapExceeded", "isomorphism search is limited to size <= 16");
    if (a.unital() != b.unital()) return false;
    if (a.commutative() != b.commutative()) return false;
    auto pa = additive_order_profile(a), pb = additive_order_profile(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(a.size(), -1);
    std::vector<char> used(a.size(), 0);
    map[0] = 0;
    used[0] = 1;
    if (a.unital()) {
        Elem oa = *a.one(), ob = *b.one();
        if (pa[oa] != pb[ob]) return false;
        if (oa != 0) {
            if (map[oa] == -1 && !used[ob]) {
                map[oa] = ob;
                used[ob] = 1;
            } else if (static_cast<int>(ob) != map[oa]) {
                return false;
            }
        }
    }
    return iso_backtrack(a, b, map, used, 1, pa, pb);
}

}  // namespace finring
