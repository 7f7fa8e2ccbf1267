#include "finring/structure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace finring {

ElemSet center(const FiniteRing& r) {
    std::size_t n = r.size();
    ElemSet z(n);
    for (std::size_t a = 0; a < n; ++a) {
        bool central = true;
        for (std::size_t x = 0; x < n && central; ++x)
            central = r.mul(static_cast<Elem>(a), static_cast<Elem>(x)) ==
                      r.mul(static_cast<Elem>(x), static_cast<Elem>(a));
        if (central) z.set(static_cast<Elem>(a));
    }
    return z;
}

PowerProfile power_profile(const FiniteRing& r) {
    std::size_t n = r.size();
    PowerProfile p;
    p.powers.resize(n);
    p.index.assign(n, 0);
    p.period.assign(n, 0);
    p.nil_index.assign(n, 0);
    p.satisfies_p.assign(n, 0);
    std::vector<std::uint32_t> pos(n, 0);
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t epoch = 0;
    for (std::size_t x = 0; x < n; ++x) {
        ++epoch;
        Elem cur = static_cast<Elem>(x);
        std::uint32_t i = 1;
        auto& list = p.powers[x];
        while (stamp[cur] != epoch) {
            stamp[cur] = epoch;
            pos[cur] = i;
            list.push_back(cur);
            if (cur == 0 && p.nil_index[x] == 0) p.nil_index[x] = i;
            cur = r.mul(cur, static_cast<Elem>(x));
            ++i;
        }
        p.index[x] = pos[cur];
        p.period[x] = i - pos[cur];
        p.satisfies_p[x] = (p.index[x] == 1);
    }
    return p;
}

ElemSet power_set(const FiniteRing& r, Elem x) {
    ElemSet s(r.size());
    Elem cur = x;
    while (!s.test(cur)) {
        s.set(cur);
        cur = r.mul(cur, x);
    }
    return s;
}

namespace {

ElemSet hypercenter_from_powers(const FiniteRing& r, const PowerProfile& pp) {
    std::size_t n = r.size();
    if (r.commutative()) return ElemSet::full(n);
    ElemSet t = ElemSet::full(n);
    ElemSet cx(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (t.none()) break;
        cx = ElemSet(n);
        for (Elem p : pp.powers[x]) {
            t.for_each([&](Elem a) {
                if (!cx.test(a) && r.mul(a, p) == r.mul(p, a)) cx.set(a);
            });
        }
        t &= cx;
    }
    return t;
}

}  // namespace

ElemSet hypercenter(const FiniteRing& r) {
    return hypercenter_from_powers(r, power_profile(r));
}

ElemSet hypercenter_naive(const FiniteRing& r, std::size_t bound) {
    std::size_t n = r.size();
    ElemSet t(n);
    for (std::size_t a = 0; a < n; ++a) {
        bool in = true;
        for (std::size_t x = 0; x < n && in; ++x) {
            bool found = false;
            Elem p = static_cast<Elem>(x);
            for (std::size_t k = 1; k <= bound && !found; ++k) {
                found = r.mul(static_cast<Elem>(a), p) == r.mul(p, static_cast<Elem>(a));
                p = r.mul(p, static_cast<Elem>(x));
            }
            in = found;
        }
        if (in) t.set(static_cast<Elem>(a));
    }
    return t;
}

ElemSet nilpotent_elements(const FiniteRing& r) {
    PowerProfile p = power_profile(r);
    ElemSet s(r.size());
    for (std::size_t x = 0; x < r.size(); ++x)
        if (p.nil_index[x] != 0) s.set(static_cast<Elem>(x));
    return s;
}

namespace {

// Extends the additive subgroup S (bitset + member list) by g: new subgroup
// is the union of cosets S + k*g.
void subgroup_add(const FiniteRing& r, ElemSet& s, std::vector<Elem>& list, Elem g) {
    if (s.test(g)) return;
    Elem m = g;
    while (!s.test(m)) {
        std::size_t old = list.size();
        for (std::size_t i = 0; i < old; ++i) {
            Elem e = r.add(list[i], m);
            if (!s.test(e)) {
                s.set(e);
                list.push_back(e);
            }
        }
        m = r.add(m, g);
    }
}

}  // namespace

ElemSet ideal_generated(const FiniteRing& r, const ElemSet& gens, GenKind kind) {
    std::size_t n = r.size();
    ElemSet s(n);
    s.set(0);
    std::vector<Elem> list{0};
    std::deque<Elem> work;
    gens.for_each([&](Elem g) { work.push_back(g); });
    bool left = kind == GenKind::TwoSided || kind == GenKind::Left;
    bool right = kind == GenKind::TwoSided || kind == GenKind::Right;
    while (!work.empty()) {
        Elem g = work.front();
        work.pop_front();
        if (s.test(g)) continue;
        std::size_t old = list.size();
        subgroup_add(r, s, list, g);
        for (std::size_t i = old; i < list.size(); ++i) {
            Elem e = list[i];
            if (kind == GenKind::Subring) {
                for (std::size_t j = 0; j < list.size(); ++j) {
                    Elem p = r.mul(e, list[j]);
                    if (!s.test(p)) work.push_back(p);
                    p = r.mul(list[j], e);
                    if (!s.test(p)) work.push_back(p);
                }
            } else {
                for (std::size_t x = 0; x < n; ++x) {
                    if (left) {
                        Elem p = r.mul(static_cast<Elem>(x), e);
                        if (!s.test(p)) work.push_back(p);
                    }
                    if (right) {
                        Elem p = r.mul(e, static_cast<Elem>(x));
                        if (!s.test(p)) work.push_back(p);
                    }
                }
            }
        }
    }
    return s;
}

ElemSet ideal_generated(const FiniteRing& r, Elem x, GenKind kind) {
    ElemSet g(r.size());
    g.set(x);
    return ideal_generated(r, g, kind);
}

ElemSet annihilator(const FiniteRing& r, const ElemSet& x, Side side) {
    if (x.none()) raise("EmptySet", "annihilator of the empty set");
    std::size_t n = r.size();
    ElemSet out = ElemSet::full(n);
    ElemSet cur(n);
    std::vector<Elem> xs = x.to_sorted();
    for (Elem m : xs) {
        cur = ElemSet(n);
        for (std::size_t a = 0; a < n; ++a) {
            Elem p = side == Side::Left ? r.mul(static_cast<Elem>(a), m)
                                        : r.mul(m, static_cast<Elem>(a));
            if (p == 0) cur.set(static_cast<Elem>(a));
        }
        out &= cur;
        if (out.none()) break;
    }
    return out;
}

ElemSet annihilator_one(const FiniteRing& r, Elem x, Side side) {
    std::size_t n = r.size();
    ElemSet out(n);
    for (std::size_t a = 0; a < n; ++a) {
        Elem p = side == Side::Left ? r.mul(static_cast<Elem>(a), x)
                                    : r.mul(x, static_cast<Elem>(a));
        if (p == 0) out.set(static_cast<Elem>(a));
    }
    return out;
}

namespace {

ElemSet principal_one_sided(const FiniteRing& r, Elem x, Side side) {
    return ideal_generated(r, x, side == Side::Left ? GenKind::Left : GenKind::Right);
}

// Core essentiality scan. principal(x) is consulted only when the cheap
// x in I / (ring mult hit) paths fail.
bool essential_scan(const FiniteRing& r, const ElemSet& ideal, Side side, Elem* witness) {
    std::size_t n = r.size();
    for (std::size_t x = 1; x < n; ++x) {
        Elem e = static_cast<Elem>(x);
        if (ideal.test(e)) continue;
        bool hit = false;
        for (std::size_t q = 0; q < n && !hit; ++q) {
            Elem p = side == Side::Left ? r.mul(static_cast<Elem>(q), e)
                                        : r.mul(e, static_cast<Elem>(q));
            hit = p != 0 && ideal.test(p);
        }
        if (hit) continue;
        ElemSet l = principal_one_sided(r, e, side);
        l.reset(0);
        if (!l.intersects(ideal)) {
            if (witness) *witness = e;
            return false;
        }
    }
    return true;
}

}  // namespace

Verdict is_essential(const FiniteRing& r, const Subset& ideal, Side side) {
    Subset checked = make_subset(r, ideal.members);
    bool ok = checked.flags.additive_subgroup &&
              (side == Side::Left ? checked.flags.left_ideal : checked.flags.right_ideal);
    if (!ok) raise("NotAnIdeal", "essentiality needs an ideal of the given side");
    ElemSet in = to_set(r, checked);
    Elem w = 0;
    if (essential_scan(r, in, side, &w)) return verdict_holds("essential");
    return verdict_fails("essential", {{"x", w}},
                         {"the principal ideal of x meets the ideal only at 0"});
}

SingularIdeals singular_ideals(const FiniteRing& r) {
    RingAnalysis a(r);
    SingularIdeals out{ElemSet(r.size()), ElemSet(r.size())};
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (a.essential_left(a.left_ann(static_cast<Elem>(x)))) out.left.set(static_cast<Elem>(x));
        if (a.essential_right(a.right_ann(static_cast<Elem>(x))))
            out.right.set(static_cast<Elem>(x));
    }
    return out;
}

ElemSet idempotents(const FiniteRing& r) {
    ElemSet s(r.size());
    for (std::size_t x = 0; x < r.size(); ++x)
        if (r.mul(static_cast<Elem>(x), static_cast<Elem>(x)) == static_cast<Elem>(x))
            s.set(static_cast<Elem>(x));
    return s;
}

ElemSet units(const FiniteRing& r) {
    ElemSet s(r.size());
    if (!r.unital()) return s;
    Elem one = *r.one();
    std::size_t n = r.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (r.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == one &&
                r.mul(static_cast<Elem>(b), static_cast<Elem>(a)) == one) {
                s.set(static_cast<Elem>(a));
                break;
            }
    return s;
}

ElemSet jacobson_radical(const FiniteRing& r) {
    std::size_t n = r.size();
    if (r.unital()) {
        Elem one = *r.one();
        // left-invertible elements
        ElemSet li(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t z = 0; z < n; ++z)
                if (r.mul(static_cast<Elem>(u), static_cast<Elem>(z)) == one)
                    li.set(static_cast<Elem>(z));
        ElemSet j(n);
        for (std::size_t a = 0; a < n; ++a) {
            bool in = true;
            for (std::size_t q = 0; q < n && in; ++q)
                in = li.test(r.sub(one, r.mul(static_cast<Elem>(q), static_cast<Elem>(a))));
            if (in) j.set(static_cast<Elem>(a));
        }
        return j;
    }
    ElemSet nil = nilpotent_elements(r);
    if (nil.count() == n) return ElemSet::full(n);
    // left quasi-regular under a o b = a + b - ab
    ElemSet qr(n);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u)
            if (r.sub(r.add(static_cast<Elem>(u), static_cast<Elem>(z)),
                      r.mul(static_cast<Elem>(u), static_cast<Elem>(z))) == 0) {
                qr.set(static_cast<Elem>(z));
                break;
            }
    ElemSet out(n);
    std::vector<char> decided(n, 0);
    decided[0] = 1;
    out.set(0);
    for (std::size_t a = 1; a < n; ++a) {
        if (decided[a]) continue;
        ElemSet l = ideal_generated(r, static_cast<Elem>(a), GenKind::Left);
        if (l.subset_of(qr)) {
            // every member generates inside l, so the whole set is in J
            l.for_each([&](Elem e) {
                out.set(e);
                decided[e] = 1;
            });
        } else {
            decided[a] = 1;
        }
    }
    return out;
}

ElemSet prime_radical(const FiniteRing& r) {
    std::size_t n = r.size();
    ElemSet nil = nilpotent_elements(r);
    ElemSet out(n);
    out.set(0);
    std::vector<char> decided(n, 0);
    decided[0] = 1;
    for (std::size_t x = 0; x < n; ++x) {
        if (decided[x]) continue;
        decided[x] = 1;
        if (!nil.test(static_cast<Elem>(x))) continue;  // members of P are nilpotent
        ElemSet ideal = ideal_generated(r, static_cast<Elem>(x), GenKind::TwoSided);
        // power iteration: I^(k+1) = additive closure of I^k * I, nilpotent
        // iff it reaches {0}; a fixed point above {0} ends the search
        ElemSet power = ideal;
        bool nilpotent_ideal = false;
        for (std::size_t step = 0; step <= n; ++step) {
            if (power.count() == 1 && power.test(0)) {
                nilpotent_ideal = true;
                break;
            }
            ElemSet next(n);
            next.set(0);
            std::vector<Elem> list{0};
            std::vector<Elem> pl = power.to_sorted();
            std::vector<Elem> il = ideal.to_sorted();
            for (Elem a : pl)
                for (Elem b : il) subgroup_add(r, next, list, r.mul(a, b));
            if (next == power) break;
            power = next;
        }
        if (nilpotent_ideal)
            ideal.for_each([&](Elem e) {
                out.set(e);
                decided[e] = 1;
            });
    }
    return out;
}

Radicals radicals(const FiniteRing& r) {
    Radicals out{nilpotent_elements(r), jacobson_radical(r), prime_radical(r), false, false};
    out.is_nil_ring = out.nil.count() == r.size();
    // NI check: closure of the nilpotent set under + and both-sided products
    ElemSet& nil = out.nil;
    bool ni = true;
    std::vector<Elem> ns = nil.to_sorted();
    for (std::size_t i = 0; i < ns.size() && ni; ++i) {
        for (std::size_t j = 0; j < ns.size() && ni; ++j) ni = nil.test(r.add(ns[i], ns[j]));
        for (std::size_t x = 0; x < r.size() && ni; ++x)
            ni = nil.test(r.mul(static_cast<Elem>(x), ns[i])) &&
                 nil.test(r.mul(ns[i], static_cast<Elem>(x)));
    }
    out.nil_is_ideal = ni;
    return out;
}

std::vector<std::vector<Elem>> maximal_one_sided_ideals(const FiniteRing& r, Side side) {
    if (!r.unital()) raise("PreconditionViolated", "maximal ideals need a unital ring");
    ElemSet j = jacobson_radical(r);
    Subset js = subset_from_set(r, j);
    QuotientResult q = quotient_ring(r, js);
    const FiniteRing& Q = q.ring;
    std::size_t m = Q.size();
    // in the semisimple quotient every one-sided ideal is principal
    std::vector<ElemSet> ideals;
    for (std::size_t x = 0; x < m; ++x) {
        ElemSet px(m);
        for (std::size_t a = 0; a < m; ++a)
            px.set(side == Side::Left ? Q.mul(static_cast<Elem>(a), static_cast<Elem>(x))
                                      : Q.mul(static_cast<Elem>(x), static_cast<Elem>(a)));
        if (px.count() == m) continue;  // improper
        bool dup = false;
        for (const auto& e : ideals)
            if (e == px) { dup = true; break; }
        if (!dup) ideals.push_back(std::move(px));
    }
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        bool maximal = true;
        for (std::size_t k = 0; k < ideals.size() && maximal; ++k)
            maximal = k == i || !(ideals[i].subset_of(ideals[k]) && !(ideals[i] == ideals[k]));
        if (!maximal) continue;
        std::vector<Elem> members;
        for (std::size_t y = 0; y < r.size(); ++y)
            if (ideals[i].test(q.projection[y])) members.push_back(static_cast<Elem>(y));
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElemSet> all_one_sided_ideals_bruteforce(const FiniteRing& r, Side side) {
    std::size_t n = r.size();
    if (n > 16) raise("SizeCapExceeded", "lattice enumeration is limited to size <= 16");
    std::vector<ElemSet> out;
    std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < total; mask += 2) {  // bit 0 (element 0) always set
        ElemSet s(n);
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) s.set(static_cast<Elem>(b));
        std::vector<Elem> ms = s.to_sorted();
        bool ok = true;
        for (std::size_t i = 0; i < ms.size() && ok; ++i)
            for (std::size_t k = 0; k < ms.size() && ok; ++k) ok = s.test(r.add(ms[i], ms[k]));
        for (std::size_t i = 0; i < ms.size() && ok; ++i)
            for (std::size_t x = 0; x < n && ok; ++x)
                ok = s.test(side == Side::Left ? r.mul(static_cast<Elem>(x), ms[i])
                                               : r.mul(ms[i], static_cast<Elem>(x)));
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Elem>> maximal_one_sided_ideals_bruteforce(const FiniteRing& r,
                                                                   Side side) {
    std::vector<ElemSet> ideals = all_one_sided_ideals_bruteforce(r, side);
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (ideals[i].count() == r.size()) continue;
        bool maximal = true;
        for (std::size_t k = 0; k < ideals.size() && maximal; ++k) {
            if (k == i || ideals[k].count() == r.size()) continue;
            maximal = !(ideals[i].subset_of(ideals[k]) && !(ideals[i] == ideals[k]));
        }
        if (maximal) out.push_back(ideals[i].to_sorted());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_essential_bruteforce(const FiniteRing& r, const ElemSet& ideal, Side side) {
    for (const ElemSet& other : all_one_sided_ideals_bruteforce(r, side)) {
        if (other.count() == 1) continue;  // {0}
        ElemSet meet = other;
        meet &= ideal;
        meet.reset(0);
        if (meet.none()) return false;
    }
    return true;
}

const ElemSet& RingAnalysis::center() {
    if (!center_) center_ = finring::center(r_);
    return *center_;
}

const PowerProfile& RingAnalysis::powers() {
    if (!powers_) powers_ = power_profile(r_);
    return *powers_;
}

const ElemSet& RingAnalysis::hypercenter() {
    if (!hyper_) hyper_ = hypercenter_from_powers(r_, powers());
    return *hyper_;
}

bool RingAnalysis::hypercenter_full() { return hypercenter().count() == r_.size(); }

const ElemSet& RingAnalysis::nil() {
    if (!nil_) {
        const PowerProfile& p = powers();
        ElemSet s(r_.size());
        for (std::size_t x = 0; x < r_.size(); ++x)
            if (p.nil_index[x] != 0) s.set(static_cast<Elem>(x));
        nil_ = std::move(s);
    }
    return *nil_;
}

bool RingAnalysis::nil_is_ideal() {
    if (!nil_ideal_) {
        const ElemSet& s = nil();
        bool ni = true;
        std::vector<Elem> ns = s.to_sorted();
        for (std::size_t i = 0; i < ns.size() && ni; ++i) {
            for (std::size_t j = i; j < ns.size() && ni; ++j) ni = s.test(r_.add(ns[i], ns[j]));
            for (std::size_t x = 0; x < r_.size() && ni; ++x)
                ni = s.test(r_.mul(static_cast<Elem>(x), ns[i])) &&
                     s.test(r_.mul(ns[i], static_cast<Elem>(x)));
        }
        nil_ideal_ = ni;
    }
    return *nil_ideal_;
}

bool RingAnalysis::is_nil_ring() { return nil().count() == r_.size(); }

const ElemSet& RingAnalysis::jacobson() {
    if (!jacobson_) jacobson_ = jacobson_radical(r_);
    return *jacobson_;
}

const ElemSet& RingAnalysis::prime() {
    if (!prime_) prime_ = prime_radical(r_);
    return *prime_;
}

const ElemSet& RingAnalysis::idempotents() {
    if (!idem_) idem_ = finring::idempotents(r_);
    return *idem_;
}

const ElemSet& RingAnalysis::units() {
    if (!units_) units_ = finring::units(r_);
    return *units_;
}

const ElemSet& RingAnalysis::left_ann(Elem x) {
    if (lann_.empty()) lann_.resize(r_.size());
    if (!lann_[x]) lann_[x] = annihilator_one(r_, x, Side::Left);
    return *lann_[x];
}

const ElemSet& RingAnalysis::right_ann(Elem x) {
    if (rann_.empty()) rann_.resize(r_.size());
    if (!rann_[x]) rann_[x] = annihilator_one(r_, x, Side::Right);
    return *rann_[x];
}

const ElemSet& RingAnalysis::principal_left(Elem x) {
    if (pleft_.empty()) pleft_.resize(r_.size());
    if (!pleft_[x]) pleft_[x] = ideal_generated(r_, x, GenKind::Left);
    return *pleft_[x];
}

const ElemSet& RingAnalysis::principal_right(Elem x) {
    if (pright_.empty()) pright_.resize(r_.size());
    if (!pright_[x]) pright_[x] = ideal_generated(r_, x, GenKind::Right);
    return *pright_[x];
}

const ElemSet& RingAnalysis::principal_two_sided(Elem x) {
    if (ptwo_.empty()) ptwo_.resize(r_.size());
    if (!ptwo_[x]) ptwo_[x] = ideal_generated(r_, x, GenKind::TwoSided);
    return *ptwo_[x];
}

const ElemSet& RingAnalysis::left_image(Elem x) {
    if (!limg_) {
        const std::size_t n = r_.size();
        std::vector<ElemSet> img(n, ElemSet(n));
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t q = 0; q < n; ++q)
                img[c].set(r_.mul(static_cast<Elem>(q), static_cast<Elem>(c)));
        limg_ = std::move(img);
    }
    return (*limg_)[x];
}

const ElemSet& RingAnalysis::right_image(Elem x) {
    if (!rimg_) {
        const std::size_t n = r_.size();
        std::vector<ElemSet> img(n, ElemSet(n));
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t q = 0; q < n; ++q)
                img[c].set(r_.mul(static_cast<Elem>(c), static_cast<Elem>(q)));
        rimg_ = std::move(img);
    }
    return (*rimg_)[x];
}

const std::vector<std::pair<Elem, Elem>>& RingAnalysis::zero_pairs() {
    if (!zero_pairs_) {
        std::vector<std::pair<Elem, Elem>> ps;
        std::size_t n = r_.size();
        for (std::size_t u = 1; u < n; ++u)
            for (std::size_t v = 1; v < n; ++v)
                if (r_.mul(static_cast<Elem>(u), static_cast<Elem>(v)) == 0)
                    ps.emplace_back(static_cast<Elem>(u), static_cast<Elem>(v));
        zero_pairs_ = std::move(ps);
    }
    return *zero_pairs_;
}

const std::vector<std::vector<Elem>>& RingAnalysis::maximal_left_ideals() {
    if (!max_left_) max_left_ = maximal_one_sided_ideals(r_, Side::Left);
    return *max_left_;
}

const std::vector<std::vector<Elem>>& RingAnalysis::maximal_right_ideals() {
    if (!max_right_) max_right_ = maximal_one_sided_ideals(r_, Side::Right);
    return *max_right_;
}

bool RingAnalysis::essential_left(const ElemSet& ideal) {
    auto it = ess_left_.find(ideal);
    if (it != ess_left_.end()) return it->second;
    bool e = essential_scan(r_, ideal, Side::Left, nullptr);
    ess_left_.emplace(ideal, e);
    return e;
}

bool RingAnalysis::essential_right(const ElemSet& ideal) {
    auto it = ess_right_.find(ideal);
    if (it != ess_right_.end()) return it->second;
    bool e = essential_scan(r_, ideal, Side::Right, nullptr);
    ess_right_.emplace(ideal, e);
    return e;
}

const SingularIdeals& RingAnalysis::singular() {
    if (!singular_) {
        SingularIdeals out{ElemSet(r_.size()), ElemSet(r_.size())};
        for (std::size_t x = 0; x < r_.size(); ++x) {
            if (essential_left(left_ann(static_cast<Elem>(x)))) out.left.set(static_cast<Elem>(x));
            if (essential_right(right_ann(static_cast<Elem>(x))))
                out.right.set(static_cast<Elem>(x));
        }
        singular_ = std::move(out);
    }
    return *singular_;
}

}  // namespace finring
