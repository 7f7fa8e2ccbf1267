#include "finring/properties.hpp"

#include "finring/constructions.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace finring {

namespace {

constexpr const char* kNoUnity = "ring has no unity";

std::string eq3(const FiniteRing& r, Elem u, Elem q, Elem v, Elem t) {
    std::ostringstream os;
    os << "(" << r.label(u) << ")*(" << r.label(q) << ")*(" << r.label(v)
       << ") = " << r.label(t);
    return os.str();
}

ElemSet zero_only(std::size_t n) {
    ElemSet s(n);
    s.set(0);
    return s;
}

struct UrvFail {
    Elem u = 0, v = 0, r = 0, t = 0;
};

// Scans pairs u, v (nonzero, uv = 0, optionally both inside `filter`) and
// demands u r v in `target` for every r. The per-u admission pass costs
// |uR| * |r_ann(u)| <= |R|, so deciding Holds is O(|R|^2); a failing u then
// gets a direct (v, r) rescan so the reported triple is lexicographically
// first.
std::optional<UrvFail> urv_scan(RingAnalysis& a, const ElemSet& target,
                                const ElemSet* filter = nullptr) {
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    std::vector<Elem> image, vs;
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t epoch = 0;
    for (std::size_t ui = 1; ui < n; ++ui) {
        const Elem u = static_cast<Elem>(ui);
        if (filter && !filter->test(u)) continue;
        const ElemSet& ra = a.right_ann(u);
        vs.clear();
        ra.for_each([&](std::size_t v) {
            if (v != 0 && (!filter || filter->test(v))) vs.push_back(static_cast<Elem>(v));
        });
        if (vs.empty()) continue;
        ++epoch;
        image.clear();
        for (std::size_t q = 0; q < n; ++q) {
            Elem w = r.mul(u, static_cast<Elem>(q));
            if (stamp[w] != epoch) {
                stamp[w] = epoch;
                image.push_back(w);
            }
        }
        bool clean = true;
        for (Elem w : image) {
            for (Elem v : vs)
                if (!target.test(r.mul(w, v))) {
                    clean = false;
                    break;
                }
            if (!clean) break;
        }
        if (clean) continue;
        for (Elem v : vs)
            for (std::size_t q = 0; q < n; ++q) {
                Elem t = r.mul(r.mul(u, static_cast<Elem>(q)), v);
                if (!target.test(t)) return UrvFail{u, v, static_cast<Elem>(q), t};
            }
    }
    return std::nullopt;
}

Verdict urv_verdict(RingAnalysis& a, const std::string& id, const ElemSet& target,
                    const std::string& target_name, const ElemSet* filter = nullptr) {
    auto f = urv_scan(a, target, filter);
    if (!f) return verdict_holds(id);
    const FiniteRing& r = a.ring();
    std::vector<std::string> tr{
        "(" + r.label(f->u) + ")*(" + r.label(f->v) + ") = 0",
        eq3(r, f->u, f->r, f->v, f->t) + ", which is outside " + target_name};
    return verdict_fails(id, {{"u", f->u}, {"v", f->v}, {"r", f->r}}, tr);
}

Verdict p_reduced(RingAnalysis& a) {
    const auto& pw = a.powers();
    for (std::size_t x = 1; x < a.ring().size(); ++x)
        if (pw.nil_index[x] != 0) {
            std::ostringstream os;
            os << "(" << a.ring().label(static_cast<Elem>(x)) << ")^" << pw.nil_index[x]
               << " = 0 with a nonzero base";
            return verdict_fails("reduced", {{"a", static_cast<Elem>(x)}}, {os.str()});
        }
    return verdict_holds("reduced");
}

Verdict p_reversible(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    for (std::size_t u = 1; u < n; ++u) {
        const ElemSet& ra = a.right_ann(static_cast<Elem>(u));
        for (std::size_t v = 1; v < n; ++v) {
            if (!ra.test(v)) continue;
            Elem back = r.mul(static_cast<Elem>(v), static_cast<Elem>(u));
            if (back != 0)
                return verdict_fails(
                    "reversible", {{"u", static_cast<Elem>(u)}, {"v", static_cast<Elem>(v)}},
                    {"(" + r.label(static_cast<Elem>(u)) + ")*(" + r.label(static_cast<Elem>(v)) +
                     ") = 0 but the reversed product is " + r.label(back)});
        }
    }
    return verdict_holds("reversible");
}

Verdict p_semicommutative(RingAnalysis& a) {
    return urv_verdict(a, "semicommutative", zero_only(a.ring().size()), "{0}");
}

// The first x whose powers all fail to commute with t; exists whenever t is
// outside the hypercenter.
Elem noncommuting_base(RingAnalysis& a, Elem t) {
    const FiniteRing& r = a.ring();
    const auto& pw = a.powers().powers;
    for (std::size_t x = 0; x < r.size(); ++x) {
        bool ok = false;
        for (Elem p : pw[x])
            if (r.mul(t, p) == r.mul(p, t)) {
                ok = true;
                break;
            }
        if (!ok) return static_cast<Elem>(x);
    }
    return 0;
}

Verdict p_h_semicommutative(RingAnalysis& a) {
    const std::string id = "h_semicommutative";
    if (a.hypercenter_full()) {
        Verdict v = verdict_holds(id);
        v.trace = {"the hypercenter is the whole ring, so every product lands in it"};
        return v;
    }
    auto f = urv_scan(a, a.hypercenter());
    if (!f) return verdict_holds(id);
    const FiniteRing& r = a.ring();
    Elem x = noncommuting_base(a, f->t);
    std::ostringstream os;
    os << eq3(r, f->u, f->r, f->v, f->t) << " is not hypercentral: no power (" << r.label(x)
       << ")^n, n <= " << r.size() << ", commutes with it";
    return verdict_fails(id, {{"u", f->u}, {"v", f->v}, {"r", f->r}, {"x", x}},
                         {"(" + r.label(f->u) + ")*(" + r.label(f->v) + ") = 0", os.str()});
}

Verdict p_central_semicommutative(RingAnalysis& a) {
    return urv_verdict(a, "central_semicommutative", a.center(), "the center");
}

Verdict p_weakly_semicommutative(RingAnalysis& a) {
    return urv_verdict(a, "weakly_semicommutative", a.nil(), "the nilpotent set");
}

Verdict p_nil_semicommutative_1(RingAnalysis& a) {
    return urv_verdict(a, "nil_semicommutative_1", zero_only(a.ring().size()), "{0}",
                       &a.nil());
}

Verdict p_nil_semicommutative_2(RingAnalysis& a) {
    const std::string id = "nil_semicommutative_2";
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    if (a.is_nil_ring()) {
        Verdict v = verdict_holds(id);
        v.trace = {"nil ring: every product is nilpotent"};
        return v;
    }
    const ElemSet& nil = a.nil();
    // u r v in Nil for all r with uv in Nil is the same as: the set
    // L_v = {u : uv in Nil} absorbs uR for each of its members.
    bool bad = false;
    ElemSet lv(n);
    for (std::size_t v = 0; v < n && !bad; ++v) {
        lv = ElemSet(n);
        for (std::size_t u = 0; u < n; ++u)
            if (nil.test(r.mul(static_cast<Elem>(u), static_cast<Elem>(v)))) lv.set(u);
        for (std::size_t u = 0; u < n; ++u)
            if (lv.test(u) && !a.right_image(static_cast<Elem>(u)).subset_of(lv)) {
                bad = true;
                break;
            }
    }
    if (!bad) return verdict_holds(id);
    for (std::size_t u = 1; u < n; ++u)
        for (std::size_t v = 1; v < n; ++v) {
            if (!nil.test(r.mul(static_cast<Elem>(u), static_cast<Elem>(v)))) continue;
            for (std::size_t q = 0; q < n; ++q) {
                Elem t = r.mul(r.mul(static_cast<Elem>(u), static_cast<Elem>(q)),
                               static_cast<Elem>(v));
                if (!nil.test(t))
                    return verdict_fails(
                        id,
                        {{"u", static_cast<Elem>(u)},
                         {"v", static_cast<Elem>(v)},
                         {"r", static_cast<Elem>(q)}},
                        {"(" + r.label(static_cast<Elem>(u)) + ")*(" +
                             r.label(static_cast<Elem>(v)) + ") is nilpotent",
                         eq3(r, static_cast<Elem>(u), static_cast<Elem>(q),
                             static_cast<Elem>(v), t) +
                             " is not nilpotent"});
            }
        }
    return verdict_holds(id);  // unreachable
}

Verdict p_j_semicommutative(RingAnalysis& a) {
    return urv_verdict(a, "j_semicommutative", a.jacobson(), "the Jacobson radical");
}

Verdict p_ifp_hwang(RingAnalysis& a) {
    const std::string id = "ifp_hwang";
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    std::unordered_map<ElemSet, bool, ElemSetHash> memo;
    for (std::size_t ui = 1; ui < n; ++ui) {
        const Elem u = static_cast<Elem>(ui);
        const ElemSet& ra = a.right_ann(u);
        Elem v0 = 0;
        for (std::size_t v = 1; v < n; ++v)
            if (ra.test(v)) {
                v0 = static_cast<Elem>(v);
                break;
            }
        if (v0 == 0) continue;
        auto [it, fresh] = memo.try_emplace(ra, false);
        if (fresh) {
            // u R w = 0 says exactly Rw lies inside r_ann(u)
            for (std::size_t w = 1; w < n; ++w)
                if (a.left_image(static_cast<Elem>(w)).subset_of(ra)) {
                    it->second = true;
                    break;
                }
        }
        if (!it->second)
            return verdict_fails(id, {{"u", u}, {"v", v0}},
                                 {"(" + r.label(u) + ")*(" + r.label(v0) +
                                  ") = 0 with both factors constrained, yet no nonzero w has uRw = 0"});
    }
    return verdict_holds(id);
}

Verdict p_abelian(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    const ElemSet& idem = a.idempotents();
    for (std::size_t e = 0; e < n; ++e) {
        if (!idem.test(e)) continue;
        for (std::size_t q = 0; q < n; ++q) {
            Elem l = r.mul(static_cast<Elem>(e), static_cast<Elem>(q));
            Elem rr = r.mul(static_cast<Elem>(q), static_cast<Elem>(e));
            if (l != rr)
                return verdict_fails(
                    "abelian", {{"e", static_cast<Elem>(e)}, {"r", static_cast<Elem>(q)}},
                    {"idempotent " + r.label(static_cast<Elem>(e)) + " is not central: e*r = " +
                     r.label(l) + " but r*e = " + r.label(rr) + " for r = " +
                     r.label(static_cast<Elem>(q))});
        }
    }
    return verdict_holds("abelian");
}

Verdict p_directly_finite(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    if (!r.unital()) return verdict_na("directly_finite", kNoUnity);
    const Elem one = *r.one();
    const std::size_t n = r.size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (r.mul(static_cast<Elem>(u), static_cast<Elem>(v)) == one &&
                r.mul(static_cast<Elem>(v), static_cast<Elem>(u)) != one)
                return verdict_fails("directly_finite",
                                     {{"u", static_cast<Elem>(u)}, {"v", static_cast<Elem>(v)}},
                                     {"uv = 1 but vu != 1"});
    return verdict_holds("directly_finite");
}

Verdict p_two_primal(RingAnalysis& a) {
    const ElemSet& nil = a.nil();
    const ElemSet& pr = a.prime();
    if (nil == pr) return verdict_holds("two_primal");
    const FiniteRing& r = a.ring();
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (nil.test(x) == pr.test(x)) continue;
        std::string tr =
            nil.test(x)
                ? r.label(static_cast<Elem>(x)) +
                      " is nilpotent but the two-sided ideal it generates is not nilpotent"
                : r.label(static_cast<Elem>(x)) + " sits in the prime radical without being nilpotent";
        return verdict_fails("two_primal", {{"x", static_cast<Elem>(x)}}, {tr});
    }
    return verdict_holds("two_primal");
}

Verdict p_ni_ring(RingAnalysis& a) {
    if (a.nil_is_ideal()) return verdict_holds("ni_ring");
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    const ElemSet& nil = a.nil();
    for (std::size_t x = 0; x < n; ++x) {
        if (!nil.test(x)) continue;
        for (std::size_t y = 0; y < n; ++y) {
            if (!nil.test(y)) continue;
            if (!nil.test(r.add(static_cast<Elem>(x), static_cast<Elem>(y))))
                return verdict_fails(
                    "ni_ring", {{"x", static_cast<Elem>(x)}, {"y", static_cast<Elem>(y)}},
                    {"nilpotent + nilpotent escapes the nilpotent set: (" +
                     r.label(static_cast<Elem>(x)) + ") + (" + r.label(static_cast<Elem>(y)) +
                     ") = " + r.label(r.add(static_cast<Elem>(x), static_cast<Elem>(y)))});
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (!nil.test(x)) continue;
        for (std::size_t q = 0; q < n; ++q) {
            if (!nil.test(r.mul(static_cast<Elem>(x), static_cast<Elem>(q))))
                return verdict_fails(
                    "ni_ring", {{"x", static_cast<Elem>(x)}, {"r", static_cast<Elem>(q)}},
                    {"x nilpotent but x*r is not, r = " + r.label(static_cast<Elem>(q))});
            if (!nil.test(r.mul(static_cast<Elem>(q), static_cast<Elem>(x))))
                return verdict_fails(
                    "ni_ring", {{"x", static_cast<Elem>(x)}, {"r", static_cast<Elem>(q)}},
                    {"x nilpotent but r*x is not, r = " + r.label(static_cast<Elem>(q))});
        }
    }
    return verdict_holds("ni_ring");  // unreachable
}

Verdict p_vn_regular(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t w = 0; w < n && !found; ++w)
            found = r.mul(r.mul(static_cast<Elem>(x), static_cast<Elem>(w)),
                          static_cast<Elem>(x)) == static_cast<Elem>(x);
        if (!found)
            return verdict_fails("vn_regular", {{"a", static_cast<Elem>(x)}},
                                 {"no x solves a = a*x*a for a = " + r.label(static_cast<Elem>(x))});
    }
    return verdict_holds("vn_regular");
}

Verdict p_strongly_regular(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
        Elem sq = r.mul(static_cast<Elem>(x), static_cast<Elem>(x));
        bool found = false;
        for (std::size_t w = 0; w < n && !found; ++w)
            found = r.mul(sq, static_cast<Elem>(w)) == static_cast<Elem>(x);
        if (!found)
            return verdict_fails(
                "strongly_regular", {{"a", static_cast<Elem>(x)}},
                {"no x solves a = a^2*x for a = " + r.label(static_cast<Elem>(x))});
    }
    return verdict_holds("strongly_regular");
}

Verdict p_pi_regular(RingAnalysis& a) {
    // Every finite ring is pi-regular: some power of a is idempotent (or
    // zero), and a^n = a^n * a^n * a^n there. The scan still verifies the
    // equation element by element.
    const FiniteRing& r = a.ring();
    const auto& pw = a.powers();
    for (std::size_t x = 0; x < r.size(); ++x) {
        Elem p;
        if (pw.nil_index[x] != 0) {
            p = 0;
        } else {
            std::uint32_t idx = pw.index[x], per = pw.period[x];
            std::uint32_t m = per * ((idx + per - 1) / per);
            p = pw.powers[x][m - 1];
        }
        if (r.mul(r.mul(p, p), p) != p)
            return verdict_fails("pi_regular", {{"a", static_cast<Elem>(x)}},
                                 {"expected power equation failed"});
    }
    return verdict_holds("pi_regular");
}

Verdict p_nil_singular(RingAnalysis& a) {
    const auto& s = a.singular();
    const ElemSet& nil = a.nil();
    const FiniteRing& r = a.ring();
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (s.left.test(x) && !nil.test(x))
            return verdict_fails("nil_singular", {{"a", static_cast<Elem>(x)}},
                                 {r.label(static_cast<Elem>(x)) +
                                  " lies in the left singular ideal but is not nilpotent"});
        if (s.right.test(x) && !nil.test(x))
            return verdict_fails("nil_singular", {{"a", static_cast<Elem>(x)}},
                                 {r.label(static_cast<Elem>(x)) +
                                  " lies in the right singular ideal but is not nilpotent"});
    }
    return verdict_holds("nil_singular");
}

Verdict p_left_sf(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    if (!r.unital()) return verdict_na("left_sf", kNoUnity);
    const auto& ms = a.maximal_left_ideals();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& m = ms[i];
        for (Elem x : m) {
            bool found = false;
            for (Elem t : m)
                if (r.mul(x, t) == x) {
                    found = true;
                    break;
                }
            if (!found) {
                std::ostringstream os;
                os << r.label(x) << " is not in aM for maximal left ideal #" << i << " (size "
                   << m.size() << "), so R/M is not flat";
                return verdict_fails("left_sf", {{"a", x}}, {os.str()});
            }
        }
    }
    return verdict_holds("left_sf");
}

Verdict p_gw_maximal_left(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    if (!r.unital()) return verdict_na("gw_maximal_left", kNoUnity);
    const auto& ms = a.maximal_left_ideals();
    const auto& pw = a.powers().powers;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& m = ms[i];
        ElemSet mset(r.size());
        for (Elem x : m) mset.set(x);
        for (Elem x : m) {
            bool found = false;
            for (Elem p : pw[x])
                if (a.right_image(p).subset_of(mset)) {
                    found = true;
                    break;
                }
            if (!found) {
                std::ostringstream os;
                os << "no power of " << r.label(x) << " has a^n R inside maximal left ideal #" << i
                   << " (size " << m.size() << ")";
                return verdict_fails("gw_maximal_left", {{"a", x}}, {os.str()});
            }
        }
    }
    return verdict_holds("gw_maximal_left");
}

std::string ideal_summary(const FiniteRing& r, const std::vector<Elem>& k) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < k.size() && i < 8; ++i) {
        if (i) os << ", ";
        os << r.label(k[i]);
    }
    if (k.size() > 8) os << ", ...";
    os << "} (size " << k.size() << ")";
    return os.str();
}

// Cosets of an additive subgroup: cid[x] = coset index, reps[cid] the first
// member seen; coset 0 is the subgroup itself.
struct CosetSpace {
    std::vector<int> cid;
    std::vector<Elem> reps;
};

CosetSpace coset_space(const FiniteRing& r, const std::vector<Elem>& members) {
    CosetSpace cs;
    cs.cid.assign(r.size(), -1);
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (cs.cid[x] >= 0) continue;
        int c = static_cast<int>(cs.reps.size());
        cs.reps.push_back(static_cast<Elem>(x));
        for (Elem t : members) cs.cid[r.add(static_cast<Elem>(x), t)] = c;
    }
    return cs;
}

Verdict extension_core(RingAnalysis& a, const CosetSpace& cs, Elem u, const std::string& id);

Verdict extension_family(RingAnalysis& a, ExtMode mode, const std::string& id) {
    const FiniteRing& r = a.ring();
    if (!r.unital()) return verdict_na(id, kNoUnity);
    auto mods = simple_singular_left_modules(a);
    if (mods.empty()) {
        Verdict v = verdict_holds(id);
        v.trace = {"no simple singular left modules; the condition is vacuous"};
        return v;
    }
    const ElemSet& nil = a.nil();
    const std::string inner =
        mode == ExtMode::Wnil ? "wnil_module_extension" : "gp_module_extension";
    bool any_u = false;
    for (const auto& k : mods) {
        CosetSpace cs = coset_space(r, k);
        for (std::size_t u = 1; u < r.size(); ++u) {
            if (mode == ExtMode::Wnil && !nil.test(u)) continue;
            any_u = true;
            Verdict t = extension_core(a, cs, static_cast<Elem>(u), inner);
            if (t.fails()) {
                Verdict out = verdict_fails(id, t.witness, {});
                out.trace.push_back("module R/K with K = " + ideal_summary(r, k));
                for (auto& line : t.trace) out.trace.push_back(line);
                return out;
            }
        }
    }
    Verdict v = verdict_holds(id);
    if (!any_u && mode == ExtMode::Wnil)
        v.trace = {"no nonzero nilpotents; the condition is vacuous"};
    return v;
}

Verdict p_gp_v_prime_left(RingAnalysis& a) {
    return extension_family(a, ExtMode::Gp, "gp_v_prime_left");
}

Verdict p_wnil_injective(RingAnalysis& a) {
    return extension_family(a, ExtMode::Wnil, "wnil_injective_simple_singulars");
}

// l(Ra) = {w : wR inside l(a)}; r(aR) = {w : Rw inside r(a)}.
ElemSet left_ann_of_principal(RingAnalysis& a, Elem x) {
    const std::size_t n = a.ring().size();
    const ElemSet& la = a.left_ann(x);
    ElemSet out(n);
    for (std::size_t w = 0; w < n; ++w)
        if (a.right_image(static_cast<Elem>(w)).subset_of(la)) out.set(w);
    return out;
}

ElemSet right_ann_of_principal(RingAnalysis& a, Elem x) {
    const std::size_t n = a.ring().size();
    const ElemSet& ra = a.right_ann(x);
    ElemSet out(n);
    for (std::size_t w = 0; w < n; ++w)
        if (a.left_image(static_cast<Elem>(w)).subset_of(ra)) out.set(w);
    return out;
}

// Generator targets: Re / eR over idempotents e, or Rb / bR over every b for
// the semi variants.
std::unordered_set<ElemSet, ElemSetHash> principal_targets(RingAnalysis& a, Side side,
                                                           bool idempotent_only) {
    std::unordered_set<ElemSet, ElemSetHash> out;
    const std::size_t n = a.ring().size();
    const ElemSet& idem = a.idempotents();
    for (std::size_t b = 0; b < n; ++b) {
        if (idempotent_only && !idem.test(b)) continue;
        out.insert(side == Side::Left ? a.left_image(static_cast<Elem>(b))
                                      : a.right_image(static_cast<Elem>(b)));
    }
    return out;
}

Verdict pp_like(RingAnalysis& a, const std::string& id, Side side, bool principal_arg,
                bool idempotent_only) {
    const FiniteRing& r = a.ring();
    if (!r.unital()) return verdict_na(id, kNoUnity);
    auto targets = principal_targets(a, side, idempotent_only);
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
        ElemSet ann;
        if (side == Side::Left)
            ann = principal_arg ? left_ann_of_principal(a, static_cast<Elem>(x))
                                : a.left_ann(static_cast<Elem>(x));
        else
            ann = principal_arg ? right_ann_of_principal(a, static_cast<Elem>(x))
                                : a.right_ann(static_cast<Elem>(x));
        if (!targets.count(ann)) {
            std::ostringstream os;
            os << (side == Side::Left ? "l(" : "r(") << (principal_arg ? "the principal ideal of " : "")
               << r.label(static_cast<Elem>(x)) << ") has size " << ann.count()
               << " and is not generated by "
               << (idempotent_only ? "an idempotent" : "any single element");
            return verdict_fails(id, {{"a", static_cast<Elem>(x)}}, {os.str()});
        }
    }
    return verdict_holds(id);
}

struct ClosureMember {
    ElemSet set;
    std::vector<Elem> gens;  // X with ann(X) = set, for the witness
};

constexpr std::size_t kClosureCap = std::size_t{1} << 15;

// Intersection closure of the base annihilators, deterministic order.
std::vector<ClosureMember> intersection_closure(std::vector<ClosureMember> base) {
    std::vector<ClosureMember> work;
    std::unordered_set<ElemSet, ElemSetHash> seen;
    for (auto& b : base)
        if (seen.insert(b.set).second) work.push_back(std::move(b));
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ElemSet inter = work[i].set;
            inter &= work[j].set;
            if (seen.insert(inter).second) {
                std::vector<Elem> g = work[i].gens;
                g.insert(g.end(), work[j].gens.begin(), work[j].gens.end());
                std::sort(g.begin(), g.end());
                g.erase(std::unique(g.begin(), g.end()), g.end());
                work.push_back({std::move(inter), std::move(g)});
                if (work.size() > kClosureCap)
                    raise("SizeCapExceeded",
                          "annihilator intersection closure exceeded " +
                              std::to_string(kClosureCap) + " members");
            }
        }
    return work;
}

Verdict baer_like(RingAnalysis& a, const std::string& id, bool principal_arg,
                  bool idempotent_only) {
    const FiniteRing& r = a.ring();
    if (!r.unital()) return verdict_na(id, kNoUnity);
    const std::size_t n = r.size();
    for (Side side : {Side::Left, Side::Right}) {
        auto targets = principal_targets(a, side, idempotent_only);
        std::vector<ClosureMember> base;
        base.reserve(n);
        for (std::size_t x = 0; x < n; ++x) {
            ElemSet ann;
            if (side == Side::Left)
                ann = principal_arg ? left_ann_of_principal(a, static_cast<Elem>(x))
                                    : a.left_ann(static_cast<Elem>(x));
            else
                ann = principal_arg ? right_ann_of_principal(a, static_cast<Elem>(x))
                                    : a.right_ann(static_cast<Elem>(x));
            base.push_back({std::move(ann), {static_cast<Elem>(x)}});
        }
        auto family = intersection_closure(std::move(base));
        for (const auto& memb : family) {
            if (targets.count(memb.set)) continue;
            std::vector<WitnessPart> w;
            for (std::size_t i = 0; i < memb.gens.size(); ++i)
                w.push_back({"x[" + std::to_string(i) + "]", memb.gens[i]});
            std::ostringstream os;
            os << (side == Side::Left ? "left" : "right") << " annihilator of "
               << (principal_arg ? "the one-sided ideal generated by the witness elements"
                                 : "the witness set")
               << " has size " << memb.set.count() << " and is not generated by "
               << (idempotent_only ? "an idempotent" : "any single element");
            return verdict_fails(id, std::move(w), {os.str()});
        }
    }
    return verdict_holds(id);
}

Verdict p_armendariz_default(RingAnalysis& a) { return armendariz_bounded(a, 3); }

using Decider = Verdict (*)(RingAnalysis&);

const std::vector<std::pair<std::string, Decider>>& registry() {
    static const std::vector<std::pair<std::string, Decider>> table = {
        {"reduced", p_reduced},
        {"reversible", p_reversible},
        {"semicommutative", p_semicommutative},
        {"h_semicommutative", p_h_semicommutative},
        {"central_semicommutative", p_central_semicommutative},
        {"weakly_semicommutative", p_weakly_semicommutative},
        {"nil_semicommutative_1", p_nil_semicommutative_1},
        {"nil_semicommutative_2", p_nil_semicommutative_2},
        {"j_semicommutative", p_j_semicommutative},
        {"ifp_hwang", p_ifp_hwang},
        {"abelian", p_abelian},
        {"directly_finite", p_directly_finite},
        {"two_primal", p_two_primal},
        {"ni_ring", p_ni_ring},
        {"vn_regular", p_vn_regular},
        {"strongly_regular", p_strongly_regular},
        {"pi_regular", p_pi_regular},
        {"nil_singular", p_nil_singular},
        {"left_sf", p_left_sf},
        {"gw_maximal_left", p_gw_maximal_left},
        {"gp_v_prime_left", p_gp_v_prime_left},
        {"wnil_injective_simple_singulars", p_wnil_injective},
        {"left_pp",
         [](RingAnalysis& a) { return pp_like(a, "left_pp", Side::Left, false, true); }},
        {"right_pp",
         [](RingAnalysis& a) { return pp_like(a, "right_pp", Side::Right, false, true); }},
        {"left_pq_baer",
         [](RingAnalysis& a) { return pp_like(a, "left_pq_baer", Side::Left, true, true); }},
        {"right_pq_baer",
         [](RingAnalysis& a) { return pp_like(a, "right_pq_baer", Side::Right, true, true); }},
        {"baer", [](RingAnalysis& a) { return baer_like(a, "baer", false, true); }},
        {"quasi_baer", [](RingAnalysis& a) { return baer_like(a, "quasi_baer", true, true); }},
        {"semi_left_pp",
         [](RingAnalysis& a) { return pp_like(a, "semi_left_pp", Side::Left, false, false); }},
        {"semi_right_pp",
         [](RingAnalysis& a) { return pp_like(a, "semi_right_pp", Side::Right, false, false); }},
        {"semi_left_pq",
         [](RingAnalysis& a) { return pp_like(a, "semi_left_pq", Side::Left, true, false); }},
        {"semi_right_pq",
         [](RingAnalysis& a) { return pp_like(a, "semi_right_pq", Side::Right, true, false); }},
        {"semi_baer", [](RingAnalysis& a) { return baer_like(a, "semi_baer", false, false); }},
        {"semi_quasi_baer",
         [](RingAnalysis& a) { return baer_like(a, "semi_quasi_baer", true, false); }},
        {"armendariz_bounded", p_armendariz_default},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& property_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return ids;
}

bool is_property_id(const std::string& id) {
    for (const auto& [name, fn] : registry())
        if (name == id) return true;
    return false;
}

Verdict check_property(RingAnalysis& a, const std::string& id) {
    for (const auto& [name, fn] : registry())
        if (name == id) return fn(a);
    raise("UnknownProperty", "no property is named '" + id + "'");
}

Verdict check_property(const FiniteRing& r, const std::string& id) {
    RingAnalysis a(r);
    return check_property(a, id);
}

Verdict armendariz_bounded(RingAnalysis& a, int degree_bound, const Limits& limits) {
    const std::string id = "armendariz_bounded";
    const FiniteRing& r = a.ring();
    ArmendarizReport rep = armendariz_check(r, degree_bound, limits);
    if (rep.holds) return verdict_holds(id);
    auto poly_str = [&](const Poly& p) {
        std::ostringstream os;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) os << " + ";
            os << "(" << r.label(p[i]) << ")x^" << i;
        }
        return os.str();
    };
    std::ostringstream os;
    os << "f*g = 0 for f = " << poly_str(rep.f) << ", g = " << poly_str(rep.g) << ", but a["
       << rep.bad_i << "]*b[" << rep.bad_j << "] = "
       << r.label(r.mul(rep.f[rep.bad_i], rep.g[rep.bad_j]));
    return verdict_fails(id,
                         {{"a[" + std::to_string(rep.bad_i) + "]", rep.f[rep.bad_i]},
                          {"b[" + std::to_string(rep.bad_j) + "]", rep.g[rep.bad_j]}},
                         {os.str()});
}

std::vector<std::vector<Elem>> simple_singular_left_modules(RingAnalysis& a) {
    const FiniteRing& r = a.ring();
    if (!r.unital())
        raise("PreconditionViolated", "simple singular modules need a unital ring");
    std::vector<std::vector<Elem>> out;
    for (const auto& m : a.maximal_left_ideals()) {
        ElemSet mset(r.size());
        for (Elem x : m) mset.set(x);
        if (a.essential_left(mset)) out.push_back(m);
    }
    return out;
}

namespace {

Verdict extension_core(RingAnalysis& a, const CosetSpace& cs, Elem u, const std::string& id) {
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    const auto& pw = a.powers().powers[u];
    bool have_bad = false;
    Elem bad_m = 0;
    std::uint32_t bad_n = 0;
    for (std::size_t step = 0; step < pw.size(); ++step) {
        Elem p = pw[step];
        if (p == 0) break;
        const ElemSet& lp = a.left_ann(p);
        std::vector<char> in_img(cs.reps.size(), 0);
        for (std::size_t x = 0; x < n; ++x) in_img[cs.cid[r.mul(p, static_cast<Elem>(x))]] = 1;
        bool all_ok = true;
        Elem first_bad = 0;
        for (std::size_t c = 0; c < cs.reps.size(); ++c) {
            Elem m = cs.reps[c];
            bool killed = true;
            for (std::size_t z = 0; z < n && killed; ++z)
                if (lp.test(z)) killed = cs.cid[r.mul(static_cast<Elem>(z), m)] == 0;
            if (!killed) continue;
            if (!in_img[c]) {
                all_ok = false;
                first_bad = m;
                break;
            }
        }
        if (all_ok) {
            Verdict v = verdict_holds(id);
            std::ostringstream os;
            os << "n = " << step + 1 << ": every coset killed by l(u^n) lies in u^n(R/K), u = "
               << r.label(u);
            v.trace = {os.str()};
            return v;
        }
        if (!have_bad) {
            have_bad = true;
            bad_m = first_bad;
            bad_n = static_cast<std::uint32_t>(step + 1);
        }
    }
    std::ostringstream os;
    os << "for every n with u^n != 0 some map fails to extend; at n = " << bad_n
       << " the coset of " << r.label(bad_m)
       << " is killed by l(u^n) but lies outside u^n(R/K), u = " << r.label(u);
    return verdict_fails(id, {{"u", u}, {"m", bad_m}}, {os.str()});
}

}  // namespace

Verdict module_extension_test(RingAnalysis& a, const std::vector<Elem>& k, Elem u,
                              ExtMode mode) {
    const FiniteRing& r = a.ring();
    const std::string id =
        mode == ExtMode::Wnil ? "wnil_module_extension" : "gp_module_extension";
    Subset ks = make_subset(r, k);
    if (!ks.flags.additive_subgroup || !ks.flags.left_ideal)
        raise("PreconditionViolated", "K must be a left ideal");
    if (u == 0) raise("PreconditionViolated", "u must be nonzero");
    if (mode == ExtMode::Wnil && !a.powers().nilpotent(u))
        raise("PreconditionViolated", "wnil mode needs a nilpotent u");
    CosetSpace cs = coset_space(r, ks.members);
    return extension_core(a, cs, u, id);
}

}  // namespace finring
