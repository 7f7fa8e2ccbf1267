#include "finring/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "finring/constructions.hpp"
#include "finring/intmat.hpp"
#include "finring/properties.hpp"
#include "finring/specparse.hpp"

namespace finring {

Verdict SuiteContext::property(const std::string& id) {
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    Verdict v = [&] {
        try {
            return check_property(analysis, id);
        } catch (const RingError& e) {
            if (e.kind() == "SizeCapExceeded")
                return verdict_na(id, "skipped: " + e.detail());
            throw;
        }
    }();
    cache.emplace(id, v);
    return v;
}

namespace {

using Eval = std::function<Verdict(SuiteContext&)>;

struct Named {
    std::string name;
    Eval eval;
};

Named prop(const std::string& id) {
    return {id, [id](SuiteContext& c) { return c.property(id); }};
}

Named pred_semiprime() {
    return {"semiprime", [](SuiteContext& c) {
                const ElemSet& p = c.analysis.prime();
                if (p.count() == 1) return verdict_holds("semiprime");
                std::vector<Elem> m = p.to_sorted();
                return verdict_fails("semiprime", {{"x", m[1]}},
                                     {"the prime radical contains a nonzero element"});
            }};
}

Named pred_nil_ring() {
    return {"nil_ring", [](SuiteContext& c) {
                if (c.analysis.is_nil_ring()) return verdict_holds("nil_ring");
                const ElemSet& nil = c.analysis.nil();
                for (std::size_t x = 0; x < nil.universe(); ++x)
                    if (!nil.test(x))
                        return verdict_fails("nil_ring", {{"x", static_cast<Elem>(x)}},
                                             {"a non-nilpotent element exists"});
                return verdict_holds("nil_ring");
            }};
}

// property (P): x^n = x for some n >= 2, asked of every element.
Named pred_power_returning() {
    return {"every element power-returning", [](SuiteContext& c) {
                const PowerProfile& pw = c.analysis.powers();
                for (std::size_t x = 0; x < c.analysis.ring().size(); ++x)
                    if (!pw.satisfies_p[x])
                        return verdict_fails("power_returning", {{"x", static_cast<Elem>(x)}},
                                             {"no n >= 2 has x^n = x"});
                return verdict_holds("power_returning");
            }};
}

Verdict vacuous(const std::string& id, const std::string& why) {
    Verdict v = verdict_holds(id);
    v.trace = {"vacuous: " + why};
    return v;
}

Verdict implication(SuiteContext& c, const std::string& id, const std::vector<Named>& ante,
                    const Named& cons) {
    for (const auto& a : ante) {
        Verdict v = a.eval(c);
        if (v.status == Status::NotApplicable)
            return verdict_na(id, "antecedent " + a.name + " not applicable: " + v.reason);
        if (v.fails()) return vacuous(id, "antecedent " + a.name + " fails");
    }
    Verdict v = cons.eval(c);
    if (v.status == Status::NotApplicable)
        return verdict_na(id, "consequent " + cons.name + " not applicable: " + v.reason);
    if (v.holds()) {
        Verdict out = verdict_holds(id);
        out.trace = {"material: antecedents hold and " + cons.name + " holds"};
        return out;
    }
    Verdict out = verdict_fails(id, v.witness, {});
    out.trace.push_back("antecedents hold but " + cons.name + " fails");
    for (const auto& t : v.trace) out.trace.push_back(t);
    return out;
}

Verdict biconditional(SuiteContext& c, const std::string& id, const std::vector<Named>& ante,
                      const Named& left, const Named& right) {
    for (const auto& a : ante) {
        Verdict v = a.eval(c);
        if (v.status == Status::NotApplicable)
            return verdict_na(id, "antecedent " + a.name + " not applicable: " + v.reason);
        if (v.fails()) return vacuous(id, "antecedent " + a.name + " fails");
    }
    Verdict l = left.eval(c);
    if (l.status == Status::NotApplicable)
        return verdict_na(id, left.name + " not applicable: " + l.reason);
    Verdict r = right.eval(c);
    if (r.status == Status::NotApplicable)
        return verdict_na(id, right.name + " not applicable: " + r.reason);
    if (l.holds() == r.holds()) {
        Verdict out = verdict_holds(id);
        out.trace = {"both sides " + std::string(l.holds() ? "hold" : "fail")};
        return out;
    }
    const Verdict& bad = l.fails() ? l : r;
    Verdict out = verdict_fails(id, bad.witness, {});
    out.trace.push_back(left.name + " " + status_name(l.status) + " but " + right.name + " " +
                        status_name(r.status));
    for (const auto& t : bad.trace) out.trace.push_back(t);
    return out;
}

Verdict equivalence(SuiteContext& c, const std::string& id, const std::vector<Named>& ante,
                    const std::vector<Named>& items) {
    for (const auto& a : ante) {
        Verdict v = a.eval(c);
        if (v.status == Status::NotApplicable)
            return verdict_na(id, "antecedent " + a.name + " not applicable: " + v.reason);
        if (v.fails()) return vacuous(id, "antecedent " + a.name + " fails");
    }
    std::vector<Verdict> vs;
    for (const auto& i : items) {
        Verdict v = i.eval(c);
        if (v.status == Status::NotApplicable)
            return verdict_na(id, i.name + " not applicable: " + v.reason);
        vs.push_back(v);
    }
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (vs[i].holds() == vs[0].holds()) continue;
        const Verdict& bad = vs[i].fails() ? vs[i] : vs[0];
        Verdict out = verdict_fails(id, bad.witness, {});
        out.trace.push_back(items[0].name + " " + status_name(vs[0].status) + " but " +
                            items[i].name + " " + status_name(vs[i].status));
        for (const auto& t : bad.trace) out.trace.push_back(t);
        return out;
    }
    Verdict out = verdict_holds(id);
    out.trace = {"all equivalent: every listed property " +
                 std::string(vs[0].holds() ? "holds" : "fails")};
    return out;
}

SuiteCheck imp(std::string id, std::string statement, std::vector<Named> ante, Named cons) {
    SuiteCheck s;
    s.id = id;
    s.statement = std::move(statement);
    s.run = [id, ante = std::move(ante), cons = std::move(cons)](SuiteContext& c) {
        return implication(c, id, ante, cons);
    };
    return s;
}

// Nilpotency of a set-ideal by product-set power iteration.  Each step maps
// P to the additive span of P * I, which only shrinks, so the loop ends at
// {0} or at a nonzero fixpoint.
bool ideal_nilpotent(const FiniteRing& r, const ElemSet& ideal, std::size_t* index) {
    ElemSet power = ideal;
    std::vector<Elem> il = ideal.to_sorted();
    for (std::size_t step = 1; step <= r.size() + 1; ++step) {
        if (power.count() == 1 && power.test(0)) {
            if (index) *index = step;
            return true;
        }
        ElemSet next(r.size());
        next.set(0);
        std::vector<Elem> list{0};
        auto absorb = [&](Elem g) {
            if (next.test(g)) return;
            std::size_t start = list.size();
            next.set(g);
            list.push_back(g);
            for (std::size_t i = start; i < list.size(); ++i)
                for (std::size_t j = 0; j < list.size(); ++j) {
                    Elem s = r.add(list[i], list[j]);
                    if (!next.test(s)) {
                        next.set(s);
                        list.push_back(s);
                    }
                }
        };
        power.for_each([&](Elem a) {
            for (Elem b : il) absorb(r.mul(a, b));
        });
        if (next == power) return false;
        power = next;
    }
    return false;
}

Verdict quotient_by_nil_check(SuiteContext& c, const std::string& id,
                              const std::vector<std::string>& quotient_props) {
    Verdict h = c.property("h_semicommutative");
    if (!h.holds()) return vacuous(id, "antecedent h_semicommutative fails");
    RingAnalysis& a = c.analysis;
    if (!a.nil_is_ideal()) return verdict_na(id, "Nil(R) is not an ideal");
    Subset nil = subset_from_set(a.ring(), a.nil());
    QuotientResult q = quotient_ring(a.ring(), nil);
    RingAnalysis qa(q.ring);
    for (const auto& p : quotient_props) {
        Verdict v = [&] {
            try {
                return check_property(qa, p);
            } catch (const RingError& e) {
                if (e.kind() == "SizeCapExceeded")
                    return verdict_na(p, "skipped: " + e.detail());
                throw;
            }
        }();
        if (v.status == Status::NotApplicable)
            return verdict_na(id, p + " on R/Nil not applicable: " + v.reason);
        if (v.fails()) return vacuous(id, p + " fails on R/Nil");
    }
    Verdict ns = c.property("nil_singular");
    if (ns.holds()) {
        Verdict out = verdict_holds(id);
        out.trace = {"material: the R/Nil hypotheses hold and R is nil singular"};
        return out;
    }
    Verdict out = verdict_fails(id, ns.witness, {});
    out.trace.push_back("R/Nil satisfies the hypotheses but R is not nil singular");
    for (const auto& t : ns.trace) out.trace.push_back(t);
    return out;
}

Verdict corner_biconditional(SuiteContext& c) {
    const std::string id = "h_corner_biconditional";
    const FiniteRing& r = c.analysis.ring();
    if (!r.unital()) return verdict_na(id, "ring has no unity");
    if (!c.property("abelian").holds()) return vacuous(id, "ring is not abelian");
    bool hr = c.property("h_semicommutative").holds();
    Elem one = *r.one();
    std::vector<Elem> idem = c.analysis.idempotents().to_sorted();
    for (Elem e : idem) {
        FiniteRing ce = corner_ring(r, e);
        FiniteRing cf = corner_ring(r, r.sub(one, e));
        bool he = check_property(ce, "h_semicommutative").holds();
        bool hf = check_property(cf, "h_semicommutative").holds();
        if ((he && hf) != hr) {
            std::ostringstream os;
            os << "corner pair at e = " << r.label(e) << ": eRe "
               << (he ? "h-semicommutative" : "not h-semicommutative") << ", (1-e)R(1-e) "
               << (hf ? "h-semicommutative" : "not h-semicommutative") << ", whole ring "
               << (hr ? "h-semicommutative" : "not h-semicommutative");
            return verdict_fails(id, {{"e", e}}, {os.str()});
        }
    }
    Verdict out = verdict_holds(id);
    std::ostringstream os;
    os << "checked " << idem.size() << " corner pairs (e, 1-e)";
    out.trace = {os.str()};
    return out;
}

Verdict reduced_ideal_lifting(SuiteContext& c) {
    const std::string id = "reduced_ideal_lifting";
    const FiniteRing& r = c.analysis.ring();
    if (r.size() > 16)
        return verdict_na(id, "ideal lattice enumeration is bounded to size <= 16");
    std::vector<ElemSet> lefts = all_one_sided_ideals_bruteforce(r, Side::Left);
    std::vector<ElemSet> rights = all_one_sided_ideals_bruteforce(r, Side::Right);
    const PowerProfile& pw = c.analysis.powers();
    std::size_t tested = 0;
    for (const ElemSet& i : lefts) {
        bool two_sided = false;
        for (const ElemSet& j : rights)
            if (i == j) {
                two_sided = true;
                break;
            }
        if (!two_sided) continue;
        bool reduced_ideal = true;
        i.for_each([&](Elem x) {
            if (x != 0 && pw.nilpotent(x)) reduced_ideal = false;
        });
        if (!reduced_ideal) continue;
        Subset is = subset_from_set(r, i);
        QuotientResult q = quotient_ring(r, is);
        if (!check_property(q.ring, "h_semicommutative").holds()) continue;
        ++tested;
        Verdict h = c.property("h_semicommutative");
        if (!h.holds()) {
            Verdict out = verdict_fails(id, h.witness, {});
            std::ostringstream os;
            os << "a reduced two-sided ideal of size " << i.count()
               << " has an h-semicommutative quotient, but the ring itself fails";
            out.trace.push_back(os.str());
            for (const auto& t : h.trace) out.trace.push_back(t);
            return out;
        }
    }
    Verdict out = verdict_holds(id);
    std::ostringstream os;
    os << "checked " << tested << " reduced ideals with h-semicommutative quotients";
    out.trace = {os.str()};
    return out;
}

Verdict relabel(const Verdict& v, const std::string& id) {
    Verdict out = v;
    out.property = id;
    return out;
}

std::vector<SuiteCheck> build_checks() {
    std::vector<SuiteCheck> cs;
    auto add = [&](SuiteCheck s) { cs.push_back(std::move(s)); };

    add(imp("reduced_implies_semicommutative", "every reduced ring is semicommutative",
            {prop("reduced")}, prop("semicommutative")));
    add(imp("semicommutative_implies_h", "every semicommutative ring is h-semicommutative",
            {prop("semicommutative")}, prop("h_semicommutative")));
    add(imp("central_implies_h", "every central-semicommutative ring is h-semicommutative",
            {prop("central_semicommutative")}, prop("h_semicommutative")));
    add(imp("h_implies_abelian", "every h-semicommutative ring is abelian",
            {prop("h_semicommutative")}, prop("abelian")));
    add(imp("h_implies_two_primal", "every h-semicommutative ring is 2-primal",
            {prop("h_semicommutative")}, prop("two_primal")));
    add(imp("h_implies_j_semicommutative",
            "every h-semicommutative ring is J-semicommutative", {prop("h_semicommutative")},
            prop("j_semicommutative")));
    add(imp("h_implies_nil_semicommutative_2",
            "every h-semicommutative ring is nil-semicommutative (II)",
            {prop("h_semicommutative")}, prop("nil_semicommutative_2")));
    add(imp("h_implies_directly_finite", "every h-semicommutative ring is directly finite",
            {prop("h_semicommutative")}, prop("directly_finite")));
    add(imp("nil_ring_implies_h", "every nil ring is h-semicommutative", {pred_nil_ring()},
            prop("h_semicommutative")));
    add(imp("two_primal_implies_ni", "every 2-primal ring is an NI ring",
            {prop("two_primal")}, prop("ni_ring")));
    add(imp("h_semiprime_implies_central",
            "a semiprime h-semicommutative ring is central-semicommutative",
            {prop("h_semicommutative"), pred_semiprime()}, prop("central_semicommutative")));
    add(imp("h_semiprime_implies_reduced", "a semiprime h-semicommutative ring is reduced",
            {prop("h_semicommutative"), pred_semiprime()}, prop("reduced")));
    add(imp("h_left_pp_implies_reduced", "an h-semicommutative left p.p ring is reduced",
            {prop("h_semicommutative"), prop("left_pp")}, prop("reduced")));
    add(imp("h_right_pp_implies_reduced", "an h-semicommutative right p.p ring is reduced",
            {prop("h_semicommutative"), prop("right_pp")}, prop("reduced")));
    add(imp("h_left_pq_implies_reduced",
            "an h-semicommutative left p.q-Baer ring is reduced",
            {prop("h_semicommutative"), prop("left_pq_baer")}, prop("reduced")));
    add(imp("h_right_pq_implies_reduced",
            "an h-semicommutative right p.q-Baer ring is reduced",
            {prop("h_semicommutative"), prop("right_pq_baer")}, prop("reduced")));
    add(imp("h_semi_left_pp_power_returning_implies_reduced",
            "an h-semicommutative semi-left-p.p ring whose elements all satisfy x^n = x "
            "for some n >= 2 is reduced",
            {prop("h_semicommutative"), pred_power_returning(), prop("semi_left_pp")},
            prop("reduced")));
    add(imp("h_semi_right_pp_power_returning_implies_reduced",
            "an h-semicommutative semi-right-p.p ring whose elements all satisfy x^n = x "
            "for some n >= 2 is reduced",
            {prop("h_semicommutative"), pred_power_returning(), prop("semi_right_pp")},
            prop("reduced")));
    add(imp("h_semi_left_pq_power_returning_implies_reduced",
            "an h-semicommutative semi-left-p.q ring whose elements all satisfy x^n = x "
            "for some n >= 2 is reduced",
            {prop("h_semicommutative"), pred_power_returning(), prop("semi_left_pq")},
            prop("reduced")));
    add(imp("h_semi_right_pq_power_returning_implies_reduced",
            "an h-semicommutative semi-right-p.q ring whose elements all satisfy x^n = x "
            "for some n >= 2 is reduced",
            {prop("h_semicommutative"), pred_power_returning(), prop("semi_right_pq")},
            prop("reduced")));
    add(imp("h_left_sf_implies_strongly_regular",
            "an h-semicommutative left SF ring is strongly regular",
            {prop("h_semicommutative"), prop("left_sf")}, prop("strongly_regular")));
    add(imp("h_wnil_injective_implies_reduced",
            "an h-semicommutative ring whose simple singular left modules are all "
            "wnil-injective is reduced",
            {prop("h_semicommutative"), prop("wnil_injective_simple_singulars")},
            prop("reduced")));
    {
        SuiteCheck s;
        s.id = "h_strongly_regular_iff_gw_and_gpv";
        s.statement =
            "for an h-semicommutative ring: strongly regular iff every maximal left ideal "
            "is a GW-ideal and the ring is left GP-V'";
        s.run = [id = s.id](SuiteContext& c) {
            Named both{"gw_maximal_left and gp_v_prime_left", [](SuiteContext& c2) {
                           Verdict g = c2.property("gw_maximal_left");
                           if (!g.holds()) return g;
                           return c2.property("gp_v_prime_left");
                       }};
            return biconditional(c, id, {prop("h_semicommutative")},
                                 prop("strongly_regular"), both);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "h_quotient_nil_left_sf_implies_nil_singular";
        s.statement =
            "for an h-semicommutative ring: if R/Nil(R) is a left SF ring then R is nil "
            "singular";
        s.run = [id = s.id](SuiteContext& c) {
            return quotient_by_nil_check(c, id, {"left_sf"});
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "h_quotient_nil_gpv_gw_implies_nil_singular";
        s.statement =
            "for an h-semicommutative ring: if R/Nil(R) is left GP-V' with every maximal "
            "left ideal a GW-ideal then R is nil singular";
        s.run = [id = s.id](SuiteContext& c) {
            return quotient_by_nil_check(c, id, {"gp_v_prime_left", "gw_maximal_left"});
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "h_corner_biconditional";
        s.statement =
            "an abelian unital ring is h-semicommutative iff for each idempotent e both "
            "corner rings eRe and (1-e)R(1-e) are";
        s.run = [](SuiteContext& c) { return corner_biconditional(c); };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "reduced_ideal_lifting";
        s.statement =
            "if some reduced two-sided ideal has an h-semicommutative quotient then the "
            "ring is h-semicommutative (exhaustive for size <= 16)";
        s.run = [](SuiteContext& c) { return reduced_ideal_lifting(c); };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "h_pp_family_equivalence";
        s.statement =
            "for an h-semicommutative ring: left p.p, right p.p, left p.q-Baer and right "
            "p.q-Baer are equivalent";
        s.run = [id = s.id](SuiteContext& c) {
            return equivalence(c, id, {prop("h_semicommutative")},
                               {prop("left_pp"), prop("right_pp"), prop("left_pq_baer"),
                                prop("right_pq_baer")});
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "h_semi_pp_family_equivalence";
        s.statement =
            "for an h-semicommutative ring: semi left p.p, semi right p.p, semi left p.q "
            "and semi right p.q are equivalent";
        s.run = [id = s.id](SuiteContext& c) {
            return equivalence(c, id, {prop("h_semicommutative")},
                               {prop("semi_left_pp"), prop("semi_right_pp"),
                                prop("semi_left_pq"), prop("semi_right_pq")});
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "h_semi_baer_iff_semi_quasi_baer";
        s.statement = "for an h-semicommutative ring: semi-Baer iff semi quasi-Baer";
        s.run = [id = s.id](SuiteContext& c) {
            return biconditional(c, id, {prop("h_semicommutative")}, prop("semi_baer"),
                                 prop("semi_quasi_baer"));
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "semi_pp_power_returning_semicommutative_iff_armendariz";
        s.statement =
            "for a semi-p.p ring whose elements all satisfy x^n = x for some n >= 2: "
            "semicommutative iff Armendariz (bounded degree)";
        s.run = [id = s.id](SuiteContext& c) {
            return biconditional(
                c, id,
                {prop("semi_left_pp"), prop("semi_right_pp"), pred_power_returning()},
                prop("semicommutative"), prop("armendariz_bounded"));
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "center_subset_hypercenter";
        s.statement = "the center is contained in the hypercenter";
        s.run = [id = s.id](SuiteContext& c) {
            const ElemSet& z = c.analysis.center();
            const ElemSet& t = c.analysis.hypercenter();
            if (z.subset_of(t)) return verdict_holds(id);
            for (std::size_t x = 0; x < z.universe(); ++x)
                if (z.test(x) && !t.test(x))
                    return verdict_fails(id, {{"x", static_cast<Elem>(x)}},
                                         {"central element outside the hypercenter"});
            return verdict_holds(id);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "hypercenter_subring_closure";
        s.statement =
            "the hypercenter is closed under addition, negation and multiplication";
        s.run = [id = s.id](SuiteContext& c) {
            const FiniteRing& r = c.analysis.ring();
            const ElemSet& t = c.analysis.hypercenter();
            std::vector<Elem> m = t.to_sorted();
            for (Elem x : m)
                if (!t.test(r.neg(x)))
                    return verdict_fails(id, {{"x", x}}, {"negation leaves the hypercenter"});
            for (Elem x : m)
                for (Elem y : m) {
                    if (!t.test(r.add(x, y)))
                        return verdict_fails(id, {{"x", x}, {"y", y}},
                                             {"sum leaves the hypercenter"});
                    if (!t.test(r.mul(x, y)))
                        return verdict_fails(id, {{"x", x}, {"y", y}},
                                             {"product leaves the hypercenter"});
                }
            return verdict_holds(id);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "nil_ring_hypercenter_full";
        s.statement = "in a nil ring the hypercenter is the whole ring";
        s.run = [id = s.id](SuiteContext& c) {
            if (!c.analysis.is_nil_ring()) return vacuous(id, "the ring is not nil");
            if (c.analysis.hypercenter_full()) return verdict_holds(id);
            const ElemSet& t = c.analysis.hypercenter();
            for (std::size_t x = 0; x < t.universe(); ++x)
                if (!t.test(x))
                    return verdict_fails(id, {{"x", static_cast<Elem>(x)}},
                                         {"element outside the hypercenter of a nil ring"});
            return verdict_holds(id);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "semiprime_hypercenter_equals_center";
        s.statement = "in a semiprime ring the hypercenter equals the center";
        s.run = [id = s.id](SuiteContext& c) {
            if (c.analysis.prime().count() != 1)
                return vacuous(id, "the ring is not semiprime");
            const ElemSet& z = c.analysis.center();
            const ElemSet& t = c.analysis.hypercenter();
            if (z == t) return verdict_holds(id);
            for (std::size_t x = 0; x < t.universe(); ++x)
                if (t.test(x) != z.test(x))
                    return verdict_fails(id, {{"x", static_cast<Elem>(x)}},
                                         {"hypercenter and center disagree here"});
            return verdict_holds(id);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "prime_radical_equals_jacobson";
        s.statement = "in a finite unital ring the prime radical equals the Jacobson radical";
        s.run = [id = s.id](SuiteContext& c) {
            if (!c.analysis.ring().unital()) return verdict_na(id, "ring has no unity");
            const ElemSet& p = c.analysis.prime();
            const ElemSet& j = c.analysis.jacobson();
            if (p == j) return verdict_holds(id);
            for (std::size_t x = 0; x < p.universe(); ++x)
                if (p.test(x) != j.test(x))
                    return verdict_fails(id, {{"x", static_cast<Elem>(x)}},
                                         {"prime radical and Jacobson radical disagree here"});
            return verdict_holds(id);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "jacobson_nilpotent";
        s.statement = "the Jacobson radical is a nilpotent ideal";
        s.run = [id = s.id](SuiteContext& c) {
            std::size_t index = 0;
            if (ideal_nilpotent(c.analysis.ring(), c.analysis.jacobson(), &index)) {
                Verdict v = verdict_holds(id);
                std::ostringstream os;
                os << "J^" << index << " = 0";
                v.trace = {os.str()};
                return v;
            }
            return verdict_fails(id, {},
                                 {"power iteration of the Jacobson radical never reaches 0"});
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "two_primal_matches_radical_comparison";
        s.statement =
            "the 2-primal verdict agrees with directly comparing Nil(R) and the prime "
            "radical";
        s.run = [id = s.id](SuiteContext& c) {
            Verdict v = c.property("two_primal");
            bool direct = c.analysis.nil() == c.analysis.prime();
            if (v.holds() == direct) return verdict_holds(id);
            return verdict_fails(id, v.witness,
                                 {"decider and radical comparison disagree"});
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "multiplicative_orders_bounded";
        s.statement = "every element's power sequence cycles within |R| + 1 steps";
        s.run = [id = s.id](SuiteContext& c) {
            const PowerProfile& pw = c.analysis.powers();
            std::size_t n = c.analysis.ring().size();
            for (std::size_t x = 0; x < n; ++x)
                if (pw.index[x] + pw.period[x] > n + 1)
                    return verdict_fails(id, {{"x", static_cast<Elem>(x)}},
                                         {"power sequence longer than the pigeonhole bound"});
            return verdict_holds(id);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "finite_implies_directly_finite";
        s.statement = "every finite unital ring is directly finite";
        s.run = [id = s.id](SuiteContext& c) {
            return relabel(c.property("directly_finite"), id);
        };
        add(std::move(s));
    }
    {
        SuiteCheck s;
        s.id = "finite_implies_pi_regular";
        s.statement = "every finite ring is pi-regular";
        s.run = [id = s.id](SuiteContext& c) {
            return relabel(c.property("pi_regular"), id);
        };
        add(std::move(s));
    }
    return cs;
}

}  // namespace

const std::vector<SuiteCheck>& implication_suite_checks() {
    static const std::vector<SuiteCheck> checks = build_checks();
    return checks;
}

namespace {

struct ExampleLog {
    std::vector<std::string> lines;
    bool ok = true;

    void assert_that(bool cond, const std::string& label) {
        lines.push_back(label + (cond ? ": pass" : ": FAIL"));
        if (!cond) ok = false;
    }
    void note(const std::string& line) { lines.push_back(line); }
};

bool in_congruence_ring(const IntMat2& m) {
    return (m.e[0] - m.e[3]) % 2 == 0 && (m.e[2] - m.e[1]) % 2 == 0;
}

Report finish_example(const std::string& ring, const std::string& id, ExampleLog& log,
                      Verdict v, double ms) {
    Report rep;
    rep.ring = ring;
    rep.check = id;
    v.property = id;
    rep.verdict = std::move(v);
    rep.detail = std::move(log.lines);
    rep.elapsed_ms = ms;
    return rep;
}

Report example_e2_7() {
    auto t0 = std::chrono::steady_clock::now();
    ExampleLog log;
    IntMat2 p = IntMat2::of(2, 2, 0, 0);
    IntMat2 q = IntMat2::of(0, 2, 0, -2);
    IntMat2 c = IntMat2::of(3, 4, 0, 1);
    IntMat2 k = IntMat2::of(4, 0, 0, 0);
    log.assert_that(in_congruence_ring(p) && in_congruence_ring(q) &&
                        in_congruence_ring(c) && in_congruence_ring(k),
                    "P, Q, C, K lie in the congruence ring (u = x, w = v mod 2)");
    log.assert_that((p * q).is_zero(), "PQ = 0");
    IntMat2 pcq = p * c * q;
    log.assert_that(pcq == IntMat2::of(0, -8, 0, 0), "PCQ = " + pcq.str());
    log.assert_that(in_congruence_ring(pcq), "PCQ lies in the congruence ring");
    IntMat2 kn = IntMat2::ident();
    IntMat2::Int fourn = 1;
    for (int n = 1; n <= kE27PowerBound; ++n) {
        kn = kn * k;
        fourn *= 4;
        IntMat2 expect_kn{{fourn, 0, 0, 0}};
        IntMat2 left = kn * pcq;
        IntMat2 expect_left{{0, -8 * fourn, 0, 0}};
        std::ostringstream os;
        os << "n = " << n << ": K^n = " << kn.str() << ", PCQ*K^n = 0, K^n*PCQ = "
           << left.str() << " != 0";
        log.assert_that(kn == expect_kn && (pcq * kn).is_zero() && left == expect_left &&
                            !left.is_zero(),
                        os.str());
    }
    log.note("the displayed pattern -8*4^n never vanishes over the integers, so PCQ "
             "commutes with no power of K and lies outside the hypercenter");
    Verdict v = log.ok
                    ? verdict_holds("e2_7")
                    : verdict_fails("e2_7", {}, {"an exact-arithmetic assertion failed"});
    auto t1 = std::chrono::steady_clock::now();
    return finish_example("integer 2x2 congruence ring (u = x, w = v mod 2)", "e2_7", log,
                          std::move(v),
                          std::chrono::duration<double, std::milli>(t1 - t0).count());
}

// Looks up a matrix (flattened row major) among the members of a built family.
std::optional<Elem> find_matrix(const std::vector<std::vector<Elem>>& mats,
                                const std::vector<Elem>& flat) {
    for (std::size_t i = 0; i < mats.size(); ++i)
        if (mats[i] == flat) return static_cast<Elem>(i);
    return std::nullopt;
}

Report example_triangular_quotient() {
    auto t0 = std::chrono::steady_clock::now();
    ExampleLog log;
    const std::string id = "triangular_quotient";
    FiniteRing base = finite_field(2);
    BuildOutcome built = build_matrix_subring(Family::Tn, base, 3, Limits{});
    if (!built.ring) {
        log.assert_that(false, "T3(GF(2)) failed to build as a ring");
        return finish_example("Tn(GF(2),3)", id, log,
                              verdict_fails(id, {}, {"construction failed"}), 0.0);
    }
    FiniteRing& r = *built.ring;
    log.assert_that(built.closed && r.size() == 64, "T3(GF(2)) is a ring with 64 elements");

    RingAnalysis a(r);
    Verdict h = check_property(a, "h_semicommutative");
    log.assert_that(h.fails(), "h_semicommutative fails on T3(GF(2))");
    std::string lex;
    for (const auto& wp : h.witness)
        lex += (lex.empty() ? "" : ", ") + wp.role + " = " + r.label(wp.elem);
    log.note("lexicographic witness: " + lex);

    // The witness scheme A, B, C, X with AB = 0 and ACB noncommuting with every
    // power of X.  Over GF(2) the corner entry of C must be 0, not 1: the (1,3)
    // entry of ACB is 1 - c, so c = 1 would collapse the product.
    auto at = [&](std::initializer_list<int> vals) {
        std::vector<Elem> flat;
        for (int v : vals) flat.push_back(static_cast<Elem>(v));
        return find_matrix(built.matrices, flat);
    };
    auto am = at({0, 1, 1, 0, 0, 0, 0, 0, 0});
    auto bm = at({0, 0, 0, 0, 0, 1, 0, 0, 1});
    auto cm = at({1, 1, 0, 0, 1, 0, 0, 0, 0});
    auto xm = at({0, 0, 0, 0, 0, 0, 0, 0, 1});
    log.assert_that(am && bm && cm && xm, "witness matrices A, B, C, X found in T3(GF(2))");
    if (am && bm && cm && xm) {
        Elem acb = r.mul(r.mul(*am, *cm), *bm);
        log.assert_that(r.mul(*am, *bm) == 0, "AB = 0");
        log.assert_that(r.label(acb) == "E13", "ACB = " + r.label(acb));
        Elem xp = *xm;
        bool sep = true;
        for (int n = 1; n <= 3; ++n) {
            if (n > 1) xp = r.mul(xp, *xm);
            if (r.mul(xp, acb) != 0 || r.mul(acb, xp) == 0) sep = false;
        }
        log.assert_that(sep, "X^n ACB = 0 but ACB X^n != 0 for n = 1..3");
        const ElemSet& t = a.hypercenter();
        log.assert_that(!t.test(acb), "ACB lies outside the hypercenter");
    }

    // strict upper triangular members form the ideal I
    ElemSet ideal(r.size());
    for (std::size_t m = 0; m < built.matrices.size(); ++m) {
        const auto& f = built.matrices[m];
        if (f[0] == 0 && f[4] == 0 && f[8] == 0) ideal.set(static_cast<Elem>(m));
    }
    log.assert_that(ideal.count() == 8, "strict upper ideal I has 8 elements");
    std::size_t index = 0;
    log.assert_that(ideal_nilpotent(r, ideal, &index) && index == 3, "I is nil of index 3");
    log.assert_that(ideal.subset_of(a.nil()), "I is contained in Nil(R)");

    Subset is = subset_from_set(r, ideal);
    QuotientResult qt = quotient_ring(r, is);
    log.assert_that(qt.ring.size() == 8, "R/I has 8 elements");
    FiniteRing f2 = finite_field(2);
    FiniteRing cube = direct_product(f2, direct_product(f2, f2));
    log.assert_that(isomorphic(qt.ring, cube), "R/I is isomorphic to GF(2) x GF(2) x GF(2)");
    log.assert_that(check_property(qt.ring, "h_semicommutative").holds(),
                    "R/I is h_semicommutative");

    Verdict v = log.ok ? verdict_holds(id)
                       : verdict_fails(id, h.witness, {"an assertion failed"});
    if (log.ok) v.witness = h.witness;
    auto t1 = std::chrono::steady_clock::now();
    Report rep = finish_example("Tn(GF(2),3)", id, log, std::move(v),
                                std::chrono::duration<double, std::milli>(t1 - t0).count());
    rep.witness_labels = render_witness(r, rep.verdict);
    return rep;
}

Report example_u2_witness() {
    auto t0 = std::chrono::steady_clock::now();
    ExampleLog log;
    const std::string id = "u2_witness";
    FiniteRing base = cyclic_ring(16);
    BuildOutcome built = build_matrix_subring(Family::Un, base, 2, Limits{});
    if (!built.ring) {
        log.assert_that(false, "U2(Z16) failed to build as a ring");
        return finish_example("Un(Z16,2)", id, log,
                              verdict_fails(id, {}, {"construction failed"}), 0.0);
    }
    FiniteRing& r = *built.ring;
    log.assert_that(built.closed && r.size() == 1024, "U2(Z16) is a ring with 1024 elements");

    auto at = [&](std::initializer_list<int> vals) {
        std::vector<Elem> flat;
        for (int v : vals) flat.push_back(static_cast<Elem>(v));
        return find_matrix(built.matrices, flat);
    };
    auto am = at({2, 8, 0, 8});
    auto bm = at({8, 8, 0, 2});
    auto cm = at({0, 1, 0, 0});
    auto mm = at({2, 0, 0, 0});
    log.assert_that(am && bm && cm && mm, "witness matrices A, B, C, M found in U2(Z16)");
    Verdict v = verdict_holds(id);
    if (am && bm && cm && mm) {
        Elem acb = r.mul(r.mul(*am, *cm), *bm);
        log.assert_that(r.mul(*am, *bm) == 0, "AB = 0");
        log.assert_that(built.matrices[acb] == std::vector<Elem>{0, 4, 0, 0},
                        "ACB = " + r.label(acb));
        log.assert_that(r.mul(acb, *mm) == 0, "ACB * M = 0");
        Elem macb = r.mul(*mm, acb);
        log.assert_that(built.matrices[macb] == std::vector<Elem>{0, 8, 0, 0} && macb != 0,
                        "M * ACB = " + r.label(macb) + " != 0");
        log.note("ACB fails to commute with M, so ACB is not central");
        RingAnalysis a(r);
        Verdict cs = check_property(a, "central_semicommutative");
        log.assert_that(cs.fails(), "central_semicommutative fails on U2(Z16)");
        if (cs.fails()) v.witness = cs.witness;
    }
    if (!log.ok) v = verdict_fails(id, v.witness, {"an assertion failed"});
    auto t1 = std::chrono::steady_clock::now();
    Report rep = finish_example("Un(Z16,2)", id, log, std::move(v),
                                std::chrono::duration<double, std::milli>(t1 - t0).count());
    rep.witness_labels = render_witness(r, rep.verdict);
    return rep;
}

Report example_localization(const Catalog& catalog) {
    auto t0 = std::chrono::steady_clock::now();
    ExampleLog log;
    const std::string id = "localization";
    std::size_t checked = 0;
    bool all_ok = true;
    for (const auto& e : catalog.entries) {
        const FiniteRing& r = *e.ring;
        if (!r.unital()) continue;
        ElemSet us = units(r);
        ElemSet zc = center(r);
        std::size_t regular = 0;
        bool entry_ok = true;
        for (std::size_t x = 0; x < r.size(); ++x) {
            if (!zc.test(x)) continue;
            bool zd = false;
            for (std::size_t y = 1; y < r.size() && !zd; ++y)
                if (r.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == 0) zd = true;
            if (zd) continue;
            ++regular;
            if (!us.test(x)) entry_ok = false;
        }
        ++checked;
        if (!entry_ok) {
            all_ok = false;
            log.assert_that(false, e.name + ": a central regular element is not a unit");
        } else {
            std::ostringstream os;
            os << e.name << ": " << regular << " central regular elements, all units";
            log.note(os.str());
        }
    }
    std::ostringstream os;
    os << "checked " << checked
       << " unital rings; inverting central regular elements changes nothing, so the "
          "localization is the ring itself";
    log.note(os.str());
    Verdict v = all_ok ? verdict_holds(id)
                       : verdict_fails(id, {}, {"a central regular non-unit exists"});
    auto t1 = std::chrono::steady_clock::now();
    return finish_example("catalog", id, log, std::move(v),
                          std::chrono::duration<double, std::milli>(t1 - t0).count());
}

}  // namespace

const std::vector<std::string>& paper_example_ids() {
    static const std::vector<std::string> ids{"e2_7", "triangular_quotient", "u2_witness",
                                             "localization"};
    return ids;
}

Report paper_example(const std::string& id, const Catalog& catalog) {
    if (id == "e2_7") return example_e2_7();
    if (id == "triangular_quotient") return example_triangular_quotient();
    if (id == "u2_witness") return example_u2_witness();
    if (id == "localization") return example_localization(catalog);
    raise("UnknownExample", "no example named " + id, id);
}

ReplayOutcome replay_reports(const std::vector<Report>& reports, const Limits& limits) {
    ReplayOutcome out;
    out.ok = true;
    std::size_t replayed = 0;
    for (const auto& rep : reports) {
        if (rep.verdict.status != Status::Fails) continue;
        std::string head = rep.ring + " :: " + rep.check + ": ";
        const SuiteCheck* suite_check = nullptr;
        for (const auto& c : implication_suite_checks())
            if (c.id == rep.check) suite_check = &c;
        if (!is_property_id(rep.check) && suite_check == nullptr) {
            out.lines.push_back(head + "cannot replay this check id");
            out.ok = false;
            continue;
        }
        std::optional<FiniteRing> parsed;
        try {
            parsed = parse_ring_spec(rep.ring, limits);
        } catch (const RingError& e) {
            out.lines.push_back(head + "cannot rebuild the ring: " + e.detail());
            out.ok = false;
            continue;
        }
        FiniteRing& ring = *parsed;
        Verdict fresh;
        if (is_property_id(rep.check)) {
            RingAnalysis a(ring);
            fresh = check_property(a, rep.check);
        } else {
            RingAnalysis a(ring);
            std::map<std::string, Verdict> cache;
            SuiteContext ctx{a, cache};
            fresh = suite_check->run(ctx);
        }
        ++replayed;
        if (!fresh.fails()) {
            out.lines.push_back(head + "expected Fails but re-run gives " +
                                status_name(fresh.status));
            out.ok = false;
            continue;
        }
        bool same_witness = fresh.witness.size() == rep.verdict.witness.size();
        if (same_witness)
            for (std::size_t i = 0; i < fresh.witness.size(); ++i)
                if (fresh.witness[i].role != rep.verdict.witness[i].role ||
                    fresh.witness[i].elem != rep.verdict.witness[i].elem)
                    same_witness = false;
        out.lines.push_back(head + (same_witness
                                        ? "reproduced with identical witness"
                                        : "reproduced (witness differs from the report)"));
    }
    std::ostringstream os;
    os << "replayed " << replayed << " failing reports";
    out.lines.push_back(os.str());
    return out;
}

SuiteResult run_implication_suite(const Catalog& catalog) {
    SuiteResult out;
    const auto& checks = implication_suite_checks();
    for (const auto& e : catalog.entries) {
        RingAnalysis a(*e.ring);
        std::map<std::string, Verdict> cache;
        SuiteContext ctx{a, cache};
        for (const auto& chk : checks) {
            auto t0 = std::chrono::steady_clock::now();
            Verdict v = chk.run(ctx);
            auto t1 = std::chrono::steady_clock::now();
            Report rep;
            rep.ring = e.name;
            rep.check = chk.id;
            rep.verdict = v;
            rep.witness_labels = render_witness(*e.ring, v);
            rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (rep.verdict.fails()) ++out.violations;
            if (rep.verdict.status == Status::NotApplicable) ++out.not_applicable;
            out.reports.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace finring
