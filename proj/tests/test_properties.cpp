#include <doctest.h>

#include "finring/properties.hpp"
#include "finring/specparse.hpp"
#include "finring/structure.hpp"

using namespace finring;

// Quantifier-literal oracles. Each one restates a predicate definition as
// nested loops with no shortcuts, so a decider disagreement is a decider bug.
namespace {

bool oracle_reversible(const FiniteRing& r) {
    for (Elem u = 0; u < r.size(); ++u)
        for (Elem v = 0; v < r.size(); ++v)
            if (r.mul(u, v) == 0 && r.mul(v, u) != 0) return false;
    return true;
}

bool oracle_product_target(const FiniteRing& r, const ElemSet& target) {
    for (Elem u = 0; u < r.size(); ++u)
        for (Elem v = 0; v < r.size(); ++v) {
            if (r.mul(u, v) != 0) continue;
            for (Elem w = 0; w < r.size(); ++w)
                if (!target.test(r.mul(r.mul(u, w), v))) return false;
        }
    return true;
}

bool oracle_nil_sc2(const FiniteRing& r, const ElemSet& nil) {
    for (Elem u = 0; u < r.size(); ++u)
        for (Elem v = 0; v < r.size(); ++v) {
            if (!nil.test(r.mul(u, v))) continue;
            for (Elem w = 0; w < r.size(); ++w)
                if (!nil.test(r.mul(r.mul(u, w), v))) return false;
        }
    return true;
}

bool oracle_nil_sc1(const FiniteRing& r, const ElemSet& nil) {
    for (Elem u = 0; u < r.size(); ++u)
        for (Elem v = 0; v < r.size(); ++v) {
            if (!nil.test(u) || !nil.test(v) || r.mul(u, v) != 0) continue;
            for (Elem w = 0; w < r.size(); ++w)
                if (r.mul(r.mul(u, w), v) != 0) return false;
        }
    return true;
}

bool oracle_ifp(const FiniteRing& r) {
    for (Elem u = 0; u < r.size(); ++u)
        for (Elem v = 1; v < r.size(); ++v) {
            if (r.mul(u, v) != 0) continue;
            bool found = false;
            for (Elem w = 1; w < r.size() && !found; ++w) {
                bool killed = true;
                for (Elem x = 0; x < r.size() && killed; ++x)
                    killed = (r.mul(r.mul(u, x), w) == 0);
                found = killed;
            }
            if (!found) return false;
        }
    return true;
}

bool oracle_abelian(const FiniteRing& r) {
    for (Elem e = 0; e < r.size(); ++e) {
        if (r.mul(e, e) != e) continue;
        for (Elem x = 0; x < r.size(); ++x)
            if (r.mul(e, x) != r.mul(x, e)) return false;
    }
    return true;
}

bool oracle_left_pp(const FiniteRing& r) {
    if (!r.unital()) return true;  // decider answers NotApplicable there
    for (Elem a = 0; a < r.size(); ++a) {
        ElemSet l = annihilator_one(r, a, Side::Left);
        bool ok = false;
        for (Elem e = 0; e < r.size() && !ok; ++e)
            if (r.mul(e, e) == e) ok = (l == ideal_generated(r, e, GenKind::Left));
        if (!ok) return false;
    }
    return true;
}

bool oracle_left_pq(const FiniteRing& r) {
    if (!r.unital()) return true;
    for (Elem a = 0; a < r.size(); ++a) {
        ElemSet ra = ideal_generated(r, a, GenKind::Left);
        ElemSet l = annihilator(r, ra, Side::Left);
        bool ok = false;
        for (Elem e = 0; e < r.size() && !ok; ++e)
            if (r.mul(e, e) == e) ok = (l == ideal_generated(r, e, GenKind::Left));
        if (!ok) return false;
    }
    return true;
}

bool oracle_semi_left_pp(const FiniteRing& r) {
    for (Elem a = 0; a < r.size(); ++a) {
        ElemSet l = annihilator_one(r, a, Side::Left);
        bool ok = false;
        for (Elem b = 0; b < r.size() && !ok; ++b)
            ok = (l == ideal_generated(r, b, GenKind::Left));
        if (!ok) return false;
    }
    return true;
}

bool oracle_left_sf(const FiniteRing& r) {
    if (!r.unital()) return true;
    for (const auto& m : maximal_one_sided_ideals_bruteforce(r, Side::Left))
        for (Elem a : m) {
            bool inside = false;
            for (Elem x : m)
                if (r.mul(a, x) == a) inside = true;
            if (!inside) return false;
        }
    return true;
}

bool oracle_gw(const FiniteRing& r) {
    if (!r.unital()) return true;
    for (const auto& m : maximal_one_sided_ideals_bruteforce(r, Side::Left)) {
        ElemSet ms(r.size());
        for (Elem x : m) ms.set(x);
        for (Elem a : m) {
            bool some_n = false;
            for (std::size_t n = 1; n <= r.size() && !some_n; ++n) {
                Elem an = r.pow(a, n);
                bool contained = true;
                for (Elem x = 0; x < r.size() && contained; ++x)
                    contained = ms.test(r.mul(an, x));
                some_n = contained;
            }
            if (!some_n) return false;
        }
    }
    return true;
}

bool oracle_vn_regular(const FiniteRing& r) {
    for (Elem a = 0; a < r.size(); ++a) {
        bool ok = false;
        for (Elem x = 0; x < r.size() && !ok; ++x) ok = (r.mul(r.mul(a, x), a) == a);
        if (!ok) return false;
    }
    return true;
}

bool oracle_strongly_regular(const FiniteRing& r) {
    for (Elem a = 0; a < r.size(); ++a) {
        bool ok = false;
        for (Elem x = 0; x < r.size() && !ok; ++x)
            ok = (r.mul(r.mul(a, a), x) == a);
        if (!ok) return false;
    }
    return true;
}

const std::vector<std::string>& small_specs() {
    static const std::vector<std::string> specs{
        "Z2",       "Z4",          "Z6",           "Z8",        "GF(4)",
        "GF(9)",    "M2(GF(2))",   "prod(Z2,Z3)",  "Tn(GF(2),2)",
        "Sn(Z4,2)", "Sprime(Z4,2)", "TprimeRn(GF(2),3)", "Un(Z4,2)"};
    return specs;
}

}  // namespace

TEST_CASE("deciders agree with quantifier-literal oracles") {
    for (const auto& spec : small_specs()) {
        FiniteRing r = parse_ring_spec(spec);
        CAPTURE(spec);
        RingAnalysis a(r);
        ElemSet nil = a.nil();
        ElemSet zero_only(r.size());
        zero_only.set(0);
        CHECK(check_property(a, "reversible").holds() == oracle_reversible(r));
        CHECK(check_property(a, "semicommutative").holds() ==
              oracle_product_target(r, zero_only));
        CHECK(check_property(a, "h_semicommutative").holds() ==
              oracle_product_target(r, hypercenter_naive(r, 2 * r.size() + 1)));
        CHECK(check_property(a, "central_semicommutative").holds() ==
              oracle_product_target(r, center(r)));
        CHECK(check_property(a, "weakly_semicommutative").holds() ==
              oracle_product_target(r, nil));
        CHECK(check_property(a, "nil_semicommutative_2").holds() == oracle_nil_sc2(r, nil));
        CHECK(check_property(a, "nil_semicommutative_1").holds() == oracle_nil_sc1(r, nil));
        CHECK(check_property(a, "j_semicommutative").holds() ==
              oracle_product_target(r, jacobson_radical(r)));
        CHECK(check_property(a, "ifp_hwang").holds() == oracle_ifp(r));
        CHECK(check_property(a, "abelian").holds() == oracle_abelian(r));
        CHECK(check_property(a, "vn_regular").holds() == oracle_vn_regular(r));
        CHECK(check_property(a, "strongly_regular").holds() == oracle_strongly_regular(r));
        if (r.unital()) {
            CHECK(check_property(a, "left_pp").holds() == oracle_left_pp(r));
            CHECK(check_property(a, "left_pq_baer").holds() == oracle_left_pq(r));
            CHECK(check_property(a, "semi_left_pp").holds() == oracle_semi_left_pp(r));
            if (r.size() <= 16) {
                CHECK(check_property(a, "left_sf").holds() == oracle_left_sf(r));
                CHECK(check_property(a, "gw_maximal_left").holds() == oracle_gw(r));
            }
        }
    }
}

TEST_CASE("unity-dependent properties answer NotApplicable without unity") {
    FiniteRing nil3 = parse_ring_spec("TprimeRn(GF(2),3)");
    RingAnalysis a(nil3);
    for (const char* id : {"left_pp", "right_pp", "left_pq_baer", "right_pq_baer",
                           "semi_left_pp", "semi_right_pp", "semi_left_pq", "semi_right_pq",
                           "baer", "quasi_baer", "semi_baer", "semi_quasi_baer",
                           "directly_finite", "left_sf", "gw_maximal_left",
                           "gp_v_prime_left", "wnil_injective_simple_singulars"}) {
        CAPTURE(id);
        CHECK(check_property(a, id).status == Status::NotApplicable);
    }
    // but unconditional ones still decide
    CHECK(check_property(a, "h_semicommutative").holds());
    CHECK(check_property(a, "pi_regular").holds());
}

TEST_CASE("failing verdicts carry live witnesses") {
    FiniteRing t2 = parse_ring_spec("Tn(GF(2),2)");
    RingAnalysis a(t2);

    Verdict ab = check_property(a, "abelian");
    REQUIRE(ab.fails());
    REQUIRE(ab.witness.size() == 2);
    Elem e = ab.witness[0].elem, x = ab.witness[1].elem;
    CHECK(t2.mul(e, e) == e);
    CHECK(t2.mul(e, x) != t2.mul(x, e));
    CHECK(t2.label(e) == "E22");
    CHECK(t2.label(x) == "E12");

    Verdict h = check_property(a, "h_semicommutative");
    REQUIRE(h.fails());
    REQUIRE(h.witness.size() == 4);
    Elem u = h.witness[0].elem, v = h.witness[1].elem;
    Elem w = h.witness[2].elem, xx = h.witness[3].elem;
    CHECK(t2.mul(u, v) == 0);
    Elem uwv = t2.mul(t2.mul(u, w), v);
    // xx separates uwv from every power: uwv x^n != x^n uwv for all n
    for (unsigned n = 1; n <= 2 * t2.size() + 1; ++n) {
        Elem xn = t2.pow(xx, n);
        CHECK(t2.mul(uwv, xn) != t2.mul(xn, uwv));
    }

    Verdict sc = check_property(a, "semicommutative");
    REQUIRE(sc.fails());
    REQUIRE(sc.witness.size() == 3);
    CHECK(t2.mul(sc.witness[0].elem, sc.witness[1].elem) == 0);
    CHECK(t2.mul(t2.mul(sc.witness[0].elem, sc.witness[2].elem), sc.witness[1].elem) != 0);
}

TEST_CASE("two_primal separates M2 from commutative rings") {
    FiniteRing m2 = parse_ring_spec("M2(GF(2))");
    RingAnalysis a(m2);
    Verdict v = check_property(a, "two_primal");
    REQUIRE(v.fails());
    REQUIRE(!v.witness.empty());
    Elem w = v.witness.front().elem;
    CHECK(m2.mul(w, w) == 0);  // a square-zero witness outside the prime radical
    CHECK_FALSE(a.prime().test(w));

    FiniteRing z8 = parse_ring_spec("Z8");
    RingAnalysis b(z8);
    CHECK(check_property(b, "two_primal").holds());
    CHECK(check_property(b, "ni_ring").holds());
    CHECK(check_property(a, "ni_ring").fails());
}

TEST_CASE("pp and Baer family on reference rings") {
    FiniteRing z4r = parse_ring_spec("Z4");
    RingAnalysis z4(z4r);
    CHECK(check_property(z4, "left_pp").fails());       // l(2) = {0,2} is not Re
    CHECK(check_property(z4, "semi_left_pp").holds());  // but it is R*2
    CHECK(check_property(z4, "baer").fails());
    CHECK(check_property(z4, "semi_baer").holds());
    CHECK(check_property(z4, "quasi_baer").fails());
    CHECK(check_property(z4, "semi_quasi_baer").holds());

    FiniteRing z6r = parse_ring_spec("Z6");
    RingAnalysis z6(z6r);
    CHECK(check_property(z6, "left_pp").holds());  // semisimple commutative
    CHECK(check_property(z6, "baer").holds());

    FiniteRing m2r = parse_ring_spec("M2(GF(2))");
    RingAnalysis m2(m2r);
    CHECK(check_property(m2, "baer").holds());
    CHECK(check_property(m2, "quasi_baer").holds());
    CHECK(check_property(m2, "left_pp").holds());
    CHECK(check_property(m2, "vn_regular").holds());
    CHECK(check_property(m2, "strongly_regular").fails());

    for (const char* spec : {"GF(4)", "GF(9)"}) {
        FiniteRing fr = parse_ring_spec(spec);
        RingAnalysis f(fr);
        CAPTURE(spec);
        CHECK(check_property(f, "baer").holds());
        CHECK(check_property(f, "left_pp").holds());
        CHECK(check_property(f, "strongly_regular").holds());
    }
}

TEST_CASE("regularity ladder") {
    FiniteRing z4r = parse_ring_spec("Z4");
    RingAnalysis z4(z4r);
    CHECK(check_property(z4, "vn_regular").fails());
    CHECK(check_property(z4, "pi_regular").holds());
    CHECK(check_property(z4, "directly_finite").holds());
    FiniteRing pr = parse_ring_spec("prod(GF(2),prod(GF(2),GF(2)))");
    RingAnalysis p(pr);
    CHECK(check_property(p, "strongly_regular").holds());
    CHECK(check_property(p, "left_sf").holds());
}

TEST_CASE("module extension criterion") {
    FiniteRing z4 = parse_ring_spec("Z4");
    RingAnalysis a(z4);
    // K = {0,2} is the unique maximal left ideal; u = 2 is nilpotent, u^n = 0
    // for n >= 2, and the identity map Ru -> R/K cannot be left multiplication.
    Verdict v = module_extension_test(a, {0, 2}, 2, ExtMode::Wnil);
    CHECK(v.fails());
    CHECK(check_property(a, "wnil_injective_simple_singulars").fails());

    CHECK_THROWS_AS(module_extension_test(a, {0, 2}, 0, ExtMode::Wnil), RingError);
    CHECK_THROWS_AS(module_extension_test(a, {0, 2}, 1, ExtMode::Wnil), RingError);
    CHECK_THROWS_AS(module_extension_test(a, {0, 1}, 2, ExtMode::Wnil), RingError);

    // semisimple: no singular simples at all, so the property is vacuous
    FiniteRing m2r = parse_ring_spec("M2(GF(2))");
    RingAnalysis m2(m2r);
    CHECK(simple_singular_left_modules(m2).empty());
    CHECK(check_property(m2, "wnil_injective_simple_singulars").holds());
    CHECK(check_property(m2, "gp_v_prime_left").holds());
}

TEST_CASE("armendariz bounded on reference rings") {
    FiniteRing z4r = parse_ring_spec("Z4");
    RingAnalysis z4(z4r);
    CHECK(armendariz_bounded(z4, 2).holds());
    FiniteRing t2r = parse_ring_spec("Tn(GF(2),2)");
    RingAnalysis t2(t2r);
    Verdict v = armendariz_bounded(t2, 1);
    REQUIRE(v.fails());
    CHECK(v.witness.size() >= 2);

    FiniteRing f4r = parse_ring_spec("GF(4)");
    RingAnalysis f4(f4r);
    CHECK(check_property(f4, "armendariz_bounded").holds());
}

TEST_CASE("property id registry") {
    CHECK(property_ids().size() == 35);
    CHECK(is_property_id("h_semicommutative"));
    CHECK_FALSE(is_property_id("h-semicommutative"));
    FiniteRing z2 = parse_ring_spec("Z2");
    RingAnalysis a(z2);
    CHECK_THROWS_AS(check_property(a, "nope"), RingError);
    for (const auto& id : property_ids()) {
        CAPTURE(id);
        Verdict v = check_property(a, id);  // GF(2): everything decides
        CHECK(v.status != Status::NotApplicable);
        CHECK(v.holds());  // a field satisfies every predicate in the registry
    }
}
