#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <sstream>

#include "finring/io.hpp"
#include "finring/ring.hpp"

using namespace finring;

namespace {

std::vector<Elem> z4_add() {
    std::vector<Elem> t(16);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) t[a * 4 + b] = static_cast<Elem>((a + b) % 4);
    return t;
}

std::vector<Elem> z4_mul() {
    std::vector<Elem> t(16);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) t[a * 4 + b] = static_cast<Elem>((a * b) % 4);
    return t;
}

std::string kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const RingError& e) {
        return e.kind();
    }
    return "";
}

}  // namespace

TEST_CASE("table validation accepts Z4 and pins down corruption") {
    FiniteRing r = validate_tables(4, z4_add(), z4_mul());
    CHECK(r.size() == 4);
    CHECK(r.unital());
    CHECK(*r.one() == 1);
    CHECK(r.commutative());
    CHECK(r.neg(3) == 1);
    CHECK(r.sub(1, 3) == 2);
    CHECK(r.pow(3, 2) == 1);

    auto bad_mul = z4_mul();
    bad_mul[2 * 4 + 3] = 1;  // breaks distributivity
    CHECK(kind_of([&] { validate_tables(4, z4_add(), bad_mul); }) == "AxiomViolation");

    auto bad_add = z4_add();
    bad_add[1 * 4 + 2] = 1;
    CHECK(kind_of([&] { validate_tables(4, bad_add, z4_mul()); }) == "AxiomViolation");

    CHECK(kind_of([&] { validate_tables(4, z4_add(), z4_mul(), Elem{2}); }) ==
          "UnityMismatch");
}

TEST_CASE("cyclic rings and finite fields") {
    FiniteRing z6 = cyclic_ring(6);
    CHECK(z6.size() == 6);
    CHECK(z6.mul(4, 5) == 2);
    CHECK(z6.label(5) == "5");

    FiniteRing f4 = finite_field(4);
    CHECK(f4.size() == 4);
    CHECK(f4.unital());
    // characteristic 2, multiplicative group of order 3
    Elem one = *f4.one();
    CHECK(f4.add(one, one) == 0);
    for (Elem x = 0; x < 4; ++x)
        if (x != 0) CHECK(f4.pow(x, 3) == one);

    CHECK(isomorphic(finite_field(5), cyclic_ring(5)));
    CHECK(kind_of([] { finite_field(6); }) == "UnsupportedOrder");
}

TEST_CASE("matrix rings, products, quotients") {
    FiniteRing m2 = matrix_ring(finite_field(2), 2);
    CHECK(m2.size() == 16);
    CHECK(m2.unital());
    CHECK_FALSE(m2.commutative());

    CHECK(isomorphic(direct_product(cyclic_ring(2), cyclic_ring(3)), cyclic_ring(6)));
    CHECK_FALSE(isomorphic(cyclic_ring(4), direct_product(cyclic_ring(2), cyclic_ring(2))));

    FiniteRing z8 = cyclic_ring(8);
    Subset ideal = make_subset(z8, {0, 4});
    QuotientResult q = quotient_ring(z8, ideal);
    CHECK(q.ring.size() == 4);
    CHECK(isomorphic(q.ring, cyclic_ring(4)));
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) {
            CHECK(q.projection[z8.add(a, b)] == q.ring.add(q.projection[a], q.projection[b]));
            CHECK(q.projection[z8.mul(a, b)] == q.ring.mul(q.projection[a], q.projection[b]));
        }

    CHECK(kind_of([&] { quotient_ring(z8, make_subset(z8, {0, 1})); }) == "NotAnIdeal");
}

TEST_CASE("corner rings at central idempotents") {
    FiniteRing z6 = cyclic_ring(6);
    FiniteRing c3 = corner_ring(z6, 3);  // 3*3 = 3 mod 6
    CHECK(c3.size() == 2);
    CHECK(isomorphic(c3, cyclic_ring(2)));
    FiniteRing c4 = corner_ring(z6, 4);
    CHECK(c4.size() == 3);
    CHECK(isomorphic(c4, cyclic_ring(3)));
    CHECK(kind_of([&] { corner_ring(z6, 2); }) == "NotIdempotent");
}

TEST_CASE("opposite ring is an involution") {
    FiniteRing m2 = matrix_ring(finite_field(2), 2);
    FiniteRing op = opposite_ring(m2);
    CHECK_FALSE(m2.same_tables(op));
    CHECK(m2.same_tables(opposite_ring(op)));
    FiniteRing z6 = cyclic_ring(6);
    CHECK(z6.same_tables(opposite_ring(z6)));
}

TEST_CASE("subset flags") {
    FiniteRing z6 = cyclic_ring(6);
    Subset evens = make_subset(z6, {0, 2, 4});
    CHECK(evens.flags.additive_subgroup);
    CHECK(evens.flags.left_ideal);
    CHECK(evens.flags.right_ideal);
    CHECK(evens.flags.subring);
    Subset not_closed = make_subset(z6, {0, 1});
    CHECK_FALSE(not_closed.flags.additive_subgroup);
}

TEST_CASE("ring json round trip") {
    FiniteRing z4 = validate_tables(4, z4_add(), z4_mul());
    std::string js = ring_to_json(z4);
    std::istringstream in(js);
    FiniteRing back = load_ring_json(in);
    CHECK(z4.same_tables(back));
    CHECK(back.unital());

    std::istringstream broken("{\"size\": 2}");
    CHECK(kind_of([&] { load_ring_json(broken); }) == "ParseError");
}
