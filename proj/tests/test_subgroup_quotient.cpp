#include <catch2/catch_amalgamated.hpp>

#include "extcat/quotient.hpp"
#include "extcat/subgroup.hpp"

using namespace extcat;

TEST_CASE("generated subgroups") {
    const Group B = canonicalize({4, 2});
    CHECK(subgroup_generated(B, {}).order() == 1);
    const Subgroup s = subgroup_generated(B, {Element{{2, 0}}});
    CHECK(s.order() == 2);
    CHECK(s.canonical_type == canonicalize({2}));
    CHECK(subgroup_generated(canonicalize({4}), {Element{{1}}}).order() == 4);
}

TEST_CASE("membership and generators round-trip") {
    const Group B = canonicalize({8, 3});
    const Subgroup s = subgroup_generated(B, {Element{{2, 1}}});
    CHECK(s.order() == 12);
    for (u64 idx : s.elements) CHECK(s.contains(decode(B, idx)));
    CHECK_FALSE(s.contains(Element{{1, 0}}));
    const Subgroup again = subgroup_generated(B, s.generators);
    CHECK(again.elements == s.elements);
}

TEST_CASE("kernel and image") {
    const Group z4 = canonicalize({4});
    CHECK(kernel(zero_hom(z4, z4)).order() == 4);
    Hom mul2{z4, z4, {2}};
    CHECK(image(mul2).order() == 2);
    CHECK(kernel(mul2).order() == 2);
    CHECK(is_injective(identity_hom(z4)));
    CHECK(is_surjective(identity_hom(z4)));
    CHECK_FALSE(is_injective(mul2));
}

TEST_CASE("quotient by the trivial subgroup is the whole group") {
    const Group B = canonicalize({4, 3});
    const QuotientView q = quotient(B, trivial_subgroup(B));
    CHECK(q.abstract_type == B);
}

TEST_CASE("quotient types by coset enumeration") {
    const Group z4 = canonicalize({4});
    CHECK(quotient(z4, subgroup_generated(z4, {Element{{2}}})).abstract_type ==
          canonicalize({2}));
    const Group v = canonicalize({2, 2});
    CHECK(quotient(v, subgroup_generated(v, {Element{{1, 0}}})).abstract_type ==
          canonicalize({2}));
    const Group m = canonicalize({8, 2});
    // Quotient by the diagonal order-2 element is cyclic of order 8.
    CHECK(quotient(m, subgroup_generated(m, {Element{{4, 1}}})).abstract_type ==
          canonicalize({8}));
}

TEST_CASE("projection is a surjective homomorphism with the right kernel") {
    const Group B = canonicalize({4, 2, 3});
    const Subgroup A = subgroup_generated(B, {Element{{2, 1, 0}}});
    const QuotientView q = quotient(B, A);
    CHECK(q.order() * A.order() == B.order());
    for_each_element(B, [&](const Element& x) {
        for_each_element(B, [&](const Element& y) {
            CHECK(q.project(add(B, x, y)) ==
                  add(q.abstract_type, q.project(x), q.project(y)));
        });
    });
    u64 killed = 0;
    for_each_element(B, [&](const Element& x) {
        if (is_zero(q.project(x))) ++killed;
    });
    CHECK(killed == A.order());
}

TEST_CASE("whole-group quotient is zero") {
    const Group B = canonicalize({6});
    CHECK(quotient(B, whole_subgroup(B)).abstract_type.is_zero());
}

TEST_CASE("subgroup enumeration respects the group order cap") {
    Caps tight;
    tight.group_order = 4;
    CHECK_THROWS_AS(subgroup_generated(canonicalize({8}), {}, tight), CapExceeded);
}
