#include <catch2/catch_amalgamated.hpp>

#include "extcat/ext.hpp"

using namespace extcat;

namespace {
ExtObject z4_mod2() { return make_ext(canonicalize({4}), {Element{{2}}}); }
} // namespace

TEST_CASE("scope flags of the order-4 nonsplit object") {
    const ExtObject x = z4_mod2();
    CHECK(x.in_U);
    CHECK_FALSE(x.in_U0);
    CHECK_FALSE(x.in_Uupper0);
    CHECK(x.A.canonical_type == canonicalize({2}));
    CHECK(x.C.abstract_type == canonicalize({2}));
}

TEST_CASE("zero-ended objects carry the one-sided flags") {
    const ExtObject lower = make_ext(canonicalize({9}), {Element{{1}}});
    CHECK(lower.in_Uupper0);
    CHECK_FALSE(lower.in_U);
    const ExtObject upper = make_ext(canonicalize({9}), {});
    CHECK(upper.in_U0);
    CHECK_FALSE(upper.in_U);
    const ExtObject zero = zero_ext_object();
    CHECK_FALSE(zero.in_U);
}

TEST_CASE("non-uniserial end terms are out of scope") {
    const Group v = canonicalize({2, 2});
    CHECK_THROWS_AS(make_ext(v, {Element{{1, 0}}, Element{{0, 1}}}), ScopeViolation);
    const Group w = canonicalize({2, 2, 2});
    CHECK_THROWS_AS(make_ext(w, {Element{{1, 0, 0}}}), ScopeViolation); // C = Z2+Z2
    CHECK_THROWS_AS(make_ext(canonicalize({6}), {}), ScopeViolation);  // C = Z6
}

TEST_CASE("morphisms preserve the distinguished subgroup") {
    const ExtObject x = z4_mod2();
    const std::vector<Hom> ms = morphisms(x, x);
    CHECK(ms.size() == 4); // every endomorphism of Z/4 preserves <2>
    const ExtObject y = make_ext(canonicalize({2, 2}), {Element{{1, 0}}});
    const std::vector<Hom> cross = morphisms(y, x);
    u64 expected = 0;
    for_each_hom(y.B, x.B, [&](const Hom& f) {
        if (carries_A_into_A(y, x, f)) ++expected;
    });
    CHECK(cross.size() == expected);
    const ExtObject zero = zero_ext_object();
    CHECK(morphisms(zero, x).size() == 1);
}

TEST_CASE("restriction and induction of a morphism") {
    const ExtObject x = z4_mod2();
    const Hom id = identity_hom(x.B);
    CHECK(restrict_lower(x, x, id) == identity_hom(x.A.canonical_type));
    CHECK(induce_upper(x, x, id) == identity_hom(x.C.abstract_type));
    Hom mul2{x.B, x.B, {2}};
    CHECK(restrict_lower(x, x, mul2).m == std::vector<u64>{0});
    CHECK(induce_upper(x, x, mul2).m == std::vector<u64>{0});
    CHECK(restrict_lower(x, x, zero_hom(x.B, x.B)).m == std::vector<u64>{0});
}

TEST_CASE("a group isomorphism moving the subgroup is not one here") {
    const ExtObject x = z4_mod2();
    const ExtObject y = make_ext(canonicalize({4}), {Element{{1}}});
    const Hom id = identity_hom(x.B);
    CHECK(is_ext_morphism(x, y, id));
    CHECK_FALSE(is_iso_in_E(x, y, id)); // monic and epi, but no inverse morphism
    CHECK(is_iso_in_E(x, x, id));
}

TEST_CASE("direct sums") {
    const ExtObject x = z4_mod2();
    const SumExt single = direct_sum({&x});
    CHECK(single.obj.B == x.B);
    CHECK(single.obj.A.elements == x.A.elements);
    const ExtObject zero = zero_ext_object();
    const SumExt with_zero = direct_sum({&x, &zero});
    CHECK(with_zero.obj.B == x.B);

    const ExtObject y = make_ext(canonicalize({3}), {Element{{1}}});
    const SumExt s = direct_sum({&x, &y});
    CHECK(s.obj.B == canonicalize({4, 3}));
    CHECK(s.obj.A.order() == 6);
    // Embedding then projection is the identity on each part.
    for (std::size_t i : {std::size_t{0}, std::size_t{1}}) {
        const Hom round = compose(s.projections[i], s.embeddings[i]);
        CHECK(round == identity_hom(i == 0 ? x.B : y.B));
    }
}

TEST_CASE("splitting recognition") {
    CHECK_FALSE(is_split(z4_mod2()));
    const ExtObject s = make_ext(canonicalize({6}), {Element{{1, 0}}});
    CHECK(is_split(s));
    const ExtObject t = make_ext(canonicalize({2, 2}), {Element{{1, 1}}});
    CHECK(is_split(t));
}

TEST_CASE("the group order cap applies to construction") {
    Caps tight;
    tight.group_order = 8;
    CHECK_THROWS_AS(make_ext(canonicalize({16}), {Element{{4}}}, tight), CapExceeded);
}
