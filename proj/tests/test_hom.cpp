#include <catch2/catch_amalgamated.hpp>

#include "extcat/hom.hpp"

using namespace extcat;

TEST_CASE("hom counts by the gcd product formula") {
    CHECK(hom_count(canonicalize({2}), canonicalize({4})) == 2);
    CHECK(hom_count(Group{}, canonicalize({12, 5})) == 1);
    CHECK(hom_count(canonicalize({6}), canonicalize({6})) == 6);
    CHECK(hom_count(canonicalize({4, 2}), canonicalize({4, 2})) == 32);
}

TEST_CASE("enumeration agrees with the count and is well defined") {
    const Group g = canonicalize({4, 2});
    const Group h = canonicalize({8, 3});
    Caps caps;
    const std::vector<Hom> homs = enumerate_homs(g, h, caps);
    CHECK(homs.size() == hom_count(g, h));
    for (const Hom& f : homs) CHECK(well_defined(f));
    // Pairwise distinct matrices.
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = i + 1; j < homs.size(); ++j) CHECK(homs[i].m != homs[j].m);
}

TEST_CASE("identity and composition") {
    const Group g = canonicalize({4, 3});
    const Hom id = identity_hom(g);
    Caps caps;
    for (const Hom& f : enumerate_homs(g, g, caps)) {
        CHECK(compose(id, f) == f);
        CHECK(compose(f, id) == f);
    }
}

TEST_CASE("composition applies the right factor first") {
    const Group z2 = canonicalize({2}), z4 = canonicalize({4});
    Hom f{z2, z4, {2}};      // the injection 1 -> 2
    Hom g{z4, z2, {1}};      // reduction mod 2
    const Hom gf = compose(g, f);
    CHECK(gf.domain == z2);
    CHECK(gf.codomain == z2);
    CHECK(gf.apply(Element{{1}}) == Element{{0}}); // 1 -> 2 -> 0
}

TEST_CASE("apply is additive") {
    const Group g = canonicalize({4, 3});
    const Group h = canonicalize({2, 9});
    Caps caps;
    const auto homs = enumerate_homs(g, h, caps);
    const Hom& f = homs[homs.size() / 2];
    for_each_element(g, [&](const Element& a) {
        const Element b{{3, 2}};
        CHECK(f.apply(add(g, a, b)) == add(h, f.apply(a), f.apply(b)));
    });
}

TEST_CASE("hom addition and subtraction are pointwise") {
    const Group g = canonicalize({6});
    Caps caps;
    const auto homs = enumerate_homs(g, g, caps);
    const Hom &f = homs[2], &k = homs[3];
    const Hom s = hom_add(f, k);
    for_each_element(g, [&](const Element& a) {
        CHECK(s.apply(a) == add(g, f.apply(a), k.apply(a)));
    });
    CHECK(hom_sub(s, k) == f);
}

TEST_CASE("well_defined rejects non-homomorphic matrices") {
    // 1 -> 1 from Z/2 to Z/4 does not respect the relation 2*1 = 0.
    Hom bad{canonicalize({2}), canonicalize({4}), {1}};
    CHECK_FALSE(well_defined(bad));
}
