#include <catch2/catch_amalgamated.hpp>

#include "extcat/endo.hpp"

using namespace extcat;

namespace {
ExtObject z4_mod2() { return make_ext(canonicalize({4}), {Element{{2}}}); }
ExtObject z6_mod2() { return make_ext(canonicalize({6}), {Element{{1, 0}}}); }
} // namespace

TEST_CASE("order-4 chain: four endomorphisms, one maximal ideal") {
    const EndoRingAnalysis an = analyze(z4_mod2(), Caps{}, true);
    CHECK(an.endos.size() == 4);
    for (int a = 0; a < 4; ++a) {
        CHECK(an.ideals[a].size() == 2); // the zero map and multiplication by 2
        CHECK(an.label_maximal[a]);
        for (std::size_t i : an.ideals[a]) {
            const Hom& f = an.endos[i];
            CHECK((f.m[0] == 0 || f.m[0] == 2));
        }
    }
    CHECK(an.type_count == 1);
    CHECK(verify_crt(an));
    CHECK(type_bound_check(an));
    // E/J is a field of size 4/2 = 2.
    CHECK(an.endos.size() / an.radical.size() == 2);
}

TEST_CASE("order-6 object: six endomorphisms, two maximal ideals") {
    const EndoRingAnalysis an = analyze(z6_mod2(), Caps{}, true);
    CHECK(an.endos.size() == 6);
    CHECK(an.ideals[0] == an.ideals[1]); // lower pair coincides
    CHECK(an.ideals[2] == an.ideals[3]); // upper pair coincides
    CHECK(an.ideals[0].size() == 3);
    CHECK(an.ideals[2].size() == 2);
    CHECK(an.type_count == 2);
    CHECK(verify_crt(an)); // product of fields of sizes 2 and 3
    CHECK(type_bound_check(an));
    CHECK(an.radical.size() == 1);
}

TEST_CASE("split order-4 object: eight triangular endomorphisms") {
    const ExtObject x = make_ext(canonicalize({2, 2}), {Element{{1, 0}}});
    const EndoRingAnalysis an = analyze(x, Caps{}, true);
    CHECK(an.endos.size() == 8);
    CHECK(an.type_count == 2);
    CHECK(type_bound_check(an));
}

TEST_CASE("ideals are exactly the non-units united, and each is proper") {
    for (const ExtObject& x : {z4_mod2(), z6_mod2()}) {
        const EndoRingAnalysis an = analyze(x, Caps{}, true);
        std::set<std::size_t> non_auto;
        for (std::size_t i = 0; i < an.endos.size(); ++i)
            if (!is_iso_in_E(x, x, an.endos[i])) non_auto.insert(i);
        std::set<std::size_t> united;
        for (int a = 0; a < 4; ++a)
            united.insert(an.ideals[a].begin(), an.ideals[a].end());
        CHECK(united == non_auto);
    }
}

TEST_CASE("signature multiplicativity over all endomorphism pairs") {
    const ExtObject x = z6_mod2();
    const EndoRingAnalysis an = analyze(x, Caps{}, false);
    for (const Hom& f : an.endos)
        for (const Hom& g : an.endos) {
            const Hom fg = compose(f, g);
            for (ClassLabel l : all_labels)
                CHECK(class_predicate(x, x, fg, l) ==
                      (class_predicate(x, x, f, l) && class_predicate(x, x, g, l)));
        }
}

TEST_CASE("analyze rejects objects with a zero end term") {
    CHECK_THROWS_AS(analyze(make_ext(canonicalize({4}), {}), Caps{}, false),
                    ScopeViolation);
}

TEST_CASE("associated ideal membership") {
    const ExtObject x = z4_mod2();
    // Same object, equal classes: membership reduces to the object's own ideal.
    const EndoRingAnalysis an = analyze(x, Caps{}, false);
    CHECK_FALSE(associated_ideal_membership(x, ClassLabel::ml, x, x, identity_hom(x.B)));
    Hom mul2{x.B, x.B, {2}};
    CHECK(associated_ideal_membership(x, ClassLabel::ml, x, x, mul2));
    // Classes differ: the associated ideal swallows the identity.
    const ExtObject y = make_ext(canonicalize({2, 2}), {Element{{1, 0}}});
    CHECK(associated_ideal_membership(x, ClassLabel::ml, y, y, identity_hom(y.B)));
}

TEST_CASE("hom-count cap aborts analysis") {
    Caps tight;
    tight.hom_count = 3;
    CHECK_THROWS_AS(analyze(z4_mod2(), tight, false), CapExceeded);
}
