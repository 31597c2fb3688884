#include <catch2/catch_amalgamated.hpp>

#include "extcat/corpus.hpp"
#include "extcat/decide.hpp"

using namespace extcat;

namespace {
ExtObject named(const Group& B, std::vector<Element> gens, const std::string& n) {
    ExtObject x = make_ext(B, gens);
    x.name = n;
    return x;
}
} // namespace

TEST_CASE("a list is equivalent to itself under every method") {
    const std::vector<ExtObject> L{
        named(canonicalize({4}), {Element{{2}}}, "a"),
        named(canonicalize({6}), {Element{{1, 0}}}, "b"),
    };
    CHECK(decide_parziale(L, L).verdict);
    CHECK(decide_completo(L, L).verdict);
    CHECK(decide_completo_prime(L, L).verdict);
    CHECK(brute_force_iso(L, L).verdict);
}

TEST_CASE("the order-6 swap pair is rejected with singleton index sets") {
    const std::vector<ExtObject> L{named(canonicalize({6}), {Element{{1, 0}}}, "S")};
    const std::vector<ExtObject> R{named(canonicalize({6}), {Element{{0, 1}}}, "T")};
    const DecisionReport rep = decide_parziale(L, R);
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.failure.has_value());
    for (ClassLabel l : all_labels) {
        CHECK(rep.index_sets.at(std::string("X_") + label_name(l)).size() == 1);
        CHECK(rep.index_sets.at(std::string("Y_") + label_name(l)).size() == 1);
    }
    CHECK_FALSE(decide_completo(L, R).verdict);
    CHECK_FALSE(decide_completo_prime(L, R).verdict);
    CHECK_FALSE(brute_force_iso(L, R).verdict);
}

TEST_CASE("permutation decider rejects different lengths outright") {
    const std::vector<ExtObject> L{
        named(canonicalize({4}), {Element{{2}}}, "a"),
        named(canonicalize({9}), {Element{{3}}}, "b"),
    };
    const std::vector<ExtObject> R{named(canonicalize({4}), {Element{{2}}}, "c")};
    const DecisionReport rep = decide_completo(L, R);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.failure.has_value());
}

TEST_CASE("zero-padded lists of different lengths are handled by the general decider") {
    // left: 0 -> Z/2 -> Z/2 -> 0 -> 0 and 0 -> 0 -> Z/3 -> Z/3 -> 0;
    // right: 0 -> Z/2 -> Z/2+Z/3 -> Z/3 -> 0. Sums are isomorphic.
    const std::vector<ExtObject> L{
        named(canonicalize({2}), {Element{{1}}}, "w2"),
        named(canonicalize({3}), {}, "q3"),
    };
    const std::vector<ExtObject> R{named(canonicalize({6}), {Element{{1, 0}}}, "m")};
    CHECK(decide_completo_prime(L, R).verdict);
    CHECK(brute_force_iso(L, R).verdict);
    const DecisionReport rep = decide_completo_prime(L, R);
    CHECK(rep.index_sets.at("X_l") == std::vector<std::size_t>{0});
    CHECK(rep.index_sets.at("X_u") == std::vector<std::size_t>{1});
    CHECK(rep.index_sets.at("X'_l") == std::vector<std::size_t>{0});
    CHECK(rep.index_sets.at("X'_u") == std::vector<std::size_t>{0});
}

TEST_CASE("quotient-only objects with different quotients differ") {
    const std::vector<ExtObject> L{named(canonicalize({2}), {}, "c2")};
    const std::vector<ExtObject> R{named(canonicalize({3}), {}, "c3")};
    CHECK_FALSE(decide_completo_prime(L, R).verdict);
    CHECK_FALSE(brute_force_iso(L, R).verdict);
}

TEST_CASE("the general decider rejects zero objects") {
    const std::vector<ExtObject> L{zero_ext_object()};
    CHECK_THROWS_AS(decide_completo_prime(L, L), ScopeViolation);
}

TEST_CASE("the exchange family certifies as equivalent") {
    const std::vector<ExtObject> L{
        named(canonicalize({6}), {Element{{1, 0}}}, "X1"),
        named(canonicalize({6}), {Element{{0, 1}}}, "X2"),
    };
    const std::vector<ExtObject> R{
        named(canonicalize({2, 2}), {Element{{1, 0}}}, "Y1"),
        named(canonicalize({3, 3}), {Element{{1, 0}}}, "Y2"),
    };
    CHECK(decide_parziale(L, R).verdict);
    CHECK(decide_completo(L, R).verdict);
    CHECK(decide_completo_prime(L, R).verdict);
    const OracleResult orc = brute_force_iso(L, R);
    REQUIRE(orc.verdict);
    REQUIRE(orc.iso.has_value());
    CHECK(is_iso_in_E(orc.left_sum.obj, orc.right_sum.obj, *orc.iso));
    const Hom inv = invert_iso(*orc.iso);
    CHECK(compose(inv, *orc.iso) == identity_hom(orc.left_sum.obj.B));
}

TEST_CASE("completo witnesses are class-preserving permutations") {
    const std::vector<ExtObject> L{
        named(canonicalize({6}), {Element{{1, 0}}}, "X1"),
        named(canonicalize({6}), {Element{{0, 1}}}, "X2"),
    };
    const std::vector<ExtObject> R{
        named(canonicalize({3, 3}), {Element{{1, 0}}}, "Y2"),
        named(canonicalize({2, 2}), {Element{{1, 0}}}, "Y1"),
    };
    const DecisionReport rep = decide_completo(L, R);
    REQUIRE(rep.verdict);
    SameClassCache cache{Caps{}};
    for (ClassLabel l : all_labels)
        for (auto [i, j] : rep.witnesses.at(l))
            CHECK(cache.same(L[i], R[j], l));
}

TEST_CASE("oracle respects sum-order and node caps") {
    Caps tight;
    tight.oracle_sum_order = 4;
    const std::vector<ExtObject> L{named(canonicalize({4}), {Element{{2}}}, "a"),
                                   named(canonicalize({4}), {Element{{2}}}, "b")};
    CHECK_THROWS_AS(brute_force_iso(L, L, tight), CapExceeded);
}

TEST_CASE("methods agree across a small mixed corpus") {
    CorpusOptions opt;
    opt.max_order = 8;
    opt.require_in_U = false;
    const std::vector<ExtObject> objs = corpus(opt);
    SameClassCache cache{Caps{}};
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i; j < objs.size(); ++j) {
            const std::vector<ExtObject> L{objs[i]}, R{objs[j]};
            const bool oracle = brute_force_iso(L, R).verdict;
            CHECK(decide_completo_prime(L, R, Caps{}, &cache).verdict == oracle);
            if (objs[i].in_U && objs[j].in_U) {
                CHECK(decide_completo(L, R, Caps{}, &cache).verdict == oracle);
                CHECK(decide_parziale(L, R, Caps{}, &cache).verdict == oracle);
            }
        }
}
