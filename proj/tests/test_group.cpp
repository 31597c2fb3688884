#include <catch2/catch_amalgamated.hpp>

#include "extcat/group.hpp"

using namespace extcat;

TEST_CASE("canonical form sorts by prime then descending exponent") {
    CHECK(canonicalize({6}).factors == std::vector<u64>{2, 3});
    CHECK(canonicalize({2, 4}).factors == std::vector<u64>{4, 2});
    CHECK(canonicalize({12, 2}).factors == std::vector<u64>{4, 2, 3});
    CHECK(canonicalize({1, 1}).factors.empty());
    CHECK(canonicalize({}).is_zero());
    CHECK_THROWS(canonicalize({0}));
}

TEST_CASE("order and element codec") {
    const Group g = canonicalize({4, 2, 3});
    CHECK(g.order() == 24);
    for (u64 i = 0; i < g.order(); ++i) CHECK(encode(g, decode(g, i)) == i);
    CHECK(encode(g, zero_element(g)) == 0);
}

TEST_CASE("arithmetic is componentwise modular") {
    const Group g = canonicalize({4, 3});
    const Element a{{3, 2}}, b{{2, 2}};
    CHECK(add(g, a, b) == Element{{1, 1}});
    CHECK(sub(g, a, b) == Element{{1, 0}});
    CHECK(neg(g, a) == Element{{1, 1}});
    CHECK(scalar_mul(g, 7, a) == Element{{1, 2}});
}

TEST_CASE("element orders") {
    const Group g = canonicalize({4, 3});
    CHECK(element_order(g, zero_element(g)) == 1);
    CHECK(element_order(g, Element{{1, 0}}) == 4);
    CHECK(element_order(g, Element{{2, 1}}) == 6);
    CHECK(element_order(g, Element{{1, 1}}) == 12);
}

TEST_CASE("uniserial recognition") {
    CHECK(is_uniserial(canonicalize({8})));
    CHECK(is_uniserial(canonicalize({3})));
    CHECK_FALSE(is_uniserial(canonicalize({6})));
    CHECK_FALSE(is_uniserial(canonicalize({2, 2})));
    CHECK_FALSE(is_uniserial(Group{}));
}

TEST_CASE("type from element orders recovers the canonical decomposition") {
    const Group g = canonicalize({4, 2, 9});
    std::vector<u64> orders;
    for_each_element(g, [&](const Element& e) { orders.push_back(element_order(g, e)); });
    CHECK(type_from_element_orders(orders) == g);
}

TEST_CASE("prime power helpers") {
    u64 p = 0, e = 0;
    CHECK(detail::is_prime_power(8, p, e));
    CHECK((p == 2 && e == 3));
    CHECK_FALSE(detail::is_prime_power(6, p, e));
    CHECK_FALSE(detail::is_prime_power(1, p, e));
    CHECK(prime_of(27) == 3);
}
