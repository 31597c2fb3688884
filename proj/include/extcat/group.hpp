#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "extcat/errors.hpp"

namespace extcat {

using u64 = std::uint64_t;

namespace detail {

/// Smallest prime factor; input must be >= 2.
inline u64 smallest_prime_factor(u64 n) {
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

inline bool is_prime_power(u64 n, u64& prime, u64& exponent) {
    if (n < 2) return false;
    prime = smallest_prime_factor(n);
    exponent = 0;
    while (n % prime == 0) { n /= prime; ++exponent; }
    return n == 1;
}

} // namespace detail

/// Prime of a prime-power factor order.
inline u64 prime_of(u64 prime_power) {
    return detail::smallest_prime_factor(prime_power);
}

/// A finite abelian group in canonical primary decomposition. Each factor is
/// a cyclic group of prime-power order; factors are sorted by prime ascending,
/// then exponent descending. The empty list is the zero group.
struct Group {
    std::vector<u64> factors;

    u64 order() const {
        u64 n = 1;
        for (u64 f : factors) n *= f;
        return n;
    }
    std::size_t rank() const { return factors.size(); }
    bool is_zero() const { return factors.empty(); }
    /// lcm of the factor orders (1 for the zero group).
    u64 exponent() const {
        u64 e = 1;
        for (u64 f : factors) e = std::lcm(e, f);
        return e;
    }

    bool operator==(const Group&) const = default;
    auto operator<=>(const Group&) const = default;

    std::string to_string() const {
        if (factors.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += "+";
            s += "Z" + std::to_string(factors[i]);
        }
        return s;
    }
};

/// Canonical form: CRT-split every order into prime powers, drop trivial
/// factors, sort by (prime ascending, exponent descending).
inline Group canonicalize(const std::vector<u64>& orders) {
    std::vector<std::pair<u64, u64>> keyed; // (prime, order), exponent implied
    for (u64 n : orders) {
        if (n == 0) throw std::invalid_argument("cyclic order must be >= 1");
        u64 rest = n;
        while (rest > 1) {
            u64 p = detail::smallest_prime_factor(rest);
            u64 pk = 1;
            while (rest % p == 0) { rest /= p; pk *= p; }
            keyed.emplace_back(p, pk);
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second; // same prime: larger power first
    });
    Group g;
    g.factors.reserve(keyed.size());
    for (const auto& [p, pk] : keyed) g.factors.push_back(pk);
    return g;
}

/// Uniserial over Z means cyclic of prime power order; the zero group is not
/// uniserial (callers that want "uniserial or zero" test is_zero separately).
inline bool is_uniserial(const Group& g) {
    if (g.rank() != 1) return false;
    u64 p, e;
    return detail::is_prime_power(g.factors[0], p, e);
}

/// An element, one residue per factor.
struct Element {
    std::vector<u64> coords;
    bool operator==(const Element&) const = default;
    auto operator<=>(const Element&) const = default;
};

inline Element zero_element(const Group& g) {
    return Element{std::vector<u64>(g.rank(), 0)};
}

inline void check_element(const Group& g, const Element& x) {
    if (x.coords.size() != g.rank())
        throw DomainMismatch("element rank does not match group rank");
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (x.coords[i] >= g.factors[i])
            throw DomainMismatch("element coordinate out of range");
}

inline Element add(const Group& g, const Element& a, const Element& b) {
    Element r = a;
    for (std::size_t i = 0; i < g.rank(); ++i)
        r.coords[i] = (a.coords[i] + b.coords[i]) % g.factors[i];
    return r;
}

inline Element neg(const Group& g, const Element& a) {
    Element r = a;
    for (std::size_t i = 0; i < g.rank(); ++i)
        r.coords[i] = a.coords[i] == 0 ? 0 : g.factors[i] - a.coords[i];
    return r;
}

inline Element sub(const Group& g, const Element& a, const Element& b) {
    return add(g, a, neg(g, b));
}

inline Element scalar_mul(const Group& g, u64 k, const Element& a) {
    Element r = a;
    for (std::size_t i = 0; i < g.rank(); ++i)
        r.coords[i] = (k % g.factors[i]) * a.coords[i] % g.factors[i];
    return r;
}

inline bool is_zero(const Element& a) {
    return std::all_of(a.coords.begin(), a.coords.end(), [](u64 c) { return c == 0; });
}

/// Order of an element: lcm over coordinates of n_i / gcd(x_i, n_i).
inline u64 element_order(const Group& g, const Element& a) {
    u64 ord = 1;
    for (std::size_t i = 0; i < g.rank(); ++i)
        ord = std::lcm(ord, g.factors[i] / std::gcd(a.coords[i], g.factors[i]));
    return ord;
}

/// Mixed-radix encoding of an element as an index in [0, order).
inline u64 encode(const Group& g, const Element& x) {
    u64 idx = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) idx = idx * g.factors[i] + x.coords[i];
    return idx;
}

inline Element decode(const Group& g, u64 idx) {
    Element x = zero_element(g);
    for (std::size_t i = g.rank(); i-- > 0;) {
        x.coords[i] = idx % g.factors[i];
        idx /= g.factors[i];
    }
    return x;
}

template <class F>
inline void for_each_element(const Group& g, F&& fn) {
    const u64 n = g.order();
    for (u64 idx = 0; idx < n; ++idx) fn(decode(g, idx));
}

/// Canonical isomorphism type of a finite abelian group given the multiset of
/// its element orders. For each prime p, the count of solutions of p^k x = 0
/// determines the number of cyclic p-factors of each exponent.
inline Group type_from_element_orders(const std::vector<u64>& orders) {
    const u64 n = orders.size();
    if (n == 0) throw std::invalid_argument("empty order multiset");
    std::vector<u64> primes;
    for (u64 o : orders) {
        u64 rest = o;
        while (rest > 1) {
            u64 p = detail::smallest_prime_factor(rest);
            while (rest % p == 0) rest /= p;
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
        }
    }
    std::sort(primes.begin(), primes.end());
    std::vector<u64> factors;
    for (u64 p : primes) {
        // N_k = #{x : order(x) divides p^k}; n_k = log_p N_k.
        std::vector<u64> logs; // n_0, n_1, ...
        logs.push_back(0);
        for (u64 k = 1, pk = p;; ++k, pk *= p) {
            u64 count = 0;
            for (u64 o : orders)
                if (pk % o == 0) ++count;
            u64 nk = 0;
            u64 c = count;
            while (c > 1) {
                if (c % p != 0) throw TheoremViolation("order statistics not a p-group layer");
                c /= p;
                ++nk;
            }
            logs.push_back(nk);
            if (logs[k] == logs[k - 1]) break; // stabilized
        }
        // Number of factors with exponent >= k is logs[k] - logs[k-1].
        std::vector<u64> at_least;
        for (std::size_t k = 1; k < logs.size(); ++k)
            at_least.push_back(logs[k] - logs[k - 1]);
        for (std::size_t k = at_least.size(); k-- > 0;) {
            u64 exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            u64 pk = 1;
            for (std::size_t t = 0; t <= k; ++t) pk *= p;
            for (u64 t = 0; t < exactly; ++t) factors.push_back(pk);
        }
    }
    return canonicalize(factors);
}

} // namespace extcat
