#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "extcat/caps.hpp"
#include "extcat/group.hpp"

namespace extcat {

/// A homomorphism between finite abelian groups, stored as a matrix of
/// residues: entry (i, j) is the i-th coordinate of the image of the j-th
/// canonical generator of the domain, modulo the i-th codomain factor order.
/// Well-definedness requires d_j * m[i][j] == 0 (mod e_i) for all i, j.
struct Hom {
    Group domain;
    Group codomain;
    std::vector<u64> m; // row-major, rows = codomain.rank(), cols = domain.rank()

    u64& at(std::size_t i, std::size_t j) { return m[i * domain.rank() + j]; }
    u64 at(std::size_t i, std::size_t j) const { return m[i * domain.rank() + j]; }

    Element apply(const Element& x) const {
        Element y = zero_element(codomain);
        for (std::size_t i = 0; i < codomain.rank(); ++i) {
            u64 acc = 0;
            for (std::size_t j = 0; j < domain.rank(); ++j)
                acc = (acc + at(i, j) * (x.coords[j] % codomain.factors[i])) % codomain.factors[i];
            y.coords[i] = acc;
        }
        return y;
    }

    bool operator==(const Hom&) const = default;
};

inline bool well_defined(const Hom& h) {
    for (std::size_t i = 0; i < h.codomain.rank(); ++i)
        for (std::size_t j = 0; j < h.domain.rank(); ++j)
            if ((h.domain.factors[j] % h.codomain.factors[i]) * h.at(i, j) %
                    h.codomain.factors[i] !=
                0)
                return false;
    return true;
}

inline Hom zero_hom(const Group& domain, const Group& codomain) {
    return Hom{domain, codomain, std::vector<u64>(domain.rank() * codomain.rank(), 0)};
}

inline Hom identity_hom(const Group& g) {
    Hom h = zero_hom(g, g);
    for (std::size_t i = 0; i < g.rank(); ++i) h.at(i, i) = 1;
    return h;
}

inline Hom compose(const Hom& g, const Hom& f) {
    if (f.codomain != g.domain) throw DomainMismatch("compose: codomain/domain mismatch");
    Hom h = zero_hom(f.domain, g.codomain);
    for (std::size_t i = 0; i < g.codomain.rank(); ++i) {
        const u64 e = g.codomain.factors[i];
        for (std::size_t j = 0; j < f.domain.rank(); ++j) {
            u64 acc = 0;
            for (std::size_t k = 0; k < f.codomain.rank(); ++k)
                acc = (acc + g.at(i, k) * (f.at(k, j) % e)) % e;
            h.at(i, j) = acc;
        }
    }
    return h;
}

inline Hom hom_add(const Hom& f, const Hom& g) {
    if (f.domain != g.domain || f.codomain != g.codomain)
        throw DomainMismatch("hom_add: signature mismatch");
    Hom h = f;
    for (std::size_t i = 0; i < f.codomain.rank(); ++i)
        for (std::size_t j = 0; j < f.domain.rank(); ++j)
            h.at(i, j) = (f.at(i, j) + g.at(i, j)) % f.codomain.factors[i];
    return h;
}

inline Hom hom_sub(const Hom& f, const Hom& g) {
    if (f.domain != g.domain || f.codomain != g.codomain)
        throw DomainMismatch("hom_sub: signature mismatch");
    Hom h = f;
    for (std::size_t i = 0; i < f.codomain.rank(); ++i)
        for (std::size_t j = 0; j < f.domain.rank(); ++j) {
            const u64 e = f.codomain.factors[i];
            h.at(i, j) = (f.at(i, j) + e - g.at(i, j)) % e;
        }
    return h;
}

/// |Hom(G, H)| = prod over (i, j) of gcd(d_j, e_i). Saturates at cap+1.
inline u64 hom_count(const Group& g, const Group& h, u64 saturate_at = UINT64_MAX) {
    u64 count = 1;
    for (u64 e : h.factors)
        for (u64 d : g.factors) {
            count *= std::gcd(d, e);
            if (count > saturate_at) return saturate_at + 1;
        }
    return count;
}

/// Visit every well-defined hom G -> H exactly once, in a fixed entry-wise
/// lexicographic order. The callback may return void, or bool to stop early
/// (return false stops). Returns false iff stopped early.
template <class F>
inline bool for_each_hom(const Group& g, const Group& h, F&& fn) {
    const std::size_t rows = h.rank(), cols = g.rank();
    // Entry (i, j) ranges over multiples of e_i / gcd(d_j, e_i).
    std::vector<u64> step(rows * cols), count(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const u64 gc = std::gcd(g.factors[j], h.factors[i]);
            step[i * cols + j] = h.factors[i] / gc;
            count[i * cols + j] = gc;
        }
    Hom cur = zero_hom(g, h);
    std::vector<u64> digit(rows * cols, 0);
    const std::size_t total = rows * cols;
    while (true) {
        if constexpr (std::is_void_v<decltype(fn(cur))>) {
            fn(cur);
        } else {
            if (!fn(cur)) return false;
        }
        std::size_t pos = 0;
        for (; pos < total; ++pos) {
            if (++digit[pos] < count[pos]) {
                cur.m[pos] = digit[pos] * step[pos];
                break;
            }
            digit[pos] = 0;
            cur.m[pos] = 0;
        }
        if (pos == total) break;
    }
    return true;
}

inline std::vector<Hom> enumerate_homs(const Group& g, const Group& h, const Caps& caps) {
    const u64 predicted = hom_count(g, h, caps.hom_count);
    if (predicted > caps.hom_count)
        throw CapExceeded("enumerate_homs: predicted hom count exceeds cap");
    std::vector<Hom> out;
    out.reserve(predicted);
    for_each_hom(g, h, [&](const Hom& f) { out.push_back(f); });
    return out;
}

} // namespace extcat
