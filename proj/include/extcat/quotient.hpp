#pragma once

#include <unordered_map>

#include "extcat/subgroup.hpp"

namespace extcat {

namespace detail {

/// A small abelian group given by an explicit element list and a black-box
/// addition on opaque ids. Used for coset groups during basis extraction.
struct BlackBoxGroup {
    std::vector<u64> elems; // elems[0] is the identity
    std::function<u64(u64, u64)> add;

    u64 zero() const { return elems[0]; }
    u64 times(u64 k, u64 x) const {
        u64 acc = zero();
        for (u64 t = 0; t < k; ++t) acc = add(acc, x);
        return acc;
    }
    u64 order_of(u64 x) const {
        u64 acc = x, ord = 1;
        while (acc != zero()) { acc = add(acc, x); ++ord; }
        return ord;
    }
};

/// Basis of the p-primary part: returns (element, order) pairs whose cyclic
/// spans decompose the p-group as an internal direct sum. Recursive: a cyclic
/// subgroup of maximal order is a direct summand; basis elements of the
/// quotient by it lift to representatives of the same order.
inline void p_group_basis(const BlackBoxGroup& G, u64 p,
                          std::vector<std::pair<u64, u64>>& out) {
    if (G.elems.size() <= 1) return;
    u64 best = G.zero(), best_ord = 1;
    for (u64 x : G.elems) {
        const u64 o = G.order_of(x);
        if (o > best_ord) { best = x; best_ord = o; }
    }
    out.emplace_back(best, best_ord);
    if (best_ord == G.elems.size()) return;

    // Cosets of <best>, canonical representative = smallest id in coset.
    std::unordered_map<u64, u64> rep_of;
    for (u64 x : G.elems) {
        if (rep_of.count(x)) continue;
        std::vector<u64> coset;
        u64 shift = G.zero();
        u64 min_id = UINT64_MAX;
        for (u64 t = 0; t < best_ord; ++t) {
            coset.push_back(G.add(x, shift));
            min_id = std::min(min_id, coset.back());
            shift = G.add(shift, best);
        }
        for (u64 c : coset) rep_of[c] = min_id;
    }
    BlackBoxGroup Q;
    Q.elems.push_back(rep_of.at(G.zero()));
    for (u64 x : G.elems)
        if (rep_of.at(x) == x && x != Q.elems[0]) Q.elems.push_back(x);
    Q.add = [&G, &rep_of](u64 a, u64 b) { return rep_of.at(G.add(a, b)); };

    std::vector<std::pair<u64, u64>> qbasis;
    p_group_basis(Q, p, qbasis);
    for (auto& [y, f] : qbasis) {
        // f * y lies in <best>: f * y == c * best; c is divisible by f, and
        // y' = y - (c / f) * best has order exactly f.
        u64 fy = G.times(f, y);
        u64 c = 0, acc = G.zero();
        while (acc != fy) { acc = G.add(acc, best); ++c; }
        if (c % f != 0) throw TheoremViolation("basis lift: coefficient not divisible");
        u64 corr = G.times((best_ord - c / f) % best_ord, best); // -(c/f)*best
        u64 lifted = G.add(y, corr);
        if (G.order_of(lifted) != f) throw TheoremViolation("basis lift: wrong order");
        out.emplace_back(lifted, f);
    }
}

/// Basis of a finite abelian black-box group, one primary part at a time.
inline std::vector<std::pair<u64, u64>> abelian_basis(const BlackBoxGroup& G) {
    std::vector<std::pair<u64, u64>> basis;
    std::vector<u64> primes;
    for (u64 x : G.elems) {
        u64 rest = G.order_of(x);
        while (rest > 1) {
            u64 p = smallest_prime_factor(rest);
            while (rest % p == 0) rest /= p;
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        BlackBoxGroup P;
        for (u64 x : G.elems) {
            u64 o = G.order_of(x);
            bool ppower = true;
            while (o > 1) {
                if (o % p != 0) { ppower = false; break; }
                o /= p;
            }
            if (ppower) P.elems.push_back(x);
        }
        // identity is a p-power-order element, and P.elems keeps G's order,
        // whose first p-element is the identity.
        std::swap(P.elems[0],
                  *std::find(P.elems.begin(), P.elems.end(), G.zero()));
        P.add = G.add;
        std::vector<std::pair<u64, u64>> pb;
        p_group_basis(P, p, pb);
        // Canonical order within a prime: exponent descending.
        std::sort(pb.begin(), pb.end(),
                  [](const auto& a, const auto& b) { return a.second > b.second; });
        basis.insert(basis.end(), pb.begin(), pb.end());
    }
    return basis;
}

} // namespace detail

/// The quotient B/A materialized: a coset table, the canonical abstract type,
/// a projection table realizing a genuine surjective homomorphism B -> type
/// with kernel exactly A, and a fixed preimage in B for each canonical
/// generator of the abstract type.
struct QuotientView {
    Group ambient;
    Subgroup kernel;
    std::vector<u64> coset_id;     // indexed by encoded ambient element
    Group abstract_type;
    std::vector<u64> proj_encoded; // encoded image in abstract_type, per ambient element
    std::vector<Element> basis_preimage; // one per abstract_type factor

    u64 order() const { return abstract_type.order(); }
    bool is_zero() const { return abstract_type.is_zero(); }

    Element project(const Element& x) const {
        return decode(abstract_type, proj_encoded[encode(ambient, x)]);
    }
    u64 project_encoded(u64 ambient_idx) const { return proj_encoded[ambient_idx]; }

    /// The projection as an explicit Hom (matrix of generator images).
    Hom projection_hom() const {
        Hom h = zero_hom(ambient, abstract_type);
        for (std::size_t j = 0; j < ambient.rank(); ++j) {
            Element e = zero_element(ambient);
            e.coords[j] = 1;
            const Element img = project(e);
            for (std::size_t i = 0; i < abstract_type.rank(); ++i)
                h.at(i, j) = img.coords[i];
        }
        return h;
    }
};

inline QuotientView quotient(const Group& B, const Subgroup& A, const Caps& caps = Caps{}) {
    if (A.ambient != B) throw DomainMismatch("quotient: subgroup of a different group");
    check_cap(B, caps, "quotient");
    const u64 n = B.order();
    QuotientView q;
    q.ambient = B;
    q.kernel = A;

    // Cosets, canonical representative = smallest encoded element.
    std::vector<u64> rep(n, UINT64_MAX);
    std::vector<u64> reps;
    for (u64 idx = 0; idx < n; ++idx) {
        if (rep[idx] != UINT64_MAX) continue;
        const Element x = decode(B, idx);
        u64 min_id = UINT64_MAX;
        std::vector<u64> coset;
        for (u64 a : A.elements) {
            const u64 id = encode(B, add(B, x, decode(B, a)));
            coset.push_back(id);
            min_id = std::min(min_id, id);
        }
        for (u64 id : coset) rep[id] = min_id;
        reps.push_back(min_id);
    }
    std::sort(reps.begin(), reps.end());
    std::unordered_map<u64, u64> coset_index;
    for (std::size_t i = 0; i < reps.size(); ++i) coset_index[reps[i]] = i;
    q.coset_id.resize(n);
    for (u64 idx = 0; idx < n; ++idx) q.coset_id[idx] = coset_index.at(rep[idx]);

    // Basis of the coset group.
    detail::BlackBoxGroup Q;
    Q.elems.reserve(reps.size());
    Q.elems.push_back(rep[encode(B, zero_element(B))]);
    for (u64 r : reps)
        if (r != Q.elems[0]) Q.elems.push_back(r);
    Q.add = [&](u64 a, u64 b) {
        return rep[encode(B, add(B, decode(B, a), decode(B, b)))];
    };
    const auto basis = detail::abelian_basis(Q);

    std::vector<u64> type_orders;
    for (const auto& [g, o] : basis) type_orders.push_back(o);
    q.abstract_type = Group{type_orders}; // already canonically sorted

    // Coordinates of every coset with respect to the basis, by enumerating
    // all coefficient tuples.
    const u64 qn = reps.size();
    std::vector<u64> coords(qn, UINT64_MAX);
    std::vector<u64> digit(basis.size(), 0);
    u64 assigned = 0;
    while (true) {
        u64 pt = Q.zero();
        Element abs = zero_element(q.abstract_type);
        for (std::size_t t = 0; t < basis.size(); ++t) {
            pt = Q.add(pt, Q.times(digit[t], basis[t].first));
            abs.coords[t] = digit[t];
        }
        const u64 ci = coset_index.at(pt);
        if (coords[ci] != UINT64_MAX)
            throw TheoremViolation("quotient basis does not span freely");
        coords[ci] = encode(q.abstract_type, abs);
        ++assigned;
        std::size_t pos = 0;
        for (; pos < basis.size(); ++pos) {
            if (++digit[pos] < basis[pos].second) break;
            digit[pos] = 0;
        }
        if (pos == basis.size()) break;
    }
    if (assigned != qn) throw TheoremViolation("quotient basis does not cover all cosets");

    q.proj_encoded.resize(n);
    for (u64 idx = 0; idx < n; ++idx) q.proj_encoded[idx] = coords[q.coset_id[idx]];

    q.basis_preimage.reserve(basis.size());
    for (const auto& [g, o] : basis) q.basis_preimage.push_back(decode(B, g));
    return q;
}

} // namespace extcat
