#pragma once

#include <optional>

#include "extcat/quotient.hpp"

namespace extcat {

/// An object of the category of extensions: an ambient group B with a
/// distinguished subgroup A, the quotient C = B/A materialized alongside.
/// In scope, A and C are each uniserial or zero; direct-sum aggregates are
/// exempt (their end terms are sums of uniserials).
struct ExtObject {
    Group B;
    Subgroup A;
    QuotientView C;
    bool in_U = false;        // A and C both non-zero uniserial
    bool in_U0 = false;       // A = 0, C non-zero uniserial
    bool in_Uupper0 = false;  // C = 0, A non-zero uniserial
    bool aggregate = false;   // built by direct_sum, scope check skipped
    std::string name;

    // Caches for O(1) class predicates. gen_A generates A when A is cyclic
    // non-zero; gen_C_pre is a preimage in B of a generator of C when C is
    // cyclic non-zero.
    std::optional<Element> gen_A;
    std::optional<Element> gen_C_pre;

    bool is_zero_object() const { return B.is_zero(); }
    u64 order_A() const { return A.order(); }
    u64 order_C() const { return C.order(); }
};

inline ExtObject make_ext_unchecked(const Group& B, const std::vector<Element>& gens_of_A,
                                    const Caps& caps = Caps{}) {
    ExtObject x;
    x.B = B;
    x.A = subgroup_generated(B, gens_of_A, caps);
    x.C = quotient(B, x.A, caps);
    const bool a_zero = x.A.is_zero();
    const bool c_zero = x.C.is_zero();
    const bool a_uni = is_uniserial(x.A.canonical_type);
    const bool c_uni = is_uniserial(x.C.abstract_type);
    x.in_U = !a_zero && !c_zero && a_uni && c_uni;
    x.in_U0 = a_zero && c_uni;
    x.in_Uupper0 = c_zero && a_uni;
    if (!a_zero && x.A.canonical_type.rank() == 1) {
        for (u64 idx : x.A.elements) {
            const Element e = decode(B, idx);
            if (element_order(B, e) == x.A.order()) { x.gen_A = e; break; }
        }
    }
    if (!c_zero && x.C.abstract_type.rank() == 1)
        x.gen_C_pre = x.C.basis_preimage[0];
    return x;
}

/// Construct an in-scope object. Both end terms must be uniserial or zero.
inline ExtObject make_ext(const Group& B, const std::vector<Element>& gens_of_A,
                          const Caps& caps = Caps{}) {
    ExtObject x = make_ext_unchecked(B, gens_of_A, caps);
    if (!x.A.is_zero() && !is_uniserial(x.A.canonical_type))
        throw ScopeViolation("make_ext: A is neither zero nor uniserial (A = " +
                             x.A.canonical_type.to_string() + ")");
    if (!x.C.is_zero() && !is_uniserial(x.C.abstract_type))
        throw ScopeViolation("make_ext: C is neither zero nor uniserial (C = " +
                             x.C.abstract_type.to_string() + ")");
    return x;
}

inline ExtObject zero_ext_object() { return make_ext_unchecked(Group{}, {}); }

/// A morphism of extensions: a group hom on the ambient groups carrying the
/// distinguished subgroup of the source into that of the target.
struct ExtMorphism {
    const ExtObject* source;
    const ExtObject* target;
    Hom f;
};

inline bool carries_A_into_A(const ExtObject& X, const ExtObject& Y, const Hom& f) {
    for (const Element& g : X.A.generators)
        if (!Y.A.contains(f.apply(g))) return false;
    return true;
}

inline bool is_ext_morphism(const ExtObject& X, const ExtObject& Y, const Hom& f) {
    return f.domain == X.B && f.codomain == Y.B && carries_A_into_A(X, Y, f);
}

/// Visit every morphism X -> Y. Callback takes const Hom&; bool return stops
/// early on false. Returns false iff stopped early.
template <class F>
inline bool for_each_morphism(const ExtObject& X, const ExtObject& Y, F&& fn) {
    return for_each_hom(X.B, Y.B, [&](const Hom& f) -> bool {
        if (!carries_A_into_A(X, Y, f)) return true;
        if constexpr (std::is_void_v<decltype(fn(f))>) {
            fn(f);
            return true;
        } else {
            return fn(f);
        }
    });
}

inline std::vector<Hom> morphisms(const ExtObject& X, const ExtObject& Y,
                                  const Caps& caps = Caps{}) {
    if (hom_count(X.B, Y.B, caps.hom_count) > caps.hom_count)
        throw CapExceeded("morphisms: hom space exceeds cap");
    std::vector<Hom> out;
    for_each_morphism(X, Y, [&](const Hom& f) { out.push_back(f); });
    return out;
}

/// f restricted to the distinguished subgroups, as a map of abstract types.
/// A discrete logarithm against the cached cyclic generators; end terms in
/// scope are cyclic, so a 1x1 (or empty) matrix suffices.
inline Hom restrict_lower(const ExtObject& X, const ExtObject& Y, const Hom& f) {
    if (!is_ext_morphism(X, Y, f)) throw DomainMismatch("restrict_lower: not a morphism");
    Hom h = zero_hom(X.A.canonical_type, Y.A.canonical_type);
    if (X.A.is_zero() || Y.A.is_zero()) return h;
    if (!X.gen_A || !Y.gen_A)
        throw ScopeViolation("restrict_lower: non-cyclic end term");
    const Element img = f.apply(*X.gen_A);
    Element acc = zero_element(Y.B);
    for (u64 k = 0; k < Y.A.order(); ++k) {
        if (acc == img) { h.at(0, 0) = k; return h; }
        acc = add(Y.B, acc, *Y.gen_A);
    }
    throw TheoremViolation("restrict_lower: image not in target subgroup");
}

/// The induced map on quotient types, via the cached basis preimages:
/// column j is the projection in Y of f applied to X's j-th basis preimage.
inline Hom induce_upper(const ExtObject& X, const ExtObject& Y, const Hom& f) {
    if (!is_ext_morphism(X, Y, f)) throw DomainMismatch("induce_upper: not a morphism");
    Hom h = zero_hom(X.C.abstract_type, Y.C.abstract_type);
    for (std::size_t j = 0; j < X.C.abstract_type.rank(); ++j) {
        const Element img = Y.C.project(f.apply(X.C.basis_preimage[j]));
        for (std::size_t i = 0; i < Y.C.abstract_type.rank(); ++i)
            h.at(i, j) = img.coords[i];
    }
    return h;
}

/// Isomorphism in the extension category: f bijective and f(A) = A' on the
/// nose (carrying A strictly inside A' is not enough).
inline bool is_iso_in_E(const ExtObject& X, const ExtObject& Y, const Hom& f,
                        const Caps& caps = Caps{}) {
    if (!is_ext_morphism(X, Y, f)) return false;
    if (X.B.order() != Y.B.order() || X.A.order() != Y.A.order()) return false;
    if (!is_injective(f, caps)) return false;
    // f injective and |A| = |A'|, so f(A) subset of A' implies equality.
    return true;
}

/// A direct sum with its coordinate embeddings and projections retained.
struct SumExt {
    ExtObject obj;
    std::vector<Hom> embeddings;  // B_i -> B
    std::vector<Hom> projections; // B -> B_i
};

inline SumExt direct_sum(const std::vector<const ExtObject*>& objects,
                         const Caps& caps = Caps{}) {
    if (objects.empty()) throw std::invalid_argument("direct_sum: empty list");
    u64 total = 1;
    std::vector<u64> orders;
    for (const ExtObject* x : objects) {
        total *= std::max<u64>(1, x->B.order());
        for (u64 f : x->B.factors) orders.push_back(f);
        if (total > caps.oracle_sum_order)
            throw CapExceeded("direct_sum: sum order exceeds cap");
    }
    // Canonical ordering of the concatenated factors, tracking where each
    // summand coordinate lands.
    std::vector<std::size_t> perm(orders.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        const u64 pa = prime_of(orders[a]), pb = prime_of(orders[b]);
        if (pa != pb) return pa < pb;
        return orders[a] > orders[b];
    });
    std::vector<std::size_t> pos(orders.size()); // original index -> sorted column
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    Group B;
    for (std::size_t i : perm) B.factors.push_back(orders[i]);

    Caps sum_caps = caps;
    sum_caps.group_order = std::max(caps.group_order, caps.oracle_sum_order);

    std::vector<Element> a_gens;
    std::vector<Hom> embeddings, projections;
    std::size_t offset = 0;
    for (const ExtObject* x : objects) {
        Hom emb = zero_hom(x->B, B);
        Hom proj = zero_hom(B, x->B);
        for (std::size_t j = 0; j < x->B.rank(); ++j) {
            emb.at(pos[offset + j], j) = 1;
            proj.at(j, pos[offset + j]) = 1;
        }
        for (const Element& g : x->A.generators) a_gens.push_back(emb.apply(g));
        embeddings.push_back(std::move(emb));
        projections.push_back(std::move(proj));
        offset += x->B.rank();
    }
    SumExt s;
    s.obj = make_ext_unchecked(B, a_gens, sum_caps);
    s.obj.aggregate = true;
    s.embeddings = std::move(embeddings);
    s.projections = std::move(projections);
    return s;
}

/// Splitness by brute force: an endomorphism of B with image inside A fixing
/// A pointwise is a retraction of the inclusion.
inline bool is_split(const ExtObject& X, const Caps& caps = Caps{}) {
    if (X.A.is_zero() || X.C.is_zero()) return true;
    if (hom_count(X.B, X.B, caps.hom_count) > caps.hom_count)
        throw CapExceeded("is_split: hom space exceeds cap");
    bool found = false;
    for_each_hom(X.B, X.B, [&](const Hom& r) -> bool {
        for (const Element& g : X.A.generators)
            if (r.apply(g) != g) return true;
        for (std::size_t j = 0; j < X.B.rank(); ++j) {
            Element e = zero_element(X.B);
            e.coords[j] = 1;
            if (!X.A.contains(r.apply(e))) return true;
        }
        found = true;
        return false;
    });
    return found;
}

} // namespace extcat
