#pragma once

#include <vector>

#include "extcat/hom.hpp"

namespace extcat {

/// A subgroup of an explicit ambient group, with its full element set cached
/// (encoded, sorted) and an O(1) membership table over the ambient group.
struct Subgroup {
    Group ambient;
    std::vector<Element> generators;
    std::vector<u64> elements; // encoded, sorted ascending
    std::vector<char> membership; // indexed by encoded ambient element
    Group canonical_type;

    u64 order() const { return elements.size(); }
    bool is_zero() const { return elements.size() == 1; }
    bool is_whole() const { return elements.size() == ambient.order(); }
    bool contains_encoded(u64 idx) const { return membership[idx] != 0; }
    bool contains(const Element& x) const { return membership[encode(ambient, x)] != 0; }

    bool same_elements(const Subgroup& other) const {
        return ambient == other.ambient && elements == other.elements;
    }
};

inline void check_cap(const Group& g, const Caps& caps, const char* where) {
    if (g.order() > caps.group_order)
        throw CapExceeded(std::string(where) + ": group order exceeds enumeration cap");
}

/// Closure of a generating set under addition, computed exhaustively.
inline Subgroup subgroup_generated(const Group& B, const std::vector<Element>& gens,
                                   const Caps& caps = Caps{}) {
    check_cap(B, caps, "subgroup_generated");
    for (const Element& g : gens) check_element(B, g);
    const u64 n = B.order();
    std::vector<char> in(n, 0);
    std::vector<u64> frontier;
    const u64 zero_idx = encode(B, zero_element(B));
    in[zero_idx] = 1;
    frontier.push_back(zero_idx);
    std::vector<u64> all = frontier;
    for (std::size_t head = 0; head < all.size(); ++head) {
        const Element cur = decode(B, all[head]);
        for (const Element& g : gens) {
            const u64 nxt = encode(B, add(B, cur, g));
            if (!in[nxt]) {
                in[nxt] = 1;
                all.push_back(nxt);
            }
        }
    }
    std::sort(all.begin(), all.end());
    std::vector<u64> orders;
    orders.reserve(all.size());
    for (u64 idx : all) orders.push_back(element_order(B, decode(B, idx)));
    Subgroup s;
    s.ambient = B;
    s.generators = gens;
    s.elements = std::move(all);
    s.membership = std::move(in);
    s.canonical_type = type_from_element_orders(orders);
    return s;
}

inline Subgroup trivial_subgroup(const Group& B, const Caps& caps = Caps{}) {
    return subgroup_generated(B, {}, caps);
}

inline Subgroup whole_subgroup(const Group& B, const Caps& caps = Caps{}) {
    std::vector<Element> gens;
    for (std::size_t j = 0; j < B.rank(); ++j) {
        Element e = zero_element(B);
        e.coords[j] = 1;
        gens.push_back(e);
    }
    return subgroup_generated(B, gens, caps);
}

inline Subgroup kernel(const Hom& h, const Caps& caps = Caps{}) {
    check_cap(h.domain, caps, "kernel");
    std::vector<Element> kernel_elems;
    for_each_element(h.domain, [&](const Element& x) {
        if (is_zero(h.apply(x))) kernel_elems.push_back(x);
    });
    return subgroup_generated(h.domain, kernel_elems, caps);
}

inline Subgroup image(const Hom& h, const Caps& caps = Caps{}) {
    check_cap(h.domain, caps, "image");
    check_cap(h.codomain, caps, "image");
    std::vector<Element> gens;
    for (std::size_t j = 0; j < h.domain.rank(); ++j) {
        Element e = zero_element(h.domain);
        e.coords[j] = 1;
        gens.push_back(h.apply(e));
    }
    return subgroup_generated(h.codomain, gens, caps);
}

inline bool is_injective(const Hom& h, const Caps& caps = Caps{}) {
    check_cap(h.domain, caps, "is_injective");
    bool inj = true;
    for_each_element(h.domain, [&](const Element& x) {
        if (inj && !is_zero(x) && is_zero(h.apply(x))) inj = false;
    });
    return inj;
}

inline bool is_surjective(const Hom& h, const Caps& caps = Caps{}) {
    return image(h, caps).order() == h.codomain.order();
}

/// Image of a subgroup: the subgroup of h's codomain generated by the images
/// of S's elements.
inline Subgroup image_of_subgroup(const Hom& h, const Subgroup& S, const Caps& caps = Caps{}) {
    if (S.ambient != h.domain) throw DomainMismatch("image_of_subgroup: ambient mismatch");
    std::vector<Element> gens;
    gens.reserve(S.generators.size());
    for (const Element& g : S.generators) gens.push_back(h.apply(g));
    return subgroup_generated(h.codomain, gens, caps);
}

} // namespace extcat
