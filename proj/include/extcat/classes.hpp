#pragma once

#include <array>

#include "extcat/ext.hpp"

namespace extcat {

/// The four class labels: monogeny/epigeny crossed with lower/upper end term.
enum class ClassLabel : int { ml = 0, el = 1, mu = 2, eu = 3 };

inline constexpr std::array<ClassLabel, 4> all_labels = {ClassLabel::ml, ClassLabel::el,
                                                         ClassLabel::mu, ClassLabel::eu};

inline const char* label_name(ClassLabel l) {
    switch (l) {
        case ClassLabel::ml: return "m,l";
        case ClassLabel::el: return "e,l";
        case ClassLabel::mu: return "m,u";
        case ClassLabel::eu: return "e,u";
    }
    return "?";
}

/// The defining predicate of each label, for a morphism f: X -> Y.
///   (m,l): ker f meets A trivially          (f restricted to A injective)
///   (e,l): f(A) = A'                        (f restricted to A onto A')
///   (m,u): f^{-1}(A') = A                   (induced map on quotients injective)
///   (e,u): f(B) + A' = B'                   (induced map on quotients surjective)
/// Failing the predicate is exactly membership in the corresponding ideal.
/// Cyclic end terms admit O(1) evaluation against the cached generators; the
/// generic set-theoretic fallback covers aggregates.
inline bool class_predicate(const ExtObject& X, const ExtObject& Y, const Hom& f,
                            ClassLabel label) {
    switch (label) {
        case ClassLabel::ml: {
            if (X.A.is_zero()) return true;
            if (X.gen_A)
                return element_order(Y.B, f.apply(*X.gen_A)) == X.A.order();
            for (u64 idx : X.A.elements) {
                const Element a = decode(X.B, idx);
                if (!is_zero(a) && is_zero(f.apply(a))) return false;
            }
            return true;
        }
        case ClassLabel::el: {
            if (X.A.is_zero()) return Y.A.is_zero();
            if (X.gen_A) {
                const Element v = f.apply(*X.gen_A);
                return Y.A.contains(v) && element_order(Y.B, v) == Y.A.order();
            }
            Subgroup img = image_of_subgroup(f, X.A);
            return img.order() == Y.A.order() && Y.A.same_elements(img);
        }
        case ClassLabel::mu: {
            if (X.C.is_zero()) return true;
            if (X.gen_C_pre)
                return element_order(Y.C.abstract_type,
                                     Y.C.project(f.apply(*X.gen_C_pre))) == X.C.order();
            u64 preimage_count = 0;
            for_each_element(X.B, [&](const Element& x) {
                if (Y.A.contains(f.apply(x))) ++preimage_count;
            });
            return preimage_count == X.A.order();
        }
        case ClassLabel::eu: {
            if (Y.C.is_zero()) return true;
            if (X.C.is_zero()) return false;
            if (X.gen_C_pre)
                return element_order(Y.C.abstract_type,
                                     Y.C.project(f.apply(*X.gen_C_pre))) == Y.C.order();
            std::vector<Element> gens = Y.A.generators;
            for (std::size_t j = 0; j < X.B.rank(); ++j) {
                Element e = zero_element(X.B);
                e.coords[j] = 1;
                gens.push_back(f.apply(e));
            }
            Caps wide;
            wide.group_order = std::max<u64>(wide.group_order, Y.B.order());
            return subgroup_generated(Y.B, gens, wide).order() == Y.B.order();
        }
    }
    return false;
}

struct ClassWitness {
    Hom forward;
    Hom backward;
};

/// Same (a,b)-class: a pair of opposed morphisms each satisfying the label's
/// predicate. Returns the first witness pair in enumeration order.
inline std::optional<ClassWitness> same_class_witness(const ExtObject& X, const ExtObject& Y,
                                                      ClassLabel label,
                                                      const Caps& caps = Caps{}) {
    if (hom_count(X.B, Y.B, caps.hom_count) > caps.hom_count ||
        hom_count(Y.B, X.B, caps.hom_count) > caps.hom_count)
        throw CapExceeded("same_class: hom space exceeds cap");
    std::optional<Hom> fwd;
    for_each_morphism(X, Y, [&](const Hom& f) -> bool {
        if (class_predicate(X, Y, f, label)) { fwd = f; return false; }
        return true;
    });
    if (!fwd) return std::nullopt;
    std::optional<Hom> bwd;
    for_each_morphism(Y, X, [&](const Hom& g) -> bool {
        if (class_predicate(Y, X, g, label)) { bwd = g; return false; }
        return true;
    });
    if (!bwd) return std::nullopt;
    return ClassWitness{*fwd, *bwd};
}

inline bool same_class(const ExtObject& X, const ExtObject& Y, ClassLabel label,
                       const Caps& caps = Caps{}) {
    return same_class_witness(X, Y, label, caps).has_value();
}

/// Isomorphism criterion inside the uniserial-ends subcategory: equality of
/// all four classes.
inline bool iso_via_classes(const ExtObject& X, const ExtObject& Y, const Caps& caps = Caps{}) {
    if (!X.in_U || !Y.in_U)
        throw ScopeViolation("iso_via_classes: both objects must have non-zero uniserial ends");
    for (ClassLabel l : all_labels)
        if (!same_class(X, Y, l, caps)) return false;
    return true;
}

struct ClassPartition {
    ClassLabel label;
    std::vector<std::vector<std::size_t>> blocks; // disjoint, sorted index sets
    std::vector<std::size_t> excluded;            // zero relevant end term
};

/// Indices whose relevant end term is zero do not participate: lower-label
/// classes of such objects equal the zero class, upper ones likewise.
inline bool participates(const ExtObject& X, ClassLabel label) {
    const bool lower = label == ClassLabel::ml || label == ClassLabel::el;
    return lower ? !X.A.is_zero() : !X.C.is_zero();
}

/// Partition a list into same-class blocks, verifying transitivity of the
/// pairwise relation on the way (its failure would contradict the class
/// composition lemma and aborts the build).
inline ClassPartition partition(const std::vector<const ExtObject*>& objects, ClassLabel label,
                                const Caps& caps = Caps{}) {
    ClassPartition part;
    part.label = label;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (participates(*objects[i], label))
            live.push_back(i);
        else
            part.excluded.push_back(i);
    }
    const std::size_t k = live.size();
    std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
        rel[a][a] = 1;
        for (std::size_t b = a + 1; b < k; ++b) {
            const bool eq = same_class(*objects[live[a]], *objects[live[b]], label, caps);
            rel[a][b] = rel[b][a] = eq ? 1 : 0;
        }
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                if (rel[a][b] && rel[b][c] && !rel[a][c])
                    throw NonTransitive("class equality not transitive at label " +
                                        std::string(label_name(label)));
    std::vector<char> placed(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        if (placed[a]) continue;
        std::vector<std::size_t> block;
        for (std::size_t b = a; b < k; ++b)
            if (rel[a][b]) {
                placed[b] = 1;
                block.push_back(live[b]);
            }
        part.blocks.push_back(std::move(block));
    }
    return part;
}

} // namespace extcat
