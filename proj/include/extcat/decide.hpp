#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "extcat/classes.hpp"
#include "extcat/digraph.hpp"
#include "extcat/endo.hpp"
#include "extcat/ext.hpp"

namespace extcat {

/// Identifies an extension up to equality of data: the ambient group and the
/// element set of the lower term determine every class-relevant feature.
inline std::vector<u64> object_key(const ExtObject& o) {
    std::vector<u64> k = o.B.factors;
    k.push_back(UINT64_MAX); // separator; never a factor order
    k.insert(k.end(), o.A.elements.begin(), o.A.elements.end());
    return k;
}

/// Memoizes the symmetric same-class relation across repeated decider calls.
/// Keyed by object content, so copies of the same extension share entries.
struct SameClassCache {
    Caps caps;
    std::map<std::tuple<std::vector<u64>, std::vector<u64>, int>, bool> table;

    explicit SameClassCache(const Caps& c = Caps{}) : caps(c) {}

    bool same(const ExtObject& x, const ExtObject& y, ClassLabel lab) {
        auto kx = object_key(x);
        auto ky = object_key(y);
        if (ky < kx) return same(y, x, lab); // relation is symmetric
        const auto key = std::make_tuple(std::move(kx), std::move(ky), static_cast<int>(lab));
        if (auto it = table.find(key); it != table.end()) return it->second;
        const bool r = same_class(x, y, lab, caps);
        table[key] = r;
        return r;
    }
};

struct DecisionReport {
    bool verdict = false;
    std::string method;
    // On success: per label, the class-preserving bijection as (left index,
    // right index) pairs in ascending left order.
    std::map<ClassLabel, std::vector<std::pair<std::size_t, std::size_t>>> witnesses;
    struct Failure {
        ClassLabel label;
        std::vector<std::size_t> left_block, right_block; // mismatched counts
    };
    std::optional<Failure> failure;
    // Named index sets the method worked over (e.g. "X_l", "Y_u", "X_ml").
    std::map<std::string, std::vector<std::size_t>> index_sets;
};

namespace detail {

struct BlockDecision {
    bool ok = false;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
    std::vector<std::size_t> left_block, right_block;
};

/// Decides whether a class-preserving bijection L -> R exists, by matching
/// same-class blocks and comparing their sizes.
inline BlockDecision class_bijection(const std::vector<ExtObject>& left,
                                     const std::vector<std::size_t>& L,
                                     const std::vector<ExtObject>& right,
                                     const std::vector<std::size_t>& R,
                                     ClassLabel lab,
                                     SameClassCache& cache) {
    BlockDecision out;
    if (L.size() != R.size()) {
        out.left_block = L;
        out.right_block = R;
        return out;
    }
    std::vector<char> left_used(L.size(), 0), right_used(R.size(), 0);
    for (std::size_t s = 0; s < L.size(); ++s) {
        if (left_used[s]) continue;
        std::vector<std::size_t> lb{L[s]};
        left_used[s] = 1;
        for (std::size_t t = s + 1; t < L.size(); ++t)
            if (!left_used[t] && cache.same(left[L[s]], left[L[t]], lab)) {
                lb.push_back(L[t]);
                left_used[t] = 1;
            }
        std::vector<std::size_t> rb;
        for (std::size_t t = 0; t < R.size(); ++t)
            if (!right_used[t] && cache.same(left[L[s]], right[R[t]], lab)) {
                rb.push_back(R[t]);
                right_used[t] = 1;
            }
        if (lb.size() != rb.size()) {
            out.left_block = lb;
            out.right_block = rb;
            return out;
        }
        for (std::size_t t = 0; t < lb.size(); ++t)
            out.pairing.emplace_back(lb[t], rb[t]);
    }
    for (std::size_t t = 0; t < R.size(); ++t)
        if (!right_used[t]) {
            out.right_block.push_back(R[t]); // right objects matching no left block
        }
    if (!out.right_block.empty()) return out;
    std::sort(out.pairing.begin(), out.pairing.end());
    out.ok = true;
    return out;
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

inline void require_all_in_U(const std::vector<ExtObject>& objs) {
    for (const auto& o : objs)
        if (!o.in_U) throw ScopeViolation("decider requires nonzero uniserial end terms");
}

} // namespace detail

/// Decides list isomorphism via four bijections over the indices whose
/// corresponding ideal is maximal in the endomorphism ring.
inline DecisionReport decide_parziale(const std::vector<ExtObject>& left,
                                      const std::vector<ExtObject>& right,
                                      const Caps& caps = Caps{},
                                      SameClassCache* shared = nullptr) {
    detail::require_all_in_U(left);
    detail::require_all_in_U(right);
    DecisionReport rep;
    rep.method = "parziale";
    SameClassCache local(caps);
    SameClassCache& cache = shared ? *shared : local;

    auto maximal_sets = [&](const std::vector<ExtObject>& objs) {
        std::array<std::vector<std::size_t>, 4> sets;
        for (std::size_t i = 0; i < objs.size(); ++i) {
            const EndoRingAnalysis an = analyze(objs[i], caps, /*verify_invariants=*/false);
            for (ClassLabel lab : all_labels)
                if (an.label_maximal[static_cast<int>(lab)])
                    sets[static_cast<int>(lab)].push_back(i);
        }
        return sets;
    };
    const auto lsets = maximal_sets(left);
    const auto rsets = maximal_sets(right);
    for (ClassLabel lab : all_labels) {
        rep.index_sets[std::string("X_") + label_name(lab)] = lsets[static_cast<int>(lab)];
        rep.index_sets[std::string("Y_") + label_name(lab)] = rsets[static_cast<int>(lab)];
    }

    rep.verdict = true;
    for (ClassLabel lab : all_labels) {
        auto bd = detail::class_bijection(left, lsets[static_cast<int>(lab)], right,
                                          rsets[static_cast<int>(lab)], lab, cache);
        if (!bd.ok) {
            rep.verdict = false;
            rep.witnesses.clear();
            rep.failure = DecisionReport::Failure{lab, bd.left_block, bd.right_block};
            return rep;
        }
        rep.witnesses[lab] = std::move(bd.pairing);
    }
    return rep;
}

/// Decides list isomorphism via four class-preserving permutations of the
/// full index range; requires equal list lengths.
inline DecisionReport decide_completo(const std::vector<ExtObject>& left,
                                      const std::vector<ExtObject>& right,
                                      const Caps& caps = Caps{},
                                      SameClassCache* shared = nullptr) {
    detail::require_all_in_U(left);
    detail::require_all_in_U(right);
    DecisionReport rep;
    rep.method = "completo";
    const auto L = detail::all_indices(left.size());
    const auto R = detail::all_indices(right.size());
    rep.index_sets["X"] = L;
    rep.index_sets["Y"] = R;
    if (left.size() != right.size()) {
        rep.verdict = false;
        rep.failure = DecisionReport::Failure{ClassLabel::ml, L, R};
        return rep;
    }
    SameClassCache local(caps);
    SameClassCache& cache = shared ? *shared : local;
    rep.verdict = true;
    for (ClassLabel lab : all_labels) {
        auto bd = detail::class_bijection(left, L, right, R, lab, cache);
        if (!bd.ok) {
            rep.verdict = false;
            rep.witnesses.clear();
            rep.failure = DecisionReport::Failure{lab, bd.left_block, bd.right_block};
            return rep;
        }
        rep.witnesses[lab] = std::move(bd.pairing);
    }
    return rep;
}

/// Decides direct-sum isomorphism for lists whose end terms may be zero:
/// bijections are required only on the indices with nonzero lower (resp.
/// upper) end term, and the two lists may have different lengths.
inline DecisionReport decide_completo_prime(const std::vector<ExtObject>& left,
                                            const std::vector<ExtObject>& right,
                                            const Caps& caps = Caps{},
                                            SameClassCache* shared = nullptr) {
    for (const auto* objs : {&left, &right})
        for (const auto& o : *objs)
            if (o.B.is_zero())
                throw ScopeViolation("decide_completo_prime: zero objects not accepted");
    DecisionReport rep;
    rep.method = "completo_prime";
    auto lower_set = [](const std::vector<ExtObject>& objs) {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < objs.size(); ++i)
            if (!objs[i].A.is_zero()) v.push_back(i);
        return v;
    };
    auto upper_set = [](const std::vector<ExtObject>& objs) {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < objs.size(); ++i)
            if (!objs[i].C.abstract_type.is_zero()) v.push_back(i);
        return v;
    };
    const auto Xl = lower_set(left), Xu = upper_set(left);
    const auto Yl = lower_set(right), Yu = upper_set(right);
    rep.index_sets["X_l"] = Xl;
    rep.index_sets["X_u"] = Xu;
    rep.index_sets["X'_l"] = Yl;
    rep.index_sets["X'_u"] = Yu;
    SameClassCache local(caps);
    SameClassCache& cache = shared ? *shared : local;
    rep.verdict = true;
    for (ClassLabel lab : all_labels) {
        const bool lower = lab == ClassLabel::ml || lab == ClassLabel::el;
        auto bd = detail::class_bijection(left, lower ? Xl : Xu, right, lower ? Yl : Yu,
                                          lab, cache);
        if (!bd.ok) {
            rep.verdict = false;
            rep.witnesses.clear();
            rep.failure = DecisionReport::Failure{lab, bd.left_block, bd.right_block};
            return rep;
        }
        rep.witnesses[lab] = std::move(bd.pairing);
    }
    return rep;
}

struct OracleResult {
    bool verdict = false;
    SumExt left_sum, right_sum;
    std::optional<Hom> iso; // explicit isomorphism of the sums, on success
};

namespace detail {

/// Depth-first column search for a group isomorphism domain -> codomain that
/// carries the subgroup `from` onto the subgroup `onto`. Column j's image
/// must have order exactly d_j, and the chosen columns must generate freely
/// (running span size = product of the orders so far).
inline std::optional<Hom> iso_carrying(const Group& dom, const Group& cod,
                                       const Subgroup& from, const Subgroup& onto,
                                       const Caps& caps) {
    if (dom.factors != cod.factors) return std::nullopt;
    if (from.order() != onto.order()) return std::nullopt;
    if (from.canonical_type != onto.canonical_type) return std::nullopt;
    const std::size_t r = dom.rank();
    const u64 n = cod.order();
    // Elements of the codomain bucketed by order, built once.
    std::map<u64, std::vector<Element>> by_order;
    for (u64 code = 0; code < n; ++code) {
        Element e = decode(cod, code);
        by_order[element_order(cod, e)].push_back(std::move(e));
    }
    std::vector<Element> chosen;
    u64 nodes = 0;
    auto search = [&](auto&& self, std::size_t j, u64 span) -> std::optional<Hom> {
        if (j == r) {
            Hom f{dom, cod, {}};
            f.m.assign(cod.rank() * r, 0);
            for (std::size_t i = 0; i < cod.rank(); ++i)
                for (std::size_t k = 0; k < r; ++k) f.m[i * r + k] = chosen[k].coords[i];
            // Free generation of the whole codomain makes f bijective; it
            // remains to carry `from` into `onto` (onto by cardinality).
            for (const auto& g : from.generators)
                if (!onto.contains(f.apply(g))) return std::nullopt;
            return f;
        }
        const u64 d = dom.factors[j];
        auto it = by_order.find(d);
        if (it == by_order.end()) return std::nullopt;
        for (const Element& cand : it->second) {
            if (++nodes > caps.oracle_nodes)
                throw CapExceeded("brute_force_iso: search node budget exceeded");
            std::vector<Element> gens(chosen.begin(), chosen.end());
            gens.push_back(cand);
            Caps local = caps;
            local.group_order = std::max<u64>(local.group_order, n);
            const Subgroup span_sub = subgroup_generated(cod, gens, local);
            if (span_sub.order() != span * d) continue;
            chosen.push_back(cand);
            if (auto f = self(self, j + 1, span * d)) return f;
            chosen.pop_back();
        }
        return std::nullopt;
    };
    return search(search, 0, 1);
}

} // namespace detail

/// Oracle core on already-built direct sums; exposed so a caller comparing
/// many lists can reuse the sums.
inline std::optional<Hom> oracle_iso_sums(const SumExt& ls, const SumExt& rs,
                                          const Caps& caps = Caps{}) {
    return detail::iso_carrying(ls.obj.B, rs.obj.B, ls.obj.A, rs.obj.A, caps);
}

/// Independent oracle: decides whether the direct sums of the two lists are
/// isomorphic as extensions, by explicit search for a group isomorphism
/// carrying the summed lower term onto its counterpart.
inline OracleResult brute_force_iso(const std::vector<ExtObject>& left,
                                    const std::vector<ExtObject>& right,
                                    const Caps& caps = Caps{}) {
    OracleResult out;
    std::vector<const ExtObject*> lp, rp;
    for (const auto& o : left) lp.push_back(&o);
    for (const auto& o : right) rp.push_back(&o);
    out.left_sum = direct_sum(lp, caps);
    out.right_sum = direct_sum(rp, caps);
    auto f = oracle_iso_sums(out.left_sum, out.right_sum, caps);
    if (f) {
        out.verdict = true;
        out.iso = std::move(*f);
    }
    return out;
}

/// Inverts a bijective homomorphism by tabulating its image.
inline Hom invert_iso(const Hom& f) {
    const u64 n = f.domain.order();
    if (n != f.codomain.order()) throw DomainMismatch("invert_iso: orders differ");
    std::vector<u64> pre(n, n);
    for (u64 code = 0; code < n; ++code) {
        const u64 img = encode(f.codomain, f.apply(decode(f.domain, code)));
        if (pre[img] != n) throw DomainMismatch("invert_iso: not injective");
        pre[img] = code;
    }
    Hom g{f.codomain, f.domain, {}};
    const std::size_t r = f.codomain.rank();
    g.m.assign(f.domain.rank() * r, 0);
    for (std::size_t j = 0; j < r; ++j) {
        Element e = zero_element(f.codomain);
        e.coords[j] = 1;
        const Element x = decode(f.domain, pre[encode(f.codomain, e)]);
        for (std::size_t i = 0; i < f.domain.rank(); ++i) g.m[i * r + j] = x.coords[i];
    }
    return g;
}

/// Builds the bipartite digraph of the upper-class argument from an explicit
/// isomorphism f of the direct sums: edge x_h -> y_k iff the quotient map
/// induced by the (k,h) block of f is surjective onto C'_k, and dually for
/// y -> x via the inverse of f.
inline BipartiteDigraph upper_class_digraph(const std::vector<ExtObject>& left,
                                            const std::vector<ExtObject>& right,
                                            const SumExt& left_sum,
                                            const SumExt& right_sum,
                                            const Hom& f) {
    BipartiteDigraph d;
    for (const auto& o : left) d.X.push_back(o.name);
    for (const auto& o : right) d.Y.push_back(o.name);
    const Hom g = invert_iso(f);
    auto induced_surjective = [&](const ExtObject& src, const ExtObject& dst,
                                  const Hom& block) {
        const Hom bar = induce_upper(src, dst, block);
        u64 img = 1;
        // Image order of the induced quotient map, via its column span.
        std::vector<Element> gens;
        for (std::size_t j = 0; j < src.C.abstract_type.rank(); ++j) {
            Element col = zero_element(dst.C.abstract_type);
            for (std::size_t i = 0; i < dst.C.abstract_type.rank(); ++i)
                col.coords[i] = bar.at(i, j);
            gens.push_back(std::move(col));
        }
        Caps loose;
        loose.group_order = std::max<u64>(loose.group_order, dst.C.abstract_type.order());
        img = subgroup_generated(dst.C.abstract_type, gens, loose).order();
        return img == dst.C.abstract_type.order();
    };
    for (std::size_t h = 0; h < left.size(); ++h) {
        if (left[h].C.abstract_type.is_zero()) continue;
        for (std::size_t k = 0; k < right.size(); ++k) {
            if (right[k].C.abstract_type.is_zero()) continue;
            const Hom fwd = compose(right_sum.projections[k],
                                    compose(f, left_sum.embeddings[h]));
            if (induced_surjective(left[h], right[k], fwd))
                d.add_edge(Vertex{0, h}, Vertex{1, k});
            const Hom bwd = compose(left_sum.projections[h],
                                    compose(g, right_sum.embeddings[k]));
            if (induced_surjective(right[k], left[h], bwd))
                d.add_edge(Vertex{1, k}, Vertex{0, h});
        }
    }
    return d;
}

} // namespace extcat
