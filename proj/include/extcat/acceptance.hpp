#pragma once

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "extcat/corpus.hpp"
#include "extcat/decide.hpp"
#include "extcat/endo.hpp"

namespace extcat {

// Pinned acceptance budgets. A criterion that exceeds its runtime budget
// fails even if every check passed.
inline constexpr double kEndoSuiteBudgetSeconds = 600.0;
inline constexpr double kDigraphSuiteBudgetSeconds = 120.0;
inline constexpr std::size_t kMinLemmaChecks = 500;

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::size_t checks = 0;
    double seconds = 0.0;
    std::string detail;
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

/// Accumulates the first failure; later failures are counted but not stored.
struct FailLog {
    std::size_t failures = 0;
    std::string first;
    void fail(const std::string& msg) {
        if (failures++ == 0) first = msg;
    }
    void expect(bool ok, const std::string& msg) {
        if (!ok) fail(msg);
    }
};

inline CriterionResult finish(int number, const std::string& name, const Stopwatch& sw,
                              const FailLog& log, std::size_t checks,
                              double budget_seconds = 0.0) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    r.checks = checks;
    r.seconds = sw.seconds();
    r.pass = log.failures == 0;
    std::ostringstream d;
    if (!r.pass) {
        d << log.failures << " failed check(s); first: " << log.first;
    } else {
        d << checks << " checks";
    }
    if (budget_seconds > 0.0 && r.seconds > budget_seconds) {
        r.pass = false;
        d << " [exceeded " << budget_seconds << "s budget]";
    }
    r.detail = d.str();
    return r;
}

/// 0 -> A -> A -> 0 -> 0 on a cyclic prime-power group.
inline ExtObject lower_only(const Group& type, const Caps& caps) {
    std::vector<Element> gens;
    for (std::size_t j = 0; j < type.rank(); ++j) {
        Element e = zero_element(type);
        e.coords[j] = 1;
        gens.push_back(std::move(e));
    }
    ExtObject x = make_ext(type, gens, caps);
    x.name = "whole" + type.to_string();
    return x;
}

/// 0 -> 0 -> C -> C -> 0 on a cyclic prime-power group.
inline ExtObject upper_only(const Group& type, const Caps& caps) {
    ExtObject x = make_ext(type, {}, caps);
    x.name = "quot" + type.to_string();
    return x;
}

/// Uniserial groups of order <= max over the given primes.
inline std::vector<Group> uniserial_groups(u64 max, const std::vector<u64>& primes) {
    std::vector<Group> out;
    for (u64 p : primes)
        for (u64 q = p; q <= max; q *= p) out.push_back(Group{{q}});
    std::sort(out.begin(), out.end(),
              [](const Group& a, const Group& b) { return a.order() < b.order(); });
    return out;
}

/// Cached endomorphism analyses (invariants verified separately).
struct AnalysisCache {
    Caps caps;
    std::map<std::vector<u64>, EndoRingAnalysis> table;
    explicit AnalysisCache(const Caps& c) : caps(c) {}
    const EndoRingAnalysis& get(const ExtObject& x) {
        auto key = object_key(x);
        auto it = table.find(key);
        if (it == table.end())
            it = table.emplace(std::move(key), analyze(x, caps, false)).first;
        return it->second;
    }
};

/// incl[c][a] = (ideal c is a subset of ideal a), from predicate signatures.
inline std::array<std::array<bool, 4>, 4> inclusion_matrix(const EndoRingAnalysis& an) {
    std::array<std::array<bool, 4>, 4> incl{};
    for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a) {
            bool sub = true;
            for (std::size_t i : an.ideals[c])
                if (!an.in_ideal(i, static_cast<ClassLabel>(a))) {
                    sub = false;
                    break;
                }
            incl[c][a] = sub;
        }
    return incl;
}

struct SplitCache {
    Caps caps;
    std::map<std::vector<u64>, bool> table;
    explicit SplitCache(const Caps& c) : caps(c) {}
    bool get(const ExtObject& x) {
        auto key = object_key(x);
        auto it = table.find(key);
        if (it == table.end()) it = table.emplace(std::move(key), is_split(x, caps)).first;
        return it->second;
    }
};

} // namespace detail

/// Criterion 1: every in-scope extension with |B| <= 144 over {2,3} passes
/// the full endomorphism-ring analysis with all structural invariants, the
/// Chinese-remainder check, and the type bound.
inline CriterionResult criterion_endo_suite(const Caps& caps) {
    detail::Stopwatch sw;
    detail::FailLog log;
    std::size_t checks = 0;
    CorpusOptions opt;
    opt.max_order = 144;
    opt.primes = {2, 3};
    opt.require_in_U = true;
    for (const ExtObject& X : corpus(opt, caps)) {
        try {
            const EndoRingAnalysis an = analyze(X, caps, true);
            log.expect(verify_crt(an), X.name + ": quotient-product check failed");
            log.expect(type_bound_check(an), X.name + ": type bound exceeded");
        } catch (const TheoremViolation& e) {
            log.fail(X.name + ": " + e.what());
        }
        ++checks;
    }
    return detail::finish(1, "endomorphism ring suite", sw, log, checks,
                          kEndoSuiteBudgetSeconds);
}

/// Criterion 2: on all pairs of lists (n, m <= 2) over the order-12 corpus
/// with zero end terms allowed, every decision procedure in scope agrees
/// with the brute-force isomorphism oracle.
inline CriterionResult criterion_oracle_agreement(const Caps& caps) {
    detail::Stopwatch sw;
    detail::FailLog log;
    std::size_t checks = 0;
    CorpusOptions opt;
    opt.max_order = 12;
    opt.primes = {2, 3};
    opt.require_in_U = false;
    const std::vector<ExtObject> objs = corpus(opt, caps);

    struct List {
        std::vector<ExtObject> members;
        bool all_U = true;
        SumExt sum;
        std::string name;
    };
    std::vector<List> lists;
    auto add_list = [&](std::vector<std::size_t> idx) {
        List l;
        for (std::size_t i : idx) {
            l.members.push_back(objs[i]);
            l.all_U = l.all_U && objs[i].in_U;
            l.name += (l.name.empty() ? "" : "+") + objs[i].name;
        }
        std::vector<const ExtObject*> ptrs;
        for (const auto& o : l.members) ptrs.push_back(&o);
        l.sum = direct_sum(ptrs, caps);
        lists.push_back(std::move(l));
    };
    for (std::size_t i = 0; i < objs.size(); ++i) add_list({i});
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i; j < objs.size(); ++j) add_list({i, j});

    SameClassCache cache(caps);
    for (std::size_t a = 0; a < lists.size(); ++a) {
        for (std::size_t b = a; b < lists.size(); ++b) {
            const bool oracle = oracle_iso_sums(lists[a].sum, lists[b].sum, caps).has_value();
            const auto pair_name = lists[a].name + " vs " + lists[b].name;
            const bool cp =
                decide_completo_prime(lists[a].members, lists[b].members, caps, &cache)
                    .verdict;
            log.expect(cp == oracle, pair_name + ": general decider disagrees with oracle");
            ++checks;
            if (lists[a].all_U && lists[b].all_U) {
                const bool co =
                    decide_completo(lists[a].members, lists[b].members, caps, &cache)
                        .verdict;
                const bool pa =
                    decide_parziale(lists[a].members, lists[b].members, caps, &cache)
                        .verdict;
                log.expect(co == oracle,
                           pair_name + ": permutation decider disagrees with oracle");
                log.expect(pa == oracle,
                           pair_name + ": maximal-index decider disagrees with oracle");
                checks += 2;
            }
        }
    }
    return detail::finish(2, "oracle agreement", sw, log, checks);
}

/// Criterion 3: the two extensions of the two simple constituents of Z/6 over
/// the same middle group have two maximal ideals each, coinciding (m,*)/(e,*)
/// ideals, and are inequivalent under every decision procedure even though
/// all per-label index sets are singletons.
inline CriterionResult criterion_ideal_swap_pair(const Caps& caps) {
    detail::Stopwatch sw;
    detail::FailLog log;
    std::size_t checks = 0;
    const Group B = canonicalize({6});
    ExtObject X1 = make_ext(B, {Element{{1, 0}}}, caps);
    X1.name = "ext_2_of_3";
    ExtObject X2 = make_ext(B, {Element{{0, 1}}}, caps);
    X2.name = "ext_3_of_2";

    for (const ExtObject* X : {&X1, &X2}) {
        const EndoRingAnalysis an = analyze(*X, caps, true);
        log.expect(an.type_count == 2, X->name + ": expected two maximal ideals");
        log.expect(an.ideals[0] == an.ideals[1],
                   X->name + ": lower ideals should coincide");
        log.expect(an.ideals[2] == an.ideals[3],
                   X->name + ": upper ideals should coincide");
        log.expect(an.endos.size() == 6, X->name + ": endo ring should have 6 elements");
        checks += 4;
    }
    // The lower ideal of X1 kills multiplication by the order-2 part: it has
    // 3 elements; its upper ideal has 2. Swapped for X2.
    const EndoRingAnalysis a1 = analyze(X1, caps, false);
    const EndoRingAnalysis a2 = analyze(X2, caps, false);
    log.expect(a1.ideals[0].size() == 3 && a1.ideals[2].size() == 2,
               "ideal sizes of ext_2_of_3 wrong");
    log.expect(a2.ideals[0].size() == 2 && a2.ideals[2].size() == 3,
               "ideal sizes of ext_3_of_2 wrong");
    checks += 2;

    const std::vector<ExtObject> L{X1}, R{X2};
    const DecisionReport co = decide_completo(L, R, caps);
    log.expect(!co.verdict, "permutation decider should reject the swapped pair");
    const DecisionReport pa = decide_parziale(L, R, caps);
    log.expect(!pa.verdict, "maximal-index decider should reject the swapped pair");
    log.expect(pa.failure.has_value(), "failure witness missing");
    for (ClassLabel l : all_labels) {
        const auto& xs = pa.index_sets.at(std::string("X_") + label_name(l));
        const auto& ys = pa.index_sets.at(std::string("Y_") + label_name(l));
        log.expect(xs.size() == 1 && ys.size() == 1,
                   "per-label index sets should be singletons");
        ++checks;
    }
    const bool oracle = brute_force_iso(L, R, caps).verdict;
    log.expect(!oracle, "oracle should reject the swapped pair");
    checks += 4;
    return detail::finish(3, "ideal swap pair over Z/6", sw, log, checks);
}

/// Criterion 4: for split extensions 0 -> U -> U+V -> V -> 0 the ring has
/// exactly |End U| * |End V| * |Hom(V,U)| elements and ideal membership is
/// read off the diagonal blocks.
inline CriterionResult criterion_split_triangular(const Caps& caps) {
    detail::Stopwatch sw;
    detail::FailLog log;
    std::size_t checks = 0;
    const std::vector<std::pair<u64, u64>> uv = {{2, 2}, {4, 2}, {2, 4}, {3, 9},
                                                 {9, 3}, {4, 4}, {8, 2}, {2, 3}};
    for (auto [u, v] : uv) {
        const Group B = canonicalize({u, v});
        // Locate the coordinate carrying the U factor in canonical order.
        // With u == v the two coordinates are symmetric; take the first.
        std::size_t ucol = 0;
        while (B.factors[ucol] != u) ++ucol;
        Element gen = zero_element(B);
        gen.coords[ucol] = 1;
        ExtObject X = make_ext(B, {gen}, caps);
        X.name = "split_" + std::to_string(u) + "_" + std::to_string(v);
        const EndoRingAnalysis an = analyze(X, caps, false);
        const u64 expected = u * v * std::gcd(u, v);
        log.expect(an.endos.size() == expected,
                   X.name + ": ring size differs from block formula");
        ++checks;
        const u64 pu = prime_of(u), pv = prime_of(v);
        for (std::size_t i = 0; i < an.endos.size(); ++i) {
            const Hom f11 = restrict_lower(X, X, an.endos[i]);
            const Hom f22 = induce_upper(X, X, an.endos[i]);
            const bool lower_bad = f11.m[0] % pu == 0;
            const bool upper_bad = f22.m[0] % pv == 0;
            log.expect(an.in_ideal(i, ClassLabel::ml) == lower_bad &&
                           an.in_ideal(i, ClassLabel::el) == lower_bad,
                       X.name + ": lower membership is not the (1,1) block test");
            log.expect(an.in_ideal(i, ClassLabel::mu) == upper_bad &&
                           an.in_ideal(i, ClassLabel::eu) == upper_bad,
                       X.name + ": upper membership is not the (2,2) block test");
            checks += 2;
        }
    }
    return detail::finish(4, "split triangular rings", sw, log, checks);
}

/// Criterion 5: the 2x2 exchange family: four pairwise non-isomorphic
/// extensions whose direct sums are isomorphic, certified by every decider,
/// by an explicit isomorphism, and by the digraph relabeling argument.
inline CriterionResult criterion_exchange_family(const Caps& caps) {
    detail::Stopwatch sw;
    detail::FailLog log;
    std::size_t checks = 0;
    ExtObject X1 = make_ext(canonicalize({6}), {Element{{1, 0}}}, caps);
    X1.name = "X1";
    ExtObject X2 = make_ext(canonicalize({6}), {Element{{0, 1}}}, caps);
    X2.name = "X2";
    ExtObject Y1 = make_ext(canonicalize({2, 2}), {Element{{1, 0}}}, caps);
    Y1.name = "Y1";
    ExtObject Y2 = make_ext(canonicalize({3, 3}), {Element{{1, 0}}}, caps);
    Y2.name = "Y2";
    const std::vector<ExtObject> all{X1, X2, Y1, Y2};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            log.expect(!iso_via_classes(all[i], all[j], caps),
                       all[i].name + " vs " + all[j].name + ": unexpectedly isomorphic");
            log.expect(!brute_force_iso({all[i]}, {all[j]}, caps).verdict,
                       all[i].name + " vs " + all[j].name + ": oracle found an iso");
            checks += 2;
        }
    const std::vector<ExtObject> left{X1, X2}, right{Y1, Y2};
    const OracleResult orc = brute_force_iso(left, right, caps);
    log.expect(orc.verdict && orc.iso.has_value(), "oracle failed on the exchange sums");
    if (orc.iso)
        log.expect(is_iso_in_E(orc.left_sum.obj, orc.right_sum.obj, *orc.iso, caps),
                   "oracle witness does not re-validate");
    log.expect(decide_completo(left, right, caps).verdict, "permutation decider rejected");
    log.expect(decide_parziale(left, right, caps).verdict, "maximal-index decider rejected");
    log.expect(decide_completo_prime(left, right, caps).verdict, "general decider rejected");
    checks += 5;
    // The upper-class permutation must cross: X1 pairs with Y2 and X2 with Y1.
    SameClassCache cache(caps);
    log.expect(cache.same(X1, Y2, ClassLabel::eu) && cache.same(X2, Y1, ClassLabel::eu) &&
                   !cache.same(X1, Y1, ClassLabel::eu),
               "upper classes should pair crosswise");
    log.expect(cache.same(X1, Y1, ClassLabel::ml) && cache.same(X2, Y2, ClassLabel::ml) &&
                   !cache.same(X1, Y2, ClassLabel::ml),
               "lower classes should pair straight");
    checks += 2;
    // Digraph bridge: the surjectivity digraph of the explicit isomorphism
    // satisfies the Hall condition and its relabeling preserves upper classes.
    if (orc.iso) {
        const BipartiteDigraph d =
            upper_class_digraph(left, right, orc.left_sum, orc.right_sum, *orc.iso);
        const HallResult hall = hall_condition(d, caps);
        log.expect(hall.holds, "bridge digraph violates the Hall condition");
        if (hall.holds) {
            const RelabelResult rel = ks_relabel(d, caps);
            log.expect(rel.success, "bridge relabeling failed");
            for (const auto& [x, y] : rel.pairing) {
                log.expect(cache.same(left[x], right[y], ClassLabel::eu),
                           "bridge pairing does not preserve the upper class");
                ++checks;
            }
        }
        checks += 2;
    }
    return detail::finish(5, "exchange family certification", sw, log, checks);
}

/// Criterion 6: exhaustive bipartite digraphs with |X| = |Y| <= 3: both Hall
/// modes agree, and Hall implies a valid mutual-reachability pairing.
inline CriterionResult criterion_digraph_exhaustion(const Caps& caps) {
    detail::Stopwatch sw;
    detail::FailLog log;
    std::size_t checks = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
        BipartiteDigraph base;
        for (std::size_t i = 0; i < n; ++i) {
            base.X.push_back("x" + std::to_string(i + 1));
            base.Y.push_back("y" + std::to_string(i + 1));
        }
        const std::size_t bits = 2 * n * n;
        for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
            BipartiteDigraph d = base;
            std::size_t bit = 0;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y, ++bit)
                    if (mask >> bit & 1) d.edges_xy.emplace(x, y);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t x = 0; x < n; ++x, ++bit)
                    if (mask >> bit & 1) d.edges_yx.emplace(y, x);

            const HallResult brute = hall_condition_brute(d, caps);
            const HallResult match = hall_condition_matching(d);
            if (brute.holds != match.holds) {
                log.fail("Hall modes disagree (n=" + std::to_string(n) +
                         ", mask=" + std::to_string(mask) + ")");
                ++checks;
                continue;
            }
            if (!brute.holds) {
                // The witness must actually violate the condition.
                log.expect(out_neighborhood(d, brute.violating).size() <
                               brute.violating.size(),
                           "invalid Hall witness (mask=" + std::to_string(mask) + ")");
            } else {
                RelabelResult rel;
                try {
                    rel = ks_relabel(d, caps);
                } catch (const TheoremViolation& e) {
                    log.fail(std::string(e.what()) + " (mask=" + std::to_string(mask) + ")");
                    ++checks;
                    continue;
                }
                // Independent path validation of every returned pair.
                auto reaches = [&](Vertex from, Vertex to) {
                    std::set<Vertex> seen{from};
                    std::vector<Vertex> stack{from};
                    while (!stack.empty()) {
                        const Vertex v = stack.back();
                        stack.pop_back();
                        if (v == to) return true;
                        for (Vertex w : out_neighborhood(d, {v}))
                            if (seen.insert(w).second) stack.push_back(w);
                    }
                    return false;
                };
                bool ok = rel.success && rel.pairing.size() == n;
                for (const auto& [x, y] : rel.pairing)
                    ok = ok && reaches(Vertex{0, x}, Vertex{1, y}) &&
                         reaches(Vertex{1, y}, Vertex{0, x});
                log.expect(ok, "pairing not mutually reachable (mask=" +
                                   std::to_string(mask) + ")");
            }
            ++checks;
        }
    }
    return detail::finish(6, "digraph exhaustion", sw, log, checks,
                          kDigraphSuiteBudgetSeconds);
}

/// Criterion 7: the class-machinery lemma suite, each law checked on at
/// least kMinLemmaChecks corpus instances.
inline CriterionResult criterion_lemma_suite(const Caps& caps) {
    detail::Stopwatch sw;
    detail::FailLog log;
    std::map<std::string, std::size_t> tally;
    SameClassCache cache(caps);
    detail::AnalysisCache analyses(caps);
    detail::SplitCache splits(caps);

    CorpusOptions opt16;
    opt16.max_order = 16;
    opt16.primes = {2, 3};
    const std::vector<ExtObject> c16 = corpus(opt16, caps);
    std::vector<std::array<std::array<bool, 4>, 4>> incl16;
    std::vector<std::array<bool, 4>> max16;
    for (const auto& X : c16) {
        const auto& an = analyses.get(X);
        incl16.push_back(detail::inclusion_matrix(an));
        max16.push_back(an.label_maximal);
    }

    // Ideal-inclusion transfer along a shared class, and class transfer along
    // an ideal inclusion.
    for (std::size_t i = 0; i < c16.size(); ++i)
        for (std::size_t j = 0; j < c16.size(); ++j)
            for (int ab = 0; ab < 4; ++ab) {
                if (!cache.same(c16[i], c16[j], static_cast<ClassLabel>(ab))) continue;
                for (int cd = 0; cd < 4; ++cd) {
                    log.expect(incl16[i][cd][ab] == incl16[j][cd][ab],
                               "inclusion transfer failed: " + c16[i].name + " vs " +
                                   c16[j].name);
                    ++tally["inclusion transfer"];
                    if (incl16[i][cd][ab]) {
                        log.expect(cache.same(c16[i], c16[j], static_cast<ClassLabel>(cd)),
                                   "class transfer failed: " + c16[i].name + " vs " +
                                       c16[j].name);
                        ++tally["class transfer"];
                    }
                }
                // Maximality transfer and equality-pattern transfer.
                log.expect(max16[i][ab] == max16[j][ab],
                           "maximality transfer failed: " + c16[i].name + " vs " +
                               c16[j].name);
                ++tally["maximality transfer"];
                if (max16[i][ab]) {
                    for (int cd = 0; cd < 4; ++cd) {
                        const bool eq_i = incl16[i][cd][ab] && incl16[i][ab][cd];
                        const bool eq_j = incl16[j][cd][ab] && incl16[j][ab][cd];
                        log.expect(eq_i == eq_j, "equality-pattern transfer failed: " +
                                                     c16[i].name + " vs " + c16[j].name);
                        ++tally["equality pattern transfer"];
                    }
                }
            }

    // Poset isomorphism of the two four-ideal posets when all classes agree.
    for (std::size_t i = 0; i < c16.size(); ++i)
        for (std::size_t j = 0; j < c16.size(); ++j) {
            bool all4 = true;
            for (int ab = 0; ab < 4 && all4; ++ab)
                all4 = cache.same(c16[i], c16[j], static_cast<ClassLabel>(ab));
            if (!all4) continue;
            for (int cd = 0; cd < 4; ++cd)
                for (int ab = 0; ab < 4; ++ab) {
                    log.expect(incl16[i][cd][ab] == incl16[j][cd][ab],
                               "poset map is not an order isomorphism: " + c16[i].name +
                                   " vs " + c16[j].name);
                    ++tally["poset isomorphism"];
                }
        }

    // Four-class equality characterizes isomorphism (against the oracle).
    for (std::size_t i = 0; i < c16.size(); ++i)
        for (std::size_t j = i; j < c16.size(); ++j) {
            bool all4 = true;
            for (int ab = 0; ab < 4 && all4; ++ab)
                all4 = cache.same(c16[i], c16[j], static_cast<ClassLabel>(ab));
            const bool iso = brute_force_iso({c16[i]}, {c16[j]}, caps).verdict;
            log.expect(all4 == iso, "class criterion disagrees with oracle: " +
                                        c16[i].name + " vs " + c16[j].name);
            ++tally["iso criterion"];
        }

    // Associated-ideal evaluation on a smaller corpus: the associated ideal
    // of a maximal ideal is improper at B' exactly when the classes differ,
    // and restricts to the matching ideal of B' when they agree.
    CorpusOptions opt8;
    opt8.max_order = 8;
    opt8.primes = {2, 3};
    const std::vector<ExtObject> c8 = corpus(opt8, caps);
    for (const auto& X : c8) {
        const auto& anX = analyses.get(X);
        for (int ab = 0; ab < 4; ++ab) {
            if (!anX.label_maximal[ab]) continue;
            const ClassLabel lab = static_cast<ClassLabel>(ab);
            for (const auto& Y : c8) {
                const bool same = cache.same(X, Y, lab);
                const bool id_member =
                    associated_ideal_membership(X, lab, Y, Y, identity_hom(Y.B), caps);
                log.expect(same == !id_member,
                           "associated ideal properness disagrees with the class: " +
                               X.name + " / " + Y.name);
                ++tally["associated ideal"];
                if (!same) continue;
                const auto& anY = analyses.get(Y);
                for (std::size_t e = 0; e < anY.endos.size(); ++e) {
                    const bool member =
                        associated_ideal_membership(X, lab, Y, Y, anY.endos[e], caps);
                    log.expect(member == anY.in_ideal(e, lab),
                               "associated ideal does not restrict to the matching "
                               "ideal: " +
                                   X.name + " / " + Y.name);
                    ++tally["associated ideal"];
                }
            }
        }
    }

    // Splitting characterization and the split bookkeeping, on the larger
    // corpus so that enough split objects occur.
    CorpusOptions opt144;
    opt144.max_order = 144;
    opt144.primes = {2, 3};
    const std::vector<ExtObject> c144 = corpus(opt144, caps);
    const std::vector<Group> unis = detail::uniserial_groups(128, {2, 3});
    const ExtObject zero = zero_ext_object();
    for (const auto& X : c144) {
        const bool split = splits.get(X);
        for (const Group& U : unis) {
            const ExtObject lower = detail::lower_only(U, caps);
            const ExtObject upper = detail::upper_only(U, caps);
            const bool lower_match = split && X.A.canonical_type == U;
            const bool upper_match = split && X.C.abstract_type == U;
            for (ClassLabel l : {ClassLabel::ml, ClassLabel::el}) {
                log.expect(cache.same(X, lower, l) == lower_match,
                           "lower-part splitting criterion failed: " + X.name + " / " +
                               U.to_string());
                ++tally["splitting criterion"];
            }
            for (ClassLabel l : {ClassLabel::mu, ClassLabel::eu}) {
                log.expect(cache.same(X, upper, l) == upper_match,
                           "upper-part splitting criterion failed: " + X.name + " / " +
                               U.to_string());
                ++tally["splitting criterion"];
            }
        }
        if (!split) continue;
        // Bookkeeping for a split object: its lower classes are those of its
        // lower part, its upper classes those of its upper part; the parts'
        // other classes are zero; and the object is the sum of its parts.
        const ExtObject lw = detail::lower_only(X.A.canonical_type, caps);
        const ExtObject up = detail::upper_only(X.C.abstract_type, caps);
        for (ClassLabel l : {ClassLabel::ml, ClassLabel::el}) {
            log.expect(cache.same(X, lw, l), "split object lower class mismatch: " + X.name);
            log.expect(!cache.same(lw, zero, l), "lower part has zero lower class");
            log.expect(cache.same(up, zero, l), "upper part has non-zero lower class");
            tally["split bookkeeping"] += 3;
        }
        for (ClassLabel l : {ClassLabel::mu, ClassLabel::eu}) {
            log.expect(cache.same(X, up, l), "split object upper class mismatch: " + X.name);
            log.expect(!cache.same(up, zero, l), "upper part has zero upper class");
            log.expect(cache.same(lw, zero, l), "lower part has non-zero upper class");
            tally["split bookkeeping"] += 3;
        }
        log.expect(brute_force_iso({X}, {lw, up}, caps).verdict,
                   "split object is not the sum of its parts: " + X.name);
        ++tally["split bookkeeping"];
    }

    std::size_t checks = 0;
    std::ostringstream counts;
    for (const auto& [name, n] : tally) {
        checks += n;
        counts << name << "=" << n << " ";
        if (n < kMinLemmaChecks)
            log.fail("too few checks for '" + name + "': " + std::to_string(n));
    }
    CriterionResult r = detail::finish(7, "class machinery suite", sw, log, checks);
    if (r.pass) r.detail += " (" + counts.str() + ")";
    return r;
}

inline std::vector<CriterionResult> run_acceptance(const Caps& caps,
                                                   std::ostream* out = nullptr) {
    std::vector<CriterionResult> results;
    const std::vector<CriterionResult (*)(const Caps&)> runners = {
        &criterion_endo_suite,      &criterion_oracle_agreement,
        &criterion_ideal_swap_pair, &criterion_split_triangular,
        &criterion_exchange_family, &criterion_digraph_exhaustion,
        &criterion_lemma_suite};
    for (auto runner : runners) {
        CriterionResult r;
        try {
            r = runner(caps);
        } catch (const std::exception& e) {
            r.number = static_cast<int>(results.size()) + 1;
            r.name = "criterion runner";
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (out)
            *out << "criterion " << r.number << " [" << r.name << "]: "
                 << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ", "
                 << r.seconds << "s)" << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace extcat
