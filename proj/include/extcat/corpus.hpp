#pragma once

#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "extcat/ext.hpp"

namespace extcat {

struct CorpusOptions {
    u64 max_order = 144;
    std::vector<u64> primes{2, 3};
    bool require_in_U = true;    // only objects with both end terms non-zero
    std::optional<u64> seed;     // when set, sample instead of full corpus
    std::size_t sample_size = 0; // used only with seed
};

/// All finite abelian groups of order <= max_order whose prime divisors lie
/// in the given set, as canonical factor lists. Deterministic order: by group
/// order, then lexicographic factor list.
inline std::vector<Group> enumerate_groups(u64 max_order, std::vector<u64> primes) {
    std::sort(primes.begin(), primes.end());
    std::vector<std::vector<u64>> partial{{}};
    for (u64 p : primes) {
        std::vector<std::vector<u64>> next;
        for (const auto& base : partial) {
            u64 room = max_order;
            for (u64 f : base) room /= f;
            // Multisets of powers of p with product <= room, factors
            // non-increasing so each abelian p-type appears once.
            std::vector<u64> stack;
            auto rec = [&](auto&& self, u64 budget, u64 max_pow) -> void {
                next.push_back(base);
                auto& out = next.back();
                out.insert(out.end(), stack.begin(), stack.end());
                for (u64 q = p; q <= budget && q <= max_pow; q *= p) {
                    stack.push_back(q);
                    self(self, budget / q, q);
                    stack.pop_back();
                }
            };
            rec(rec, room, room);
        }
        partial = std::move(next);
    }
    std::vector<Group> out;
    for (auto& f : partial)
        if (!f.empty()) out.push_back(canonicalize(f));
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
        return std::pair(a.order(), a.factors) < std::pair(b.order(), b.factors);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

inline std::string corpus_name(const Group& B, const Element& gen) {
    std::ostringstream os;
    os << "B" << B.to_string() << "_A";
    for (std::size_t i = 0; i < gen.coords.size(); ++i)
        os << (i ? "." : "") << gen.coords[i];
    return os.str();
}

} // namespace detail

/// Deterministic corpus of in-scope extensions: for each group B in range,
/// every distinct cyclic subgroup A (including 0 and, when cyclic, B itself)
/// such that both A and B/A are prime-power cyclic or zero. Objects are named
/// after B and the generator of A. With require_in_U both end terms must be
/// non-zero. With a seed, a reproducible sample of the full corpus is drawn.
inline std::vector<ExtObject> corpus(const CorpusOptions& opt, const Caps& caps = Caps{}) {
    std::vector<ExtObject> out;
    for (const Group& B : enumerate_groups(opt.max_order, opt.primes)) {
        std::set<std::vector<u64>> seen; // subgroups by element set
        for (u64 code = 0; code < B.order(); ++code) {
            const Element gen = decode(B, code);
            const u64 a_order = element_order(B, gen);
            const bool a_zero = a_order == 1;
            if (opt.require_in_U && a_zero) continue;
            if (!a_zero && !is_uniserial(Group{{a_order}})) continue;
            const u64 c_order = B.order() / a_order;
            if (opt.require_in_U && c_order == 1) continue;
            if (c_order != 1 && !is_uniserial(Group{{c_order}}))
                continue; // quotient cannot be non-zero uniserial either
            Caps local = caps;
            local.group_order = std::max<u64>(local.group_order, B.order());
            const Subgroup A = subgroup_generated(B, {gen}, local);
            if (!seen.insert(A.elements).second) continue;
            // The quotient must itself be cyclic, not merely of prime-power
            // order; make_ext rejects the rest.
            ExtObject X;
            try {
                X = make_ext(B, {gen}, local);
            } catch (const ScopeViolation&) {
                continue;
            }
            X.name = detail::corpus_name(B, gen);
            out.push_back(std::move(X));
        }
    }
    if (opt.seed) {
        std::mt19937_64 rng(*opt.seed);
        std::shuffle(out.begin(), out.end(), rng);
        if (opt.sample_size && out.size() > opt.sample_size) out.resize(opt.sample_size);
    }
    return out;
}

} // namespace extcat
