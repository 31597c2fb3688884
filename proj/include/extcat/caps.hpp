#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace extcat {

/// Enumeration budgets. Everything in this library is exhaustive, so every
/// entry point checks the predicted amount of work against these before
/// starting. Defaults keep any single call well under a minute.
struct Caps {
    /// Largest group whose elements may be enumerated.
    std::uint64_t group_order = 1024;
    /// Largest predicted hom-set size for one enumeration call.
    std::uint64_t hom_count = 10'000'000;
    /// Largest |X|+|Y| for brute-force Hall checking.
    std::size_t digraph_vertices = 20;
    /// Largest direct-sum order the isomorphism oracle accepts.
    std::uint64_t oracle_sum_order = 1296;
    /// Search-tree node budget for the isomorphism oracle.
    std::uint64_t oracle_nodes = 10'000'000;

    /// Environment overrides, applied on top of the defaults:
    /// EXTCAT_GROUP_CAP, EXTCAT_HOM_CAP, EXTCAT_DIGRAPH_CAP,
    /// EXTCAT_ORACLE_ORDER_CAP, EXTCAT_ORACLE_NODE_CAP.
    static Caps from_env() {
        Caps c;
        auto get = [](const char* name, std::uint64_t& slot) {
            if (const char* v = std::getenv(name)) {
                char* end = nullptr;
                std::uint64_t parsed = std::strtoull(v, &end, 10);
                if (end && *end == '\0' && parsed > 0) slot = parsed;
            }
        };
        get("EXTCAT_GROUP_CAP", c.group_order);
        get("EXTCAT_HOM_CAP", c.hom_count);
        std::uint64_t dg = c.digraph_vertices;
        get("EXTCAT_DIGRAPH_CAP", dg);
        c.digraph_vertices = static_cast<std::size_t>(dg);
        get("EXTCAT_ORACLE_ORDER_CAP", c.oracle_sum_order);
        get("EXTCAT_ORACLE_NODE_CAP", c.oracle_nodes);
        return c;
    }
};

} // namespace extcat
