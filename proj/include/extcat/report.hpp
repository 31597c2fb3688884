#pragma once

#include <string>

#include "json.hpp"

#include "extcat/decide.hpp"
#include "extcat/endo.hpp"

namespace extcat {

// All machine-readable reports use insertion-ordered JSON and contain no
// wall-clock data, so identical inputs yield byte-identical documents.
using json = nlohmann::ordered_json;

inline json group_to_json(const Group& g) { return json(g.factors); }

inline Group group_from_json(const json& j) {
    Group g;
    g.factors = j.get<std::vector<u64>>();
    return g;
}

inline json hom_to_json(const Hom& h) {
    json j;
    j["domain"] = group_to_json(h.domain);
    j["codomain"] = group_to_json(h.codomain);
    j["matrix"] = json::array();
    const std::size_t cols = h.domain.rank();
    for (std::size_t i = 0; i < h.codomain.rank(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < cols; ++k) row.push_back(h.at(i, k));
        j["matrix"].push_back(std::move(row));
    }
    return j;
}

inline Hom hom_from_json(const json& j) {
    Hom h{group_from_json(j.at("domain")), group_from_json(j.at("codomain")), {}};
    for (const auto& row : j.at("matrix"))
        for (const auto& v : row) h.m.push_back(v.get<u64>());
    if (h.m.size() != h.domain.rank() * h.codomain.rank() || !well_defined(h))
        throw ParseError("invalid homomorphism matrix", 0, 0);
    return h;
}

inline json object_to_json(const ExtObject& x) {
    json j;
    j["name"] = x.name;
    j["B"] = group_to_json(x.B);
    j["A_generators"] = json::array();
    for (const Element& g : x.A.generators) j["A_generators"].push_back(json(g.coords));
    j["A_type"] = group_to_json(x.A.canonical_type);
    j["C_type"] = group_to_json(x.C.abstract_type);
    j["in_U"] = x.in_U;
    j["in_U0"] = x.in_U0;
    j["in_Uupper0"] = x.in_Uupper0;
    return j;
}

inline json class_witness_to_json(const std::optional<ClassWitness>& w) {
    json j;
    j["same_class"] = w.has_value();
    if (w) {
        j["forward"] = hom_to_json(w->forward);
        j["backward"] = hom_to_json(w->backward);
    }
    return j;
}

inline json invariants_report(const ExtObject& X, const ExtObject& Y,
                              const Caps& caps = Caps{}) {
    json j;
    j["left"] = object_to_json(X);
    j["right"] = object_to_json(Y);
    j["classes"] = json::object();
    for (ClassLabel l : all_labels)
        j["classes"][label_name(l)] =
            class_witness_to_json(same_class_witness(X, Y, l, caps));
    return j;
}

inline json endoring_report(const EndoRingAnalysis& an, bool crt_ok, bool type_bound_ok) {
    json j;
    j["object"] = object_to_json(an.object);
    j["endo_count"] = an.endos.size();
    j["ideals"] = json::object();
    for (ClassLabel l : all_labels) {
        json ji;
        ji["size"] = an.ideals[static_cast<int>(l)].size();
        ji["maximal"] = an.label_maximal[static_cast<int>(l)];
        j["ideals"][label_name(l)] = std::move(ji);
    }
    j["distinct_maximal"] = json::array();
    for (int a : an.distinct_maximal)
        j["distinct_maximal"].push_back(label_name(static_cast<ClassLabel>(a)));
    j["type_count"] = an.type_count;
    j["radical_size"] = an.radical.size();
    j["crt_ok"] = crt_ok;
    j["type_bound_ok"] = type_bound_ok;
    return j;
}

inline json decision_to_json(const DecisionReport& rep) {
    json j;
    j["method"] = rep.method;
    j["verdict"] = rep.verdict;
    j["index_sets"] = json::object();
    for (const auto& [name, set] : rep.index_sets) j["index_sets"][name] = json(set);
    if (rep.verdict) {
        j["witnesses"] = json::object();
        for (const auto& [lab, pairs] : rep.witnesses) {
            json jp = json::array();
            for (const auto& [a, b] : pairs) jp.push_back(json::array({a, b}));
            j["witnesses"][label_name(lab)] = std::move(jp);
        }
    } else if (rep.failure) {
        json jf;
        jf["label"] = label_name(rep.failure->label);
        jf["left_block"] = json(rep.failure->left_block);
        jf["right_block"] = json(rep.failure->right_block);
        j["failure"] = std::move(jf);
    }
    return j;
}

inline json oracle_to_json(const OracleResult& r) {
    json j;
    j["method"] = "brute_force";
    j["verdict"] = r.verdict;
    j["left_sum_B"] = group_to_json(r.left_sum.obj.B);
    j["right_sum_B"] = group_to_json(r.right_sum.obj.B);
    if (r.iso) j["isomorphism"] = hom_to_json(*r.iso);
    return j;
}

inline json vertex_to_json(const BipartiteDigraph& d, Vertex v) {
    return json(v.side == 0 ? d.X[v.index] : d.Y[v.index]);
}

inline json digraph_report(const BipartiteDigraph& d, const Caps& caps = Caps{}) {
    json j;
    j["X"] = json(d.X);
    j["Y"] = json(d.Y);
    const HallResult hall = hall_condition(d, caps);
    j["hall_condition"] = hall.holds;
    if (!hall.holds) {
        json t = json::array();
        for (Vertex v : hall.violating) t.push_back(vertex_to_json(d, v));
        j["violating_set"] = std::move(t);
        return j;
    }
    const RelabelResult rel = ks_relabel(d, caps);
    json jp = json::array();
    for (const auto& [x, y] : rel.pairing)
        jp.push_back(json::array({d.X[x], d.Y[y]}));
    j["pairing"] = std::move(jp);
    return j;
}

/// Human rendering of any report: indented "key: value" lines. Informational
/// only; the JSON document is the canonical artifact.
inline void render_human(const json& j, std::string& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !v.front().is_number() &&
                                  !v.front().is_string())) {
                out += pad + k + ":\n";
                render_human(v, out, indent + 1);
            } else {
                out += pad + k + ": " + v.dump() + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out += pad + "-\n";
                render_human(v, out, indent + 1);
            } else {
                out += pad + "- " + v.dump() + "\n";
            }
        }
    } else {
        out += pad + j.dump() + "\n";
    }
}

inline std::string render_human(const json& j) {
    std::string out;
    render_human(j, out, 0);
    return out;
}

} // namespace extcat
