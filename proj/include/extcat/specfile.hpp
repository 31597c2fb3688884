#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "extcat/digraph.hpp"
#include "extcat/ext.hpp"

namespace extcat {

/// Parsed input document: named extensions, named object lists, and named
/// digraph literals, in declaration order.
struct SpecFile {
    std::vector<std::pair<std::string, ExtObject>> objects;
    std::vector<std::pair<std::string, std::vector<std::string>>> lists;
    std::vector<std::pair<std::string, BipartiteDigraph>> digraphs;

    const ExtObject* find_object(const std::string& name) const {
        for (const auto& [n, o] : objects)
            if (n == name) return &o;
        return nullptr;
    }
    const BipartiteDigraph* find_digraph(const std::string& name) const {
        for (const auto& [n, d] : digraphs)
            if (n == name) return &d;
        return nullptr;
    }
    /// A list name resolves through the `list` declarations; a bare object
    /// name resolves to a singleton list.
    std::vector<ExtObject> resolve_list(const std::string& name) const {
        for (const auto& [n, members] : lists)
            if (n == name) {
                std::vector<ExtObject> out;
                for (const auto& m : members) {
                    const ExtObject* o = find_object(m);
                    if (!o) throw ParseError("unknown object '" + m + "' in list", 0, 0);
                    out.push_back(*o);
                }
                return out;
            }
        if (const ExtObject* o = find_object(name)) return {*o};
        throw ParseError("unknown list or object '" + name + "'", 0, 0);
    }
};

namespace detail {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break; // comment to end of line
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back(Token{line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

inline u64 parse_u64(const Token& t, std::size_t line_no) {
    u64 v = 0;
    for (char c : t.text) {
        if (c < '0' || c > '9')
            throw ParseError("expected a non-negative integer, got '" + t.text + "'",
                             line_no, t.column);
        v = v * 10 + static_cast<u64>(c - '0');
    }
    if (t.text.empty()) throw ParseError("empty integer", line_no, t.column);
    return v;
}

} // namespace detail

/// Parses the declarative input format:
///
///   object <name>
///   group <o1> <o2> ...          # cyclic factor orders of B
///   gen <c1> <c2> ...            # one generator of A per line (optional)
///   end
///
///   list <name> = <obj> <obj> ...
///
///   digraph <name>
///   x <v1> <v2> ...
///   y <w1> <w2> ...
///   edge <from> <to>
///   end
///
/// '#' starts a comment. Errors carry 1-based line/column positions.
inline SpecFile parse_specfile(std::istream& in, const Caps& caps = Caps{}) {
    SpecFile out;
    std::string line;
    std::size_t line_no = 0;

    enum class Mode { top, object, digraph } mode = Mode::top;
    std::string cur_name;
    std::vector<u64> cur_group;
    bool have_group = false;
    std::vector<std::vector<u64>> cur_gens;
    BipartiteDigraph cur_d;
    std::map<std::string, Vertex> cur_vertices;

    auto dup_check = [&](const std::string& name, std::size_t col) {
        if (out.find_object(name) || out.find_digraph(name))
            throw ParseError("duplicate name '" + name + "'", line_no, col);
        for (const auto& [n, _] : out.lists)
            if (n == name) throw ParseError("duplicate name '" + name + "'", line_no, col);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        const auto& kw = toks[0];

        if (mode == Mode::top) {
            if (kw.text == "object") {
                if (toks.size() != 2)
                    throw ParseError("expected: object <name>", line_no, kw.column);
                dup_check(toks[1].text, toks[1].column);
                cur_name = toks[1].text;
                cur_group.clear();
                have_group = false;
                cur_gens.clear();
                mode = Mode::object;
            } else if (kw.text == "digraph") {
                if (toks.size() != 2)
                    throw ParseError("expected: digraph <name>", line_no, kw.column);
                dup_check(toks[1].text, toks[1].column);
                cur_name = toks[1].text;
                cur_d = BipartiteDigraph{};
                cur_vertices.clear();
                mode = Mode::digraph;
            } else if (kw.text == "list") {
                if (toks.size() < 3 || toks[2].text != "=")
                    throw ParseError("expected: list <name> = <obj> ...", line_no, kw.column);
                dup_check(toks[1].text, toks[1].column);
                std::vector<std::string> members;
                for (std::size_t i = 3; i < toks.size(); ++i) {
                    if (!out.find_object(toks[i].text))
                        throw ParseError("unknown object '" + toks[i].text + "'", line_no,
                                         toks[i].column);
                    members.push_back(toks[i].text);
                }
                out.lists.emplace_back(toks[1].text, std::move(members));
            } else {
                throw ParseError("expected 'object', 'list', or 'digraph', got '" + kw.text +
                                     "'",
                                 line_no, kw.column);
            }
            continue;
        }

        if (mode == Mode::object) {
            if (kw.text == "group") {
                if (have_group)
                    throw ParseError("duplicate 'group' line", line_no, kw.column);
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    const u64 o = detail::parse_u64(toks[i], line_no);
                    if (o < 2)
                        throw ParseError("cyclic factor orders must be >= 2", line_no,
                                         toks[i].column);
                    cur_group.push_back(o);
                }
                have_group = true;
            } else if (kw.text == "gen") {
                if (!have_group)
                    throw ParseError("'gen' before 'group'", line_no, kw.column);
                if (toks.size() != cur_group.size() + 1)
                    throw ParseError("generator needs one coordinate per factor", line_no,
                                     kw.column);
                std::vector<u64> coords;
                for (std::size_t i = 1; i < toks.size(); ++i)
                    coords.push_back(detail::parse_u64(toks[i], line_no));
                cur_gens.push_back(std::move(coords));
            } else if (kw.text == "end") {
                if (!have_group) throw ParseError("object without 'group'", line_no, kw.column);
                const Group B = canonicalize(cur_group);
                if (B.factors != cur_group)
                    throw ParseError(
                        "factor orders must be in canonical form " + B.to_string(), line_no,
                        kw.column);
                std::vector<Element> gens;
                for (auto& c : cur_gens) {
                    Element e{c};
                    try {
                        check_element(B, e);
                    } catch (const std::exception& ex) {
                        throw ParseError(ex.what(), line_no, kw.column);
                    }
                    gens.push_back(std::move(e));
                }
                try {
                    ExtObject x = make_ext(B, gens, caps);
                    x.name = cur_name;
                    out.objects.emplace_back(cur_name, std::move(x));
                } catch (const ScopeViolation& ex) {
                    throw ParseError(std::string(ex.what()) + " (object '" + cur_name + "')",
                                     line_no, kw.column);
                }
                mode = Mode::top;
            } else {
                throw ParseError("expected 'group', 'gen', or 'end'", line_no, kw.column);
            }
            continue;
        }

        // Mode::digraph
        if (kw.text == "x" || kw.text == "y") {
            const int side = kw.text == "x" ? 0 : 1;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (cur_vertices.count(toks[i].text))
                    throw ParseError("duplicate vertex '" + toks[i].text + "'", line_no,
                                     toks[i].column);
                auto& names = side == 0 ? cur_d.X : cur_d.Y;
                cur_vertices[toks[i].text] = Vertex{side, names.size()};
                names.push_back(toks[i].text);
            }
        } else if (kw.text == "edge") {
            if (toks.size() != 3)
                throw ParseError("expected: edge <from> <to>", line_no, kw.column);
            for (std::size_t i = 1; i < 3; ++i)
                if (!cur_vertices.count(toks[i].text))
                    throw ParseError("unknown vertex '" + toks[i].text + "'", line_no,
                                     toks[i].column);
            try {
                cur_d.add_edge(cur_vertices[toks[1].text], cur_vertices[toks[2].text]);
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), line_no, kw.column);
            }
        } else if (kw.text == "end") {
            out.digraphs.emplace_back(cur_name, std::move(cur_d));
            mode = Mode::top;
        } else {
            throw ParseError("expected 'x', 'y', 'edge', or 'end'", line_no, kw.column);
        }
    }
    if (mode != Mode::top) throw ParseError("unexpected end of file inside a block", line_no, 1);
    return out;
}

inline SpecFile parse_specfile_string(const std::string& text, const Caps& caps = Caps{}) {
    std::istringstream in(text);
    return parse_specfile(in, caps);
}

} // namespace extcat
