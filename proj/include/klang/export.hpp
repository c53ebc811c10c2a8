#ifndef KLANG_EXPORT_HPP
#define KLANG_EXPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "klang/classify.hpp"

namespace klang {

// Machine form of an orbit figure. Node descriptions carry the shortest
// operator word plus the canonical transition table; no regex is ever
// reconstructed from an automaton.
struct OrbitDocNode {
    std::uint32_t id = 0;
    std::string role;  // "L" or "L^{...}"
    bool open = false;
    bool closed = false;
    bool epsilon = false;
    std::uint32_t states = 0;
    std::vector<std::vector<std::uint32_t>> transitions;  // [state][letter]
    std::vector<std::uint32_t> accepting;                 // sorted state ids

    bool operator==(const OrbitDocNode&) const = default;
};

struct OrbitDocEdge {
    std::uint32_t from = 0;
    std::string op;
    std::uint32_t to = 0;

    bool operator==(const OrbitDocEdge&) const = default;
};

struct OrbitDocument {
    std::string mode;
    std::string regex;
    std::string alphabet;
    std::string case_label;
    std::size_t core_size = 0;   // |B| or |E|
    std::size_t total_size = 0;  // |A| or |D|
    std::vector<OrbitDocNode> nodes;
    std::vector<OrbitDocEdge> edges;

    bool operator==(const OrbitDocument&) const = default;
};

inline std::string role_string(const OpWord& w) {
    if (w.empty()) return "L";
    return "L^{" + word_to_string(w) + "}";
}

inline OrbitDocument build_orbit_document(const OrbitGraph& g,
                                          const std::string& regex_text,
                                          const std::string& case_label) {
    OrbitDocument doc;
    doc.mode = mode_name(g.mode);
    doc.regex = regex_text;
    doc.alphabet = g.nodes.front().lang.alphabet.letters();
    doc.case_label = case_label;
    doc.core_size = g.core_size();
    doc.total_size = g.total_size();

    const std::size_t k = g.nodes.front().lang.alphabet.size();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const OrbitNode& n = g.nodes[i];
        OrbitDocNode dn;
        dn.id = static_cast<std::uint32_t>(i);
        dn.role = role_string(n.shortest_role);
        dn.open = n.open;
        dn.closed = n.closed;
        dn.epsilon = n.has_epsilon;
        dn.states = n.lang.state_count;
        dn.transitions.resize(n.lang.state_count);
        for (StateId s = 0; s < n.lang.state_count; ++s) {
            dn.transitions[s].resize(k);
            for (std::size_t c = 0; c < k; ++c)
                dn.transitions[s][c] = n.lang.next(s, c);
        }
        for (StateId s = 0; s < n.lang.state_count; ++s)
            if (n.lang.accepting[s]) dn.accepting.push_back(s);
        doc.nodes.push_back(std::move(dn));
    }
    for (const OrbitEdge& e : g.edges)
        doc.edges.push_back({e.from, op_symbol(e.op), e.to});
    return doc;
}

inline nlohmann::ordered_json to_json(const OrbitDocument& doc) {
    nlohmann::ordered_json j;
    j["mode"] = doc.mode;
    j["regex"] = doc.regex;
    j["alphabet"] = doc.alphabet;
    j["case"] = doc.case_label;
    const bool positive = doc.mode == "positive";
    j["sizes"] = {{positive ? "B" : "E", doc.core_size},
                  {positive ? "A" : "D", doc.total_size}};
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : doc.nodes) {
        nlohmann::ordered_json jn;
        jn["id"] = n.id;
        jn["role"] = n.role;
        jn["flags"] = {{"open", n.open},
                       {"closed", n.closed},
                       {"epsilon", n.epsilon}};
        jn["dfa"] = {{"states", n.states},
                     {"transitions", n.transitions},
                     {"accepting", n.accepting}};
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : doc.edges)
        j["edges"].push_back({{"from", e.from}, {"op", e.op}, {"to", e.to}});
    return j;
}

inline OrbitDocument document_from_json(const nlohmann::json& j) {
    OrbitDocument doc;
    doc.mode = j.at("mode").get<std::string>();
    doc.regex = j.at("regex").get<std::string>();
    doc.alphabet = j.at("alphabet").get<std::string>();
    doc.case_label = j.at("case").get<std::string>();
    const auto& sizes = j.at("sizes");
    if (doc.mode == "positive") {
        doc.core_size = sizes.at("B").get<std::size_t>();
        doc.total_size = sizes.at("A").get<std::size_t>();
    } else {
        doc.core_size = sizes.at("E").get<std::size_t>();
        doc.total_size = sizes.at("D").get<std::size_t>();
    }
    for (const auto& jn : j.at("nodes")) {
        OrbitDocNode n;
        n.id = jn.at("id").get<std::uint32_t>();
        n.role = jn.at("role").get<std::string>();
        n.open = jn.at("flags").at("open").get<bool>();
        n.closed = jn.at("flags").at("closed").get<bool>();
        n.epsilon = jn.at("flags").at("epsilon").get<bool>();
        n.states = jn.at("dfa").at("states").get<std::uint32_t>();
        n.transitions = jn.at("dfa").at("transitions")
                            .get<std::vector<std::vector<std::uint32_t>>>();
        n.accepting =
            jn.at("dfa").at("accepting").get<std::vector<std::uint32_t>>();
        doc.nodes.push_back(std::move(n));
    }
    for (const auto& je : j.at("edges")) {
        doc.edges.push_back({je.at("from").get<std::uint32_t>(),
                             je.at("op").get<std::string>(),
                             je.at("to").get<std::uint32_t>()});
    }
    return doc;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

// One digraph, nodes named n<id>, edges labeled with the operator symbol.
inline std::string to_dot(const OrbitDocument& doc) {
    std::string out;
    out += "digraph orbit {\n";
    out += "  rankdir=LR;\n";
    out += "  label=\"" + detail::dot_escape(doc.regex) + "  [" + doc.mode +
           " mode, case " + doc.case_label + "]\";\n";
    out += "  node [shape=box, fontname=\"Helvetica\"];\n";
    for (const auto& n : doc.nodes) {
        std::string flags;
        if (n.open) flags += "open";
        if (n.closed) flags += flags.empty() ? "closed" : ",closed";
        if (n.epsilon) flags += flags.empty() ? "eps" : ",eps";
        if (flags.empty()) flags = "-";
        out += "  n" + std::to_string(n.id) + " [label=\"" +
               detail::dot_escape(n.role) + "\\n" + flags + "\"];\n";
    }
    for (const auto& e : doc.edges) {
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
               " [label=\"" + detail::dot_escape(e.op) + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace klang

#endif
