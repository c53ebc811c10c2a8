#ifndef KLANG_ORBIT_HPP
#define KLANG_ORBIT_HPP

#include <algorithm>
#include <array>
#include <unordered_map>
#include <vector>

#include "klang/lang_ops.hpp"

namespace klang {

enum class Mode { Positive, Kleene };

inline Op closure_op(Mode m) {
    return m == Mode::Positive ? Op::PlusClosure : Op::StarClosure;
}
inline Op interior_op(Mode m) {
    return m == Mode::Positive ? Op::PosInterior : Op::KleeneInterior;
}
inline const char* mode_name(Mode m) {
    return m == Mode::Positive ? "positive" : "kleene";
}

struct OrbitNode {
    Lang lang;
    OpWord shortest_role;               // empty word denotes L itself
    std::vector<OpWord> minimal_roles;  // every minimal-length reaching word
    bool in_core = false;  // reachable with an even number of complements
    bool closed = false;   // fixed by the mode's closure
    bool open = false;     // fixed by the mode's interior
    bool has_epsilon = false;
};

struct OrbitEdge {
    std::uint32_t from;
    Op op;
    std::uint32_t to;
};

// The deduplicated family generated from L, closed under the mode's
// operators, with one edge per (node, operator) pair.
struct OrbitGraph {
    Mode mode = Mode::Positive;
    std::vector<OrbitNode> nodes;
    std::vector<OrbitEdge> edges;

    std::size_t total_size() const { return nodes.size(); }
    std::size_t core_size() const {
        std::size_t n = 0;
        for (const auto& node : nodes) n += node.in_core;
        return n;
    }
};

namespace detail {

inline bool word_less(const OpWord& a, const OpWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (op_rank(a[i]) != op_rank(b[i]))
            return op_rank(a[i]) < op_rank(b[i]);
    return false;
}

} // namespace detail

// Worklist BFS applying the mode's operators to every new canonical
// language. Termination is a theorem (10 in positive mode, 14 in Kleene
// mode); exceeding the bound raises BoundViolation, converting theorem
// breakage into a loud failure. Shortest reaching words break ties
// lexicographically with complement < closure < interior.
inline OrbitGraph generate_orbit(const Lang& start, Mode mode) {
    const std::size_t bound = mode == Mode::Positive ? 10 : 14;
    const std::array<Op, 3> ops{Op::Complement, closure_op(mode),
                                interior_op(mode)};

    OrbitGraph g;
    g.mode = mode;

    std::unordered_map<Lang, std::uint32_t, CanonicalDfaHash> index;

    auto make_node = [&](const Lang& l, OpWord word, bool in_core) {
        OrbitNode node;
        node.lang = l;
        node.shortest_role = word;
        node.minimal_roles = {std::move(word)};
        node.in_core = in_core;
        node.has_epsilon = contains_epsilon(l);
        g.nodes.push_back(std::move(node));
        index.emplace(l, static_cast<std::uint32_t>(g.nodes.size() - 1));
        if (g.nodes.size() > bound)
            throw BoundViolation(g.nodes.size(), bound);
    };

    make_node(start, {}, true);

    struct Candidate {
        OpWord word;
        Lang lang;
        bool parity_even;
        std::uint32_t from;
        Op op;
    };

    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<Candidate> cands;
        for (std::uint32_t id : frontier) {
            for (Op op : ops) {
                Candidate c;
                c.word = g.nodes[id].shortest_role;
                c.word.push_back(op);
                c.lang = apply_op(op, g.nodes[id].lang);
                c.parity_even =
                    g.nodes[id].in_core != (op == Op::Complement);
                c.from = id;
                c.op = op;
                cands.push_back(std::move(c));
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& a, const Candidate& b) {
                      return detail::word_less(a.word, b.word);
                  });

        std::vector<std::uint32_t> next;
        for (auto& c : cands) {
            auto it = index.find(c.lang);
            std::uint32_t to;
            if (it == index.end()) {
                to = static_cast<std::uint32_t>(g.nodes.size());
                make_node(c.lang, c.word, c.parity_even);
                next.push_back(to);
            } else {
                to = it->second;
                OrbitNode& node = g.nodes[to];
                if (node.in_core != c.parity_even)
                    throw std::logic_error(
                        "core/complement disjointness violated");
                if (c.word.size() == node.shortest_role.size() &&
                    std::find(node.minimal_roles.begin(),
                              node.minimal_roles.end(),
                              c.word) == node.minimal_roles.end())
                    node.minimal_roles.push_back(std::move(c.word));
            }
            g.edges.push_back({c.from, c.op, to});
            if (c.op == closure_op(mode) && c.from == to)
                g.nodes[c.from].closed = true;
            if (c.op == interior_op(mode) && c.from == to)
                g.nodes[c.from].open = true;
        }
        frontier = std::move(next);
    }

    std::sort(g.edges.begin(), g.edges.end(),
              [](const OrbitEdge& a, const OrbitEdge& b) {
                  if (a.from != b.from) return a.from < b.from;
                  return op_rank(a.op) < op_rank(b.op);
              });
    return g;
}

// Fixpoint of L under the mode's closure and interior only (no
// complement): B(L) in positive mode, E(L) in Kleene mode. Discovery
// order, starting with L.
inline std::vector<Lang> generate_core(const Lang& start, Mode mode) {
    const std::array<Op, 2> ops{closure_op(mode), interior_op(mode)};
    std::vector<Lang> out{start};
    std::unordered_map<Lang, bool, CanonicalDfaHash> seen;
    seen.emplace(start, true);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Lang cur = out[i];  // copy: out reallocates below
        for (Op op : ops) {
            Lang nxt = apply_op(op, cur);
            if (seen.emplace(nxt, true).second) out.push_back(std::move(nxt));
        }
    }
    return out;
}

inline std::vector<Lang> generate_B(const Lang& l) {
    return generate_core(l, Mode::Positive);
}
inline std::vector<Lang> generate_E(const Lang& l) {
    return generate_core(l, Mode::Kleene);
}
inline OrbitGraph generate_A(const Lang& l) {
    return generate_orbit(l, Mode::Positive);
}
inline OrbitGraph generate_D(const Lang& l) {
    return generate_orbit(l, Mode::Kleene);
}

// X^{c-c-c-c} = X^{c-c} for any closure c: always true; false signals a
// bug in the operator implementations.
inline bool verify_eq3(const Lang& l, Mode mode) {
    Op c = closure_op(mode);
    Lang c1 = apply_op(c, l);
    Lang c2 = apply_op(c, complement(c1));
    Lang c3 = apply_op(c, complement(c2));
    Lang c4 = apply_op(c, complement(c3));
    return c4 == c2;
}

// X^{c-c-c} = X^{c-c-}. Holds for positive closure on every language; for
// Kleene closure it fails in general (L = {a} is a counterexample).
inline bool verify_eq4(const Lang& l, Mode mode) {
    Op c = closure_op(mode);
    Lang c1 = apply_op(c, l);
    Lang c2 = apply_op(c, complement(c1));
    Lang n2 = complement(c2);
    return apply_op(c, n2) == n2;
}

namespace detail {

struct LangSet {
    std::unordered_map<Lang, bool, CanonicalDfaHash> set;
    explicit LangSet(const std::vector<Lang>& langs) {
        for (const Lang& l : langs) set.emplace(l, true);
    }
    bool contains(const Lang& l) const { return set.count(l) > 0; }
};

} // namespace detail

// The map phi sends M to whichever of M u {eps}, M \ {eps} lies in B(L);
// it must commute with closure and interior: phi(M^*) = phi(M)^+ and
// phi(M^kleene-interior) = phi(M)^pos-interior for every M in E(L).
inline bool verify_phi(const Lang& l) {
    std::vector<Lang> b_family = generate_B(l);
    detail::LangSet b_set(b_family);

    auto phi = [&b_set](const Lang& m) -> Lang {
        Lang with = add_epsilon(m);
        if (b_set.contains(with)) return with;
        Lang without = remove_epsilon(m);
        if (b_set.contains(without)) return without;
        throw PhiUndefined();
    };

    for (const Lang& m : generate_E(l)) {
        if (phi(star_closure(m)) != plus_closure(phi(m))) return false;
        if (phi(kleene_interior(m)) != positive_interior(phi(m))) return false;
    }
    return true;
}

} // namespace klang

#endif
