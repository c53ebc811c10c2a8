#ifndef KLANG_NFA_HPP
#define KLANG_NFA_HPP

#include <cstdint>
#include <vector>

#include "klang/alphabet.hpp"
#include "klang/regex.hpp"

namespace klang {

using StateId = std::uint32_t;

struct Nfa {
    Alphabet alphabet;
    StateId state_count = 0;
    StateId start = 0;
    std::vector<std::uint8_t> accepting;            // one flag per state
    std::vector<std::vector<StateId>> eps;          // [state] -> targets
    std::vector<std::vector<std::vector<StateId>>> moves; // [state][letter] -> targets

    StateId add_state() {
        accepting.push_back(0);
        eps.emplace_back();
        moves.emplace_back(alphabet.size());
        return state_count++;
    }
    void add_eps(StateId from, StateId to) { eps[from].push_back(to); }
    void add_move(StateId from, std::size_t letter, StateId to) {
        moves[from][letter].push_back(to);
    }
};

namespace detail {

struct Frag {
    StateId start;
    StateId accept;
};

// Thompson construction; every fragment has a single accept state.
inline Frag compile_node(const RegexAst& t, Nfa& n) {
    switch (t->kind) {
        case RegexKind::EmptySet: {
            StateId s = n.add_state(), f = n.add_state();
            return {s, f};
        }
        case RegexKind::Epsilon: {
            StateId s = n.add_state(), f = n.add_state();
            n.add_eps(s, f);
            return {s, f};
        }
        case RegexKind::Symbol: {
            StateId s = n.add_state(), f = n.add_state();
            auto idx = n.alphabet.index_of(t->letter);
            if (!idx) throw UnknownSymbol(t->letter, 0);
            n.add_move(s, *idx, f);
            return {s, f};
        }
        case RegexKind::Union: {
            Frag a = compile_node(t->left, n);
            Frag b = compile_node(t->right, n);
            StateId s = n.add_state(), f = n.add_state();
            n.add_eps(s, a.start);
            n.add_eps(s, b.start);
            n.add_eps(a.accept, f);
            n.add_eps(b.accept, f);
            return {s, f};
        }
        case RegexKind::Concat: {
            Frag a = compile_node(t->left, n);
            Frag b = compile_node(t->right, n);
            n.add_eps(a.accept, b.start);
            return {a.start, b.accept};
        }
        case RegexKind::Star: {
            Frag a = compile_node(t->left, n);
            StateId s = n.add_state(), f = n.add_state();
            n.add_eps(s, a.start);
            n.add_eps(s, f);
            n.add_eps(a.accept, a.start);
            n.add_eps(a.accept, f);
            return {s, f};
        }
        case RegexKind::Plus: {
            // No bypass edge: epsilon is accepted only if the child accepts it.
            Frag a = compile_node(t->left, n);
            StateId s = n.add_state(), f = n.add_state();
            n.add_eps(s, a.start);
            n.add_eps(a.accept, a.start);
            n.add_eps(a.accept, f);
            return {s, f};
        }
    }
    throw std::logic_error("unreachable regex kind");
}

} // namespace detail

// Compile an AST into an NFA whose accepted set is the denotation of the
// tree over the given alphabet.
inline Nfa compile(const RegexAst& t, const Alphabet& alphabet) {
    Nfa n;
    n.alphabet = alphabet;
    detail::Frag f = detail::compile_node(t, n);
    n.start = f.start;
    n.accepting[f.accept] = 1;
    return n;
}

} // namespace klang

#endif
