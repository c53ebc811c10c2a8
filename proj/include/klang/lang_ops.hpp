#ifndef KLANG_LANG_OPS_HPP
#define KLANG_LANG_OPS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "klang/dfa.hpp"

namespace klang {

// A language is identified by its canonical DFA.
using Lang = CanonicalDfa;

inline Lang lang_from_ast(const RegexAst& t, const Alphabet& alphabet) {
    return minimize(determinize(compile(t, alphabet)));
}

inline Lang lang_from_regex(std::string_view text, const Alphabet& alphabet) {
    return lang_from_ast(parse_regex(text, alphabet), alphabet);
}

inline Lang lang_empty(const Alphabet& alphabet) {
    return lang_from_ast(re_empty(), alphabet);
}

inline Lang lang_epsilon(const Alphabet& alphabet) {
    return lang_from_ast(re_epsilon(), alphabet);
}

inline Lang lang_sigma_star(const Alphabet& alphabet) {
    Dfa d;
    d.alphabet = alphabet;
    d.state_count = 1;
    d.start = 0;
    d.trans.assign(alphabet.size(), 0);
    d.accepting.assign(1, 1);
    return minimize(d);
}

inline Lang lang_word(std::string_view w, const Alphabet& alphabet) {
    RegexAst t = w.empty() ? re_epsilon() : re_symbol(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        t = re_concat(std::move(t), re_symbol(w[i]));
    return lang_from_ast(t, alphabet);
}

namespace detail {

inline Nfa nfa_of(const Lang& l) {
    Nfa n;
    n.alphabet = l.alphabet;
    for (StateId s = 0; s < l.state_count; ++s) n.add_state();
    n.start = 0;
    for (StateId s = 0; s < l.state_count; ++s) {
        n.accepting[s] = l.accepting[s];
        for (std::size_t c = 0; c < l.alphabet.size(); ++c)
            n.add_move(s, c, l.next(s, c));
    }
    return n;
}

// Append all states of src into dst, returning the id offset.
inline StateId splice(Nfa& dst, const Lang& src) {
    StateId base = dst.state_count;
    for (StateId s = 0; s < src.state_count; ++s) dst.add_state();
    for (StateId s = 0; s < src.state_count; ++s) {
        dst.accepting[base + s] = src.accepting[s];
        for (std::size_t c = 0; c < src.alphabet.size(); ++c)
            dst.add_move(base + s, c, base + src.next(s, c));
    }
    return base;
}

} // namespace detail

// Complementing a minimal complete DFA flips accepting states and changes
// neither the partition nor the BFS numbering, so the result stays canonical.
inline Lang complement(const Lang& l) {
    Lang out = l;
    for (auto& a : out.accepting) a = a ? 0 : 1;
    return out;
}

// Positive closure. An epsilon edge runs from every accepting state to a
// non-accepting copy of the start; the start itself is never made
// accepting, so the result contains epsilon iff the input does.
inline Lang plus_closure(const Lang& l) {
    Nfa n = detail::nfa_of(l);
    StateId restart = n.add_state();
    for (std::size_t c = 0; c < l.alphabet.size(); ++c)
        n.add_move(restart, c, l.next(0, c));
    for (StateId s = 0; s < l.state_count; ++s)
        if (l.accepting[s]) n.add_eps(s, restart);
    return minimize(determinize(n));
}

inline Lang union_of(const Lang& a, const Lang& b) {
    if (a.alphabet != b.alphabet) throw AlphabetMismatch();
    const std::size_t k = a.alphabet.size();
    Dfa d;
    d.alphabet = a.alphabet;
    d.state_count = a.state_count * b.state_count;
    d.start = 0;
    d.trans.resize(d.state_count * k);
    d.accepting.resize(d.state_count);
    for (StateId i = 0; i < a.state_count; ++i) {
        for (StateId j = 0; j < b.state_count; ++j) {
            StateId p = i * b.state_count + j;
            d.accepting[p] = (a.accepting[i] || b.accepting[j]) ? 1 : 0;
            for (std::size_t c = 0; c < k; ++c)
                d.trans[p * k + c] = a.next(i, c) * b.state_count + b.next(j, c);
        }
    }
    return minimize(d);
}

inline Lang intersection_of(const Lang& a, const Lang& b) {
    if (a.alphabet != b.alphabet) throw AlphabetMismatch();
    return complement(union_of(complement(a), complement(b)));
}

inline Lang concatenate(const Lang& a, const Lang& b) {
    if (a.alphabet != b.alphabet) throw AlphabetMismatch();
    Nfa n = detail::nfa_of(a);
    StateId base = detail::splice(n, b);
    for (StateId s = 0; s < a.state_count; ++s) {
        if (a.accepting[s]) {
            n.add_eps(s, base);
            n.accepting[s] = 0;
        }
    }
    return minimize(determinize(n));
}

// Toggle exactly the word epsilon: a fresh start state duplicates the old
// start's transitions with the desired epsilon membership.
namespace detail {

inline Lang with_epsilon(const Lang& l, bool want) {
    if (contains_epsilon(l) == want) return l;
    const std::size_t k = l.alphabet.size();
    Dfa d = as_dfa(l);
    StateId fresh = d.state_count++;
    d.accepting.push_back(want ? 1 : 0);
    for (std::size_t c = 0; c < k; ++c) d.trans.push_back(l.next(0, c));
    d.start = fresh;
    return minimize(d);
}

} // namespace detail

inline Lang add_epsilon(const Lang& l) { return detail::with_epsilon(l, true); }
inline Lang remove_epsilon(const Lang& l) { return detail::with_epsilon(l, false); }

// Kleene closure: positive closure plus epsilon.
inline Lang star_closure(const Lang& l) {
    return add_epsilon(plus_closure(l));
}

inline Lang positive_interior(const Lang& l) {
    return complement(plus_closure(complement(l)));
}

inline Lang kleene_interior(const Lang& l) {
    return complement(star_closure(complement(l)));
}

inline bool subset_of(const Lang& a, const Lang& b) {
    return is_empty(intersection_of(a, complement(b)));
}

inline bool proper_subset_of(const Lang& a, const Lang& b) {
    return subset_of(a, b) && !(a == b);
}

// Fixpoint characterizations of closed/open, plus the independent
// word-level characterizations they must agree with on every input.
inline bool is_closed(const Lang& l) {
    return equivalent(l, plus_closure(l));
}

// Closed iff L is a semigroup: uv in L for all u, v in L.
inline bool is_closed_semigroup_check(const Lang& l) {
    return subset_of(concatenate(l, l), l);
}

inline bool is_open(const Lang& l) {
    return equivalent(l, positive_interior(l));
}

// Open iff no word of L splits into two halves that both avoid L.
inline bool is_open_split_check(const Lang& l) {
    Lang co = complement(l);
    return is_empty(intersection_of(l, concatenate(co, co)));
}

inline bool is_clopen(const Lang& l) {
    return is_open(l) && is_closed(l);
}

namespace detail {

// States from which some accepting state is reachable.
inline std::vector<std::uint8_t> coaccessible(const Lang& l) {
    std::vector<std::uint8_t> useful(l.accepting.begin(), l.accepting.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId s = 0; s < l.state_count; ++s) {
            if (useful[s]) continue;
            for (std::size_t c = 0; c < l.alphabet.size(); ++c) {
                if (useful[l.next(s, c)]) {
                    useful[s] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    return useful;
}

} // namespace detail

// All non-empty prefixes of words of L, together with L itself. Epsilon is
// a member only when it is a member of L.
inline Lang prefix_closure(const Lang& l) {
    Dfa d = as_dfa(l);
    auto useful = detail::coaccessible(l);
    for (StateId s = 0; s < l.state_count; ++s) d.accepting[s] = useful[s];
    Lang res = minimize(d);
    return contains_epsilon(l) ? res : remove_epsilon(res);
}

inline Lang suffix_closure(const Lang& l) {
    Nfa n = detail::nfa_of(l);
    StateId fresh = n.add_state();
    n.start = fresh;
    for (StateId s = 0; s < l.state_count; ++s) n.add_eps(fresh, s);
    Lang res = minimize(determinize(n));
    return contains_epsilon(l) ? res : remove_epsilon(res);
}

inline Lang left_ideal(const Lang& l) {
    return concatenate(lang_sigma_star(l.alphabet), l);
}

inline Lang right_ideal(const Lang& l) {
    return concatenate(l, lang_sigma_star(l.alphabet));
}

inline Lang two_sided_ideal(const Lang& l) {
    return concatenate(lang_sigma_star(l.alphabet),
                       concatenate(l, lang_sigma_star(l.alphabet)));
}

// Does M witness that the closure of L is clopen, i.e. is M open with
// L subset of M subset of L^+? Whenever the witness is valid, L^+ must in
// fact be clopen; that implication is asserted here.
inline bool sandwich_check(const Lang& l, const Lang& m) {
    if (l.alphabet != m.alphabet) throw AlphabetMismatch();
    Lang plus = plus_closure(l);
    bool ok = is_open(m) && subset_of(l, m) && subset_of(m, plus);
    if (ok && !is_clopen(plus))
        throw std::logic_error("open sandwich found but closure not clopen");
    return ok;
}

// Operators usable in orbit words and the cross-validation harness.
enum class Op : std::uint8_t {
    PlusClosure,
    StarClosure,
    PosInterior,
    KleeneInterior,
    Complement,
};

inline Lang apply_op(Op op, const Lang& l) {
    switch (op) {
        case Op::PlusClosure:    return plus_closure(l);
        case Op::StarClosure:    return star_closure(l);
        case Op::PosInterior:    return positive_interior(l);
        case Op::KleeneInterior: return kleene_interior(l);
        case Op::Complement:     return complement(l);
    }
    throw std::logic_error("unreachable op");
}

inline const char* op_symbol(Op op) {
    switch (op) {
        case Op::PlusClosure:    return "+";
        case Op::StarClosure:    return "*";
        case Op::PosInterior:    return "\xe2\x8a\x95";  // U+2295
        case Op::KleeneInterior: return "\xe2\x8a\x9b";  // U+229B
        case Op::Complement:     return "-";
    }
    return "?";
}

// Tie-break rank for operator words: complement < closure < interior.
inline int op_rank(Op op) {
    switch (op) {
        case Op::Complement:     return 0;
        case Op::PlusClosure:
        case Op::StarClosure:    return 1;
        default:                 return 2;
    }
}

using OpWord = std::vector<Op>;

inline Lang apply_word(const OpWord& word, Lang l) {
    for (Op op : word) l = apply_op(op, l);
    return l;
}

inline std::string word_to_string(const OpWord& w) {
    std::string s;
    for (Op op : w) s += op_symbol(op);
    return s;
}

} // namespace klang

#endif
