#ifndef KLANG_HORIZON_HPP
#define KLANG_HORIZON_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "klang/lang_ops.hpp"

namespace klang {

// Exact finite representation of a language restricted to words of length
// at most n. Exactness of the restricted operators rests on one fact: for
// |w| <= n, membership of w in L^+, L^- or L^oplus depends only on words of
// length <= |w|, because concatenation factors never exceed |w|.
struct HorizonLang {
    Alphabet alphabet;
    int horizon = 0;
    std::set<std::string> words;

    bool operator==(const HorizonLang&) const = default;
};

// All words of length <= n in length-then-lexicographic order.
inline std::vector<std::string> words_up_to(const Alphabet& alphabet, int n) {
    std::vector<std::string> out{""};
    std::size_t level_begin = 0;
    for (int len = 1; len <= n; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::size_t c = 0; c < alphabet.size(); ++c)
                out.push_back(out[i] + alphabet.letter(c));
        level_begin = level_end;
    }
    return out;
}

inline HorizonLang from_dfa(const Lang& l, int n) {
    HorizonLang h;
    h.alphabet = l.alphabet;
    h.horizon = n;
    for (const std::string& w : words_up_to(l.alphabet, n))
        if (accepts(l, w)) h.words.insert(w);
    return h;
}

// Least fixpoint of X under concatenation, by increasing word length. A
// word belongs iff it is in X or splits into two shorter members.
inline HorizonLang plus_h(const HorizonLang& x) {
    HorizonLang out;
    out.alphabet = x.alphabet;
    out.horizon = x.horizon;
    for (const std::string& w : words_up_to(x.alphabet, x.horizon)) {
        bool member = x.words.count(w) > 0;
        for (std::size_t cut = 1; !member && cut < w.size(); ++cut) {
            member = out.words.count(w.substr(0, cut)) > 0 &&
                     out.words.count(w.substr(cut)) > 0;
        }
        if (member) out.words.insert(w);
    }
    return out;
}

inline HorizonLang complement_h(const HorizonLang& x) {
    HorizonLang out;
    out.alphabet = x.alphabet;
    out.horizon = x.horizon;
    for (const std::string& w : words_up_to(x.alphabet, x.horizon))
        if (!x.words.count(w)) out.words.insert(w);
    return out;
}

inline HorizonLang star_h(const HorizonLang& x) {
    HorizonLang out = plus_h(x);
    out.words.insert("");
    return out;
}

inline HorizonLang interior_h(const HorizonLang& x) {
    return complement_h(plus_h(complement_h(x)));
}

inline HorizonLang kleene_interior_h(const HorizonLang& x) {
    return complement_h(star_h(complement_h(x)));
}

inline HorizonLang apply_op_h(Op op, const HorizonLang& x) {
    switch (op) {
        case Op::PlusClosure:    return plus_h(x);
        case Op::StarClosure:    return star_h(x);
        case Op::PosInterior:    return interior_h(x);
        case Op::KleeneInterior: return kleene_interior_h(x);
        case Op::Complement:     return complement_h(x);
    }
    throw std::logic_error("unreachable op");
}

// Run one operator word through both engines and compare at the horizon.
// False means one of the two engines is wrong.
inline bool cross_validate(const OpWord& word, const Lang& l, int n) {
    Lang via_dfa = apply_word(word, l);
    HorizonLang via_horizon = from_dfa(l, n);
    for (Op op : word) via_horizon = apply_op_h(op, via_horizon);
    return from_dfa(via_dfa, n) == via_horizon;
}

// Validate every operator word over `ops` up to the given length by
// walking the reachable (language, horizon-set) pairs once each; a word
// validates iff its endpoint pair agrees, so checking the distinct
// endpoints covers all words.
inline bool cross_validate_all_words(const Lang& l,
                                     const std::vector<Op>& ops,
                                     int max_len, int n,
                                     OpWord* failing_word = nullptr) {
    struct Item {
        Lang lang;
        HorizonLang h;
        OpWord word;
    };
    // Every generated (language, horizon-set) pair is validated; only
    // expansion is deduplicated. Once a pair validates, a re-encounter of
    // the same language carries the same horizon set, so its subtree is
    // identical to the one already explored.
    std::vector<Item> queue{{l, from_dfa(l, n), {}}};
    std::unordered_map<Lang, bool, CanonicalDfaHash> expanded;
    expanded.emplace(l, true);

    for (std::size_t i = 0; i < queue.size(); ++i) {
        Item cur = queue[i];  // copy: queue reallocates below
        if (static_cast<int>(cur.word.size()) >= max_len) continue;
        for (Op op : ops) {
            Item nxt{apply_op(op, cur.lang), apply_op_h(op, cur.h), cur.word};
            nxt.word.push_back(op);
            if (from_dfa(nxt.lang, n) != nxt.h) {
                if (failing_word) *failing_word = nxt.word;
                return false;
            }
            if (expanded.emplace(nxt.lang, true).second)
                queue.push_back(std::move(nxt));
        }
    }
    return true;
}

// The clopen family of counting predicates: w is a member iff the number
// of positions in sigma1 is less than k times the number in sigma2.
struct PredicateLang {
    Alphabet alphabet;
    std::string sigma1;
    std::string sigma2;
    unsigned k = 0;

    bool contains(const std::string& w) const {
        long c1 = 0, c2 = 0;
        for (char ch : w) {
            if (sigma1.find(ch) != std::string::npos) ++c1;
            if (sigma2.find(ch) != std::string::npos) ++c2;
        }
        return c1 < static_cast<long>(k) * c2;
    }
};

struct ClopenCheckResult {
    bool clopen = false;
    // Set on failure: the concatenation witness and which side broke.
    std::optional<std::pair<std::string, std::string>> witness;
    bool failure_in_complement = false;
};

// Semigroup check of an arbitrary membership predicate and its complement
// within the horizon (both sides must contain uv whenever they contain
// u and v). Returns the first witness split on failure.
inline ClopenCheckResult check_clopen_at_horizon(
    const std::function<bool(const std::string&)>& member,
    const Alphabet& alphabet, int n) {
    auto words = words_up_to(alphabet, n);
    for (const std::string& u : words) {
        for (const std::string& v : words) {
            if (static_cast<int>(u.size() + v.size()) > n) continue;
            bool mu = member(u), mv = member(v), muv = member(u + v);
            if (mu && mv && !muv)
                return {false, std::make_pair(u, v), false};
            if (!mu && !mv && muv)
                return {false, std::make_pair(u, v), true};
        }
    }
    return {true, std::nullopt, false};
}

inline ClopenCheckResult check_clopen_predicate(const PredicateLang& p, int n) {
    return check_clopen_at_horizon(
        [&p](const std::string& w) { return p.contains(w); }, p.alphabet, n);
}

// ---------------------------------------------------------------------------
// Lattice checks. Subsets of the word universe are bitmasks; the universe
// must fit 63 words, which covers |Sigma| = 2 up to horizon 4.

struct LatticeUniverse {
    Alphabet alphabet;
    int horizon = 0;
    std::vector<std::string> words;
    std::uint64_t full = 0;
    // (i, j, k): if words i and j are members, their concatenation k must
    // be. Pairs involving epsilon are skipped as vacuous.
    std::vector<std::array<std::uint32_t, 3>> triples;
};

inline LatticeUniverse make_lattice_universe(const Alphabet& alphabet, int n) {
    LatticeUniverse u;
    u.alphabet = alphabet;
    u.horizon = n;
    u.words = words_up_to(alphabet, n);
    if (u.words.size() > 63)
        throw std::invalid_argument("lattice universe too large for bitmasks");
    u.full = (1ull << u.words.size()) - 1;
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < u.words.size(); ++i) index[u.words[i]] = i;
    for (std::uint32_t i = 0; i < u.words.size(); ++i) {
        if (u.words[i].empty()) continue;
        for (std::uint32_t j = 0; j < u.words.size(); ++j) {
            if (u.words[j].empty()) continue;
            if (static_cast<int>(u.words[i].size() + u.words[j].size()) > n)
                continue;
            u.triples.push_back({i, j, index.at(u.words[i] + u.words[j])});
        }
    }
    return u;
}

inline bool mask_closed(const LatticeUniverse& u, std::uint64_t y) {
    for (const auto& t : u.triples) {
        if ((y >> t[0]) & (y >> t[1]) & 1ull) {
            if (!((y >> t[2]) & 1ull)) return false;
        }
    }
    return true;
}

inline bool mask_open(const LatticeUniverse& u, std::uint64_t y) {
    return mask_closed(u, u.full & ~y);
}

inline std::uint64_t mask_plus(const LatticeUniverse& u, std::uint64_t x) {
    std::uint64_t p = x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : u.triples) {
            if (((p >> t[0]) & (p >> t[1]) & 1ull) && !((p >> t[2]) & 1ull)) {
                p |= 1ull << t[2];
                changed = true;
            }
        }
    }
    return p;
}

inline std::uint64_t mask_interior(const LatticeUniverse& u, std::uint64_t x) {
    return u.full & ~mask_plus(u, u.full & ~x);
}

inline std::uint64_t mask_of(const LatticeUniverse& u, const HorizonLang& h) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < u.words.size(); ++i)
        if (h.words.count(u.words[i])) m |= 1ull << i;
    return m;
}

// The closure of X equals the intersection of every concatenation-closed
// superset of X: checked literally, enumerating all supersets.
inline bool lattice_closure_is_meet(const LatticeUniverse& u, std::uint64_t x) {
    std::uint64_t rest = u.full & ~x;
    std::uint64_t meet = u.full;
    std::uint64_t t = rest;
    for (;;) {
        std::uint64_t y = x | t;
        if (mask_closed(u, y)) meet &= y;
        if (t == 0) break;
        t = (t - 1) & rest;
    }
    return meet == mask_plus(u, x);
}

// The interior of X equals the union of every open subset of X: checked
// literally, enumerating all subsets.
inline bool lattice_interior_is_join(const LatticeUniverse& u, std::uint64_t x) {
    std::uint64_t join = 0;
    std::uint64_t t = x;
    for (;;) {
        if (mask_open(u, t)) join |= t;
        if (t == 0) break;
        t = (t - 1) & x;
    }
    return join == mask_interior(u, x);
}

// Exhaustive over every X in the universe. Feasible up to 16 words
// (|Sigma| = 2, horizon 3); larger universes use sampled panels instead.
inline bool lattice_exhaustive(const LatticeUniverse& u,
                               std::uint64_t* failing_x = nullptr) {
    if (u.words.size() > 16)
        throw std::invalid_argument("universe too large for exhaustive sweep");
    const std::uint32_t nsub = 1u << u.words.size();
    std::vector<std::uint8_t> closed(nsub);
    for (std::uint32_t y = 0; y < nsub; ++y) closed[y] = mask_closed(u, y);

    for (std::uint64_t x = 0; x < nsub; ++x) {
        std::uint64_t rest = u.full & ~x;
        std::uint64_t meet = u.full;
        std::uint64_t t = rest;
        for (;;) {
            if (closed[x | t]) meet &= x | t;
            if (t == 0) break;
            t = (t - 1) & rest;
        }
        if (meet != mask_plus(u, x)) {
            if (failing_x) *failing_x = x;
            return false;
        }
        std::uint64_t join = 0;
        t = x;
        for (;;) {
            if (closed[u.full & ~t]) join |= t;  // open(t)
            if (t == 0) break;
            t = (t - 1) & x;
        }
        if (join != mask_interior(u, x)) {
            if (failing_x) *failing_x = x;
            return false;
        }
    }
    return true;
}

} // namespace klang

#endif
