#ifndef KLANG_DFA_HPP
#define KLANG_DFA_HPP

#include <cstdint>
#include <cstdlib>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "klang/errors.hpp"
#include "klang/nfa.hpp"

namespace klang {

// Complete deterministic automaton: the transition map is total, with an
// explicit dead state where needed, so complement is a pure accepting-flip.
struct Dfa {
    Alphabet alphabet;
    StateId state_count = 0;
    StateId start = 0;
    std::vector<StateId> trans;           // state_count * |alphabet|
    std::vector<std::uint8_t> accepting;

    StateId next(StateId s, std::size_t letter) const {
        return trans[s * alphabet.size() + letter];
    }
};

// A minimal complete DFA whose states are numbered 0..k-1 in breadth-first
// discovery order from the start state (state 0), exploring letters in
// alphabet order. Two CanonicalDfas denote the same language iff they are
// field-by-field identical, which makes language equality a value equality.
struct CanonicalDfa {
    Alphabet alphabet;
    StateId state_count = 0;
    std::vector<StateId> trans;
    std::vector<std::uint8_t> accepting;

    StateId next(StateId s, std::size_t letter) const {
        return trans[s * alphabet.size() + letter];
    }
    bool operator==(const CanonicalDfa&) const = default;
};

struct CanonicalDfaHash {
    std::size_t operator()(const CanonicalDfa& d) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (char c : d.alphabet.letters()) mix(static_cast<std::uint8_t>(c));
        mix(d.state_count);
        for (StateId t : d.trans) mix(t);
        for (std::uint8_t a : d.accepting) mix(a);
        return static_cast<std::size_t>(h);
    }
};

// Subset-construction cap; KLANG_STATE_CAP overrides the default.
inline std::size_t default_state_cap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("KLANG_STATE_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return cap;
}

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline void bits_set(Bits& b, StateId i) { b[i >> 6] |= 1ull << (i & 63); }
inline bool bits_test(const Bits& b, StateId i) {
    return (b[i >> 6] >> (i & 63)) & 1;
}

struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : b) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline void eps_close(const Nfa& n, Bits& set) {
    std::vector<StateId> stack;
    for (StateId s = 0; s < n.state_count; ++s)
        if (bits_test(set, s)) stack.push_back(s);
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (StateId t : n.eps[s]) {
            if (!bits_test(set, t)) {
                bits_set(set, t);
                stack.push_back(t);
            }
        }
    }
}

} // namespace detail

// Subset construction. The empty subset doubles as the dead state, so the
// result is complete by construction. Throws StateBlowup past the cap.
inline Dfa determinize(const Nfa& n, std::size_t cap = default_state_cap()) {
    using detail::Bits;
    const std::size_t words = (n.state_count + 63) / 64 + (n.state_count == 0);
    const std::size_t k = n.alphabet.size();

    Dfa d;
    d.alphabet = n.alphabet;

    std::unordered_map<Bits, StateId, detail::BitsHash> ids;
    std::vector<Bits> subsets;

    auto intern = [&](Bits&& s) -> StateId {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        if (subsets.size() >= cap) throw StateBlowup(cap);
        StateId id = static_cast<StateId>(subsets.size());
        ids.emplace(s, id);
        subsets.push_back(std::move(s));
        bool acc = false;
        for (StateId q = 0; q < n.state_count && !acc; ++q)
            acc = detail::bits_test(subsets[id], q) && n.accepting[q];
        d.accepting.push_back(acc ? 1 : 0);
        return id;
    };

    Bits init(words, 0);
    if (n.state_count > 0) detail::bits_set(init, n.start);
    detail::eps_close(n, init);
    d.start = intern(std::move(init));

    for (StateId cur = 0; cur < subsets.size(); ++cur) {
        for (std::size_t c = 0; c < k; ++c) {
            Bits nxt(words, 0);
            for (StateId q = 0; q < n.state_count; ++q) {
                if (!detail::bits_test(subsets[cur], q)) continue;
                for (StateId t : n.moves[q][c]) detail::bits_set(nxt, t);
            }
            detail::eps_close(n, nxt);
            StateId id = intern(std::move(nxt));
            d.trans.push_back(id);
        }
    }
    d.state_count = static_cast<StateId>(subsets.size());
    return d;
}

// Minimize via Moore partition refinement, then renumber the quotient in
// BFS discovery order. Idempotent.
inline CanonicalDfa minimize(const Dfa& d) {
    const std::size_t k = d.alphabet.size();
    constexpr StateId kUnreached = static_cast<StateId>(-1);

    // Restrict to reachable states.
    std::vector<StateId> remap(d.state_count, kUnreached);
    std::vector<StateId> order;
    remap[d.start] = 0;
    order.push_back(d.start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            StateId t = d.next(order[i], c);
            if (remap[t] == kUnreached) {
                remap[t] = static_cast<StateId>(order.size());
                order.push_back(t);
            }
        }
    }
    const StateId m = static_cast<StateId>(order.size());
    std::vector<StateId> trans(m * k);
    std::vector<std::uint8_t> acc(m);
    for (StateId i = 0; i < m; ++i) {
        acc[i] = d.accepting[order[i]];
        for (std::size_t c = 0; c < k; ++c)
            trans[i * k + c] = remap[d.next(order[i], c)];
    }

    // Refine the accepting/rejecting split until the partition is stable.
    std::vector<StateId> cls(m);
    for (StateId i = 0; i < m; ++i) cls[i] = acc[i];
    std::size_t n_classes = 2;
    for (;;) {
        std::unordered_map<std::string, StateId> sig_ids;
        std::vector<StateId> next_cls(m);
        std::string sig;
        for (StateId i = 0; i < m; ++i) {
            sig.clear();
            sig.append(reinterpret_cast<const char*>(&cls[i]), sizeof(StateId));
            for (std::size_t c = 0; c < k; ++c) {
                StateId tc = cls[trans[i * k + c]];
                sig.append(reinterpret_cast<const char*>(&tc), sizeof(StateId));
            }
            auto [it, inserted] =
                sig_ids.emplace(sig, static_cast<StateId>(sig_ids.size()));
            next_cls[i] = it->second;
        }
        if (sig_ids.size() == n_classes) break;
        n_classes = sig_ids.size();
        cls = std::move(next_cls);
    }

    // Quotient, then canonical BFS numbering from the start class.
    std::vector<StateId> rep(n_classes, kUnreached);
    for (StateId i = 0; i < m; ++i)
        if (rep[cls[i]] == kUnreached) rep[cls[i]] = i;

    std::vector<StateId> canon_id(n_classes, kUnreached);
    std::vector<StateId> bfs;
    canon_id[cls[0]] = 0;
    bfs.push_back(cls[0]);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        StateId q = rep[bfs[i]];
        for (std::size_t c = 0; c < k; ++c) {
            StateId t = cls[trans[q * k + c]];
            if (canon_id[t] == kUnreached) {
                canon_id[t] = static_cast<StateId>(bfs.size());
                bfs.push_back(t);
            }
        }
    }

    CanonicalDfa out;
    out.alphabet = d.alphabet;
    out.state_count = static_cast<StateId>(bfs.size());
    out.trans.resize(bfs.size() * k);
    out.accepting.resize(bfs.size());
    for (StateId i = 0; i < bfs.size(); ++i) {
        StateId q = rep[bfs[i]];
        out.accepting[i] = acc[q];
        for (std::size_t c = 0; c < k; ++c)
            out.trans[i * k + c] = canon_id[cls[trans[q * k + c]]];
    }
    return out;
}

inline Dfa as_dfa(const CanonicalDfa& c) {
    Dfa d;
    d.alphabet = c.alphabet;
    d.state_count = c.state_count;
    d.start = 0;
    d.trans = c.trans;
    d.accepting = c.accepting;
    return d;
}

inline bool accepts(const CanonicalDfa& d, std::string_view w) {
    StateId s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto idx = d.alphabet.index_of(w[i]);
        if (!idx) throw UnknownSymbol(w[i], i);
        s = d.next(s, *idx);
    }
    return d.accepting[s] != 0;
}

// Every canonical state is reachable, so emptiness is just "no accepting
// state exists".
inline bool is_empty(const CanonicalDfa& d) {
    for (std::uint8_t a : d.accepting)
        if (a) return false;
    return true;
}

inline bool contains_epsilon(const CanonicalDfa& d) {
    return d.accepting[0] != 0;
}

inline bool equivalent(const CanonicalDfa& a, const CanonicalDfa& b) {
    if (a.alphabet != b.alphabet) throw AlphabetMismatch();
    return a == b;
}

} // namespace klang

#endif
