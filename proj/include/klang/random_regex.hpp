#ifndef KLANG_RANDOM_REGEX_HPP
#define KLANG_RANDOM_REGEX_HPP

#include <cstdint>
#include <random>

#include "klang/regex.hpp"

namespace klang {

namespace detail {

// std::uniform_int_distribution is not bit-stable across standard library
// implementations; plain modulo on the standardized mt19937_64 stream is.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

inline RegexAst random_regex_node(std::mt19937_64& rng, int depth,
                                  const Alphabet& alphabet) {
    // Leaves vs. internal nodes are weighted 50/50 at each level.
    bool leaf = depth <= 1 || (rng() & 1u);
    if (leaf) {
        std::uint64_t k = draw_below(rng, 8);
        if (k == 6) return re_epsilon();
        if (k == 7) return re_empty();
        return re_symbol(alphabet.letter(draw_below(rng, alphabet.size())));
    }
    switch (draw_below(rng, 4)) {
        case 0: {
            RegexAst l = random_regex_node(rng, depth - 1, alphabet);
            RegexAst r = random_regex_node(rng, depth - 1, alphabet);
            return re_union(std::move(l), std::move(r));
        }
        case 1: {
            RegexAst l = random_regex_node(rng, depth - 1, alphabet);
            RegexAst r = random_regex_node(rng, depth - 1, alphabet);
            return re_concat(std::move(l), std::move(r));
        }
        case 2:
            return re_star(random_regex_node(rng, depth - 1, alphabet));
        default:
            return re_plus(random_regex_node(rng, depth - 1, alphabet));
    }
}

} // namespace detail

// Deterministic for a fixed seed, on every platform. Every AST variant is
// reachable; tree depth never exceeds max_depth.
inline RegexAst random_regex(std::uint64_t seed, int max_depth,
                             const Alphabet& alphabet) {
    if (max_depth < 1)
        throw std::invalid_argument("max_depth must be >= 1");
    std::mt19937_64 rng(seed);
    return detail::random_regex_node(rng, max_depth, alphabet);
}

// Stream-independent per-sample seeds for the property suites.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace klang

#endif
