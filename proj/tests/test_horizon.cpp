#include <catch2/catch_amalgamated.hpp>

#include "klang/horizon.hpp"
#include "klang/random_regex.hpp"

using namespace klang;

namespace {

const Alphabet kA("a");
const Alphabet kAb("ab");

HorizonLang hl(const Alphabet& alphabet, int n,
               std::initializer_list<const char*> words) {
    HorizonLang h;
    h.alphabet = alphabet;
    h.horizon = n;
    for (const char* w : words) h.words.insert(w);
    return h;
}

} // namespace

TEST_CASE("from_dfa restricts a language to the horizon") {
    CHECK(from_dfa(lang_from_regex("a+", kA), 3) ==
          hl(kA, 3, {"a", "aa", "aaa"}));
    CHECK(from_dfa(lang_from_regex("#", kA), 5).words.empty());
    CHECK(from_dfa(lang_from_regex("a*", kA), 0) == hl(kA, 0, {""}));
}

TEST_CASE("plus_h computes the truncated positive closure") {
    CHECK(plus_h(hl(kA, 5, {"aa", "aaa"})) ==
          hl(kA, 5, {"aa", "aaa", "aaaa", "aaaaa"}));
    CHECK(plus_h(hl(kA, 7, {})).words.empty());
    // All sums of 1 and 4 up to six.
    CHECK(plus_h(hl(kA, 6, {"a", "aaaa"})) ==
          hl(kA, 6, {"a", "aa", "aaa", "aaaa", "aaaaa", "aaaaaa"}));
    // Epsilon passes through but creates nothing.
    CHECK(plus_h(hl(kA, 2, {""})) == hl(kA, 2, {""}));
}

TEST_CASE("complement_h, star_h, interior_h") {
    HorizonLang x = hl(kA, 4, {"a", "aaa"});
    CHECK(complement_h(complement_h(x)) == x);
    CHECK(star_h(hl(kA, 3, {})) == hl(kA, 3, {""}));
    CHECK(interior_h(hl(kA, 6, {"aa"})).words.empty());
    CHECK(interior_h(hl(kA, 8, {"a", "aaaa"})) == hl(kA, 8, {"a"}));
}

TEST_CASE("cross_validate agrees on specific operator words") {
    CHECK(cross_validate({Op::PlusClosure, Op::Complement, Op::PlusClosure},
                         lang_from_regex("a|ab|bb", kAb), 8));
    CHECK(cross_validate({Op::PosInterior},
                         lang_from_regex("a|aaaa", kA), 8));
    Lang seeded = lang_from_ast(random_regex(42, 4, kAb), kAb);
    CHECK(cross_validate({Op::StarClosure, Op::Complement, Op::StarClosure,
                          Op::Complement, Op::StarClosure},
                         seeded, 6));
}

TEST_CASE("both engines agree on every operator word of length <= 5") {
    const std::vector<Op> pos{Op::PlusClosure, Op::PosInterior,
                              Op::Complement};
    const std::vector<Op> kle{Op::StarClosure, Op::KleeneInterior,
                              Op::Complement};
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const Alphabet& alphabet = (i % 2 == 0) ? kAb : kA;
        Lang l = lang_from_ast(random_regex(mix_seed(40, i), 5, alphabet),
                               alphabet);
        OpWord bad;
        INFO("sample " << i);
        if (!cross_validate_all_words(l, pos, 5, 8, &bad)) {
            INFO("word " << word_to_string(bad));
            FAIL("positive-mode divergence");
        }
        if (!cross_validate_all_words(l, kle, 5, 8, &bad)) {
            INFO("word " << word_to_string(bad));
            FAIL("kleene-mode divergence");
        }
    }
}

TEST_CASE("engines also agree when the operator sets mix") {
    const std::vector<Op> all{Op::PlusClosure, Op::StarClosure,
                              Op::PosInterior, Op::KleeneInterior,
                              Op::Complement};
    for (std::uint64_t i = 0; i < 100; ++i) {
        Lang l = lang_from_ast(random_regex(mix_seed(43, i), 5, kAb), kAb);
        OpWord bad;
        INFO("sample " << i);
        CHECK(cross_validate_all_words(l, all, 3, 6, &bad));
    }
}

TEST_CASE("counting predicates are clopen") {
    // |w|_1 < 2|w|_2 with disjoint letter classes.
    PredicateLang p{kAb, "a", "b", 2};
    CHECK(check_clopen_predicate(p, 6).clopen);
    // k = 0 gives the empty language, which is clopen.
    PredicateLang zero{kAb, "a", "b", 0};
    CHECK(check_clopen_predicate(zero, 6).clopen);
    // Overlapping classes still satisfy the additivity argument.
    PredicateLang overlap{kAb, "ab", "b", 1};
    CHECK(check_clopen_predicate(overlap, 6).clopen);
}

TEST_CASE("a broken predicate yields a concrete witness") {
    // Equality counting |w|_a = |w|_b is closed but its complement is not:
    // the checker must find a split of a balanced word into two unbalanced
    // halves.
    auto balanced = [](const std::string& w) {
        long a = 0, b = 0;
        for (char c : w) (c == 'a' ? a : b)++;
        return a == b;
    };
    ClopenCheckResult r = check_clopen_at_horizon(balanced, kAb, 4);
    REQUIRE_FALSE(r.clopen);
    REQUIRE(r.witness.has_value());
    CHECK(r.failure_in_complement);
    const auto& [u, v] = *r.witness;
    CHECK_FALSE(balanced(u));
    CHECK_FALSE(balanced(v));
    CHECK(balanced(u + v));
}

TEST_CASE("interior fixpoint at the horizon matches the split test") {
    auto words = words_up_to(kAb, 5);
    for (std::uint64_t i = 0; i < 100; ++i) {
        Lang l = lang_from_ast(random_regex(mix_seed(41, i), 5, kAb), kAb);
        HorizonLang x = from_dfa(l, 5);
        bool fixed = interior_h(x) == x;
        bool bad_split = false;
        for (const std::string& u : words) {
            for (const std::string& v : words) {
                if (static_cast<int>(u.size() + v.size()) > 5) continue;
                if (!x.words.count(u) && !x.words.count(v) &&
                    x.words.count(u + v)) {
                    bad_split = true;
                    break;
                }
            }
            if (bad_split) break;
        }
        INFO("sample " << i);
        CHECK(fixed == !bad_split);
    }
}

TEST_CASE("mask engine agrees with the set engine") {
    LatticeUniverse u = make_lattice_universe(kAb, 3);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t x = rng() & u.full;
        HorizonLang h;
        h.alphabet = kAb;
        h.horizon = 3;
        for (std::size_t w = 0; w < u.words.size(); ++w)
            if ((x >> w) & 1) h.words.insert(u.words[w]);
        CHECK(mask_plus(u, x) == mask_of(u, plus_h(h)));
        CHECK(mask_interior(u, x) == mask_of(u, interior_h(h)));
    }
}

TEST_CASE("closure is the meet of closed supersets, interior the join of "
          "open subsets") {
    for (int n = 0; n <= 3; ++n) {
        LatticeUniverse u = make_lattice_universe(kAb, n);
        std::uint64_t bad = 0;
        INFO("binary universe, horizon " << n);
        CHECK(lattice_exhaustive(u, &bad));
    }
    for (int n = 0; n <= 4; ++n) {
        LatticeUniverse u = make_lattice_universe(kA, n);
        std::uint64_t bad = 0;
        INFO("unary universe, horizon " << n);
        CHECK(lattice_exhaustive(u, &bad));
    }
    // Horizon-4 binary instances, exhaustive over the relevant half-lattice.
    LatticeUniverse u4 = make_lattice_universe(kAb, 4);
    for (const char* text : {"aa", "a|bb", "a|ab|bb", "a|abaa"}) {
        Lang l = lang_from_regex(text, kAb);
        std::uint64_t x = mask_of(u4, from_dfa(l, 4));
        INFO(text);
        CHECK(lattice_interior_is_join(u4, x));
        CHECK(lattice_closure_is_meet(u4, u4.full & ~x));
    }
}
