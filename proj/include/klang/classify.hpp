#ifndef KLANG_CLASSIFY_HPP
#define KLANG_CLASSIFY_HPP

#include <string>
#include <utility>

#include "klang/orbit.hpp"

namespace klang {

// The nine structures of (B(L), closure, interior) under positive closure.
enum class PositiveCase { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9 };

// The twelve Kleene-mode structures. Sub-case convention: (2a) open with
// epsilon not in L, (2b) open with epsilon in L, (3a) closed with epsilon
// in L, (3b) closed with epsilon not in L.
enum class KleeneCase {
    C1a, C1b, C2a, C2b, C3a, C3b, C4, C5, C6, C7, C8, C9
};

struct PredicateBundle {
    bool open = false;             // L = L^interior
    bool closed = false;           // L = L^closure
    bool plus_clopen = false;      // L^+ clopen
    bool plus_open = false;        // L^+ open (same thing: closures are closed)
    bool interior_clopen = false;  // L^interior clopen
    bool interior_closed = false;
    bool eq_int_plus = false;      // L^{interior closure} = L^+
    bool eq_plus_int = false;      // L^{closure interior} = L^interior
    bool eq_mixed = false;         // L^{closure interior} = L^{interior closure}
    bool contains_epsilon = false;
};

inline PredicateBundle predicates(const Lang& l) {
    Lang p = plus_closure(l);
    Lang i = positive_interior(l);
    Lang ip = plus_closure(i);
    Lang pi = positive_interior(p);

    PredicateBundle b;
    b.open = (i == l);
    b.closed = (p == l);
    b.plus_open = (pi == p);
    b.plus_clopen = b.plus_open && (plus_closure(p) == p);
    b.interior_closed = (ip == i);
    b.interior_clopen = b.interior_closed && (positive_interior(i) == i);
    b.eq_int_plus = (ip == p);
    b.eq_plus_int = (pi == i);
    b.eq_mixed = (pi == ip);
    b.contains_epsilon = contains_epsilon(l);
    return b;
}

inline std::pair<std::size_t, std::size_t> positive_case_sizes(PositiveCase c) {
    switch (c) {
        case PositiveCase::C1: return {1, 2};
        case PositiveCase::C2:
        case PositiveCase::C3: return {2, 4};
        case PositiveCase::C4:
        case PositiveCase::C5: return {3, 6};
        case PositiveCase::C6:
        case PositiveCase::C7:
        case PositiveCase::C8: return {4, 8};
        case PositiveCase::C9: return {5, 10};
    }
    throw std::logic_error("unreachable case");
}

inline std::pair<std::size_t, std::size_t> kleene_case_sizes(KleeneCase c) {
    switch (c) {
        case KleeneCase::C1a:
        case KleeneCase::C1b: return {2, 4};
        case KleeneCase::C2a:
        case KleeneCase::C3a: return {3, 6};
        case KleeneCase::C2b:
        case KleeneCase::C3b: return {4, 8};
        case KleeneCase::C4:
        case KleeneCase::C5: return {4, 8};
        case KleeneCase::C6:
        case KleeneCase::C7: return {6, 12};
        case KleeneCase::C8: return {5, 10};
        case KleeneCase::C9: return {7, 14};
    }
    throw std::logic_error("unreachable case");
}

inline const char* positive_case_label(PositiveCase c) {
    switch (c) {
        case PositiveCase::C1: return "(1)";
        case PositiveCase::C2: return "(2)";
        case PositiveCase::C3: return "(3)";
        case PositiveCase::C4: return "(4)";
        case PositiveCase::C5: return "(5)";
        case PositiveCase::C6: return "(6)";
        case PositiveCase::C7: return "(7)";
        case PositiveCase::C8: return "(8)";
        case PositiveCase::C9: return "(9)";
    }
    return "?";
}

inline const char* kleene_case_label(KleeneCase c) {
    switch (c) {
        case KleeneCase::C1a: return "(1a)";
        case KleeneCase::C1b: return "(1b)";
        case KleeneCase::C2a: return "(2a)";
        case KleeneCase::C2b: return "(2b)";
        case KleeneCase::C3a: return "(3a)";
        case KleeneCase::C3b: return "(3b)";
        case KleeneCase::C4:  return "(4)";
        case KleeneCase::C5:  return "(5)";
        case KleeneCase::C6:  return "(6)";
        case KleeneCase::C7:  return "(7)";
        case KleeneCase::C8:  return "(8)";
        case KleeneCase::C9:  return "(9)";
    }
    return "?";
}

namespace detail {

inline PositiveCase positive_case_from_bundle(const PredicateBundle& b) {
    if (b.open && b.closed) return PositiveCase::C1;
    if (b.open) return PositiveCase::C2;
    if (b.closed) return PositiveCase::C3;
    // L neither open nor closed: its closure and interior cannot both be
    // clopen, so the four remaining splits are exhaustive.
    if (b.plus_clopen && b.interior_clopen)
        throw Unclassifiable("closure and interior both clopen for a "
                             "language that is neither open nor closed");
    if (b.plus_clopen) return b.eq_int_plus ? PositiveCase::C4 : PositiveCase::C6;
    if (b.interior_clopen)
        return b.eq_plus_int ? PositiveCase::C5 : PositiveCase::C7;
    return b.eq_mixed ? PositiveCase::C8 : PositiveCase::C9;
}

} // namespace detail

// Decide the case from the predicate bundle, then cross-assert against the
// generated orbit sizes: two independent paths to the same answer, so a
// transcription error in either one surfaces as Unclassifiable instead of
// a silent misclassification.
inline PositiveCase classify_positive(const Lang& l) {
    PositiveCase c = detail::positive_case_from_bundle(predicates(l));
    auto expected = positive_case_sizes(c);
    std::size_t b_size = generate_B(l).size();
    std::size_t a_size = generate_A(l).total_size();
    if (b_size != expected.first || a_size != expected.second)
        throw Unclassifiable(
            std::string("case ") + positive_case_label(c) + " expects |B|=" +
            std::to_string(expected.first) + ", |A|=" +
            std::to_string(expected.second) + " but orbit gives |B|=" +
            std::to_string(b_size) + ", |A|=" + std::to_string(a_size));
    return c;
}

inline KleeneCase classify_kleene(const Lang& l) {
    PredicateBundle b = predicates(l);
    PositiveCase pos = detail::positive_case_from_bundle(b);
    KleeneCase c;
    switch (pos) {
        case PositiveCase::C1:
            c = b.contains_epsilon ? KleeneCase::C1a : KleeneCase::C1b;
            break;
        case PositiveCase::C2:
            c = b.contains_epsilon ? KleeneCase::C2b : KleeneCase::C2a;
            break;
        case PositiveCase::C3:
            c = b.contains_epsilon ? KleeneCase::C3a : KleeneCase::C3b;
            break;
        case PositiveCase::C4: c = KleeneCase::C4; break;
        case PositiveCase::C5: c = KleeneCase::C5; break;
        case PositiveCase::C6: c = KleeneCase::C6; break;
        case PositiveCase::C7: c = KleeneCase::C7; break;
        case PositiveCase::C8: c = KleeneCase::C8; break;
        case PositiveCase::C9: c = KleeneCase::C9; break;
        default: throw Unclassifiable("bad positive case");
    }
    auto expected = kleene_case_sizes(c);
    std::size_t e_size = generate_E(l).size();
    std::size_t d_size = generate_D(l).total_size();
    if (e_size != expected.first || d_size != expected.second)
        throw Unclassifiable(
            std::string("case ") + kleene_case_label(c) + " expects |E|=" +
            std::to_string(expected.first) + ", |D|=" +
            std::to_string(expected.second) + " but orbit gives |E|=" +
            std::to_string(e_size) + ", |D|=" + std::to_string(d_size));
    return c;
}

// The complement of a case-(2) language is case (3), and so on: the
// involution 2<->3, 4<->5, 6<->7 with 1, 8, 9 self-dual.
inline PositiveCase dual_of(PositiveCase c) {
    switch (c) {
        case PositiveCase::C1: return PositiveCase::C1;
        case PositiveCase::C2: return PositiveCase::C3;
        case PositiveCase::C3: return PositiveCase::C2;
        case PositiveCase::C4: return PositiveCase::C5;
        case PositiveCase::C5: return PositiveCase::C4;
        case PositiveCase::C6: return PositiveCase::C7;
        case PositiveCase::C7: return PositiveCase::C6;
        case PositiveCase::C8: return PositiveCase::C8;
        case PositiveCase::C9: return PositiveCase::C9;
    }
    throw std::logic_error("unreachable case");
}

} // namespace klang

#endif
