#ifndef KLANG_REGEX_HPP
#define KLANG_REGEX_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "klang/alphabet.hpp"
#include "klang/errors.hpp"

namespace klang {

// Syntax tree of a regular expression. Plus is a first-class node, not
// sugar for Concat(x, Star(x)).
enum class RegexKind { EmptySet, Epsilon, Symbol, Union, Concat, Star, Plus };

struct RegexNode;
using RegexAst = std::shared_ptr<const RegexNode>;

struct RegexNode {
    RegexKind kind;
    char letter = '\0';       // Symbol only
    RegexAst left;            // Union/Concat: left operand; Star/Plus: child
    RegexAst right;           // Union/Concat only
};

inline RegexAst re_empty() {
    return std::make_shared<RegexNode>(RegexNode{RegexKind::EmptySet});
}
inline RegexAst re_epsilon() {
    return std::make_shared<RegexNode>(RegexNode{RegexKind::Epsilon});
}
inline RegexAst re_symbol(char c) {
    return std::make_shared<RegexNode>(RegexNode{RegexKind::Symbol, c});
}
inline RegexAst re_union(RegexAst l, RegexAst r) {
    return std::make_shared<RegexNode>(
        RegexNode{RegexKind::Union, '\0', std::move(l), std::move(r)});
}
inline RegexAst re_concat(RegexAst l, RegexAst r) {
    return std::make_shared<RegexNode>(
        RegexNode{RegexKind::Concat, '\0', std::move(l), std::move(r)});
}
inline RegexAst re_star(RegexAst x) {
    return std::make_shared<RegexNode>(
        RegexNode{RegexKind::Star, '\0', std::move(x)});
}
inline RegexAst re_plus(RegexAst x) {
    return std::make_shared<RegexNode>(
        RegexNode{RegexKind::Plus, '\0', std::move(x)});
}

inline bool structurally_equal(const RegexAst& a, const RegexAst& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case RegexKind::EmptySet:
        case RegexKind::Epsilon:
            return true;
        case RegexKind::Symbol:
            return a->letter == b->letter;
        case RegexKind::Star:
        case RegexKind::Plus:
            return structurally_equal(a->left, b->left);
        case RegexKind::Union:
        case RegexKind::Concat:
            return structurally_equal(a->left, b->left) &&
                   structurally_equal(a->right, b->right);
    }
    return false;
}

namespace detail {

// Recursive-descent parser for
//   expr   := term ('|' term)*
//   term   := factor+
//   factor := base ('*'|'+')*
//   base   := letter | '@' | '#' | '(' expr ')'
// Whitespace is ignored. '@' is epsilon, '#' is the empty set.
class RegexParser {
public:
    RegexParser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    RegexAst parse() {
        skip_ws();
        if (at_end())
            throw SyntaxError("empty regular expression", 0);
        RegexAst e = parse_expr();
        skip_ws();
        if (!at_end())
            throw SyntaxError("unexpected '" + std::string(1, peek()) +
                              "', expected '|', '*', '+' or end of input", pos_);
        return e;
    }

private:
    RegexAst parse_expr() {
        RegexAst e = parse_term();
        skip_ws();
        while (!at_end() && peek() == '|') {
            ++pos_;
            RegexAst rhs = parse_term();
            e = re_union(std::move(e), std::move(rhs));
            skip_ws();
        }
        return e;
    }

    RegexAst parse_term() {
        RegexAst e = parse_factor();
        skip_ws();
        while (!at_end() && starts_base(peek())) {
            RegexAst rhs = parse_factor();
            e = re_concat(std::move(e), std::move(rhs));
            skip_ws();
        }
        return e;
    }

    RegexAst parse_factor() {
        RegexAst e = parse_base();
        skip_ws();
        while (!at_end() && (peek() == '*' || peek() == '+')) {
            e = (peek() == '*') ? re_star(std::move(e)) : re_plus(std::move(e));
            ++pos_;
            skip_ws();
        }
        return e;
    }

    RegexAst parse_base() {
        skip_ws();
        if (at_end())
            throw SyntaxError("unexpected end of input, expected a letter, "
                              "'@', '#' or '('", pos_);
        char c = peek();
        if (c == '@') { ++pos_; return re_epsilon(); }
        if (c == '#') { ++pos_; return re_empty(); }
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            RegexAst e = parse_expr();
            skip_ws();
            if (at_end() || peek() != ')')
                throw SyntaxError("unclosed '(' opened at position " +
                                  std::to_string(open) + ", expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c == ')' || c == '|' || c == '*' || c == '+')
            throw SyntaxError("unexpected '" + std::string(1, c) +
                              "', expected a letter, '@', '#' or '('", pos_);
        if (!alphabet_.contains(c))
            throw UnknownSymbol(c, pos_);
        ++pos_;
        return re_symbol(c);
    }

    static bool starts_base(char c) {
        return c != '|' && c != ')' && c != '*' && c != '+';
    }

    char peek() const { return text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

// Precedence levels used for minimal parenthesization.
enum : int { kLvlUnion = 0, kLvlConcat = 1, kLvlPostfix = 2, kLvlAtom = 3 };

inline int level_of(const RegexNode& n) {
    switch (n.kind) {
        case RegexKind::Union:  return kLvlUnion;
        case RegexKind::Concat: return kLvlConcat;
        case RegexKind::Star:
        case RegexKind::Plus:   return kLvlPostfix;
        default:                return kLvlAtom;
    }
}

inline void render_into(const RegexAst& t, int min_level, std::string& out) {
    bool parens = level_of(*t) < min_level;
    if (parens) out += '(';
    switch (t->kind) {
        case RegexKind::EmptySet: out += '#'; break;
        case RegexKind::Epsilon:  out += '@'; break;
        case RegexKind::Symbol:   out += t->letter; break;
        case RegexKind::Union:
            // '|' is left-associative in the grammar, so only a Union on
            // the right needs parentheses.
            render_into(t->left, kLvlUnion, out);
            out += '|';
            render_into(t->right, kLvlConcat, out);
            break;
        case RegexKind::Concat:
            render_into(t->left, kLvlConcat, out);
            render_into(t->right, kLvlPostfix, out);
            break;
        case RegexKind::Star:
            render_into(t->left, kLvlPostfix, out);
            out += '*';
            break;
        case RegexKind::Plus:
            render_into(t->left, kLvlPostfix, out);
            out += '+';
            break;
    }
    if (parens) out += ')';
}

} // namespace detail

inline RegexAst parse_regex(std::string_view text, const Alphabet& alphabet) {
    return detail::RegexParser(text, alphabet).parse();
}

// Minimal-parenthesization rendering; parse_regex(render_regex(t)) is
// structurally identical to t.
inline std::string render_regex(const RegexAst& t) {
    std::string out;
    detail::render_into(t, detail::kLvlUnion, out);
    return out;
}

} // namespace klang

#endif
