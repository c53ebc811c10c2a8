#ifndef KLANG_ALPHABET_HPP
#define KLANG_ALPHABET_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace klang {

// The declared alphabet of a session. Letters are distinct printable
// characters kept in sorted order; canonicalization of automata depends on
// that order, so it is fixed at construction.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::string_view letters) {
        if (letters.empty())
            throw std::invalid_argument("alphabet must be non-empty");
        letters_.assign(letters.begin(), letters.end());
        std::sort(letters_.begin(), letters_.end());
        if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end())
            throw std::invalid_argument("alphabet contains duplicate letters");
        for (char c : letters_) {
            if (is_reserved(c) || !std::isprint(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("invalid alphabet letter '") + c + "'");
        }
    }

    // Reserved by the regex grammar and therefore unusable as letters.
    static bool is_reserved(char c) {
        switch (c) {
            case '|': case '*': case '+': case '(': case ')':
            case '@': case '#':
                return true;
            default:
                return std::isspace(static_cast<unsigned char>(c)) != 0;
        }
    }

    std::size_t size() const noexcept { return letters_.size(); }
    char letter(std::size_t i) const { return letters_[i]; }
    const std::string& letters() const noexcept { return letters_; }

    bool contains(char c) const {
        return letters_.find(c) != std::string::npos;
    }

    std::optional<std::size_t> index_of(char c) const {
        auto pos = letters_.find(c);
        if (pos == std::string::npos) return std::nullopt;
        return pos;
    }

    bool operator==(const Alphabet&) const = default;

private:
    std::string letters_;
};

} // namespace klang

#endif
