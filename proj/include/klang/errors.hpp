#ifndef KLANG_ERRORS_HPP
#define KLANG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klang {

// Parse failure; position is a 0-based byte offset into the input text.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A literal or word letter that is not a member of the declared alphabet.
class UnknownSymbol : public std::runtime_error {
public:
    UnknownSymbol(char letter, std::size_t position)
        : std::runtime_error(std::string("unknown symbol '") + letter +
                             "' at position " + std::to_string(position)),
          letter_(letter), position_(position) {}
    char letter() const noexcept { return letter_; }
    std::size_t position() const noexcept { return position_; }

private:
    char letter_;
    std::size_t position_;
};

// Subset construction exceeded the configured state cap.
class StateBlowup : public std::runtime_error {
public:
    explicit StateBlowup(std::size_t cap)
        : std::runtime_error("subset construction exceeded " +
                             std::to_string(cap) + " states"),
          cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

// Binary operation on languages over different alphabets.
class AlphabetMismatch : public std::runtime_error {
public:
    AlphabetMismatch() : std::runtime_error("alphabet mismatch") {}
};

// An orbit grew past its theorem bound. Always an implementation bug.
class BoundViolation : public std::logic_error {
public:
    BoundViolation(std::size_t got, std::size_t bound)
        : std::logic_error("orbit produced " + std::to_string(got) +
                           " languages, bound is " + std::to_string(bound)) {}
};

// Neither M union {epsilon} nor M minus {epsilon} lies in the positive core.
class PhiUndefined : public std::logic_error {
public:
    PhiUndefined() : std::logic_error("phi undefined for orbit member") {}
};

// No classification row matched, or the matched row disagrees with the
// generated orbit sizes. The cases are exhaustive, so this is a bug signal.
class Unclassifiable : public std::logic_error {
public:
    explicit Unclassifiable(std::string message)
        : std::logic_error(std::move(message)) {}
};

} // namespace klang

#endif
