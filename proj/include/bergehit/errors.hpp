#ifndef BERGEHIT_ERRORS_HPP
#define BERGEHIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bergehit {

/// Malformed hypergraph text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive method was asked to run above its size guard.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A monotone property never holds, even on the full host.
class NoHitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The p0 equation has no root in (0,1).
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rejection-sampling generator ran out of retries.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bergehit

#endif  // BERGEHIT_ERRORS_HPP
