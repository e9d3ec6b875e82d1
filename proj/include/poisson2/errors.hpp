#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poisson2 {

/// Input rejected by the expression grammar. `pos` is a 0-based character
/// offset into the source text.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}

    std::size_t pos() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// A mathematically invalid request: non-unit divisor, infinite codimension,
/// resonance, cocycle violation, bad catalog label. The CLI maps these to
/// exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the cocycle reductions; names the first graded degree where the
/// cocycle condition fails.
class NotACocycleError : public DomainError {
public:
    explicit NotACocycleError(int degree)
        : DomainError("not a cocycle: condition fails at degree " + std::to_string(degree)),
          degree_(degree) {}

    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

/// Raised by the homological solver when the resonant graded component of the
/// right-hand side is nonzero.
class ResonanceError : public DomainError {
public:
    explicit ResonanceError(int degree)
        : DomainError("resonance at degree " + std::to_string(degree) +
                      ": nonzero component in the kernel of W - deg"),
          degree_(degree) {}

    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

}  // namespace poisson2
