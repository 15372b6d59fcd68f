#pragma once

#include <stdexcept>
#include <string>

namespace gtm {

// Raised when a closed-form evaluator is queried outside its documented
// domain. Evaluators never extrapolate silently.
struct FormulaDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when an operation that requires a factor of t_m is handed a word
// that provably is not one.
struct NotAFactorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a word is too short for the unique-factorization guarantee.
struct TooShortError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a (p, s) block pair cannot be decoded into morphism-image
// blocks as its structure promises.
struct MalformedPairError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed a configured resource cap.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant that should hold by theorem fails;
// always signals a bug, never expected at runtime.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gtm
