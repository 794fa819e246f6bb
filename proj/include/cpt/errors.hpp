#ifndef CPT_ERRORS_HPP
#define CPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cpt {

/// Malformed or inconsistent input data (bad files, non-tree edge lists, ...).
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A size guard was exceeded (brute-force verifiers and generators refuse to run).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An always-on internal consistency check failed. Seeing this means a bug.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cpt

#endif // CPT_ERRORS_HPP
