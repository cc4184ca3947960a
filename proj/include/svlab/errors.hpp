#ifndef SVLAB_ERRORS_HPP
#define SVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace svlab {

/**
 * Malformed textual input (polynomial source, rational literal, config
 * field). `offset` is the byte offset into the offending string.
 */
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Config file is syntactically valid JSON but semantically unusable.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/**
 * A documented precondition of an operation does not hold for the given
 * input (family not in position, curve degenerate, r <= 1, ...).
 */
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg)
        : std::runtime_error(msg) {}
};

/**
 * An internal consistency guarantee failed on input that passed all
 * preconditions.  Reaching this indicates a defect in the machinery (or a
 * counterexample); it is never swallowed.
 */
class LemmaViolation : public std::runtime_error {
public:
    explicit LemmaViolation(const std::string& msg)
        : std::runtime_error(msg) {}
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace svlab

#endif
