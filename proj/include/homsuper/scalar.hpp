#ifndef HOMSUPER_SCALAR_HPP
#define HOMSUPER_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace homsuper {

// Exact rationals over Q. mpq_class keeps values canonical after every
// arithmetic operation (reduced, positive denominator).
using Scalar = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised for malformed textual input. `position` is a byte offset into the
// parsed text when one is meaningful, otherwise npos.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = std::string::npos)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

// A construction or check was asked to run on input that does not meet its
// stated precondition (non-multiplicative, not Leibniz, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalisation). Whitespace is
/// not accepted. Throws ParseError on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

} // namespace homsuper

#endif
