#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pepys {

/// A precondition on a mathematical argument was violated (degenerate p,
/// non-integer mean, odd-length sequence, missing bracket, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Text that does not denote a rational number.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EnumerationCapExceeded : public DomainError {
public:
    EnumerationCapExceeded(std::string const& requested, std::uint64_t cap)
        : DomainError("enumeration of " + requested + " outcomes exceeds cap of "
                      + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::string const& requested() const noexcept { return requested_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::string requested_;
    std::uint64_t cap_;
};

}  // namespace pepys
