#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace touchard {

/// Raised when a caller violates an operation's precondition: a table that
/// is too shallow, an index out of range, a composite modulus, and so on.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Refusal to enumerate set partitions beyond the configured size limit.
class EnumerationCapError : public UsageError {
public:
    EnumerationCapError(std::size_t requested, std::size_t cap)
        : UsageError("partition enumeration refused: n = " + std::to_string(requested) +
                     " exceeds the enumeration cap of " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

}  // namespace touchard
