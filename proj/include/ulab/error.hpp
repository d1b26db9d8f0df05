#pragma once

#include <stdexcept>
#include <string>

namespace ulab {

// Raised when an operation's domain precondition fails (bad symbol, guard
// exceeded, "already k-universal", ...). The CLI maps it to exit status 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration guard shared by the brute-force oracles.
inline constexpr unsigned long long kEnumerationBudget = 10'000'000ULL;

}  // namespace ulab
