#pragma once

#include <cstddef>
#include <stdexcept>

namespace pss {

/// Raised when an exhaustive pass over S_n is requested above the size limit.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBruteGuard = 12;

/// Largest n allowed for exhaustive passes: PSS_BRUTE_GUARD if set, else 12.
std::size_t brute_guard();

/// Throws GuardError when n exceeds brute_guard() and `force` is false.
void check_guard(std::size_t n, bool force);

}  // namespace pss
