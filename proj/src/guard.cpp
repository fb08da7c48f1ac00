#include "pss/guard.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace pss {

std::size_t brute_guard() {
    const char* env = std::getenv("PSS_BRUTE_GUARD");
    if (env == nullptr || *env == '\0') return kDefaultBruteGuard;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw GuardError(std::string("PSS_BRUTE_GUARD is not an integer: ") + env);
    }
    return value;
}

void check_guard(std::size_t n, bool force) {
    if (force) return;
    const auto limit = brute_guard();
    if (n > limit) {
        throw GuardError("n = " + std::to_string(n) + " exceeds the brute-force guard (" +
                         std::to_string(limit) +
                         "); pass --force or raise PSS_BRUTE_GUARD");
    }
}

}  // namespace pss
