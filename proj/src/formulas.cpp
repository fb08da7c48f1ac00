#include "pss/formulas.hpp"

#include <array>
#include <numeric>

#include "pss/stack_engine.hpp"

namespace pss {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw DomainError(message);
}

Permutation identity_with_prefix(std::vector<int> prefix, std::size_t n) {
    for (std::size_t v = prefix.size() + 1; v <= n; ++v) prefix.push_back(static_cast<int>(v));
    return Permutation(std::move(prefix));
}

}  // namespace

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> claims{
        ClaimId::RED,      ClaimId::P3_1,      ClaimId::P3_5, ClaimId::L3_3, ClaimId::T3_4,
        ClaimId::T3_6,     ClaimId::L4_1,      ClaimId::T4_2, ClaimId::L4_3, ClaimId::T4_4,
        ClaimId::C5_1_min, ClaimId::C5_1_high, ClaimId::T5_2, ClaimId::L5_3, ClaimId::T5_4,
    };
    return claims;
}

std::string_view to_string(ClaimId claim) noexcept {
    switch (claim) {
        case ClaimId::T3_4: return "T3_4";
        case ClaimId::T3_6: return "T3_6";
        case ClaimId::T4_2: return "T4_2";
        case ClaimId::T4_4: return "T4_4";
        case ClaimId::C5_1_min: return "C5_1_min";
        case ClaimId::C5_1_high: return "C5_1_high";
        case ClaimId::T5_2: return "T5_2";
        case ClaimId::L5_3: return "L5_3";
        case ClaimId::T5_4: return "T5_4";
        case ClaimId::RED: return "RED";
        case ClaimId::P3_1: return "P3_1";
        case ClaimId::P3_5: return "P3_5";
        case ClaimId::L3_3: return "L3_3";
        case ClaimId::L4_1: return "L4_1";
        case ClaimId::L4_3: return "L4_3";
    }
    return "?";
}

std::optional<ClaimId> parse_claim_id(std::string_view name) noexcept {
    for (ClaimId c : all_claims()) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

BigCount big_factorial(std::size_t n) {
    BigCount f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

BigCount count_t_sortable_s12(std::size_t n, std::size_t t) {
    require(n >= 1, "n must be >= 1");
    if (n <= t) return big_factorial(n);
    return big_factorial(t) * boost::multiprecision::pow(BigCount(t + 1),
                                                         static_cast<unsigned>(n - t));
}

BigCount count_t_sortable_s21(std::size_t n) {
    require(n >= 1, "n must be >= 1");
    return n == 1 ? 1 : 0;
}

BigCount count_machine21_sortable(std::size_t n) {
    require(n >= 1, "n must be >= 1");
    return BigCount(1) << (n - 1);
}

BigCount count_machine21_fixed_points(std::size_t n) {
    std::vector<BigCount> a{1, 1};
    for (std::size_t m = 2; m <= n; ++m) {
        BigCount sum = 0;
        for (std::size_t k = 0; k <= m - 2; ++k) sum += binomial(m - 2, k) * a[k];
        a.push_back(sum);
    }
    return a[n];
}

BigCount count_min_sorted_s12(std::size_t n) {
    require(n >= 2, "n must be >= 2");
    return big_factorial(n - 1);
}

BigCount count_highly_sorted_s12(std::size_t n) {
    require(n >= 2, "n must be >= 2");
    return BigCount(n - 1) * big_factorial(n - 1);
}

bool is_machine21_sortable(const Permutation& p) {
    return s21_closed_form(p) == Permutation::reverse_identity(p.size());
}

bool is_machine21_fixed_shape(const Permutation& p) {
    const auto d = valley_runs(p);
    int previous_max = 0;
    for (const auto& run : d.runs) {
        for (std::size_t i = run.start + 1; i <= run.end; ++i) {
            if (p.at(i) < p.at(i - 1)) return false;
        }
        // Increasing, so the last entry is also the run maximum.
        if (p.at(run.end) < previous_max) return false;
        previous_max = p.at(run.end);
    }
    return true;
}

PermutationSet image_s12_power(std::size_t n) {
    require(n >= 2, "n must be >= 2");
    return {Permutation::identity(n), identity_with_prefix({2, 1}, n)};
}

std::size_t machine12_bound(std::size_t n) {
    require(n >= 2, "n must be >= 2");
    return n / 2;
}

PermutationSet image_machine12(std::size_t n) {
    require(n >= 4, "n must be >= 4");
    if (n % 2 == 0) return {Permutation::identity(n), identity_with_prefix({2, 1}, n)};
    PermutationSet out;
    for (auto prefix : std::vector<std::vector<int>>{
             {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}}) {
        out.insert(identity_with_prefix(std::move(prefix), n));
    }
    return out;
}

Permutation witness_even(std::size_t n) {
    require(n >= 4 && n % 2 == 0, "even witness needs even n >= 4");
    std::vector<int> v;
    for (std::size_t x = 2; x <= n; x += 2) v.push_back(static_cast<int>(x));
    for (std::size_t x = 1; x < n; x += 2) v.push_back(static_cast<int>(x));
    return Permutation(std::move(v));
}

Permutation witness_cycle(std::size_t n) {
    require(n >= 5 && n % 2 == 1, "cycle witness needs odd n >= 5");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end() - 1, 2);
    v.back() = 1;
    return Permutation(std::move(v));
}

Permutation witness_pi(std::size_t n, PiSeed seed) {
    require(n >= 3 && n % 2 == 1, "pi witness needs odd n >= 3");
    std::vector<int> head, tail;
    switch (seed) {
        case PiSeed::S213: head = {2}; tail = {1, 3}; break;
        case PiSeed::S132: head = {1, 3}; tail = {2}; break;
        case PiSeed::S312: head = {3}; tail = {1, 2}; break;
    }
    for (std::size_t m = 5; m <= n; m += 2) {
        head.push_back(head.back() + 2);
        tail.push_back(tail.back() + 2);
    }
    head.insert(head.end(), tail.begin(), tail.end());
    return Permutation(std::move(head));
}

std::string_view to_string(WitnessFamily family) noexcept {
    switch (family) {
        case WitnessFamily::Even: return "even";
        case WitnessFamily::Cycle: return "cycle";
        case WitnessFamily::Pi213: return "pi213";
        case WitnessFamily::Pi132: return "pi132";
        case WitnessFamily::Pi312: return "pi312";
    }
    return "?";
}

std::optional<WitnessFamily> parse_witness_family(std::string_view name) noexcept {
    for (auto f : {WitnessFamily::Even, WitnessFamily::Cycle, WitnessFamily::Pi213,
                   WitnessFamily::Pi132, WitnessFamily::Pi312}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

bool witness_family_accepts(WitnessFamily family, std::size_t n) noexcept {
    switch (family) {
        case WitnessFamily::Even: return n >= 4 && n % 2 == 0;
        case WitnessFamily::Cycle: return n >= 5 && n % 2 == 1;
        default: return n >= 3 && n % 2 == 1;
    }
}

WitnessClaim witness_claim(WitnessFamily family, std::size_t n) {
    require(witness_family_accepts(family, n), "n not valid for this witness family");
    const std::size_t passes = n / 2 - 1;
    switch (family) {
        case WitnessFamily::Even:
            return {witness_even(n), passes, identity_with_prefix({2, 1}, n)};
        case WitnessFamily::Cycle:
            return {witness_cycle(n), passes, identity_with_prefix({2, 3, 1}, n)};
        case WitnessFamily::Pi213:
            return {witness_pi(n, PiSeed::S213), passes, identity_with_prefix({2, 1, 3}, n)};
        case WitnessFamily::Pi132:
            return {witness_pi(n, PiSeed::S132), passes, identity_with_prefix({1, 3, 2}, n)};
        case WitnessFamily::Pi312:
            return {witness_pi(n, PiSeed::S312), passes, identity_with_prefix({3, 1, 2}, n)};
    }
    throw DomainError("unknown witness family");
}

}  // namespace pss
