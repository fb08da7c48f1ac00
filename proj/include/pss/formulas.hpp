#pragma once

// Closed forms for the enumeration and image results, the structural
// characterizations they rest on, and constructors for the witness
// permutations that show each image element is attained.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pss/permutation.hpp"

namespace pss {

using BigCount = boost::multiprecision::cpp_int;

/// Claim registry keys.
enum class ClaimId {
    T3_4,       // t-sortable under s12
    T3_6,       // t-sortable under s21
    T4_2,       // sortable by the 21 machine
    T4_4,       // fixed points of the 21 machine
    C5_1_min,   // minimally sorted under s12
    C5_1_high,  // highly sorted under s12
    T5_2,       // image of s12^(n-2)
    L5_3,       // floor(n/2) passes of the 12 machine sort everything
    T5_4,       // image of the 12 machine after floor(n/2)-1 passes
    RED,        // dot position does not matter
    P3_1,       // s12 reverses peak runs
    P3_5,       // s21 reverses valley runs
    L3_3,       // s12 commutes with inserting a new minimum
    L4_1,       // 21-machine sortable iff s21 gives n...1
    L4_3,       // shape of the 21-machine fixed points
};

const std::vector<ClaimId>& all_claims();
std::string_view to_string(ClaimId claim) noexcept;
std::optional<ClaimId> parse_claim_id(std::string_view name) noexcept;

using PermutationSet = std::set<Permutation>;

BigCount big_factorial(std::size_t n);
BigCount binomial(std::size_t n, std::size_t k);

/// n! when n <= t, else t! (t+1)^(n-t).
BigCount count_t_sortable_s12(std::size_t n, std::size_t t);
/// 1 for n = 1, else 0 (for every t >= 1).
BigCount count_t_sortable_s21(std::size_t n);
/// 2^(n-1).
BigCount count_machine21_sortable(std::size_t n);
/// a_n with a_0 = a_1 = 1 and a_n = sum_{k=0}^{n-2} C(n-2, k) a_k.
BigCount count_machine21_fixed_points(std::size_t n);
/// (n-1)!; requires n >= 2.
BigCount count_min_sorted_s12(std::size_t n);
/// (n-1)(n-1)!; requires n >= 2.
BigCount count_highly_sorted_s12(std::size_t n);

bool is_machine21_sortable(const Permutation& p);
/// Every valley run increases, and the last entry of each run exceeds all
/// entries of the run before it.
bool is_machine21_fixed_shape(const Permutation& p);

/// {identity, 2 1 3 4 ... n}; requires n >= 2.
PermutationSet image_s12_power(std::size_t n);
/// floor(n/2); requires n >= 2.
std::size_t machine12_bound(std::size_t n);
/// Image of the 12 machine after floor(n/2) - 1 passes; requires n >= 4.
PermutationSet image_machine12(std::size_t n);

/// 2 4 ... n 1 3 ... (n-1); n even, n >= 4.
Permutation witness_even(std::size_t n);
/// 2 3 ... n 1; n odd, n >= 5.
Permutation witness_cycle(std::size_t n);

enum class PiSeed { S213, S132, S312 };

/// Interleaved family built from a length-3 seed; n odd, n >= 3.
Permutation witness_pi(std::size_t n, PiSeed seed);

enum class WitnessFamily { Even, Cycle, Pi213, Pi132, Pi312 };

std::string_view to_string(WitnessFamily family) noexcept;
std::optional<WitnessFamily> parse_witness_family(std::string_view name) noexcept;

/// Witness for the family, plus the passes and image it is claimed to reach.
struct WitnessClaim {
    Permutation start;
    std::size_t passes;
    Permutation target;
};

WitnessClaim witness_claim(WitnessFamily family, std::size_t n);
bool witness_family_accepts(WitnessFamily family, std::size_t n) noexcept;

}  // namespace pss
