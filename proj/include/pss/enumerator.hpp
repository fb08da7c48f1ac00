#pragma once

// Exhaustive passes over S_n, split into lexicographic rank ranges that run
// on independent workers, and the claim registry that pairs every closed
// form with its brute-force counterpart.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "pss/formulas.hpp"
#include "pss/guard.hpp"
#include "pss/permutation.hpp"
#include "pss/stack_engine.hpp"

namespace pss {

/// Half-open lexicographic rank interval [lo, hi) of S_n.
struct RankRange {
    std::size_t n;
    Rank lo;
    Rank hi;
};

void validate(const RankRange& range);

/// Splits [0, n!) into at most `parts` contiguous nonempty ranges.
std::vector<RankRange> partition(std::size_t n, std::size_t parts);

/// Visits unrank(n, lo) and its lexicographic successors, hi - lo in all.
template <typename Visitor>
void for_each_in_range(const RankRange& range, Visitor&& visit) {
    validate(range);
    if (range.lo == range.hi) return;
    std::vector<int> values(range.n);
    unrank_into(range.lo, values);
    for (Rank r = range.lo; r < range.hi; ++r) {
        visit(std::span<const int>(values));
        next_in_place(values);
    }
}

struct BruteOptions {
    std::size_t workers = 1;
    bool force = false;  // bypass the n guard
};

/// Runs `visit(partial, values)` over all of S_n, one partial per worker,
/// and folds the partials in range order.
template <typename Partial, typename Make, typename Visit, typename Merge>
Partial parallel_reduce(std::size_t n, const BruteOptions& options, Make make, Visit visit,
                        Merge merge) {
    const auto ranges = partition(n, std::max<std::size_t>(1, options.workers));
    std::vector<Partial> partials;
    partials.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) partials.push_back(make());
    if (ranges.size() == 1) {
        for_each_in_range(ranges[0], [&](std::span<const int> v) { visit(partials[0], v); });
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            threads.emplace_back([&, i] {
                for_each_in_range(ranges[i],
                                  [&](std::span<const int> v) { visit(partials[i], v); });
            });
        }
    }
    Partial total = make();
    for (auto& p : partials) merge(total, p);
    return total;
}

/// Number of p in S_n with iterate(map, p, t) equal to the identity.
BigCount brute_t_sortable(MapId map, std::size_t n, std::size_t t,
                          const BruteOptions& options = {});
BigCount brute_t_sortable(MapId map, std::size_t n, std::size_t t, Strategy strategy,
                          const BruteOptions& options = {});

/// Entry t: number of p in S_n with iterate(map, p, t) the identity, for
/// t = 0..t_max.  Differs from a sort-count histogram only for maps that
/// move the identity (s21).
std::vector<std::uint64_t> identity_hits(MapId map, std::size_t n, std::size_t t_max,
                                         Strategy strategy, const BruteOptions& options = {});

/// Sort counts over S_n: by_count[t] permutations first reach the identity
/// after exactly t applications (t <= t_max); `unsorted` never do.
struct SortCountHistogram {
    std::vector<std::uint64_t> by_count;
    std::uint64_t unsorted = 0;

    std::uint64_t sortable_within(std::size_t t) const;
};

SortCountHistogram sort_count_histogram(MapId map, std::size_t n, std::size_t t_max,
                                        Strategy strategy, const BruteOptions& options = {});

/// Requires a machine map.
BigCount brute_machine_sortable(MapId machine, std::size_t n, const BruteOptions& options = {});
BigCount brute_machine_sortable(MapId machine, std::size_t n, Strategy strategy,
                                const BruteOptions& options = {});

struct FixedPointResult {
    BigCount count;
    std::optional<std::vector<Permutation>> members;  // lexicographic, when collected
};

FixedPointResult brute_fixed_points(MapId map, std::size_t n, bool collect,
                                    const BruteOptions& options = {});
FixedPointResult brute_fixed_points(MapId map, std::size_t n, bool collect, Strategy strategy,
                                    const BruteOptions& options = {});

inline constexpr std::size_t kImageCap = 1'000'000;

struct ImageResult {
    PermutationSet members;
    bool overflow = false;  // more than `cap` distinct images; members truncated
};

ImageResult brute_image(MapId map, std::size_t n, std::size_t power,
                        const BruteOptions& options = {});
ImageResult brute_image(MapId map, std::size_t n, std::size_t power, Strategy strategy,
                        const BruteOptions& options = {}, std::size_t cap = kImageCap);

/// Largest orbit tail over S_n.
std::size_t brute_ord(MapId map, std::size_t n, const BruteOptions& options = {});
std::size_t brute_ord(MapId map, std::size_t n, Strategy strategy,
                      const BruteOptions& options = {});

/// For every t-sortable p in S_{n-1} under s12, exactly t+1 of the n
/// insertions ins(p, i) are t-sortable.  Requires n > t >= 1.
bool insertion_positions_property(std::size_t n, std::size_t t,
                                  const BruteOptions& options = {});

/// Entry t (1 <= t < n): number of t-sortable p in S_{n-1} with exactly t+1
/// t-sortable insertions.  Entry 0 is unused.  Requires n >= 2.
std::vector<std::uint64_t> insertion_tallies(std::size_t n, const BruteOptions& options = {});

// --- verification ---------------------------------------------------------

using ReportValue = std::variant<BigCount, PermutationSet>;

struct ReportRow {
    std::size_t n;
    std::string param;  // "-" when the claim has no parameter
    ReportValue expected;
    ReportValue observed;
    bool pass;
};

struct VerificationReport {
    ClaimId claim;
    std::size_t n_min;
    std::size_t n_max;
    std::vector<ReportRow> rows;
    bool overall_pass = true;
    std::chrono::duration<double> elapsed{};
};

/// Smallest n at which the claim is stated.  Rows below it are omitted.
std::size_t claim_min_n(ClaimId claim) noexcept;

VerificationReport verify(ClaimId claim, std::size_t n_min, std::size_t n_max,
                          const BruteOptions& options = {});

std::size_t default_workers() noexcept;

}  // namespace pss
