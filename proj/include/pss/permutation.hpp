#pragma once

// Permutation values and the elementary constructions the stack maps are
// stated in terms of: reversal, increment, insertion of a new minimum,
// left-to-right maxima/minima and the run decompositions they induce.
//
// Positions are 1-indexed throughout the public surface.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pss {

/// Raised for malformed permutation text.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition is violated.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bijective word on {1..n}, n >= 1.  Immutable after construction.
class Permutation {
public:
    /// Validates that `values` is a bijection onto 1..n.
    explicit Permutation(std::vector<int> values);
    explicit Permutation(std::span<const int> values)
        : Permutation(std::vector<int>(values.begin(), values.end())) {}
    Permutation(std::initializer_list<int> values)
        : Permutation(std::vector<int>(values)) {}

    static Permutation identity(std::size_t n);
    static Permutation reverse_identity(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }

    /// Entry at a 1-indexed position.
    int at(std::size_t position) const;

    /// Position (1-indexed) holding `value`.
    std::size_t position_of(int value) const;

    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool is_identity() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.values_ <=> b.values_;
    }

private:
    struct Unchecked {};
    Permutation(Unchecked, std::vector<int> values) : values_(std::move(values)) {}
    friend Permutation make_unchecked(std::vector<int> values);

    std::vector<int> values_;
};

/// Skips validation.  Callers guarantee a bijection onto 1..n.
Permutation make_unchecked(std::vector<int> values);

/// Sequence of pairwise-distinct positive integers, not necessarily 1..n.
class Word {
public:
    explicit Word(std::vector<int> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const int> entries() const noexcept { return entries_; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> entries_;
};

enum class RunKind { Peak, Valley };

/// Inclusive interval of 1-indexed positions.
struct Interval {
    std::size_t start;
    std::size_t end;

    std::size_t length() const noexcept { return end - start + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Partition of 1..n into contiguous runs, each opening at a peak (or valley).
struct RunDecomposition {
    RunKind kind;
    std::vector<Interval> runs;

    friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

// Text format: canonical "2,4,3,1,5"; "24315" accepted on input when every
// value is a single digit.
Permutation parse(std::string_view text);
std::string format(const Permutation& p);
std::string format(std::span<const int> values);

Permutation rev(const Permutation& p);
Word inc(const Permutation& p);

/// Increment every entry and insert a 1 before position `position`
/// (1 <= position <= n+1; n+1 appends).
Permutation ins(const Permutation& p, std::size_t position);

/// Inverse of ins: drop the 1 and decrement the rest.  Requires n >= 2.
Permutation delete_one(const Permutation& p);

/// Left-to-right maxima, as 1-indexed positions.  Position 1 is always one.
std::vector<std::size_t> peaks(const Permutation& p);
/// Left-to-right minima, as 1-indexed positions.
std::vector<std::size_t> valleys(const Permutation& p);

RunDecomposition peak_runs(const Permutation& p);
RunDecomposition valley_runs(const Permutation& p);

/// Replace each entry by its rank among the entries.
Permutation standardize(const Word& w);
Permutation standardize(std::span<const int> entries);

/// Classical containment for patterns of length <= 3.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

// Lexicographic ranking over S_n.  Defined for n <= 20 so that n! fits.
using Rank = std::uint64_t;

inline constexpr std::size_t kMaxRankable = 20;

std::uint64_t factorial(std::size_t n);
Rank rank(const Permutation& p);
Permutation unrank(std::size_t n, Rank r);
std::optional<Permutation> successor(const Permutation& p);

/// In-place lexicographic successor over a raw buffer; false at the last.
bool next_in_place(std::span<int> values) noexcept;

/// Unrank into a caller-provided buffer of length n.
void unrank_into(Rank r, std::span<int> out);

}  // namespace pss
