#pragma once

// Deterministic single-stack passes: West's map, the two length-2 dotted
// pattern-avoiding maps, and the machines that follow a dotted pass with a
// West pass.  Every map is a pure function of its input.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pss/permutation.hpp"

namespace pss {

/// Base pattern of a length-2 dotted pattern.
enum class BasePattern { Ascent12, Descent21 };

/// A length-2 base pattern with one dotted letter.  The four legal values are
/// (12, dot 1), (12, dot 2), (21, dot 1), (21, dot 2).
class DottedPattern {
public:
    DottedPattern(BasePattern base, int dot_position);

    BasePattern base() const noexcept { return base_; }
    int dot_position() const noexcept { return dot_; }

    friend bool operator==(const DottedPattern&, const DottedPattern&) = default;

private:
    BasePattern base_;
    int dot_;
};

enum class MapId { West, S12, S21, Machine12, Machine21 };

enum class Strategy {
    Simulated,      // explicit stack with a push policy
    ClosedForm,     // run reversal (dotted maps and the dotted stage of machines)
    RecursiveWest,  // s(L n R) = s(L) s(R) n; West only
};

std::string_view to_string(MapId map) noexcept;
std::string_view to_string(Strategy strategy) noexcept;
/// Short codes west/s12/s21/m12/m21.
std::optional<MapId> parse_map_id(std::string_view code) noexcept;

bool is_machine(MapId map) noexcept;
bool strategy_valid(MapId map, Strategy strategy) noexcept;
/// ClosedForm where it applies, otherwise Simulated.
Strategy default_strategy(MapId map) noexcept;

/// Stack of entries that also tracks the maximum and minimum of its contents.
class OperandStack {
public:
    void push(int value);
    int pop();
    void clear() noexcept;

    bool empty() const noexcept { return values_.empty(); }
    std::size_t size() const noexcept { return values_.size(); }
    int top() const { return values_.back(); }
    int max() const { return maxima_.back(); }
    int min() const { return minima_.back(); }

    std::span<const int> bottom_to_top() const noexcept { return values_; }

private:
    std::vector<int> values_;
    std::vector<int> maxima_;
    std::vector<int> minima_;
};

/// Naive push rule for a dotted pattern: push iff the sequence formed by
/// `next` followed by the stack read top to bottom contains an occurrence of
/// the base pattern that uses `next`.  Kept as the reference for
/// PushPolicy::dotted.
bool dotted_admits_by_scan(const DottedPattern& pattern, std::span<const int> top_to_bottom,
                           int next);

/// Decides whether the next input entry is pushed.  An empty stack always
/// admits.
class PushPolicy {
public:
    enum class Evaluation { Incremental, Scan };

    static PushPolicy west() noexcept;
    static PushPolicy dotted(DottedPattern pattern,
                             Evaluation evaluation = Evaluation::Incremental) noexcept;

    bool admits(const OperandStack& stack, int next) const;

private:
    enum class Kind { West, Dotted };
    PushPolicy(Kind kind, DottedPattern pattern, Evaluation evaluation) noexcept
        : kind_(kind), pattern_(pattern), evaluation_(evaluation) {}

    Kind kind_;
    DottedPattern pattern_;
    Evaluation evaluation_;
};

struct StackEvent {
    enum class Op { Push, Pop };
    Op op;
    int value;
    std::size_t step;

    friend bool operator==(const StackEvent&, const StackEvent&) = default;
};

struct StackTrace {
    std::vector<StackEvent> events;
};

struct PassResult {
    Permutation output;
    std::optional<StackTrace> trace;
};

/// Greedy pass: push while the policy admits the next entry, otherwise pop
/// to the output; flush the stack top to bottom once the input is consumed.
PassResult run_pass(const Permutation& p, const PushPolicy& policy, bool want_trace = false);

/// Reverses every peak run in place.
Permutation s12_closed_form(const Permutation& p);
/// Reverses every valley run in place.
Permutation s21_closed_form(const Permutation& p);
/// West's map via s(L n R) = s(L) s(R) n.
Permutation west_recursive(const Permutation& p);

/// Throws DomainError when the strategy does not apply to the map.
Permutation apply(MapId map, const Permutation& p, Strategy strategy);
Permutation apply(MapId map, const Permutation& p);

Permutation iterate(MapId map, const Permutation& p, std::size_t times, Strategy strategy);
Permutation iterate(MapId map, const Permutation& p, std::size_t times);

/// Least t <= t_max with iterate(map, p, t) the identity.
std::optional<std::size_t> sorts_in(MapId map, const Permutation& p, std::size_t t_max,
                                    Strategy strategy);
std::optional<std::size_t> sorts_in(MapId map, const Permutation& p, std::size_t t_max);

struct OrbitReport {
    std::size_t tail_length = 0;   // steps before entering the cycle
    std::size_t cycle_length = 1;
    std::optional<std::size_t> reaches_identity_at;
    bool is_periodic_point = true;  // tail_length == 0
};

OrbitReport orbit(MapId map, const Permutation& p, Strategy strategy);
OrbitReport orbit(MapId map, const Permutation& p);

/// Largest orbit tail over S_n, i.e. the number of applications after which
/// every permutation is periodic.  Sequential; guarded like every
/// exhaustive pass.
std::size_t ord_of_sn(MapId map, std::size_t n, bool force = false);

namespace kernels {

// Allocation-free passes over raw buffers for the exhaustive loops.  `in`
// and `out` must not alias.

void s12_pass(std::span<const int> in, std::span<int> out) noexcept;
void s21_pass(std::span<const int> in, std::span<int> out) noexcept;
void west_pass(std::span<const int> in, std::span<int> out, std::vector<int>& stack);
void west_recursive_pass(std::span<const int> in, std::span<int> out);
void simulate_pass(std::span<const int> in, std::span<int> out, const PushPolicy& policy,
                   OperandStack& stack, StackTrace* trace);

/// Applies one map step with reusable scratch.
class MapStepper {
public:
    MapStepper(MapId map, Strategy strategy, std::size_t n);

    void operator()(std::span<const int> in, std::span<int> out);

    MapId map() const noexcept { return map_; }

private:
    void dotted_stage(std::span<const int> in, std::span<int> out);
    void west_stage(std::span<const int> in, std::span<int> out);

    MapId map_;
    Strategy strategy_;
    std::vector<int> middle_;
    std::vector<int> west_stack_;
    OperandStack stack_;
};

bool is_identity(std::span<const int> values) noexcept;

}  // namespace kernels

}  // namespace pss
