#include "pss/stack_engine.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pss/guard.hpp"

namespace pss {

DottedPattern::DottedPattern(BasePattern base, int dot_position)
    : base_(base), dot_(dot_position) {
    if (dot_position != 1 && dot_position != 2) {
        throw DomainError("dot position must be 1 or 2");
    }
}

std::string_view to_string(MapId map) noexcept {
    switch (map) {
        case MapId::West: return "west";
        case MapId::S12: return "s12";
        case MapId::S21: return "s21";
        case MapId::Machine12: return "m12";
        case MapId::Machine21: return "m21";
    }
    return "?";
}

std::string_view to_string(Strategy strategy) noexcept {
    switch (strategy) {
        case Strategy::Simulated: return "simulated";
        case Strategy::ClosedForm: return "closed-form";
        case Strategy::RecursiveWest: return "recursive-west";
    }
    return "?";
}

std::optional<MapId> parse_map_id(std::string_view code) noexcept {
    for (MapId m : {MapId::West, MapId::S12, MapId::S21, MapId::Machine12, MapId::Machine21}) {
        if (to_string(m) == code) return m;
    }
    return std::nullopt;
}

bool is_machine(MapId map) noexcept {
    return map == MapId::Machine12 || map == MapId::Machine21;
}

bool strategy_valid(MapId map, Strategy strategy) noexcept {
    switch (strategy) {
        case Strategy::Simulated: return true;
        case Strategy::ClosedForm: return map != MapId::West;
        case Strategy::RecursiveWest: return map == MapId::West;
    }
    return false;
}

Strategy default_strategy(MapId map) noexcept {
    return map == MapId::West ? Strategy::Simulated : Strategy::ClosedForm;
}

// --- OperandStack ---------------------------------------------------------

void OperandStack::push(int value) {
    maxima_.push_back(values_.empty() ? value : std::max(value, maxima_.back()));
    minima_.push_back(values_.empty() ? value : std::min(value, minima_.back()));
    values_.push_back(value);
}

int OperandStack::pop() {
    const int v = values_.back();
    values_.pop_back();
    maxima_.pop_back();
    minima_.pop_back();
    return v;
}

void OperandStack::clear() noexcept {
    values_.clear();
    maxima_.clear();
    minima_.clear();
}

// --- policies -------------------------------------------------------------

bool dotted_admits_by_scan(const DottedPattern& pattern, std::span<const int> top_to_bottom,
                           int next) {
    std::vector<int> sequence;
    sequence.reserve(top_to_bottom.size() + 1);
    sequence.push_back(next);
    sequence.insert(sequence.end(), top_to_bottom.begin(), top_to_bottom.end());
    if (sequence.size() == 1) return true;

    // `next` leads the sequence, so an occurrence using it pairs it with a
    // later element.  Either dot position gives the same rule.
    const bool ascent = pattern.base() == BasePattern::Ascent12;
    for (std::size_t j = 1; j < sequence.size(); ++j) {
        if ((sequence[0] < sequence[j]) == ascent) return true;
    }
    return false;
}

PushPolicy PushPolicy::west() noexcept {
    return PushPolicy(Kind::West, DottedPattern(BasePattern::Ascent12, 2),
                      Evaluation::Incremental);
}

PushPolicy PushPolicy::dotted(DottedPattern pattern, Evaluation evaluation) noexcept {
    return PushPolicy(Kind::Dotted, pattern, evaluation);
}

bool PushPolicy::admits(const OperandStack& stack, int next) const {
    if (stack.empty()) return true;
    if (kind_ == Kind::West) return next < stack.top();
    if (evaluation_ == Evaluation::Scan) {
        const auto bt = stack.bottom_to_top();
        std::vector<int> top_to_bottom(bt.rbegin(), bt.rend());
        return dotted_admits_by_scan(pattern_, top_to_bottom, next);
    }
    return pattern_.base() == BasePattern::Ascent12 ? stack.max() > next : stack.min() < next;
}

// --- kernels --------------------------------------------------------------

namespace kernels {

namespace {

// Reverse each run; a run opens wherever `opens(value, record)` holds.
template <typename Opens>
void reverse_runs(std::span<const int> in, std::span<int> out, Opens opens) noexcept {
    const std::size_t n = in.size();
    std::size_t start = 0;
    int record = in[0];
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || opens(in[i], record)) {
            std::reverse_copy(in.begin() + static_cast<std::ptrdiff_t>(start),
                              in.begin() + static_cast<std::ptrdiff_t>(i),
                              out.begin() + static_cast<std::ptrdiff_t>(start));
            start = i;
            if (i < n) record = in[i];
        }
    }
}

}  // namespace

void s12_pass(std::span<const int> in, std::span<int> out) noexcept {
    reverse_runs(in, out, [](int v, int record) { return v > record; });
}

void s21_pass(std::span<const int> in, std::span<int> out) noexcept {
    reverse_runs(in, out, [](int v, int record) { return v < record; });
}

void west_pass(std::span<const int> in, std::span<int> out, std::vector<int>& stack) {
    stack.clear();
    std::size_t k = 0;
    for (int v : in) {
        while (!stack.empty() && stack.back() < v) {
            out[k++] = stack.back();
            stack.pop_back();
        }
        stack.push_back(v);
    }
    while (!stack.empty()) {
        out[k++] = stack.back();
        stack.pop_back();
    }
}

void west_recursive_pass(std::span<const int> in, std::span<int> out) {
    if (in.empty()) return;
    const auto max_it = std::max_element(in.begin(), in.end());
    const auto m = static_cast<std::size_t>(max_it - in.begin());
    const auto left = in.first(m);
    const auto right = in.subspan(m + 1);
    west_recursive_pass(left, out.first(m));
    west_recursive_pass(right, out.subspan(m, right.size()));
    out[in.size() - 1] = *max_it;
}

void simulate_pass(std::span<const int> in, std::span<int> out, const PushPolicy& policy,
                   OperandStack& stack, StackTrace* trace) {
    stack.clear();
    std::size_t k = 0;
    std::size_t step = 0;
    auto emit = [&](StackEvent::Op op, int value) {
        if (trace != nullptr) trace->events.push_back({op, value, step});
        ++step;
    };
    auto pop_one = [&] {
        const int v = stack.pop();
        out[k++] = v;
        emit(StackEvent::Op::Pop, v);
    };
    std::size_t next = 0;
    while (next < in.size()) {
        if (policy.admits(stack, in[next])) {
            stack.push(in[next]);
            emit(StackEvent::Op::Push, in[next]);
            ++next;
        } else {
            pop_one();
        }
    }
    while (!stack.empty()) pop_one();
}

bool is_identity(std::span<const int> values) noexcept {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

MapStepper::MapStepper(MapId map, Strategy strategy, std::size_t n)
    : map_(map), strategy_(strategy), middle_(n) {
    if (!strategy_valid(map, strategy)) {
        throw DomainError("strategy " + std::string(to_string(strategy)) +
                          " does not apply to map " + std::string(to_string(map)));
    }
    west_stack_.reserve(n);
}

void MapStepper::dotted_stage(std::span<const int> in, std::span<int> out) {
    const bool ascent = map_ == MapId::S12 || map_ == MapId::Machine12;
    if (strategy_ == Strategy::ClosedForm) {
        ascent ? s12_pass(in, out) : s21_pass(in, out);
        return;
    }
    const auto policy = PushPolicy::dotted(
        DottedPattern(ascent ? BasePattern::Ascent12 : BasePattern::Descent21, 2));
    simulate_pass(in, out, policy, stack_, nullptr);
}

void MapStepper::west_stage(std::span<const int> in, std::span<int> out) {
    switch (strategy_) {
        case Strategy::RecursiveWest: west_recursive_pass(in, out); break;
        case Strategy::Simulated:
            simulate_pass(in, out, PushPolicy::west(), stack_, nullptr);
            break;
        case Strategy::ClosedForm: west_pass(in, out, west_stack_); break;
    }
}

void MapStepper::operator()(std::span<const int> in, std::span<int> out) {
    if (middle_.size() != in.size()) middle_.resize(in.size());
    switch (map_) {
        case MapId::West: west_stage(in, out); break;
        case MapId::S12:
        case MapId::S21: dotted_stage(in, out); break;
        case MapId::Machine12:
        case MapId::Machine21:
            dotted_stage(in, middle_);
            west_stage(middle_, out);
            break;
    }
}

}  // namespace kernels

// --- permutation-level API ------------------------------------------------

PassResult run_pass(const Permutation& p, const PushPolicy& policy, bool want_trace) {
    std::vector<int> out(p.size());
    OperandStack stack;
    std::optional<StackTrace> trace;
    if (want_trace) trace.emplace();
    kernels::simulate_pass(p.values(), out, policy, stack, want_trace ? &*trace : nullptr);
    return {make_unchecked(std::move(out)), std::move(trace)};
}

Permutation s12_closed_form(const Permutation& p) {
    std::vector<int> out(p.size());
    kernels::s12_pass(p.values(), out);
    return make_unchecked(std::move(out));
}

Permutation s21_closed_form(const Permutation& p) {
    std::vector<int> out(p.size());
    kernels::s21_pass(p.values(), out);
    return make_unchecked(std::move(out));
}

Permutation west_recursive(const Permutation& p) {
    std::vector<int> out(p.size());
    kernels::west_recursive_pass(p.values(), out);
    return make_unchecked(std::move(out));
}

Permutation apply(MapId map, const Permutation& p, Strategy strategy) {
    kernels::MapStepper step(map, strategy, p.size());
    std::vector<int> out(p.size());
    step(p.values(), out);
    return make_unchecked(std::move(out));
}

Permutation apply(MapId map, const Permutation& p) {
    return apply(map, p, default_strategy(map));
}

Permutation iterate(MapId map, const Permutation& p, std::size_t times, Strategy strategy) {
    kernels::MapStepper step(map, strategy, p.size());
    std::vector<int> cur(p.begin(), p.end());
    std::vector<int> next(p.size());
    for (std::size_t t = 0; t < times; ++t) {
        step(cur, next);
        cur.swap(next);
    }
    return make_unchecked(std::move(cur));
}

Permutation iterate(MapId map, const Permutation& p, std::size_t times) {
    return iterate(map, p, times, default_strategy(map));
}

std::optional<std::size_t> sorts_in(MapId map, const Permutation& p, std::size_t t_max,
                                    Strategy strategy) {
    kernels::MapStepper step(map, strategy, p.size());
    std::vector<int> cur(p.begin(), p.end());
    std::vector<int> next(p.size());
    for (std::size_t t = 0;; ++t) {
        if (kernels::is_identity(cur)) return t;
        if (t == t_max) return std::nullopt;
        step(cur, next);
        cur.swap(next);
    }
}

std::optional<std::size_t> sorts_in(MapId map, const Permutation& p, std::size_t t_max) {
    return sorts_in(map, p, t_max, default_strategy(map));
}

OrbitReport orbit(MapId map, const Permutation& p, Strategy strategy) {
    kernels::MapStepper step(map, strategy, p.size());
    std::map<std::vector<int>, std::size_t> seen;
    std::vector<int> cur(p.begin(), p.end());
    std::vector<int> next(p.size());
    OrbitReport report;
    for (std::size_t t = 0;; ++t) {
        auto [it, inserted] = seen.emplace(cur, t);
        if (!inserted) {
            report.tail_length = it->second;
            report.cycle_length = t - it->second;
            break;
        }
        if (!report.reaches_identity_at && kernels::is_identity(cur)) {
            report.reaches_identity_at = t;
        }
        step(cur, next);
        cur.swap(next);
    }
    report.is_periodic_point = report.tail_length == 0;
    return report;
}

OrbitReport orbit(MapId map, const Permutation& p) {
    return orbit(map, p, default_strategy(map));
}

std::size_t ord_of_sn(MapId map, std::size_t n, bool force) {
    if (n == 0) throw DomainError("n must be >= 1");
    check_guard(n, force);
    const auto first = Permutation::identity(n);
    std::vector<int> values(first.begin(), first.end());
    std::size_t worst = 0;
    do {
        worst = std::max(worst, orbit(map, make_unchecked(values)).tail_length);
    } while (next_in_place(values));
    return worst;
}

}  // namespace pss
