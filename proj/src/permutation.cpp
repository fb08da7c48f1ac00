#include "pss/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace pss {

namespace {

void require_bijection(const std::vector<int>& values) {
    if (values.empty()) {
        throw DomainError("permutation must have length >= 1");
    }
    const auto n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw DomainError("value " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw DomainError("duplicate value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

template <typename Better>
std::vector<std::size_t> records(const Permutation& p, Better better) {
    std::vector<std::size_t> out;
    int best = p.at(1);
    out.push_back(1);
    for (std::size_t i = 2; i <= p.size(); ++i) {
        if (better(p.at(i), best)) {
            best = p.at(i);
            out.push_back(i);
        }
    }
    return out;
}

RunDecomposition runs_from_starts(RunKind kind, const std::vector<std::size_t>& starts,
                                  std::size_t n) {
    RunDecomposition d{kind, {}};
    d.runs.reserve(starts.size());
    for (std::size_t k = 0; k < starts.size(); ++k) {
        const std::size_t end = k + 1 < starts.size() ? starts[k + 1] - 1 : n;
        d.runs.push_back({starts[k], end});
    }
    return d;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    require_bijection(values_);
}

Permutation make_unchecked(std::vector<int> values) {
    return Permutation(Permutation::Unchecked{}, std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
    if (n == 0) throw DomainError("permutation must have length >= 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return make_unchecked(std::move(v));
}

Permutation Permutation::reverse_identity(std::size_t n) {
    if (n == 0) throw DomainError("permutation must have length >= 1");
    std::vector<int> v(n);
    std::iota(v.rbegin(), v.rend(), 1);
    return make_unchecked(std::move(v));
}

int Permutation::at(std::size_t position) const {
    if (position < 1 || position > values_.size()) {
        throw DomainError("position " + std::to_string(position) + " out of range");
    }
    return values_[position - 1];
}

std::size_t Permutation::position_of(int value) const {
    auto it = std::find(values_.begin(), values_.end(), value);
    if (it == values_.end()) throw DomainError("value not present");
    return static_cast<std::size_t>(it - values_.begin()) + 1;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 1) {
        throw DomainError("word entries must be positive");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("word entries must be pairwise distinct");
    }
}

Permutation parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                              s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw ParseError("empty permutation text");

    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw ParseError("malformed token in '" + std::string(text) + "'");
            }
            values.push_back(c - '0');
        }
        if (values.size() > 9) {
            throw ParseError("compact digit form only allowed for n <= 9");
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            const auto comma = text.find(',', pos);
            const auto token = trim(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
            int v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParseError("malformed token '" + std::string(token) + "'");
            }
            values.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    try {
        return Permutation(std::move(values));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string format(std::span<const int> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format(const Permutation& p) { return format(p.values()); }

Permutation rev(const Permutation& p) {
    std::vector<int> v(p.values().rbegin(), p.values().rend());
    return make_unchecked(std::move(v));
}

Word inc(const Permutation& p) {
    std::vector<int> v(p.begin(), p.end());
    for (int& x : v) ++x;
    return Word(std::move(v));
}

Permutation ins(const Permutation& p, std::size_t position) {
    const auto n = p.size();
    if (position < 1 || position > n + 1) {
        throw DomainError("insertion position " + std::to_string(position) +
                          " out of range 1.." + std::to_string(n + 1));
    }
    std::vector<int> v;
    v.reserve(n + 1);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        if (i == position) v.push_back(1);
        if (i <= n) v.push_back(p.at(i) + 1);
    }
    return make_unchecked(std::move(v));
}

Permutation delete_one(const Permutation& p) {
    if (p.size() < 2) throw DomainError("delete_one requires n >= 2");
    std::vector<int> v;
    v.reserve(p.size() - 1);
    for (int x : p) {
        if (x != 1) v.push_back(x - 1);
    }
    return make_unchecked(std::move(v));
}

std::vector<std::size_t> peaks(const Permutation& p) {
    return records(p, [](int a, int b) { return a > b; });
}

std::vector<std::size_t> valleys(const Permutation& p) {
    return records(p, [](int a, int b) { return a < b; });
}

RunDecomposition peak_runs(const Permutation& p) {
    return runs_from_starts(RunKind::Peak, peaks(p), p.size());
}

RunDecomposition valley_runs(const Permutation& p) {
    return runs_from_starts(RunKind::Valley, valleys(p), p.size());
}

Permutation standardize(std::span<const int> entries) {
    if (entries.empty()) throw DomainError("cannot standardize an empty word");
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return entries[a] < entries[b]; });
    std::vector<int> v(entries.size());
    for (std::size_t r = 0; r < order.size(); ++r) v[order[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(v));
}

Permutation standardize(const Word& w) { return standardize(w.entries()); }

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
    const auto k = pattern.size();
    if (k > 3) throw DomainError("contains_pattern supports patterns of length <= 3");
    const auto n = p.size();
    if (k > n) return false;
    const auto v = p.values();
    if (k == 1) return true;
    if (k == 2) {
        // 12: some entry exceeds an earlier minimum; 21 dually.
        const bool ascending = pattern.at(1) < pattern.at(2);
        int extreme = v[0];
        for (std::size_t j = 1; j < n; ++j) {
            if (ascending ? v[j] > extreme : v[j] < extreme) return true;
            extreme = ascending ? std::min(extreme, v[j]) : std::max(extreme, v[j]);
        }
        return false;
    }
    // Length 3: fix the middle entry and keep the most extreme eligible
    // entry on each side, so the outer comparison only needs one candidate pair.
    const int a = pattern.at(1), b = pattern.at(2), c = pattern.at(3);
    const bool outer_ascends = a < c;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const int mid = v[j];
        std::optional<int> left;
        for (std::size_t i = 0; i < j; ++i) {
            if ((a < b) != (v[i] < mid)) continue;
            if (!left || (outer_ascends ? v[i] < *left : v[i] > *left)) left = v[i];
        }
        if (!left) continue;
        std::optional<int> right;
        for (std::size_t l = j + 1; l < n; ++l) {
            if ((b < c) != (mid < v[l])) continue;
            if (!right || (outer_ascends ? v[l] > *right : v[l] < *right)) right = v[l];
        }
        if (right && (outer_ascends ? *left < *right : *left > *right)) return true;
    }
    return false;
}

std::uint64_t factorial(std::size_t n) {
    if (n > kMaxRankable) throw DomainError("factorial overflows for n > 20");
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

Rank rank(const Permutation& p) {
    const auto n = p.size();
    if (n > kMaxRankable) throw DomainError("rank requires n <= 20");
    Rank r = 0;
    const auto v = p.values();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t smaller_after = 0;
        for (std::size_t j = i + 1; j < n; ++j) smaller_after += v[j] < v[i];
        r += smaller_after * factorial(n - 1 - i);
    }
    return r;
}

void unrank_into(Rank r, std::span<int> out) {
    const auto n = out.size();
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto f = factorial(n - 1 - i);
        const auto idx = static_cast<std::size_t>(r / f);
        r %= f;
        out[i] = pool[idx];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
}

Permutation unrank(std::size_t n, Rank r) {
    if (n == 0) throw DomainError("permutation must have length >= 1");
    if (n > kMaxRankable) throw DomainError("unrank requires n <= 20");
    if (r >= factorial(n)) {
        throw DomainError("rank " + std::to_string(r) + " >= " + std::to_string(n) + "!");
    }
    std::vector<int> v(n);
    unrank_into(r, v);
    return make_unchecked(std::move(v));
}

bool next_in_place(std::span<int> values) noexcept {
    return std::next_permutation(values.begin(), values.end());
}

std::optional<Permutation> successor(const Permutation& p) {
    std::vector<int> v(p.begin(), p.end());
    if (!next_in_place(v)) return std::nullopt;
    return make_unchecked(std::move(v));
}

}  // namespace pss
