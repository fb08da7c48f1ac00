#include "pss/enumerator.hpp"

#include <algorithm>
#include <functional>

namespace pss {

namespace {

void require_n(std::size_t n) {
    if (n == 0) throw DomainError("n must be >= 1");
    if (n > kMaxRankable) throw DomainError("exhaustive passes require n <= 20");
}

/// Per-worker scratch for repeated map applications.
struct Walker {
    kernels::MapStepper step;
    std::vector<int> cur;
    std::vector<int> next;

    Walker(MapId map, Strategy strategy, std::size_t n)
        : step(map, strategy, n), cur(n), next(n) {}

    void load(std::span<const int> values) { std::copy(values.begin(), values.end(), cur.begin()); }

    void advance() {
        step(cur, next);
        cur.swap(next);
    }

    void advance(std::size_t times) {
        for (std::size_t t = 0; t < times; ++t) advance();
    }

    /// Least t <= t_max with the identity after t applications.
    std::optional<std::size_t> sort_count(std::span<const int> values, std::size_t t_max) {
        load(values);
        for (std::size_t t = 0;; ++t) {
            if (kernels::is_identity(cur)) return t;
            if (t == t_max) return std::nullopt;
            advance();
        }
    }
};

/// Walker that also records visited states to find orbit tails.
struct OrbitWalker : Walker {
    std::vector<int> history;  // flattened states

    using Walker::Walker;

    std::size_t tail_length(std::span<const int> values) {
        const std::size_t n = cur.size();
        load(values);
        history.clear();
        for (std::size_t t = 0;; ++t) {
            for (std::size_t s = 0; s < t; ++s) {
                if (std::equal(cur.begin(), cur.end(),
                               history.begin() + static_cast<std::ptrdiff_t>(s * n))) {
                    return s;
                }
            }
            history.insert(history.end(), cur.begin(), cur.end());
            advance();
        }
    }
};

Permutation to_perm(std::span<const int> values) {
    return make_unchecked(std::vector<int>(values.begin(), values.end()));
}

}  // namespace

void validate(const RankRange& range) {
    require_n(range.n);
    if (range.lo > range.hi || range.hi > factorial(range.n)) {
        throw DomainError("invalid rank range");
    }
}

std::vector<RankRange> partition(std::size_t n, std::size_t parts) {
    require_n(n);
    const Rank total = factorial(n);
    parts = std::max<std::size_t>(1, std::min<Rank>(parts, total));
    std::vector<RankRange> out;
    out.reserve(parts);
    for (std::size_t i = 0; i < parts; ++i) {
        out.push_back({n, total * i / parts, total * (i + 1) / parts});
    }
    return out;
}

std::size_t default_workers() noexcept {
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t SortCountHistogram::sortable_within(std::size_t t) const {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= t && k < by_count.size(); ++k) total += by_count[k];
    return total;
}

SortCountHistogram sort_count_histogram(MapId map, std::size_t n, std::size_t t_max,
                                        Strategy strategy, const BruteOptions& options) {
    require_n(n);
    check_guard(n, options.force);
    struct Partial {
        Walker walker;
        SortCountHistogram hist;
    };
    auto make = [&] {
        Partial p{Walker(map, strategy, n), {}};
        p.hist.by_count.assign(t_max + 1, 0);
        return p;
    };
    auto visit = [&](Partial& p, std::span<const int> v) {
        if (auto t = p.walker.sort_count(v, t_max)) {
            ++p.hist.by_count[*t];
        } else {
            ++p.hist.unsorted;
        }
    };
    auto merge = [](Partial& into, const Partial& from) {
        for (std::size_t k = 0; k < into.hist.by_count.size(); ++k) {
            into.hist.by_count[k] += from.hist.by_count[k];
        }
        into.hist.unsorted += from.hist.unsorted;
    };
    return parallel_reduce<Partial>(n, options, make, visit, merge).hist;
}

std::vector<std::uint64_t> identity_hits(MapId map, std::size_t n, std::size_t t_max,
                                         Strategy strategy, const BruteOptions& options) {
    require_n(n);
    check_guard(n, options.force);
    struct Partial {
        Walker walker;
        std::vector<std::uint64_t> hits;
    };
    auto make = [&] { return Partial{Walker(map, strategy, n), std::vector<std::uint64_t>(t_max + 1, 0)}; };
    auto visit = [&](Partial& p, std::span<const int> v) {
        auto& w = p.walker;
        w.load(v);
        for (std::size_t t = 0; t <= t_max; ++t) {
            const bool hit = kernels::is_identity(w.cur);
            if (hit) ++p.hits[t];
            if (t == t_max) break;
            w.step(w.cur, w.next);
            if (w.next == w.cur) {
                // Fixed point: every later power looks the same.
                if (hit) {
                    for (std::size_t u = t + 1; u <= t_max; ++u) ++p.hits[u];
                }
                break;
            }
            w.cur.swap(w.next);
        }
    };
    auto merge = [](Partial& into, const Partial& from) {
        for (std::size_t t = 0; t < into.hits.size(); ++t) into.hits[t] += from.hits[t];
    };
    return parallel_reduce<Partial>(n, options, make, visit, merge).hits;
}

BigCount brute_t_sortable(MapId map, std::size_t n, std::size_t t, Strategy strategy,
                          const BruteOptions& options) {
    return BigCount(identity_hits(map, n, t, strategy, options)[t]);
}

BigCount brute_t_sortable(MapId map, std::size_t n, std::size_t t,
                          const BruteOptions& options) {
    return brute_t_sortable(map, n, t, default_strategy(map), options);
}

BigCount brute_machine_sortable(MapId machine, std::size_t n, Strategy strategy,
                                const BruteOptions& options) {
    if (!is_machine(machine)) throw DomainError("brute_machine_sortable needs a machine map");
    return brute_t_sortable(machine, n, 1, strategy, options);
}

BigCount brute_machine_sortable(MapId machine, std::size_t n, const BruteOptions& options) {
    return brute_machine_sortable(machine, n, default_strategy(machine), options);
}

FixedPointResult brute_fixed_points(MapId map, std::size_t n, bool collect, Strategy strategy,
                                    const BruteOptions& options) {
    require_n(n);
    check_guard(n, options.force);
    struct Partial {
        Walker walker;
        std::uint64_t count = 0;
        std::vector<Permutation> members;
    };
    auto make = [&] { return Partial{Walker(map, strategy, n), 0, {}}; };
    auto visit = [&](Partial& p, std::span<const int> v) {
        p.walker.load(v);
        p.walker.advance();
        if (std::equal(v.begin(), v.end(), p.walker.cur.begin())) {
            ++p.count;
            if (collect) p.members.push_back(to_perm(v));
        }
    };
    auto merge = [](Partial& into, Partial& from) {
        into.count += from.count;
        into.members.insert(into.members.end(), std::make_move_iterator(from.members.begin()),
                            std::make_move_iterator(from.members.end()));
    };
    auto total = parallel_reduce<Partial>(n, options, make, visit, merge);
    FixedPointResult result{BigCount(total.count), std::nullopt};
    if (collect) result.members = std::move(total.members);
    return result;
}

FixedPointResult brute_fixed_points(MapId map, std::size_t n, bool collect,
                                    const BruteOptions& options) {
    return brute_fixed_points(map, n, collect, default_strategy(map), options);
}

ImageResult brute_image(MapId map, std::size_t n, std::size_t power, Strategy strategy,
                        const BruteOptions& options, std::size_t cap) {
    require_n(n);
    check_guard(n, options.force);
    struct Partial {
        Walker walker;
        ImageResult image;
    };
    auto insert_capped = [cap](ImageResult& into, const Permutation& p) {
        if (into.members.size() < cap || into.members.contains(p)) {
            into.members.insert(p);
        } else {
            into.overflow = true;
        }
    };
    auto make = [&] { return Partial{Walker(map, strategy, n), {}}; };
    auto visit = [&](Partial& p, std::span<const int> v) {
        p.walker.load(v);
        p.walker.advance(power);
        if (p.image.overflow) return;
        insert_capped(p.image, to_perm(p.walker.cur));
    };
    auto merge = [&](Partial& into, const Partial& from) {
        into.image.overflow = into.image.overflow || from.image.overflow;
        for (const auto& m : from.image.members) insert_capped(into.image, m);
    };
    return parallel_reduce<Partial>(n, options, make, visit, merge).image;
}

ImageResult brute_image(MapId map, std::size_t n, std::size_t power,
                        const BruteOptions& options) {
    return brute_image(map, n, power, default_strategy(map), options);
}

std::size_t brute_ord(MapId map, std::size_t n, Strategy strategy, const BruteOptions& options) {
    require_n(n);
    check_guard(n, options.force);
    struct Partial {
        OrbitWalker walker;
        std::size_t worst = 0;
    };
    auto make = [&] { return Partial{OrbitWalker(map, strategy, n), 0}; };
    auto visit = [](Partial& p, std::span<const int> v) {
        p.worst = std::max(p.worst, p.walker.tail_length(v));
    };
    auto merge = [](Partial& into, const Partial& from) {
        into.worst = std::max(into.worst, from.worst);
    };
    return parallel_reduce<Partial>(n, options, make, visit, merge).worst;
}

std::size_t brute_ord(MapId map, std::size_t n, const BruteOptions& options) {
    return brute_ord(map, n, default_strategy(map), options);
}

std::vector<std::uint64_t> insertion_tallies(std::size_t n, const BruteOptions& options) {
    if (n < 2) throw DomainError("insertion tallies need n >= 2");
    require_n(n);
    const std::size_t m = n - 1;
    check_guard(n, options.force);
    struct Partial {
        Walker small;
        Walker large;
        std::vector<int> inserted;
        std::vector<std::uint64_t> good;
        std::vector<std::size_t> sortable;  // by t, per p
    };
    auto make = [&] {
        return Partial{Walker(MapId::S12, Strategy::ClosedForm, m),
                       Walker(MapId::S12, Strategy::ClosedForm, n), std::vector<int>(n),
                       std::vector<std::uint64_t>(n, 0), std::vector<std::size_t>(n, 0)};
    };
    auto visit = [&](Partial& p, std::span<const int> v) {
        const auto base = p.small.sort_count(v, n);
        std::fill(p.sortable.begin(), p.sortable.end(), 0);
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t k = 0;
            for (std::size_t pos = 1; pos <= n; ++pos) {
                p.inserted[pos - 1] = pos == i ? 1 : v[k++] + 1;
            }
            const auto c = p.large.sort_count(p.inserted, n);
            // An insertion sortable within c passes is t-sortable for every t >= c.
            if (c && *c < n) ++p.sortable[*c];
        }
        std::size_t within = p.sortable[0];
        for (std::size_t t = 1; t < n; ++t) {
            within += p.sortable[t];
            if (base && *base <= t && within == t + 1) ++p.good[t];
        }
    };
    auto merge = [](Partial& into, const Partial& from) {
        for (std::size_t t = 0; t < into.good.size(); ++t) into.good[t] += from.good[t];
    };
    return parallel_reduce<Partial>(m, options, make, visit, merge).good;
}

bool insertion_positions_property(std::size_t n, std::size_t t, const BruteOptions& options) {
    if (t < 1 || n <= t) throw DomainError("insertion property needs n > t >= 1");
    require_n(n);
    const auto good = insertion_tallies(n, options);
    return BigCount(good[t]) == brute_t_sortable(MapId::S12, n - 1, t, options);
}

}  // namespace pss
