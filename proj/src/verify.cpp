#include <chrono>

#include "pss/enumerator.hpp"

namespace pss {

namespace {

std::string t_param(std::size_t t) { return "t=" + std::to_string(t); }

/// Counts permutations of S_n on which `agree` holds.
template <typename MakeCheck>
BigCount count_agreements(std::size_t n, const BruteOptions& options, MakeCheck make_check) {
    using Check = decltype(make_check());
    struct Partial {
        Check check;
        std::uint64_t agree = 0;
    };
    auto total = parallel_reduce<Partial>(
        n, options, [&] { return Partial{make_check(), 0}; },
        [](Partial& p, std::span<const int> v) { p.agree += p.check(v) ? 1 : 0; },
        [](Partial& into, const Partial& from) { into.agree += from.agree; });
    return BigCount(total.agree);
}

/// Pointwise comparison of two maps given as steppers.
struct StepperAgreement {
    kernels::MapStepper first;
    kernels::MapStepper second;
    std::vector<int> a, b;

    bool operator()(std::span<const int> v) {
        first(v, a);
        second(v, b);
        return a == b;
    }
};

/// Pointwise comparison of two simulated passes under different policies.
struct PolicyAgreement {
    PushPolicy first;
    PushPolicy second;
    OperandStack stack;
    std::vector<int> a, b;

    bool operator()(std::span<const int> v) {
        kernels::simulate_pass(v, a, first, stack, nullptr);
        kernels::simulate_pass(v, b, second, stack, nullptr);
        return a == b;
    }
};

void add_row(VerificationReport& report, std::size_t n, std::string param, ReportValue expected,
             ReportValue observed) {
    const bool pass = expected == observed;
    report.rows.push_back({n, std::move(param), std::move(expected), std::move(observed), pass});
}

void rows_for(VerificationReport& r, std::size_t n, const BruteOptions& o) {
    const auto n_fact = big_factorial(n);
    switch (r.claim) {
        case ClaimId::RED: {
            for (auto base : {BasePattern::Ascent12, BasePattern::Descent21}) {
                const auto ev = PushPolicy::Evaluation::Scan;
                auto observed = count_agreements(n, o, [&] {
                    return PolicyAgreement{PushPolicy::dotted(DottedPattern(base, 1), ev),
                                           PushPolicy::dotted(DottedPattern(base, 2), ev),
                                           {}, std::vector<int>(n), std::vector<int>(n)};
                });
                add_row(r, n, base == BasePattern::Ascent12 ? "base=12" : "base=21", n_fact,
                        observed);
            }
            break;
        }
        case ClaimId::P3_1:
        case ClaimId::P3_5: {
            const MapId map = r.claim == ClaimId::P3_1 ? MapId::S12 : MapId::S21;
            auto observed = count_agreements(n, o, [&] {
                return StepperAgreement{kernels::MapStepper(map, Strategy::ClosedForm, n),
                                        kernels::MapStepper(map, Strategy::Simulated, n),
                                        std::vector<int>(n), std::vector<int>(n)};
            });
            add_row(r, n, "closed=simulated", n_fact, observed);
            break;
        }
        case ClaimId::L3_3: {
            // Over p in S_{n-1} and every insertion position.
            const std::size_t m = n - 1;
            struct Check {
                std::vector<int> image, inserted, inserted_image;
                std::uint64_t operator()(std::span<const int> v) {
                    const std::size_t size = v.size() + 1;
                    kernels::s12_pass(v, image);
                    std::uint64_t agree = 0;
                    for (std::size_t i = 1; i <= size; ++i) {
                        std::size_t k = 0;
                        for (std::size_t pos = 1; pos <= size; ++pos) {
                            inserted[pos - 1] = pos == i ? 1 : v[k++] + 1;
                        }
                        kernels::s12_pass(inserted, inserted_image);
                        bool same = true;
                        k = 0;
                        for (int x : inserted_image) {
                            if (x == 1) continue;
                            same = same && x - 1 == image[k++];
                        }
                        agree += same;
                    }
                    return agree;
                }
            };
            struct Partial {
                Check check;
                std::uint64_t agree = 0;
            };
            auto total = parallel_reduce<Partial>(
                m, o,
                [&] {
                    return Partial{Check{std::vector<int>(m), std::vector<int>(n),
                                         std::vector<int>(n)},
                                   0};
                },
                [](Partial& p, std::span<const int> v) { p.agree += p.check(v); },
                [](Partial& into, const Partial& from) { into.agree += from.agree; });
            add_row(r, n, "delete_one(s12(ins))=s12", n_fact, BigCount(total.agree));
            break;
        }
        case ClaimId::T3_4: {
            const auto hist = sort_count_histogram(MapId::S12, n, n, Strategy::ClosedForm, o);
            for (std::size_t t = 1; t <= n; ++t) {
                add_row(r, n, t_param(t), count_t_sortable_s12(n, t),
                        BigCount(hist.sortable_within(t)));
            }
            if (n >= 2) {
                // Every t-sortable p in S_{n-1} has exactly t+1 sortable insertions.
                const auto tally = insertion_tallies(n, o);
                for (std::size_t t = 1; t < n; ++t) {
                    add_row(r, n, "insertions " + t_param(t), count_t_sortable_s12(n - 1, t),
                            BigCount(tally[t]));
                }
            }
            break;
        }
        case ClaimId::T3_6: {
            const auto hits = identity_hits(MapId::S21, n, 2 * n, Strategy::ClosedForm, o);
            for (std::size_t t = 1; t <= 2 * n; ++t) {
                add_row(r, n, t_param(t), count_t_sortable_s21(n), BigCount(hits[t]));
            }
            break;
        }
        case ClaimId::L4_1: {
            auto observed = count_agreements(n, o, [&] {
                struct Check {
                    kernels::MapStepper machine;
                    std::vector<int> a, b;
                    bool operator()(std::span<const int> v) {
                        machine(v, a);
                        kernels::s21_pass(v, b);
                        bool descending = true;
                        for (std::size_t i = 0; i < b.size(); ++i) {
                            descending = descending && b[i] == static_cast<int>(b.size() - i);
                        }
                        return kernels::is_identity(a) == descending;
                    }
                };
                return Check{kernels::MapStepper(MapId::Machine21, Strategy::Simulated, n),
                             std::vector<int>(n), std::vector<int>(n)};
            });
            add_row(r, n, "sortable<=>s21=n..1", n_fact, observed);
            break;
        }
        case ClaimId::T4_2:
            add_row(r, n, "-", count_machine21_sortable(n),
                    brute_machine_sortable(MapId::Machine21, n, o));
            break;
        case ClaimId::L4_3: {
            auto observed = count_agreements(n, o, [&] {
                struct Check {
                    kernels::MapStepper machine;
                    std::vector<int> a;
                    bool operator()(std::span<const int> v) {
                        machine(v, a);
                        const bool fixed = std::equal(v.begin(), v.end(), a.begin());
                        return fixed == is_machine21_fixed_shape(
                                            make_unchecked(std::vector<int>(v.begin(), v.end())));
                    }
                };
                return Check{kernels::MapStepper(MapId::Machine21, Strategy::Simulated, n),
                             std::vector<int>(n)};
            });
            add_row(r, n, "fixed<=>shape", n_fact, observed);
            break;
        }
        case ClaimId::T4_4:
            add_row(r, n, "-", count_machine21_fixed_points(n),
                    brute_fixed_points(MapId::Machine21, n, false, o).count);
            break;
        case ClaimId::C5_1_min: {
            const auto hist = sort_count_histogram(MapId::S12, n, n, Strategy::ClosedForm, o);
            add_row(r, n, "exactly n-1 sorts", count_min_sorted_s12(n),
                    BigCount(hist.by_count[n - 1]));
            add_row(r, n, "ord", BigCount(n - 1), BigCount(brute_ord(MapId::S12, n, o)));
            break;
        }
        case ClaimId::C5_1_high: {
            const auto hist = sort_count_histogram(MapId::S12, n, n, Strategy::ClosedForm, o);
            add_row(r, n, "within n-2 sorts", count_highly_sorted_s12(n),
                    BigCount(hist.sortable_within(n - 2)));
            break;
        }
        case ClaimId::T5_2:
            add_row(r, n, "power=" + std::to_string(n - 2), image_s12_power(n),
                    brute_image(MapId::S12, n, n - 2, o).members);
            break;
        case ClaimId::L5_3: {
            const auto bound = machine12_bound(n);
            const auto hist = sort_count_histogram(MapId::Machine12, n, bound,
                                                   Strategy::ClosedForm, o);
            add_row(r, n, t_param(bound), n_fact, BigCount(hist.sortable_within(bound)));
            add_row(r, n, "ord", BigCount(bound), BigCount(brute_ord(MapId::Machine12, n, o)));
            break;
        }
        case ClaimId::T5_4: {
            const auto power = n / 2 - 1;
            add_row(r, n, "power=" + std::to_string(power), image_machine12(n),
                    brute_image(MapId::Machine12, n, power, o).members);
            for (auto family : {WitnessFamily::Even, WitnessFamily::Cycle, WitnessFamily::Pi213,
                                WitnessFamily::Pi132, WitnessFamily::Pi312}) {
                if (!witness_family_accepts(family, n)) continue;
                const auto claim = witness_claim(family, n);
                add_row(r, n, "witness=" + std::string(to_string(family)),
                        PermutationSet{claim.target},
                        PermutationSet{iterate(MapId::Machine12, claim.start, claim.passes)});
            }
            break;
        }
    }
}

}  // namespace

std::size_t claim_min_n(ClaimId claim) noexcept {
    switch (claim) {
        case ClaimId::C5_1_min:
        case ClaimId::C5_1_high:
        case ClaimId::T5_2:
        case ClaimId::L5_3:
        case ClaimId::L3_3: return 2;
        case ClaimId::T5_4: return 4;
        default: return 1;
    }
}

VerificationReport verify(ClaimId claim, std::size_t n_min, std::size_t n_max,
                          const BruteOptions& options) {
    if (n_min < 1 || n_min > n_max) throw DomainError("need 1 <= n_min <= n_max");
    check_guard(n_max, options.force);
    const auto started = std::chrono::steady_clock::now();
    VerificationReport report{claim, n_min, n_max, {}, true, {}};
    for (std::size_t n = std::max(n_min, claim_min_n(claim)); n <= n_max; ++n) {
        rows_for(report, n, options);
    }
    for (const auto& row : report.rows) report.overall_pass = report.overall_pass && row.pass;
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

}  // namespace pss
