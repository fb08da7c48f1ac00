#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pss/formulas.hpp"

using namespace pss;

namespace {

std::uint64_t oracle_count(std::size_t n, const std::function<bool(const oracle::Values&)>& pred) {
    std::uint64_t count = 0;
    for (const auto& v : oracle::all_permutations(n)) count += pred(v);
    return count;
}

PermutationSet oracle_image(MapId map, std::size_t n, std::size_t power) {
    PermutationSet out;
    for (const auto& v : oracle::all_permutations(n)) {
        out.insert(Permutation(oracle::iterate_map(map, v, power)));
    }
    return out;
}

}  // namespace

TEST(Counts, SmallValues) {
    EXPECT_EQ(count_t_sortable_s12(5, 1), BigCount(16));
    EXPECT_EQ(count_t_sortable_s12(5, 2), BigCount(54));
    EXPECT_EQ(count_t_sortable_s12(3, 5), BigCount(6));
    EXPECT_EQ(count_t_sortable_s21(1), BigCount(1));
    EXPECT_EQ(count_t_sortable_s21(4), BigCount(0));
    EXPECT_EQ(count_machine21_sortable(1), BigCount(1));
    EXPECT_EQ(count_machine21_sortable(6), BigCount(32));
    EXPECT_EQ(count_min_sorted_s12(5), BigCount(24));
    EXPECT_EQ(count_highly_sorted_s12(5), BigCount(96));
    EXPECT_THROW(count_min_sorted_s12(1), DomainError);
}

TEST(Counts, FixedPointSequence) {
    const int expected[] = {1, 1, 1, 2, 4, 9, 23, 65, 199, 654};
    for (std::size_t n = 0; n < std::size(expected); ++n) {
        EXPECT_EQ(count_machine21_fixed_points(n), BigCount(expected[n])) << n;
    }
}

TEST(Counts, LargeArgumentsStayExact) {
    BigCount f = 1;
    for (int k = 2; k <= 40; ++k) f *= k;
    EXPECT_EQ(big_factorial(40), f);
    EXPECT_EQ(count_t_sortable_s12(40, 40), f);
    EXPECT_EQ(binomial(60, 30), BigCount("118264581564861424"));
    EXPECT_EQ(count_machine21_sortable(100), BigCount(1) << 99);
    EXPECT_GT(count_machine21_fixed_points(60), BigCount(0));
}

TEST(Counts, SortableCountIsMonotoneInT) {
    for (std::size_t n = 1; n <= 15; ++n) {
        for (std::size_t t = 1; t < n + 2; ++t) {
            EXPECT_LE(count_t_sortable_s12(n, t), count_t_sortable_s12(n, t + 1));
        }
        EXPECT_EQ(count_t_sortable_s12(n, n), big_factorial(n));
    }
}

TEST(Counts, MinimalPlusHighlyIsEverything) {
    for (std::size_t n = 2; n <= 20; ++n) {
        EXPECT_EQ(count_min_sorted_s12(n) + count_highly_sorted_s12(n), big_factorial(n));
    }
}

TEST(Counts, S12FormulaMatchesOracleThroughS8) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t t = 1; t <= n; ++t) {
            const auto observed = oracle_count(n, [&](const oracle::Values& v) {
                return oracle::is_identity(oracle::iterate_map(MapId::S12, v, t));
            });
            EXPECT_EQ(count_t_sortable_s12(n, t), BigCount(observed)) << n << " " << t;
        }
    }
}

TEST(Counts, MachineFormulasMatchOracleThroughS8) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto sortable = oracle_count(n, [](const oracle::Values& v) {
            return oracle::is_identity(oracle::apply_map(MapId::Machine21, v));
        });
        const auto fixed = oracle_count(n, [](const oracle::Values& v) {
            return oracle::apply_map(MapId::Machine21, v) == v;
        });
        EXPECT_EQ(count_machine21_sortable(n), BigCount(sortable));
        EXPECT_EQ(count_machine21_fixed_points(n), BigCount(fixed));
    }
}

TEST(Predicates, AgreeWithMachineOracleThroughS8) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& v : oracle::all_permutations(n)) {
            const auto image = oracle::apply_map(MapId::Machine21, v);
            const Permutation p(v);
            ASSERT_EQ(is_machine21_sortable(p), oracle::is_identity(image)) << format(p);
            ASSERT_EQ(is_machine21_fixed_shape(p), image == v) << format(p);
        }
    }
}

TEST(Images, MatchOracle) {
    for (std::size_t n = 2; n <= 8; ++n) {
        EXPECT_EQ(image_s12_power(n), oracle_image(MapId::S12, n, n - 2)) << n;
    }
    for (std::size_t n = 4; n <= 8; ++n) {
        EXPECT_EQ(image_machine12(n), oracle_image(MapId::Machine12, n, n / 2 - 1)) << n;
        const auto all_sorted = oracle_image(MapId::Machine12, n, machine12_bound(n));
        EXPECT_EQ(all_sorted, PermutationSet{Permutation::identity(n)});
    }
    EXPECT_EQ(image_machine12(5).size(), 5u);
    EXPECT_EQ(image_machine12(6).size(), 2u);
    EXPECT_THROW(image_machine12(3), DomainError);
}

TEST(Witnesses, Shapes) {
    EXPECT_EQ(witness_even(6), (Permutation{2, 4, 6, 1, 3, 5}));
    EXPECT_EQ(witness_cycle(5), (Permutation{2, 3, 4, 5, 1}));
    EXPECT_EQ(witness_pi(3, PiSeed::S213), (Permutation{2, 1, 3}));
    EXPECT_EQ(witness_pi(5, PiSeed::S213), (Permutation{2, 4, 1, 3, 5}));
    EXPECT_EQ(witness_pi(5, PiSeed::S132), (Permutation{1, 3, 5, 2, 4}));
    EXPECT_EQ(witness_pi(5, PiSeed::S312), (Permutation{3, 5, 1, 2, 4}));
    EXPECT_EQ(witness_pi(7, PiSeed::S312), (Permutation{3, 5, 7, 1, 2, 4, 6}));
    EXPECT_THROW(witness_even(5), DomainError);
    EXPECT_THROW(witness_cycle(6), DomainError);
    EXPECT_THROW(witness_pi(4, PiSeed::S132), DomainError);
}

// Each witness reaches its target under the oracle machine, and the target
// lies in the claimed image.
TEST(Witnesses, ReachTargetsThrough13) {
    for (std::size_t n = 4; n <= 13; ++n) {
        const auto image = image_machine12(n);
        std::size_t accepted = 0;
        for (auto family : {WitnessFamily::Even, WitnessFamily::Cycle, WitnessFamily::Pi213,
                            WitnessFamily::Pi132, WitnessFamily::Pi312}) {
            if (!witness_family_accepts(family, n)) continue;
            ++accepted;
            const auto claim = witness_claim(family, n);
            EXPECT_EQ(claim.passes, n / 2 - 1);
            const auto reached = oracle::iterate_map(
                MapId::Machine12, {claim.start.begin(), claim.start.end()}, claim.passes);
            EXPECT_EQ(Permutation(reached), claim.target) << to_string(family) << " n=" << n;
            EXPECT_TRUE(image.contains(claim.target));
        }
        EXPECT_EQ(accepted, n % 2 == 0 ? 1u : 4u);
    }
}

TEST(Witnesses, FamiliesCoverTheNonIdentityImage) {
    for (std::size_t n = 4; n <= 13; ++n) {
        PermutationSet targets;
        for (auto family : {WitnessFamily::Even, WitnessFamily::Cycle, WitnessFamily::Pi213,
                            WitnessFamily::Pi132, WitnessFamily::Pi312}) {
            if (witness_family_accepts(family, n)) targets.insert(witness_claim(family, n).target);
        }
        targets.insert(Permutation::identity(n));
        EXPECT_EQ(targets, image_machine12(n));
    }
}

TEST(Names, RoundTrip) {
    for (auto claim : all_claims()) EXPECT_EQ(parse_claim_id(to_string(claim)), claim);
    EXPECT_EQ(all_claims().size(), 15u);
    EXPECT_FALSE(parse_claim_id("T9_9").has_value());
    for (auto f : {WitnessFamily::Even, WitnessFamily::Cycle, WitnessFamily::Pi213,
                   WitnessFamily::Pi132, WitnessFamily::Pi312}) {
        EXPECT_EQ(parse_witness_family(to_string(f)), f);
    }
}
