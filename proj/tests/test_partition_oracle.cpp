#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/brute_force.hpp"
#include "touchard/error.hpp"
#include "touchard/exact_core.hpp"
#include "touchard/partition_oracle.hpp"

namespace touchard {
namespace {

SetPartition rgs(std::vector<SetPartition::Label> labels) { return SetPartition{std::move(labels)}; }

TEST(SetPartition, ValidatesGrowth) {
    EXPECT_NO_THROW(rgs({0, 1, 0, 2}));
    EXPECT_THROW(rgs({1, 0}), UsageError);
    EXPECT_THROW(rgs({0, 2}), UsageError);
    EXPECT_THROW(rgs({}), UsageError);
}

TEST(SetPartition, BlocksAndRendering) {
    const auto p = SetPartition::from_blocks(4, {{1, 3}, {0, 2}});
    EXPECT_EQ(p.labels(), (std::vector<SetPartition::Label>{0, 1, 0, 1}));
    EXPECT_EQ(p.block_count(), 2u);
    EXPECT_EQ(p.block_sizes(), (std::vector<std::size_t>{2, 2}));
    EXPECT_EQ(p.to_string(), "{0,2}{1,3}");
    EXPECT_THROW(SetPartition::from_blocks(3, {{0, 1}}), UsageError);
    EXPECT_THROW(SetPartition::from_blocks(3, {{0, 1}, {1, 2}}), UsageError);
    EXPECT_THROW(SetPartition::from_blocks(2, {{0, 1}, {}}), UsageError);
    EXPECT_THROW(SetPartition::from_blocks(2, {{0, 5}}), UsageError);
}

TEST(Enumerate, SmallCases) {
    EXPECT_EQ(enumerate_partitions(1), (std::vector<SetPartition>{rgs({0})}));
    const auto three = enumerate_partitions(3);
    EXPECT_EQ(three, (std::vector<SetPartition>{rgs({0, 0, 0}), rgs({0, 0, 1}), rgs({0, 1, 0}),
                                               rgs({0, 1, 1}), rgs({0, 1, 2})}));
    EXPECT_EQ(enumerate_partitions(5).size(), 52u);
}

TEST(Enumerate, LexicographicAndUnique) {
    const auto all = enumerate_partitions(8);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(Enumerate, CapAndEmpty) {
    EXPECT_THROW(enumerate_partitions(0), UsageError);
    try {
        PartitionStream s(13);
        FAIL() << "expected refusal";
    } catch (const EnumerationCapError& e) {
        EXPECT_EQ(e.cap(), 12u);
        EXPECT_EQ(e.requested(), 13u);
        EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
    }
    EXPECT_THROW(count_by_blocks(5, 4), EnumerationCapError);
    EXPECT_NO_THROW(PartitionStream(13, 13));
}

TEST(Enumerate, TotalsMatchBellNumbers) {
    const auto bell = build_bell_binomial(12);
    for (std::size_t n = 1; n <= 12; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const SetPartition&) { ++count; });
        EXPECT_EQ(bell.at(n), count) << n;
    }
}

TEST(CountByBlocks, Examples) {
    EXPECT_EQ(count_by_blocks(3), (std::vector<std::uint64_t>{0, 1, 3, 1}));
    EXPECT_EQ(count_by_blocks(4)[2], 7u);
    for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(count_by_blocks(n)[1], 1u);
}

TEST(CountByBlocks, MatchesRecursiveEnumerationAndStirling) {
    const auto tri = build_stirling(12);
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto counts = count_by_blocks(n);
        for (std::size_t k = 1; k <= n; ++k) {
            EXPECT_EQ(tri.at(n, k), counts[k]) << n << "," << k;
        }
    }
    for (std::size_t n = 1; n <= 9; ++n) {
        EXPECT_EQ(count_by_blocks(n), testing::tally_by_blocks(n)) << n;
    }
}

TEST(TranslationAction, Validates) {
    EXPECT_THROW(TranslationAction(0, 0), UsageError);
    EXPECT_THROW(TranslationAction(4, 4), UsageError);
    EXPECT_THROW(apply_shift(rgs({0, 1, 0}), TranslationAction(4, 1)), UsageError);
}

TEST(ApplyShift, Examples) {
    const auto p = rgs({0, 1, 1, 0, 2});
    EXPECT_EQ(apply_shift(p, TranslationAction(5, 0)), p);

    const auto alt = SetPartition::from_blocks(4, {{0, 2}, {1, 3}});
    EXPECT_EQ(apply_shift(alt, TranslationAction(4, 1)), alt);

    const auto pair = SetPartition::from_blocks(3, {{0, 1}, {2}});
    EXPECT_EQ(apply_shift(pair, TranslationAction(3, 1)), SetPartition::from_blocks(3, {{1, 2}, {0}}));
}

TEST(ApplyShift, IsGroupActionPreservingBlockSizes) {
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto all = enumerate_partitions(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1), shift(0, n - 1);
        for (int trial = 0; trial < 100; ++trial) {
            const auto& p = all[pick(rng)];
            const std::size_t y = shift(rng), z = shift(rng);
            const auto twice = apply_shift(apply_shift(p, {n, y}), {n, z});
            EXPECT_EQ(twice, apply_shift(p, {n, (y + z) % n}));

            auto before = p.block_sizes(), after = apply_shift(p, {n, y}).block_sizes();
            std::sort(before.begin(), before.end());
            std::sort(after.begin(), after.end());
            EXPECT_EQ(before, after);
        }
    }
}

TEST(ApplyShift, AgreesWithBlockSetTranslation) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            std::vector<std::size_t> labels(p.labels().begin(), p.labels().end());
            const auto blocks = testing::to_block_set(labels);
            for (std::size_t y = 0; y < n; ++y) {
                const auto img = apply_shift(p, {n, y});
                std::vector<std::size_t> img_labels(img.labels().begin(), img.labels().end());
                EXPECT_EQ(testing::to_block_set(img_labels), testing::translate(blocks, y, n));
            }
        }
    }
}

TEST(FixedDetection, GeneratorMatchesAllShifts) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            std::vector<std::size_t> labels(p.labels().begin(), p.labels().end());
            EXPECT_EQ(is_translation_fixed(p), testing::fixed_by_all_shifts(testing::to_block_set(labels), n))
                << p.to_string();
        }
    }
}

TEST(OrbitDecomposition, Examples) {
    const auto two = orbit_decomposition(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_TRUE(two[0].is_fixed && two[1].is_fixed);

    const auto three = orbit_decomposition(3);
    std::multiset<std::size_t> sizes;
    for (const auto& o : three) sizes.insert(o.size);
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 1, 3}));
    const auto moving = std::find_if(three.begin(), three.end(), [](const auto& o) { return o.size == 3; });
    EXPECT_EQ(moving->representative, SetPartition::from_blocks(3, {{0, 1}, {2}}));

    const auto four = orbit_decomposition(4);
    EXPECT_EQ(std::count_if(four.begin(), four.end(), [](const auto& o) { return o.is_fixed; }), 3);
}

TEST(OrbitDecomposition, StructuralInvariants) {
    const auto bell = build_bell_binomial(10);
    for (std::size_t modulus = 1; modulus <= 10; ++modulus) {
        const auto orbits = orbit_decomposition(modulus);
        std::uint64_t total = 0, fixed = 0;
        for (const auto& o : orbits) {
            total += o.size;
            EXPECT_EQ(modulus % o.size, 0u);
            EXPECT_EQ(o.is_fixed, o.size == 1);
            fixed += o.is_fixed;
        }
        EXPECT_EQ(bell.at(modulus), total);
        // orbits of size > 1 have size divisible by a prime modulus
        if (is_prime(modulus)) {
            EXPECT_EQ(mod_u64(bell.at(modulus), modulus), fixed % modulus);
        }
    }
}

TEST(OrbitDecomposition, RespectsCap) {
    EXPECT_THROW(orbit_decomposition(5, 4), EnumerationCapError);
}

TEST(FixedPartitions, Examples) {
    EXPECT_EQ(fixed_partitions(PrimePower{2, 1}),
              (std::vector<SetPartition>{rgs({0, 0}), rgs({0, 1})}));
    EXPECT_EQ(fixed_partitions(PrimePower{2, 2}),
              (std::vector<SetPartition>{rgs({0, 0, 0, 0}), rgs({0, 1, 0, 1}), rgs({0, 1, 2, 3})}));
    EXPECT_EQ(fixed_partitions(PrimePower{3, 1}),
              (std::vector<SetPartition>{rgs({0, 0, 0}), rgs({0, 1, 2})}));
    EXPECT_THROW(fixed_partitions(PrimePower{13, 1}), EnumerationCapError);
}

TEST(FixedPartitions, AreTheCongruenceClassPartitions) {
    const auto bell = build_bell_binomial(12);
    for (const auto& pp : prime_powers_up_to(12)) {
        const auto fixed = fixed_partitions(pp);
        EXPECT_EQ(fixed.size(), pp.exponent() + 1u) << pp.value();
        EXPECT_EQ(fixed.size() % pp.prime(), mod_u64(bell.at(pp.value()), pp.prime()));

        std::set<SetPartition> expected;
        for (std::uint32_t j = 0; j <= pp.exponent(); ++j) expected.insert(congruence_class_partition(pp, j));
        EXPECT_EQ(std::set<SetPartition>(fixed.begin(), fixed.end()), expected) << pp.value();

        for (const auto& f : fixed) {
            const auto sizes = f.block_sizes();
            EXPECT_TRUE(std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s == sizes[0]; }))
                << f.to_string();
        }
    }
}

TEST(CongruenceClassPartition, Examples) {
    const PrimePower four{2, 2};
    EXPECT_EQ(congruence_class_partition(four, 0), rgs({0, 1, 2, 3}));
    EXPECT_EQ(congruence_class_partition(four, 2), rgs({0, 0, 0, 0}));
    EXPECT_EQ(congruence_class_partition(four, 1), SetPartition::from_blocks(4, {{0, 2}, {1, 3}}));
    EXPECT_THROW(congruence_class_partition(four, 3), UsageError);

    const PrimePower p27{3, 3};
    for (std::uint32_t j = 0; j <= 3; ++j) {
        const auto c = congruence_class_partition(p27, j);
        std::size_t block = 1;
        for (std::uint32_t i = 0; i < j; ++i) block *= 3;
        EXPECT_EQ(c.block_count(), 27u / block);
        for (auto s : c.block_sizes()) EXPECT_EQ(s, block);
        EXPECT_TRUE(is_translation_fixed(c));
    }
}

}  // namespace
}  // namespace touchard
