#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "nilmult/abelian.hpp"

namespace {

using nilmult::all_partitions;
using nilmult::canonicalize;
using nilmult::CyclicDecomposition;
using nilmult::factorize;
using nilmult::for_each_partition;
using nilmult::InvariantFactorForm;
using nilmult::order_exponent;
using nilmult::parse_cyclic_decomposition;
using nilmult::parse_partition;
using nilmult::PGroupPartition;
using nilmult::primary_decompose;
using nilmult::PrimaryDecomposition;
using nilmult::recompose;

/// Independent partition counter: p(n, k) = partitions of n into parts <= k.
long long partition_count(long long n, long long k) {
    if (n == 0) return 1;
    if (k == 0) return 0;
    std::vector<std::vector<long long>> table(static_cast<std::size_t>(n) + 1,
                                              std::vector<long long>(static_cast<std::size_t>(k) + 1, 0));
    for (long long j = 0; j <= k; ++j) table[0][static_cast<std::size_t>(j)] = 1;
    for (long long m = 1; m <= n; ++m)
        for (long long j = 1; j <= k; ++j) {
            long long value = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)];
            if (m >= j) value += table[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(j)];
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = value;
        }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

TEST(Factorize, SmallValues) {
    EXPECT_EQ(factorize(1), (nilmult::FactoredOrder{}));
    EXPECT_EQ(factorize(12), (nilmult::FactoredOrder{{2, 2}, {3, 1}}));
    EXPECT_EQ(factorize(97), (nilmult::FactoredOrder{{97, 1}}));
    EXPECT_EQ(factorize(1024), (nilmult::FactoredOrder{{2, 10}}));
    EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Groups, ConstructorsValidate) {
    EXPECT_THROW(CyclicDecomposition({4, 1}), std::invalid_argument);
    EXPECT_THROW(InvariantFactorForm({2, 4}), std::invalid_argument);
    EXPECT_THROW(InvariantFactorForm({6, 4}), std::invalid_argument);
    EXPECT_THROW(PGroupPartition({1, 2}), std::invalid_argument);
    EXPECT_THROW(PGroupPartition({2, 0}), std::invalid_argument);
    EXPECT_NO_THROW(InvariantFactorForm({12, 2}));
    EXPECT_NO_THROW(PGroupPartition({3, 1, 1}));
}

TEST(Canonicalize, CoprimeCyclicsMerge) {
    EXPECT_EQ(canonicalize(CyclicDecomposition({2, 3})).factors(), (std::vector<long long>{6}));
}

TEST(Canonicalize, ChainIsAlreadyCanonical) {
    EXPECT_EQ(canonicalize(CyclicDecomposition({4, 2, 2})).factors(),
              (std::vector<long long>{4, 2, 2}));
}

TEST(Canonicalize, MixedOrdersRecombine) {
    EXPECT_EQ(canonicalize(CyclicDecomposition({6, 4})).factors(),
              (std::vector<long long>{12, 2}));
    EXPECT_EQ(canonicalize(CyclicDecomposition({4, 6})).factors(),
              (std::vector<long long>{12, 2}));
    EXPECT_EQ(canonicalize(CyclicDecomposition()).factors(), (std::vector<long long>{}));
}

TEST(Canonicalize, Idempotent) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> order_dist(2, 60);
    std::uniform_int_distribution<int> length_dist(0, 5);
    for (int iteration = 0; iteration < 500; ++iteration) {
        std::vector<long long> orders;
        const int length = length_dist(rng);
        for (int i = 0; i < length; ++i) orders.push_back(order_dist(rng));
        const InvariantFactorForm once = canonicalize(CyclicDecomposition(orders));
        const InvariantFactorForm twice = canonicalize(CyclicDecomposition(once.factors()));
        EXPECT_EQ(once, twice);
    }
}

TEST(Canonicalize, PreservesPrimaryData) {
    std::mt19937 rng(11111);
    std::uniform_int_distribution<long long> order_dist(2, 48);
    std::uniform_int_distribution<int> length_dist(1, 5);
    for (int iteration = 0; iteration < 500; ++iteration) {
        std::vector<long long> orders;
        const int length = length_dist(rng);
        for (int i = 0; i < length; ++i) orders.push_back(order_dist(rng));
        const CyclicDecomposition group(orders);
        EXPECT_EQ(primary_decompose(group), primary_decompose(canonicalize(group)));
    }
}

TEST(PrimaryDecompose, Examples) {
    const PrimaryDecomposition twelve_two = primary_decompose(InvariantFactorForm({12, 2}));
    ASSERT_EQ(twelve_two.size(), 2u);
    EXPECT_EQ(twelve_two.at(2).parts(), (std::vector<long long>{2, 1}));
    EXPECT_EQ(twelve_two.at(3).parts(), (std::vector<long long>{1}));

    const PrimaryDecomposition two_power = primary_decompose(InvariantFactorForm({8, 2, 2}));
    ASSERT_EQ(two_power.size(), 1u);
    EXPECT_EQ(two_power.at(2).parts(), (std::vector<long long>{3, 1, 1}));

    const PrimaryDecomposition six = primary_decompose(InvariantFactorForm({6}));
    ASSERT_EQ(six.size(), 2u);
    EXPECT_EQ(six.at(2).parts(), (std::vector<long long>{1}));
    EXPECT_EQ(six.at(3).parts(), (std::vector<long long>{1}));
}

TEST(Recompose, Examples) {
    PrimaryDecomposition data;
    data.emplace(2, PGroupPartition({2, 1}));
    data.emplace(3, PGroupPartition({1}));
    EXPECT_EQ(recompose(data).factors(), (std::vector<long long>{12, 2}));

    EXPECT_EQ(recompose(PrimaryDecomposition{}).factors(), (std::vector<long long>{}));

    PrimaryDecomposition fives;
    fives.emplace(5, PGroupPartition({1, 1, 1}));
    EXPECT_EQ(recompose(fives).factors(), (std::vector<long long>{5, 5, 5}));
}

TEST(Recompose, InvertsPrimaryDecompose) {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> order_dist(2, 100);
    std::uniform_int_distribution<int> length_dist(0, 4);
    for (int iteration = 0; iteration < 500; ++iteration) {
        std::vector<long long> orders;
        const int length = length_dist(rng);
        for (int i = 0; i < length; ++i) orders.push_back(order_dist(rng));
        const InvariantFactorForm form = canonicalize(CyclicDecomposition(orders));
        EXPECT_EQ(recompose(primary_decompose(form)), form);
    }
}

TEST(Partitions, OfFour) {
    const std::vector<PGroupPartition> expected = {
        PGroupPartition({4}), PGroupPartition({3, 1}), PGroupPartition({2, 2}),
        PGroupPartition({2, 1, 1}), PGroupPartition({1, 1, 1, 1})};
    EXPECT_EQ(all_partitions(4), expected);
}

TEST(Partitions, OfZero) {
    const std::vector<PGroupPartition> stream = all_partitions(0);
    ASSERT_EQ(stream.size(), 1u);
    EXPECT_TRUE(stream[0].parts().empty());
}

TEST(Partitions, CountsMatchIndependentRecurrence) {
    for (long long n = 0; n <= 30; ++n)
        EXPECT_EQ(static_cast<long long>(all_partitions(n).size()), partition_count(n, n))
            << "n = " << n;
    EXPECT_EQ(partition_count(10, 10), 42);
    EXPECT_EQ(static_cast<long long>(all_partitions(10).size()), 42);
}

TEST(Partitions, LargeCountAgainstRecurrence) {
    long long streamed = 0;
    for_each_partition(60, [&](const PGroupPartition&) { ++streamed; });
    EXPECT_EQ(streamed, 966467);
    EXPECT_EQ(partition_count(60, 60), 966467);
}

TEST(Partitions, AllDistinctWeaklyDecreasingAndSumToN) {
    for (long long n = 1; n <= 20; ++n) {
        const std::vector<PGroupPartition> stream = all_partitions(n);
        for (std::size_t i = 0; i < stream.size(); ++i) {
            EXPECT_EQ(order_exponent(stream[i]), n);
            EXPECT_TRUE(std::is_sorted(stream[i].parts().begin(), stream[i].parts().end(),
                                       std::greater<>()));
            if (i + 1 < stream.size()) EXPECT_TRUE(stream[i] != stream[i + 1]);
        }
        auto sorted = stream;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST(OrderExponent, Examples) {
    EXPECT_EQ(order_exponent(PGroupPartition({3, 1, 1})), 5);
    EXPECT_EQ(order_exponent(PGroupPartition()), 0);
    for (long long n = 1; n <= 12; ++n)
        for (long long t = 0; t <= n - 1; ++t) {
            std::vector<long long> parts{t + 1};
            for (long long i = 0; i < n - t - 1; ++i) parts.push_back(1);
            EXPECT_EQ(order_exponent(PGroupPartition(parts)), n);
        }
}

TEST(Parsing, CyclicDecompositions) {
    EXPECT_EQ(parse_cyclic_decomposition("4,2,2").orders(), (std::vector<long long>{4, 2, 2}));
    EXPECT_EQ(parse_cyclic_decomposition("12").orders(), (std::vector<long long>{12}));
    EXPECT_EQ(parse_cyclic_decomposition("6, 4").orders(), (std::vector<long long>{6, 4}));
    EXPECT_THROW(parse_cyclic_decomposition(""), std::invalid_argument);
    EXPECT_THROW(parse_cyclic_decomposition("4,,2"), std::invalid_argument);
    EXPECT_THROW(parse_cyclic_decomposition("4,x"), std::invalid_argument);
    EXPECT_THROW(parse_cyclic_decomposition("4,1"), std::invalid_argument);
}

TEST(Parsing, Partitions) {
    EXPECT_EQ(parse_partition("3,1,1").parts(), (std::vector<long long>{3, 1, 1}));
    EXPECT_EQ(parse_partition("p^3,p,p").parts(), (std::vector<long long>{3, 1, 1}));
    EXPECT_EQ(parse_partition("p").parts(), (std::vector<long long>{1}));
    EXPECT_EQ(parse_partition("p^2,p^2").parts(), (std::vector<long long>{2, 2}));
    EXPECT_THROW(parse_partition("1,3"), std::invalid_argument);
    EXPECT_THROW(parse_partition("p,p^3"), std::invalid_argument);
    EXPECT_THROW(parse_partition("q^2"), std::invalid_argument);
    EXPECT_THROW(parse_partition("p^"), std::invalid_argument);
    EXPECT_THROW(parse_partition("0"), std::invalid_argument);
    EXPECT_THROW(parse_partition(""), std::invalid_argument);
}

} // namespace
