#include <gtest/gtest.h>

#include <random>

#include "dynrank/matching.hpp"
#include "dynrank/oracle.hpp"

namespace dynrank {
namespace {

TEST(Weights, SeededAndInRange) {
    const auto a = draw_weights(4, 8, 7);
    const auto b = draw_weights(4, 8, 7);
    ASSERT_EQ(a.size(), 8u);
    for (std::size_t t = 0; t < 8; ++t) {
        EXPECT_TRUE(std::ranges::equal(a[t].values(), b[t].values()));
        EXPECT_EQ(a[t].values().size(), 6u);
        for (std::uint32_t w : a[t].values()) {
            EXPECT_GE(w, 1u);
            EXPECT_LE(w, 24u);
        }
    }
    EXPECT_FALSE(std::ranges::equal(draw_weights(4, 1, 8)[0].values(), a[0].values()));
}

TEST(Weights, SlotsAreSymmetric) {
    const WeightAssignment w(4, {1, 2, 3, 4, 5, 6});
    EXPECT_EQ(w(0, 1), 1u);
    EXPECT_EQ(w(1, 0), 1u);
    EXPECT_EQ(w(0, 3), 3u);
    EXPECT_EQ(w(1, 2), 4u);
    EXPECT_EQ(w(2, 3), 6u);
    EXPECT_THROW(WeightAssignment(4, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(WeightAssignment(4, {1, 2, 3, 4, 5, 25}), std::invalid_argument);
}

TEST(MatchingTracker, PrimeSetSkipsTwoAndCoversBound) {
    const MatchingTracker t(6, 1, 1);
    ASSERT_FALSE(t.primes().empty());
    EXPECT_EQ(t.primes().front().value(), 3u);
    long double bits = 0;
    for (Prime p : t.primes()) bits += std::log2(static_cast<long double>(p.value()));
    // 6 * 60 + 6 * 3 + 1
    EXPECT_EQ(MatchingTracker::bit_bound(6), 379u);
    EXPECT_GT(bits, 379.0L);
}

TEST(MatchingTracker, SmallGraphs) {
    MatchingTracker empty(2, 1, 42);
    EXPECT_EQ(empty.max_matching_size(), 0u);

    MatchingTracker edge(2, 4, 1);
    edge.insert_edge(0, 1);
    EXPECT_EQ(edge.max_matching_size(), 1u);
    EXPECT_TRUE(edge.has_perfect_matching());

    MatchingTracker triangle(3, 4, 1);
    triangle.insert_edge(0, 1);
    triangle.insert_edge(1, 2);
    triangle.insert_edge(0, 2);
    EXPECT_EQ(triangle.max_matching_size(), 1u);
    EXPECT_FALSE(triangle.has_perfect_matching());

    MatchingTracker two(4, 4, 1);
    two.insert_edge(0, 1);
    two.insert_edge(2, 3);
    EXPECT_EQ(two.max_matching_size(), 2u);

    MatchingTracker path(4, 8, 3);
    path.insert_edge(0, 1);
    path.insert_edge(1, 2);
    path.insert_edge(2, 3);
    EXPECT_TRUE(path.has_perfect_matching());

    MatchingTracker k4(4, 8, 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) k4.insert_edge(i, j);
    EXPECT_TRUE(k4.has_perfect_matching());
    EXPECT_EQ(oracle::max_matching_exhaustive(4, k4.edges()), 2u);
}

TEST(MatchingTracker, MatrixEntriesAreSignedPowersOfTwo) {
    MatchingTracker t(4, 2, 9);
    t.insert_edge(3, 1);
    for (const auto& s : t.structures()) {
        const std::uint64_t p = s.state.prime();
        const std::uint64_t expected = pow_mod(2, t.weights()[s.trial](1, 3), p);
        EXPECT_EQ(s.state.entry(1, 3), expected);
        EXPECT_EQ(s.state.entry(3, 1), p - expected);
    }
    t.delete_edge(1, 3);
    for (const auto& s : t.structures()) {
        EXPECT_EQ(s.state.entry(1, 3), 0u);
        EXPECT_EQ(s.state.entry(3, 1), 0u);
    }
}

TEST(MatchingTracker, EachEdgeChangeIsTwoEntryChanges) {
    MatchingTracker t(5, 3, 4);
    std::mt19937_64 rng(4);
    for (int step = 0; step < 40; ++step) {
        std::vector<std::uint64_t> before;
        for (const auto& s : t.structures()) before.push_back(s.state.stats().updates);
        const std::size_t i = rng() % 5, j = (i + 1 + rng() % 4) % 5;
        const bool present = t.edges().contains({std::min(i, j), std::max(i, j)});
        if (present) {
            t.delete_edge(i, j);
        } else {
            t.insert_edge(i, j);
        }
        for (std::size_t k = 0; k < t.structures().size(); ++k) {
            ASSERT_EQ(t.structures()[k].state.stats().updates - before[k], 2u);
        }
    }
}

TEST(MatchingTracker, ErrorsAndNoOps) {
    MatchingTracker t(3, 1, 1);
    EXPECT_THROW(t.insert_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(t.insert_edge(0, 3), std::out_of_range);
    EXPECT_THROW(MatchingTracker(3, 0, 1), std::invalid_argument);
    t.insert_edge(0, 2);
    t.insert_edge(2, 0);
    t.delete_edge(0, 1);
    EXPECT_EQ(t.edges().size(), 1u);
}

TEST(MatchingTracker, NeverOverestimatesAndIsExactWithEnoughTrials) {
    std::mt19937_64 rng(2024);
    const std::size_t n = 7;
    MatchingTracker t(n, 12, 99);
    for (int step = 0; step < 150; ++step) {
        const std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
        if (t.edges().contains({std::min(i, j), std::max(i, j)})) {
            t.delete_edge(i, j);
        } else {
            t.insert_edge(i, j);
        }
        const std::size_t truth = oracle::max_matching_exhaustive(n, t.edges());
        for (std::size_t r : t.trial_ranks()) {
            ASSERT_EQ(r % 2, 0u);
            ASSERT_LE(r, 2 * truth);
        }
        ASSERT_EQ(t.max_matching_size(), truth);
    }
}

// Isolation is sufficient, not necessary: on C4 the Pfaffian is
// 2^(w01+w23) + 2^(w03+w12), which cannot cancel even when the two perfect
// matchings tie.
TEST(MatchingTracker, TiedWeightsOnFourCycle) {
    // slots: 01 02 03 12 13 23
    const WeightAssignment tie(4, {1, 5, 1, 1, 5, 1});
    const std::set<std::pair<std::size_t, std::size_t>> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    EXPECT_FALSE(oracle::is_isolated(4, c4, tie));
    MatchingTracker t(4, std::vector<WeightAssignment>{tie});
    for (const auto& [i, j] : c4) t.insert_edge(i, j);
    EXPECT_EQ(t.max_matching_size(), 2u);
}

TEST(MatchingTracker, ParallelMatchesSequential) {
    std::mt19937_64 rng(5);
    MatchingTracker a(6, 4, 17, Execution::Sequential);
    MatchingTracker b(6, 4, 17, Execution::Parallel);
    for (int step = 0; step < 60; ++step) {
        const std::size_t i = rng() % 6, j = (i + 1 + rng() % 5) % 6;
        if (a.edges().contains({std::min(i, j), std::max(i, j)})) {
            a.delete_edge(i, j);
            b.delete_edge(i, j);
        } else {
            a.insert_edge(i, j);
            b.insert_edge(i, j);
        }
        ASSERT_EQ(a.trial_ranks(), b.trial_ranks());
    }
    for (std::size_t k = 0; k < a.structures().size(); ++k) {
        EXPECT_EQ(a.structures()[k].state, b.structures()[k].state);
    }
}

}  // namespace
}  // namespace dynrank
