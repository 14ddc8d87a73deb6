#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dynrank/modp.hpp"
#include "dynrank/oracle.hpp"

namespace dynrank {
namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

TEST(Sieve, SmallLimits) {
    EXPECT_EQ(sieve_primes(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
    EXPECT_EQ(sieve_primes(2), (std::vector<std::uint64_t>{2}));
    EXPECT_TRUE(sieve_primes(1).empty());
    EXPECT_TRUE(sieve_primes(0).empty());
}

TEST(Sieve, MatchesTrialDivisionUpTo1000) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 0; n <= 1000; ++n)
        if (trial_division_prime(n)) expected.push_back(n);
    ASSERT_EQ(expected.size(), 168u);
    EXPECT_EQ(sieve_primes(1000), expected);
}

TEST(PrimeType, RejectsComposites) {
    EXPECT_NO_THROW(Prime(13));
    EXPECT_THROW(Prime(1), std::invalid_argument);
    EXPECT_THROW(Prime(91), std::invalid_argument);
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(1, 7), 1u);
    EXPECT_EQ(mod_inverse(3, 7), 5u);
    EXPECT_THROW(mod_inverse(0, 7), std::domain_error);
    EXPECT_THROW(mod_inverse(14, 7), std::domain_error);
}

TEST(ModInverse, ExhaustiveForPrimesUpTo1000) {
    for (std::uint64_t p : sieve_primes(1000)) {
        for (std::uint64_t a = 1; a < p; ++a) {
            ASSERT_EQ(mul_mod(a, mod_inverse(a, p), p), 1u) << "a=" << a << " p=" << p;
        }
    }
}

TEST(ModArithmetic, LargeModulusUsesWideProducts) {
    const std::uint64_t p = 2305843009213693951ULL;  // 2^61 - 1
    const std::uint64_t a = p - 2, b = p - 3;
    EXPECT_EQ(mul_mod(a, b, p), 6u);
    EXPECT_EQ(mul_mod(a, mod_inverse(a, p), p), 1u);
    EXPECT_EQ(reduce_signed(-1, p), p - 1);
    EXPECT_EQ(reduce_signed(-14, 7), 0u);
    EXPECT_EQ(reduce_signed(-15, 7), 6u);
    EXPECT_EQ(pow_mod(2, 10, 1000003), 1024u);
}

TEST(SelectPrimeSet, ProductBoundFourByFour) {
    // det bound 4! * 4^4 = 6144; bit bound ceil(log2 24) + 4*2 + 1 = 14.
    const PrimeSet set = select_prime_set(4, 4, 4, PrimeMode::ProductBound);
    EXPECT_EQ(set.bit_bound, 14u);
    std::vector<std::uint64_t> got(set.primes.begin(), set.primes.end());
    EXPECT_EQ(got, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}));
    // Direct check: 2310 < 2^14 < 30030, and 2 * 6144 <= 2^14.
    EXPECT_LT(2u * 3 * 5 * 7 * 11, 1u << 14);
    EXPECT_GT(2u * 3 * 5 * 7 * 11 * 13, 1u << 14);
    EXPECT_LE(2u * 6144, 1u << 14);
}

TEST(SelectPrimeSet, SingleEntryNeedsAnOddPrime) {
    const PrimeSet set = select_prime_set(1, 1, 1, PrimeMode::ProductBound);
    bool has_odd = false;
    for (Prime p : set.primes) has_odd |= p.value() >= 3;
    EXPECT_TRUE(has_odd);
}

TEST(SelectPrimeSet, CubeBoundCube) {
    const PrimeSet set = select_prime_set(8, 8, 8, PrimeMode::CubeBound);
    EXPECT_EQ(set.primes.size(), sieve_primes(512).size());
    EXPECT_EQ(set.primes.back().value(), 509u);
    // Degenerate case is clamped so the set is never empty.
    EXPECT_FALSE(select_prime_set(1, 1, 1, PrimeMode::CubeBound).primes.empty());
}

TEST(SelectPrimeSet, ProductExceedsBoundInBothModes) {
    for (auto mode : {PrimeMode::ProductBound, PrimeMode::CubeBound}) {
        for (std::uint64_t k = 1; k <= 9; ++k) {
            for (std::uint64_t n_abs : {1, 2, 5, 8, 16}) {
                const PrimeSet set = select_prime_set(k, k + 2, n_abs, mode);
                long double bits = 0;
                for (std::size_t i = 0; i < set.primes.size(); ++i) {
                    if (i > 0) ASSERT_LT(set.primes[i - 1], set.primes[i]);
                    bits += std::log2(static_cast<long double>(set.primes[i].value()));
                }
                EXPECT_GT(bits, set.bit_bound) << "k=" << k << " N=" << n_abs;
            }
        }
    }
}

// Soundness: the best rank over the set equals the rational rank.
TEST(SelectPrimeSet, MaxModPRankEqualsRationalRank) {
    std::mt19937_64 rng(1234);
    for (auto mode : {PrimeMode::ProductBound, PrimeMode::CubeBound}) {
        for (int iter = 0; iter < 400; ++iter) {
            const std::size_t k = 1 + rng() % 5;
            const std::int64_t bound = 1 + static_cast<std::int64_t>(rng() % 8);
            const PrimeSet set = select_prime_set(k, k, static_cast<std::uint64_t>(bound), mode);
            oracle::DenseMatrix m(k, k);
            // Low-rank-ish instances: rows are combinations of a few base rows.
            std::uniform_int_distribution<std::int64_t> d(-bound, bound);
            for (auto& v : m.values) v = d(rng);
            if (k > 1 && rng() % 2 == 0) {
                for (std::size_t c = 0; c < k; ++c) m.at(k - 1, c) = m.at(0, c);
            }
            const std::size_t exact = oracle::gaussian_rank_exact(m);
            std::size_t best = 0;
            for (Prime p : set.primes) best = std::max(best, oracle::gaussian_rank_mod_p(m, p));
            ASSERT_EQ(best, exact);
        }
    }
}

}  // namespace
}  // namespace dynrank
