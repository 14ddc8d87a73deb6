#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dynrank/good_basis.hpp"
#include "dynrank/oracle.hpp"

namespace dynrank::testing {

/// A 5x5 worked example over Z_2: the first three columns of B lie in
/// ker(A) and the last two are unique at rows 4 and 5 (0-based: 3 and 4).
inline GoodBasis worked_example_state() {
    // clang-format off
    const std::vector<std::uint64_t> a = {
        0, 1, 0, 1, 0,
        0, 1, 0, 1, 0,
        0, 1, 0, 1, 0,
        1, 0, 0, 1, 0,
        1, 1, 0, 0, 0,
    };
    // B printed row by row; stored column-major below.
    const std::uint64_t b_rows[5][5] = {
        {0, 1, 0, 0, 0},
        {0, 1, 0, 0, 1},
        {1, 0, 0, 0, 0},
        {0, 1, 0, 1, 0},
        {0, 0, 1, 0, 0},
    };
    // clang-format on
    std::vector<std::uint64_t> b(25);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) b[c * 5 + r] = b_rows[r][c];
    return GoodBasis::from_matrix_and_basis(5, 5, Prime(2), a, b);
}

/// Dense residue copy of the state's matrix for the elimination oracle.
inline std::size_t oracle_rank(const GoodBasis& s) {
    return oracle::gaussian_rank_mod_p(s.rows(), s.cols(), s.matrix(), s.prime());
}

/// Random entry value biased towards zero so rank moves up and down.
inline std::int64_t random_entry(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) return 0;
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    return d(rng);
}

}  // namespace dynrank::testing
