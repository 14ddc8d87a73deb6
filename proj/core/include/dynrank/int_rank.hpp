#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dynrank/good_basis.hpp"
#include "dynrank/modp.hpp"
#include "dynrank/parallel.hpp"

namespace dynrank {

/// Rank over Q of a signed-integer matrix with entries bounded by
/// |a| <= max_abs_entry, maintained under single-entry changes.
///
/// Every change is reduced modulo each prime of a sound prime set and
/// forwarded to one GoodBasis per prime; the rational rank is the largest
/// of the per-prime ranks.
class IntRankTracker {
public:
    IntRankTracker(std::size_t rows, std::size_t cols, std::uint64_t max_abs_entry,
                   PrimeMode mode = PrimeMode::ProductBound, Execution exec = Execution::Sequential);

    /// Throws std::out_of_range for bad indices and std::invalid_argument
    /// ("entry exceeds declared bound") when |value| > max_abs_entry.
    void set_entry(std::size_t row, std::size_t col, std::int64_t value);

    std::size_t rank() const noexcept;
    std::vector<std::size_t> per_prime_ranks() const;

    std::int64_t entry(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t max_abs_entry() const noexcept { return max_abs_entry_; }
    const PrimeSet& prime_set() const noexcept { return prime_set_; }
    const std::vector<GoodBasis>& states() const noexcept { return states_; }

    /// Number of set_entry calls that changed the matrix.
    std::uint64_t entry_changes() const noexcept { return entry_changes_; }

    void set_execution(Execution exec) noexcept { exec_ = exec; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t max_abs_entry_;
    PrimeSet prime_set_;
    Execution exec_;
    std::vector<std::int64_t> entries_;
    std::vector<GoodBasis> states_;
    std::uint64_t entry_changes_ = 0;
};

}  // namespace dynrank
