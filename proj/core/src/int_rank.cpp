#include "dynrank/int_rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynrank {

IntRankTracker::IntRankTracker(std::size_t rows, std::size_t cols, std::uint64_t max_abs_entry,
                               PrimeMode mode, Execution exec)
    : rows_(rows),
      cols_(cols),
      max_abs_entry_(max_abs_entry),
      prime_set_(select_prime_set(rows, cols, max_abs_entry, mode)),
      exec_(exec),
      entries_(rows * cols, 0) {
    states_.reserve(prime_set_.primes.size());
    for (Prime p : prime_set_.primes) states_.emplace_back(rows, cols, p);
}

void IntRankTracker::set_entry(std::size_t row, std::size_t col, std::int64_t value) {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("IntRankTracker::set_entry: index out of range");
    const std::uint64_t magnitude =
        value < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(value) : static_cast<std::uint64_t>(value);
    if (magnitude > max_abs_entry_) throw std::invalid_argument("entry exceeds declared bound");
    std::int64_t& slot = entries_[row * cols_ + col];
    if (slot == value) return;
    slot = value;
    ++entry_changes_;
    for_each_independent(exec_, states_, [&](GoodBasis& state) {
        state.set_entry(row, col, reduce_signed(value, state.prime()));
    });
}

std::size_t IntRankTracker::rank() const noexcept {
    std::size_t best = 0;
    for (const GoodBasis& s : states_) best = std::max(best, s.rank());
    return best;
}

std::vector<std::size_t> IntRankTracker::per_prime_ranks() const {
    std::vector<std::size_t> out;
    out.reserve(states_.size());
    for (const GoodBasis& s : states_) out.push_back(s.rank());
    return out;
}

}  // namespace dynrank
