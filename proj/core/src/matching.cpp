#include "dynrank/matching.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "dynrank/errors.hpp"

namespace dynrank {

WeightAssignment::WeightAssignment(std::size_t nodes, std::vector<std::uint32_t> weights)
    : nodes_(nodes), weights_(std::move(weights)) {
    if (weights_.size() != slot_count(nodes)) throw std::invalid_argument("WeightAssignment: wrong slot count");
    const std::uint32_t hi = max_weight(nodes);
    for (std::uint32_t w : weights_) {
        if (w < 1 || w > hi) throw std::invalid_argument("WeightAssignment: weight out of range");
    }
}

std::size_t WeightAssignment::slot(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    // Row-major over the strict upper triangle.
    return i * (2 * nodes_ - i - 1) / 2 + (j - i - 1);
}

std::uint32_t WeightAssignment::operator()(std::size_t i, std::size_t j) const {
    if (i == j || i >= nodes_ || j >= nodes_) throw std::out_of_range("WeightAssignment: bad slot");
    return weights_[slot(i, j)];
}

std::vector<WeightAssignment> draw_weights(std::size_t nodes, std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t slots = WeightAssignment::slot_count(nodes);
    std::uniform_int_distribution<std::uint32_t> dist(1, std::max<std::uint32_t>(1, WeightAssignment::max_weight(nodes)));
    std::vector<WeightAssignment> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> w(slots);
        for (auto& x : w) x = dist(rng);
        out.emplace_back(nodes, std::move(w));
    }
    return out;
}

unsigned MatchingTracker::bit_bound(std::size_t nodes) {
    unsigned log_n = 0;
    while ((std::size_t{1} << log_n) < nodes) ++log_n;
    return static_cast<unsigned>(nodes * WeightAssignment::max_weight(nodes) + nodes * log_n + 1);
}

MatchingTracker::MatchingTracker(std::size_t nodes, std::size_t trials, std::uint64_t seed, Execution exec)
    : MatchingTracker(nodes, draw_weights(nodes, trials, seed), exec) {}

MatchingTracker::MatchingTracker(std::size_t nodes, std::vector<WeightAssignment> weights, Execution exec)
    : nodes_(nodes), exec_(exec), weights_(std::move(weights)), primes_(primes_exceeding_bits(bit_bound(nodes), 3)) {
    if (nodes == 0) throw std::invalid_argument("MatchingTracker: need at least one node");
    if (weights_.empty()) throw std::invalid_argument("MatchingTracker: need at least one trial");
    for (const auto& w : weights_) {
        if (w.nodes() != nodes) throw std::invalid_argument("MatchingTracker: weight table has wrong size");
    }
    structures_.reserve(weights_.size() * primes_.size());
    for (std::size_t t = 0; t < weights_.size(); ++t) {
        for (Prime p : primes_) structures_.push_back({t, GoodBasis(nodes, nodes, p)});
    }
}

void MatchingTracker::check(std::size_t i, std::size_t j) const {
    if (i >= nodes_ || j >= nodes_) throw std::out_of_range("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("self-loops excluded");
}

void MatchingTracker::write(std::size_t i, std::size_t j, bool present) {
    const std::size_t lo = std::min(i, j);
    const std::size_t hi = std::max(i, j);
    for_each_independent(exec_, structures_, [&](Structure& s) {
        const std::uint64_t p = s.state.prime();
        const std::uint64_t value = present ? pow_mod(2, weights_[s.trial](lo, hi), p) : 0;
        s.state.set_entry(lo, hi, value);
        s.state.set_entry(hi, lo, neg_mod(value, p));
    });
}

void MatchingTracker::insert_edge(std::size_t i, std::size_t j) {
    check(i, j);
    if (!edges_.emplace(std::min(i, j), std::max(i, j)).second) return;
    write(i, j, true);
}

void MatchingTracker::delete_edge(std::size_t i, std::size_t j) {
    check(i, j);
    if (edges_.erase({std::min(i, j), std::max(i, j)}) == 0) return;
    write(i, j, false);
}

std::vector<std::size_t> MatchingTracker::trial_ranks() const {
    std::vector<std::size_t> ranks(weights_.size(), 0);
    for (const Structure& s : structures_) ranks[s.trial] = std::max(ranks[s.trial], s.state.rank());
    return ranks;
}

std::size_t MatchingTracker::max_matching_size() const {
    std::size_t best = 0;
    const auto ranks = trial_ranks();
    for (std::size_t t = 0; t < ranks.size(); ++t) {
        if (ranks[t] % 2 != 0) {
            throw InvariantError("weighted Tutte matrix of trial " + std::to_string(t) + " has odd rank " +
                                 std::to_string(ranks[t]));
        }
        best = std::max(best, ranks[t] / 2);
    }
    return best;
}

bool MatchingTracker::has_perfect_matching() const {
    return nodes_ % 2 == 0 && max_matching_size() == nodes_ / 2;
}

}  // namespace dynrank
