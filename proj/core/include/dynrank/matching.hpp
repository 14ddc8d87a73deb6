#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "dynrank/good_basis.hpp"
#include "dynrank/modp.hpp"
#include "dynrank/parallel.hpp"
#include "dynrank/reach.hpp"

namespace dynrank {

/// Random edge weights for one trial: one positive weight per slot
/// {i, j}, i < j, drawn uniformly from [1, 4 * slots].
class WeightAssignment {
public:
    WeightAssignment() = default;
    WeightAssignment(std::size_t nodes, std::vector<std::uint32_t> weights);

    std::uint32_t operator()(std::size_t i, std::size_t j) const;
    std::size_t nodes() const noexcept { return nodes_; }
    std::span<const std::uint32_t> values() const noexcept { return weights_; }
    static std::size_t slot_count(std::size_t nodes) noexcept { return nodes * (nodes - (nodes > 0)) / 2; }
    static std::uint32_t max_weight(std::size_t nodes) noexcept {
        return static_cast<std::uint32_t>(4 * slot_count(nodes));
    }

private:
    std::size_t slot(std::size_t i, std::size_t j) const noexcept;

    std::size_t nodes_ = 0;
    std::vector<std::uint32_t> weights_;
};

/// Draws `trials` independent weight assignments from a seeded generator.
std::vector<WeightAssignment> draw_weights(std::size_t nodes, std::size_t trials, std::uint64_t seed);

/// Randomized dynamic maximum matching.
///
/// For each trial w, maintains the rank of the weighted Tutte matrix
/// B_{G,w}: entry (i, j) = 2^{w(i,j)} and (j, i) = -2^{w(i,j)} for each
/// edge {i, j}, i < j. Entries are kept modulo every prime of a product
/// bound sized for n! * (2^{W})^n (prime 2 is skipped: all entries are even).
///
/// rank(B_{G,w}) <= rank(T_G) = 2 * maxmatch always; equality holds when w
/// isolates a minimum-weight maximum matching, which a random w does with
/// probability >= 3/4. The reported size is the best over trials, so it
/// never overestimates and underestimates with probability <= 4^-trials.
/// Weights are fixed at construction.
class MatchingTracker {
public:
    MatchingTracker(std::size_t nodes, std::size_t trials, std::uint64_t seed,
                    Execution exec = Execution::Sequential);
    MatchingTracker(std::size_t nodes, std::vector<WeightAssignment> weights,
                    Execution exec = Execution::Sequential);

    /// Throws std::invalid_argument for self-loops, std::out_of_range for
    /// bad nodes. Duplicates are no-ops.
    void insert_edge(std::size_t i, std::size_t j);
    /// Absent edges are no-ops.
    void delete_edge(std::size_t i, std::size_t j);

    /// Throws InvariantError if a trial's rank is odd.
    std::size_t max_matching_size() const;
    bool has_perfect_matching() const;

    /// Integer rank of B_{G,w} for every trial (max over primes).
    std::vector<std::size_t> trial_ranks() const;

    std::size_t nodes() const noexcept { return nodes_; }
    std::size_t trials() const noexcept { return weights_.size(); }
    const std::vector<WeightAssignment>& weights() const noexcept { return weights_; }
    const std::vector<Prime>& primes() const noexcept { return primes_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }

    struct Structure {
        std::size_t trial;
        GoodBasis state;
    };
    /// All (trial, prime) structures, trial-major.
    const std::vector<Structure>& structures() const noexcept { return structures_; }

    /// bit_bound = n * W + n * ceil(log2 n) + 1, W the largest weight.
    static unsigned bit_bound(std::size_t nodes);

private:
    void check(std::size_t i, std::size_t j) const;
    void write(std::size_t i, std::size_t j, bool present);

    std::size_t nodes_;
    Execution exec_;
    std::vector<WeightAssignment> weights_;
    std::vector<Prime> primes_;
    std::set<Edge> edges_;
    std::vector<Structure> structures_;
};

}  // namespace dynrank
