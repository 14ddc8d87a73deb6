#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dynrank/int_rank.hpp"

namespace dynrank {

using Edge = std::pair<std::size_t, std::size_t>;

/// Dynamic s-t reachability in a directed graph on n nodes.
///
/// Maintains the rank of the (n+1) x (n+1) integer matrix
///
///     [ nI - A   e_t ]
///     [ e_s^T     0  ]
///
/// where A is the adjacency matrix. nI - A is strictly diagonally dominant,
/// so the top-left block has rank n; the whole matrix reaches rank n+1
/// exactly when (nI - A)^{-1} has a nonzero (s, t) entry, i.e. when the
/// Neumann series sum_k (A/n)^k has a path contribution from s to t.
/// Every edge change is one entry change of that matrix.
///
/// Semantics are reflexive: a node always reaches itself.
class ReachTracker {
public:
    ReachTracker(std::size_t nodes, std::size_t source, std::size_t target,
                 PrimeMode mode = PrimeMode::ProductBound, Execution exec = Execution::Sequential);

    /// Throws std::invalid_argument for self-loops, std::out_of_range for
    /// bad nodes. Inserting a present edge is a no-op.
    void insert_edge(std::size_t from, std::size_t to);
    /// Deleting an absent edge is a no-op.
    void delete_edge(std::size_t from, std::size_t to);

    /// Throws InvariantError if the maintained rank is outside {n, n+1}.
    bool reachable() const;

    std::size_t nodes() const noexcept { return nodes_; }
    std::size_t source() const noexcept { return source_; }
    std::size_t target() const noexcept { return target_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }
    const IntRankTracker& matrix() const noexcept { return matrix_; }
    void set_execution(Execution exec) noexcept { matrix_.set_execution(exec); }

private:
    void check_edge(std::size_t from, std::size_t to) const;

    std::size_t nodes_;
    std::size_t source_;
    std::size_t target_;
    std::set<Edge> edges_;
    IntRankTracker matrix_;
};

/// Reachability for a set of (s, t) pairs sharing one edge set; each edge
/// change is fanned out to every pair tracker.
class AllPairsReach {
public:
    /// Tracks all n^2 ordered pairs.
    explicit AllPairsReach(std::size_t nodes, PrimeMode mode = PrimeMode::ProductBound,
                           Execution exec = Execution::Sequential);
    /// Tracks only the listed pairs.
    AllPairsReach(std::size_t nodes, const std::vector<Edge>& pairs, PrimeMode mode = PrimeMode::ProductBound,
                  Execution exec = Execution::Sequential);

    void insert_edge(std::size_t from, std::size_t to);
    void delete_edge(std::size_t from, std::size_t to);

    /// Throws std::out_of_range if the pair is not tracked.
    bool reachable(std::size_t source, std::size_t target) const;

    std::size_t nodes() const noexcept { return nodes_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }
    const std::vector<ReachTracker>& trackers() const noexcept { return trackers_; }

private:
    std::size_t nodes_;
    Execution exec_;
    std::set<Edge> edges_;
    std::vector<ReachTracker> trackers_;
    std::map<Edge, std::size_t> index_;
};

}  // namespace dynrank
