#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "dynrank/matching.hpp"
#include "dynrank/nfa.hpp"
#include "dynrank/rpq.hpp"
#include "dynrank/two_sat.hpp"

/// Naive reference implementations. Nothing in here calls into the
/// incremental code paths; the types are shared, the arithmetic is not.
namespace dynrank::oracle {

struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> values;  // row-major

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0) {}

    std::int64_t& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Row-echelon pivot count over Z_p.
std::size_t gaussian_rank_mod_p(const DenseMatrix& m, std::uint64_t p);
/// Same, for a row-major matrix of residues already in [0, p).
std::size_t gaussian_rank_mod_p(std::size_t rows, std::size_t cols, std::span<const std::uint64_t> residues,
                                std::uint64_t p);

/// Rank over Q by fraction-free (Bareiss) elimination. Throws
/// std::overflow_error if an intermediate leaves the int64 range; fine for
/// n <= 12 with |entries| <= 16.
std::size_t gaussian_rank_exact(const DenseMatrix& m);

/// Reflexive: true when s == t.
bool bfs_reach(std::size_t nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges, std::size_t s,
               std::size_t t);

/// Satisfiability by strongly connected components of the implication graph.
bool two_sat_scc(std::size_t variables, std::span<const Clause> clauses);
/// Satisfiability by trying every assignment (variables <= 20).
bool two_sat_truth_table(std::size_t variables, std::span<const Clause> clauses);

/// Maximum matching size by a dynamic program over vertex subsets (n <= 20).
std::size_t max_matching_exhaustive(std::size_t nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges);

/// Does w give the graph a unique minimum-weight maximum matching?
bool is_isolated(std::size_t nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges,
                 const WeightAssignment& w);

/// Explicitly builds the product graph V x Q and searches it from
/// (s, q0); true if any (t, f), f accepting, is reached.
bool rpq_product_bfs(std::size_t nodes, const std::set<LabeledEdge>& edges, const Nfa& nfa, std::size_t s,
                     std::size_t t);

}  // namespace dynrank::oracle
