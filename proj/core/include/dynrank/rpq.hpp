#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dynrank/nfa.hpp"
#include "dynrank/reach.hpp"

namespace dynrank {

struct LabeledEdge {
    std::size_t from;
    std::string label;
    std::size_t to;
    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Dynamic regular path query: is there a path from s to t in a labeled
/// graph whose label word is accepted by a fixed NFA?
///
/// Reduces to reachability in the product graph on V x Q, where
/// (v, q) -> (v', q') whenever v -a-> v' is an edge and q -a-> q' a
/// transition. One reach tracker runs per accepting state f, for the pair
/// ((s, q0), (t, f)). Product edges are refcounted; a labeled-edge change
/// induces at most |delta| product-edge changes.
class RpqTracker {
public:
    RpqTracker(std::size_t nodes, std::size_t source, std::size_t target, Nfa nfa,
               PrimeMode mode = PrimeMode::ProductBound, Execution exec = Execution::Sequential);

    /// Throws std::out_of_range for bad nodes, std::invalid_argument for a
    /// label outside the alphabet. Duplicates are no-ops.
    void insert_edge(std::size_t from, const std::string& label, std::size_t to);
    /// Absent edges are no-ops.
    void delete_edge(std::size_t from, const std::string& label, std::size_t to);

    bool matches() const;

    std::size_t product_node(std::size_t node, std::size_t state) const noexcept {
        return node * nfa_.state_count + state;
    }
    std::size_t nodes() const noexcept { return nodes_; }
    const Nfa& nfa() const noexcept { return nfa_; }
    const std::set<LabeledEdge>& labeled_edges() const noexcept { return edges_; }
    const std::map<Edge, std::size_t>& product_edges() const noexcept { return product_refs_; }
    const std::vector<ReachTracker>& trackers() const noexcept { return trackers_; }

    /// Product edges induced by one labeled edge (with multiplicity).
    std::vector<Edge> induced(const LabeledEdge& e) const;

private:
    void check(std::size_t from, const std::string& label, std::size_t to) const;

    std::size_t nodes_;
    Nfa nfa_;
    Execution exec_;
    std::set<LabeledEdge> edges_;
    std::map<Edge, std::size_t> product_refs_;
    std::vector<ReachTracker> trackers_;
};

}  // namespace dynrank
