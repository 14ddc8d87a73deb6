#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dynrank/reach.hpp"

namespace dynrank {

struct Literal {
    std::size_t var;  // 0-based
    bool negated = false;

    Literal operator!() const { return {var, !negated}; }
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// A two-literal clause; (a, b) and (b, a) are the same clause.
struct Clause {
    Literal first;
    Literal second;

    Clause(Literal a, Literal b) : first(std::min(a, b)), second(std::max(a, b)) {}
    friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// Dynamic 2-SAT over a fixed set of variables.
///
/// Clause (L or L') contributes implication edges !L -> L' and !L' -> L on
/// the 2n literal nodes (x -> x, !x -> n + x). Edges are refcounted since
/// different clauses can induce the same implication; reach trackers only
/// see 0 <-> 1 transitions. The formula is unsatisfiable iff some x has
/// both x ->* !x and !x ->* x, so every variable owns two trackers.
class TwoSatTracker {
public:
    explicit TwoSatTracker(std::size_t variables, PrimeMode mode = PrimeMode::ProductBound,
                           Execution exec = Execution::Sequential);

    /// Adding a present clause is a no-op. Throws std::out_of_range for
    /// unknown variables.
    void add_clause(Literal a, Literal b);
    /// Removing an absent clause is a no-op.
    void remove_clause(Literal a, Literal b);

    bool satisfiable() const;

    std::size_t variables() const noexcept { return variables_; }
    std::size_t node_of(Literal l) const noexcept { return l.negated ? variables_ + l.var : l.var; }
    const std::set<Clause>& clauses() const noexcept { return clauses_; }
    const std::map<Edge, std::size_t>& implication_edges() const noexcept { return edge_refs_; }
    /// Trackers in order (x0 -> !x0), (!x0 -> x0), (x1 -> !x1), ...
    const std::vector<ReachTracker>& trackers() const noexcept { return trackers_; }

    /// The implication edges of one clause, deduplicated.
    std::vector<Edge> implications(const Clause& c) const;

private:
    void check(Literal l) const;
    void bump(const Edge& e);
    void drop(const Edge& e);

    std::size_t variables_;
    Execution exec_;
    std::set<Clause> clauses_;
    std::map<Edge, std::size_t> edge_refs_;
    std::vector<ReachTracker> trackers_;
};

}  // namespace dynrank
