#include "dynrank/two_sat.hpp"

#include <stdexcept>

namespace dynrank {

TwoSatTracker::TwoSatTracker(std::size_t variables, PrimeMode mode, Execution exec)
    : variables_(variables), exec_(exec) {
    if (variables == 0) throw std::invalid_argument("TwoSatTracker: need at least one variable");
    trackers_.reserve(2 * variables);
    for (std::size_t x = 0; x < variables; ++x) {
        trackers_.emplace_back(2 * variables, x, variables + x, mode);
        trackers_.emplace_back(2 * variables, variables + x, x, mode);
    }
}

void TwoSatTracker::check(Literal l) const {
    if (l.var >= variables_) throw std::out_of_range("literal variable out of range");
}

std::vector<Edge> TwoSatTracker::implications(const Clause& c) const {
    std::vector<Edge> out{{node_of(!c.first), node_of(c.second)}, {node_of(!c.second), node_of(c.first)}};
    if (out[0] == out[1]) out.pop_back();
    return out;
}

void TwoSatTracker::bump(const Edge& e) {
    if (edge_refs_[e]++ != 0 || e.first == e.second) return;
    for_each_independent(exec_, trackers_, [&](ReachTracker& t) { t.insert_edge(e.first, e.second); });
}

void TwoSatTracker::drop(const Edge& e) {
    auto it = edge_refs_.find(e);
    if (--it->second != 0) return;
    edge_refs_.erase(it);
    if (e.first == e.second) return;
    for_each_independent(exec_, trackers_, [&](ReachTracker& t) { t.delete_edge(e.first, e.second); });
}

void TwoSatTracker::add_clause(Literal a, Literal b) {
    check(a);
    check(b);
    const Clause c(a, b);
    if (!clauses_.insert(c).second) return;
    for (const Edge& e : implications(c)) bump(e);
}

void TwoSatTracker::remove_clause(Literal a, Literal b) {
    check(a);
    check(b);
    const Clause c(a, b);
    if (clauses_.erase(c) == 0) return;
    for (const Edge& e : implications(c)) drop(e);
}

bool TwoSatTracker::satisfiable() const {
    for (std::size_t x = 0; x < variables_; ++x) {
        if (trackers_[2 * x].reachable() && trackers_[2 * x + 1].reachable()) return false;
    }
    return true;
}

}  // namespace dynrank
