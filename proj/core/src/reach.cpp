#include "dynrank/reach.hpp"

#include <stdexcept>
#include <string>

#include "dynrank/errors.hpp"

namespace dynrank {

ReachTracker::ReachTracker(std::size_t nodes, std::size_t source, std::size_t target, PrimeMode mode,
                           Execution exec)
    : nodes_(nodes),
      source_(source),
      target_(target),
      matrix_(nodes == 0 ? 1 : nodes + 1, nodes == 0 ? 1 : nodes + 1, nodes == 0 ? 1 : nodes, mode, exec) {
    if (nodes == 0) throw std::invalid_argument("ReachTracker: need at least one node");
    if (source >= nodes || target >= nodes) throw std::out_of_range("ReachTracker: source/target out of range");
    const auto n = static_cast<std::int64_t>(nodes);
    for (std::size_t v = 0; v < nodes; ++v) matrix_.set_entry(v, v, n);
    matrix_.set_entry(nodes, source, 1);
    matrix_.set_entry(target, nodes, 1);
}

void ReachTracker::check_edge(std::size_t from, std::size_t to) const {
    if (from >= nodes_ || to >= nodes_) throw std::out_of_range("edge endpoint out of range");
    if (from == to) throw std::invalid_argument("self-loops excluded");
}

void ReachTracker::insert_edge(std::size_t from, std::size_t to) {
    check_edge(from, to);
    if (!edges_.emplace(from, to).second) return;
    matrix_.set_entry(from, to, -1);
}

void ReachTracker::delete_edge(std::size_t from, std::size_t to) {
    check_edge(from, to);
    if (edges_.erase({from, to}) == 0) return;
    matrix_.set_entry(from, to, 0);
}

bool ReachTracker::reachable() const {
    const std::size_t r = matrix_.rank();
    if (r == nodes_ + 1) return true;
    if (r == nodes_) return false;
    throw InvariantError("reachability matrix has rank " + std::to_string(r) + ", expected " +
                         std::to_string(nodes_) + " or " + std::to_string(nodes_ + 1));
}

AllPairsReach::AllPairsReach(std::size_t nodes, PrimeMode mode, Execution exec)
    : AllPairsReach(nodes,
                    [nodes] {
                        std::vector<Edge> pairs;
                        pairs.reserve(nodes * nodes);
                        for (std::size_t s = 0; s < nodes; ++s)
                            for (std::size_t t = 0; t < nodes; ++t) pairs.emplace_back(s, t);
                        return pairs;
                    }(),
                    mode, exec) {}

AllPairsReach::AllPairsReach(std::size_t nodes, const std::vector<Edge>& pairs, PrimeMode mode,
                             Execution exec)
    : nodes_(nodes), exec_(exec) {
    trackers_.reserve(pairs.size());
    for (const auto& [s, t] : pairs) {
        if (index_.contains({s, t})) continue;
        index_.emplace(Edge{s, t}, trackers_.size());
        trackers_.emplace_back(nodes, s, t, mode, Execution::Sequential);
    }
}

void AllPairsReach::insert_edge(std::size_t from, std::size_t to) {
    if (from >= nodes_ || to >= nodes_) throw std::out_of_range("edge endpoint out of range");
    if (from == to) throw std::invalid_argument("self-loops excluded");
    if (!edges_.emplace(from, to).second) return;
    for_each_independent(exec_, trackers_, [&](ReachTracker& t) { t.insert_edge(from, to); });
}

void AllPairsReach::delete_edge(std::size_t from, std::size_t to) {
    if (from >= nodes_ || to >= nodes_) throw std::out_of_range("edge endpoint out of range");
    if (from == to) throw std::invalid_argument("self-loops excluded");
    if (edges_.erase({from, to}) == 0) return;
    for_each_independent(exec_, trackers_, [&](ReachTracker& t) { t.delete_edge(from, to); });
}

bool AllPairsReach::reachable(std::size_t source, std::size_t target) const {
    auto it = index_.find({source, target});
    if (it == index_.end()) throw std::out_of_range("pair not tracked");
    return trackers_[it->second].reachable();
}

}  // namespace dynrank
