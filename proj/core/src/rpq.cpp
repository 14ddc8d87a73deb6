#include "dynrank/rpq.hpp"

#include <stdexcept>
#include <utility>

namespace dynrank {

RpqTracker::RpqTracker(std::size_t nodes, std::size_t source, std::size_t target, Nfa nfa, PrimeMode mode,
                       Execution exec)
    : nodes_(nodes), nfa_(std::move(nfa)), exec_(exec) {
    nfa_.validate();
    if (nodes == 0) throw std::invalid_argument("RpqTracker: need at least one node");
    if (source >= nodes || target >= nodes) throw std::out_of_range("RpqTracker: source/target out of range");
    const std::size_t product_size = nodes * nfa_.state_count;
    for (std::size_t f : nfa_.accepting) {
        trackers_.emplace_back(product_size, product_node(source, nfa_.initial), product_node(target, f), mode);
    }
}

void RpqTracker::check(std::size_t from, const std::string& label, std::size_t to) const {
    if (from >= nodes_ || to >= nodes_) throw std::out_of_range("edge endpoint out of range");
    if (!nfa_.alphabet.contains(label)) throw std::invalid_argument("label not in alphabet: " + label);
}

std::vector<Edge> RpqTracker::induced(const LabeledEdge& e) const {
    std::vector<Edge> out;
    for (const auto& t : nfa_.transitions) {
        if (t.symbol == e.label) out.emplace_back(product_node(e.from, t.from), product_node(e.to, t.to));
    }
    return out;
}

void RpqTracker::insert_edge(std::size_t from, const std::string& label, std::size_t to) {
    check(from, label, to);
    LabeledEdge e{from, label, to};
    if (!edges_.insert(e).second) return;
    for (const Edge& pe : induced(e)) {
        if (product_refs_[pe]++ != 0 || pe.first == pe.second) continue;
        for_each_independent(exec_, trackers_, [&](ReachTracker& t) { t.insert_edge(pe.first, pe.second); });
    }
}

void RpqTracker::delete_edge(std::size_t from, const std::string& label, std::size_t to) {
    check(from, label, to);
    LabeledEdge e{from, label, to};
    if (edges_.erase(e) == 0) return;
    for (const Edge& pe : induced(e)) {
        auto it = product_refs_.find(pe);
        if (--it->second != 0) continue;
        product_refs_.erase(it);
        if (pe.first == pe.second) continue;
        for_each_independent(exec_, trackers_, [&](ReachTracker& t) { t.delete_edge(pe.first, pe.second); });
    }
}

bool RpqTracker::matches() const {
    for (const ReachTracker& t : trackers_) {
        if (t.reachable()) return true;
    }
    return false;
}

}  // namespace dynrank
