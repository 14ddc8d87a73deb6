#include "dynrank/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>

namespace dynrank::oracle {

namespace {

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Fermat inverse; p prime.
std::uint64_t invp(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = mulp(result, base, p);
        base = mulp(base, base, p);
        e >>= 1;
    }
    return result;
}

std::size_t rank_in_place(std::size_t rows, std::size_t cols, std::vector<std::uint64_t>& a, std::uint64_t p) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (a[r * cols + c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        }
        const std::uint64_t inv = invp(a[rank * cols + c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t f = mulp(a[r * cols + c], inv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k) {
                const std::uint64_t sub = mulp(f, a[rank * cols + k], p);
                a[r * cols + k] = (a[r * cols + k] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

std::int64_t checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("gaussian_rank_exact: intermediate overflow; shrink the instance");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::size_t gaussian_rank_mod_p(const DenseMatrix& m, std::uint64_t p) {
    std::vector<std::uint64_t> a(m.values.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const std::int64_t v = m.values[k];
        const auto mag = static_cast<std::uint64_t>(v < 0 ? -static_cast<__int128>(v) : v) % p;
        a[k] = (v < 0 && mag != 0) ? p - mag : mag;
    }
    return rank_in_place(m.rows, m.cols, a, p);
}

std::size_t gaussian_rank_mod_p(std::size_t rows, std::size_t cols, std::span<const std::uint64_t> residues,
                                std::uint64_t p) {
    std::vector<std::uint64_t> a(residues.begin(), residues.end());
    return rank_in_place(rows, cols, a, p);
}

std::size_t gaussian_rank_exact(const DenseMatrix& m) {
    std::vector<std::int64_t> a = m.values;
    const std::size_t rows = m.rows, cols = m.cols;
    std::int64_t prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (a[r * cols + c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        }
        const std::int64_t piv = a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::int64_t lead = a[r * cols + c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                const __int128 num = static_cast<__int128>(a[r * cols + k]) * piv -
                                     static_cast<__int128>(lead) * a[rank * cols + k];
                a[r * cols + k] = checked(num / prev);
            }
            a[r * cols + c] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

bool bfs_reach(std::size_t nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges, std::size_t s,
               std::size_t t) {
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (const auto& [u, v] : edges) adj[u].push_back(v);
    std::vector<bool> seen(nodes, false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (u == t) return true;
        for (std::size_t v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    return false;
}

bool two_sat_scc(std::size_t variables, std::span<const Clause> clauses) {
    // Kosaraju on literal nodes: positive x -> 2x, negative x -> 2x + 1.
    const std::size_t n = 2 * variables;
    const auto node = [](Literal l) { return 2 * l.var + (l.negated ? 1 : 0); };
    std::vector<std::vector<std::size_t>> fwd(n), rev(n);
    for (const Clause& c : clauses) {
        const std::size_t a = node(c.first), b = node(c.second);
        fwd[a ^ 1].push_back(b);
        fwd[b ^ 1].push_back(a);
        rev[b].push_back(a ^ 1);
        rev[a].push_back(b ^ 1);
    }
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    // Iterative DFS recording finish order.
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        seen[root] = true;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < fwd[u].size()) {
                const std::size_t v = fwd[u][next++];
                if (!seen[v]) {
                    seen[v] = true;
                    stack.emplace_back(v, 0);
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, none);
    std::size_t label = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != none) continue;
        std::vector<std::size_t> stack{*it};
        comp[*it] = label;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : rev[u]) {
                if (comp[v] == none) {
                    comp[v] = label;
                    stack.push_back(v);
                }
            }
        }
        ++label;
    }
    for (std::size_t x = 0; x < variables; ++x) {
        if (comp[2 * x] == comp[2 * x + 1]) return false;
    }
    return true;
}

bool two_sat_truth_table(std::size_t variables, std::span<const Clause> clauses) {
    if (variables > 20) throw std::invalid_argument("two_sat_truth_table: too many variables");
    const auto value = [](std::uint32_t assignment, Literal l) {
        const bool v = (assignment >> l.var) & 1u;
        return l.negated ? !v : v;
    };
    for (std::uint32_t a = 0; a < (1u << variables); ++a) {
        bool all = true;
        for (const Clause& c : clauses) {
            if (!value(a, c.first) && !value(a, c.second)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

std::size_t max_matching_exhaustive(std::size_t nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
    if (nodes > 20) throw std::invalid_argument("max_matching_exhaustive: n > 20");
    std::vector<std::uint32_t> adj(nodes, 0);
    for (const auto& [u, v] : edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const std::uint32_t full = nodes == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << nodes) - 1);
    std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const auto v = static_cast<std::size_t>(__builtin_ctz(mask));
        const std::uint32_t rest = mask & ~(1u << v);
        std::uint8_t b = best[rest];
        for (std::uint32_t cand = adj[v] & rest; cand; cand &= cand - 1) {
            const auto u = static_cast<std::size_t>(__builtin_ctz(cand));
            b = std::max<std::uint8_t>(b, static_cast<std::uint8_t>(1 + best[rest & ~(1u << u)]));
        }
        best[mask] = b;
        if (mask == full) break;
    }
    return best[full];
}

bool is_isolated(std::size_t nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges,
                 const WeightAssignment& w) {
    const std::size_t target = max_matching_exhaustive(nodes, edges);
    const std::vector<std::pair<std::size_t, std::size_t>> list(edges.begin(), edges.end());
    std::vector<bool> used(nodes, false);
    std::uint64_t min_weight = std::numeric_limits<std::uint64_t>::max();
    std::size_t min_count = 0;
    // Enumerate edge subsets that are matchings of size `target`.
    std::function<void(std::size_t, std::size_t, std::uint64_t)> walk = [&](std::size_t from, std::size_t size,
                                                                           std::uint64_t weight) {
        if (size == target) {
            if (weight < min_weight) {
                min_weight = weight;
                min_count = 1;
            } else if (weight == min_weight) {
                ++min_count;
            }
            return;
        }
        for (std::size_t k = from; k < list.size(); ++k) {
            const auto [u, v] = list[k];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = true;
            walk(k + 1, size + 1, weight + w(u, v));
            used[u] = used[v] = false;
        }
    };
    walk(0, 0, 0);
    return min_count == 1;
}

bool rpq_product_bfs(std::size_t nodes, const std::set<LabeledEdge>& edges, const Nfa& nfa, std::size_t s,
                     std::size_t t) {
    const std::size_t q = nfa.state_count;
    std::set<std::pair<std::size_t, std::size_t>> product;
    for (const LabeledEdge& e : edges) {
        for (const auto& tr : nfa.transitions) {
            if (tr.symbol == e.label) product.emplace(e.from * q + tr.from, e.to * q + tr.to);
        }
    }
    for (std::size_t f : nfa.accepting) {
        if (bfs_reach(nodes * q, product, s * q + nfa.initial, t * q + f)) return true;
    }
    return false;
}

}  // namespace dynrank::oracle
