#include "locert/graph_classes.hpp"

#include <algorithm>
#include <numeric>

namespace locert {

namespace {

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) {
        adj[e.u][e.v] = 1;
        adj[e.v][e.u] = 1;
    }
    return adj;
}

std::vector<NodeId> alive_neighbors(const std::vector<std::vector<char>>& adj,
                                    const std::vector<char>& alive, NodeId v) {
    std::vector<NodeId> out;
    for (NodeId w = 0; w < static_cast<NodeId>(adj.size()); ++w)
        if (alive[w] && w != v && adj[v][w]) out.push_back(w);
    return out;
}

bool clique(const std::vector<std::vector<char>>& adj,
            const std::vector<NodeId>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (!adj[nodes[i]][nodes[j]]) return false;
    return true;
}

// u dominates v among alive nodes: u adjacent to v, and every alive
// neighbor of v other than u is also adjacent to u.
bool dominates(const std::vector<std::vector<char>>& adj,
               const std::vector<char>& alive, NodeId u, NodeId v) {
    if (u == v || !adj[u][v]) return false;
    for (NodeId w = 0; w < static_cast<NodeId>(adj.size()); ++w)
        if (alive[w] && w != u && w != v && adj[v][w] && !adj[u][w]) return false;
    return true;
}

}  // namespace

std::optional<EliminationOrdering> find_simplicial_ordering(const Graph& g) {
    const int n = g.node_count();
    const auto adj = adjacency_matrix(g);
    std::vector<char> alive(n, 1);

    EliminationOrdering ordering;
    ordering.kind = EliminationOrdering::Kind::Simplicial;
    ordering.order.reserve(n);

    for (int round = 0; round < n; ++round) {
        NodeId pick = -1;
        for (NodeId v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            if (clique(adj, alive_neighbors(adj, alive, v))) pick = v;
        }
        if (pick < 0) return std::nullopt;  // no simplicial vertex: not chordal
        ordering.order.push_back(pick);
        alive[pick] = 0;
    }
    return ordering;
}

std::optional<EliminationOrdering> find_dismantling_ordering(const Graph& g) {
    const int n = g.node_count();
    const auto adj = adjacency_matrix(g);
    std::vector<char> alive(n, 1);

    // removal[k] removed at step k, dominated by dominator[k] at that time
    std::vector<NodeId> removal;
    std::vector<NodeId> dominator;

    for (int round = 0; round + 1 < n; ++round) {
        NodeId pick = -1;
        NodeId witness = -1;
        for (NodeId v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            for (NodeId u = 0; u < n; ++u) {
                if (!alive[u] || u == v) continue;
                if (dominates(adj, alive, u, v)) {
                    pick = v;
                    witness = u;
                    break;
                }
            }
        }
        if (pick < 0) return std::nullopt;  // stuck: not dismantlable
        removal.push_back(pick);
        dominator.push_back(witness);
        alive[pick] = 0;
    }

    NodeId survivor = -1;
    for (NodeId v = 0; v < n; ++v)
        if (alive[v]) survivor = v;

    EliminationOrdering ordering;
    ordering.kind = EliminationOrdering::Kind::Dismantling;
    ordering.order.push_back(survivor);
    ordering.witness.push_back(-1);
    for (int k = static_cast<int>(removal.size()) - 1; k >= 0; --k) {
        ordering.order.push_back(removal[k]);
        ordering.witness.push_back(dominator[k]);
    }
    return ordering;
}

bool replay_ordering(const Graph& g, const EliminationOrdering& ordering) {
    const int n = g.node_count();
    if (static_cast<int>(ordering.order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (NodeId v : ordering.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    const auto adj = adjacency_matrix(g);

    if (ordering.kind == EliminationOrdering::Kind::Simplicial) {
        std::vector<char> alive(n, 1);
        for (NodeId v : ordering.order) {
            alive[v] = 0;
            if (!clique(adj, alive_neighbors(adj, alive, v))) return false;
        }
        return true;
    }

    // Dismantling: remove from the back; witness must dominate within the
    // subgraph induced by the prefix still present.
    if (ordering.witness.size() != ordering.order.size()) return false;
    std::vector<char> alive(n, 1);
    for (int i = n - 1; i >= 1; --i) {
        const NodeId v = ordering.order[i];
        const NodeId u = ordering.witness[i];
        if (u < 0 || u >= n || !alive[u]) return false;
        if (!dominates(adj, alive, u, v)) return false;
        alive[v] = 0;
    }
    return ordering.witness[0] == -1;
}

bool is_k4_free(const Graph& g) {
    const int n = g.node_count();
    const auto adj = adjacency_matrix(g);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) {
            if (!adj[a][b]) continue;
            for (NodeId c = b + 1; c < n; ++c) {
                if (!adj[a][c] || !adj[b][c]) continue;
                for (NodeId d = c + 1; d < n; ++d)
                    if (adj[a][d] && adj[b][d] && adj[c][d]) return false;
            }
        }
    return true;
}

Graph gen_tree(int n, std::uint64_t seed) {
    if (n <= 0) fail(Errc::InvalidArgument, "n must be positive");
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n - 1);
    for (NodeId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<NodeId>(rng.below(v)), v);
    return build_graph(n, edges);
}

Graph gen_chordal(int n, int extra_edges, std::uint64_t seed) {
    if (n <= 0) fail(Errc::InvalidArgument, "n must be positive");
    Rng rng(seed);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::pair<NodeId, NodeId>> edges;
    int budget = std::max(0, extra_edges);

    // Each new node attaches to a clique of the existing graph, so the
    // reverse insertion order is a perfect elimination ordering.
    for (NodeId v = 1; v < n; ++v) {
        const NodeId anchor = static_cast<NodeId>(rng.below(v));
        std::vector<NodeId> clique_nodes{anchor};
        const int most = std::min<int>(budget, v - 1);
        const int want = most > 0 ? static_cast<int>(rng.below(most + 1)) : 0;
        for (int k = 0; k < want; ++k) {
            std::vector<NodeId> candidates;
            for (NodeId w = 0; w < v; ++w) {
                if (std::find(clique_nodes.begin(), clique_nodes.end(), w) !=
                    clique_nodes.end())
                    continue;
                bool joins = true;
                for (NodeId c : clique_nodes)
                    if (!adj[w][c]) {
                        joins = false;
                        break;
                    }
                if (joins) candidates.push_back(w);
            }
            if (candidates.empty()) break;
            clique_nodes.push_back(candidates[rng.below(candidates.size())]);
            --budget;
        }
        for (NodeId c : clique_nodes) {
            edges.emplace_back(c, v);
            adj[c][v] = adj[v][c] = 1;
        }
    }
    return build_graph(n, edges);
}

Graph gen_dismantlable(int n, bool k4_free, std::uint64_t seed) {
    if (n <= 0) fail(Errc::InvalidArgument, "n must be positive");
    Rng rng(seed);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::pair<NodeId, NodeId>> edges;

    // Each new node v attaches inside the closed neighborhood of a chosen
    // dominator, so the insertion order read survivor-first is already a
    // dismantling order. Under the k4_free flag any attachment whose
    // neighborhood contains a triangle is pruned back; dropping members
    // always reaches the safe single-dominator attachment.
    for (NodeId v = 1; v < n; ++v) {
        const NodeId dominator = static_cast<NodeId>(rng.below(v));
        std::vector<NodeId> attach{dominator};
        for (NodeId w = 0; w < v; ++w)
            if (w != dominator && adj[dominator][w] && rng.coin())
                attach.push_back(w);

        if (k4_free) {
            auto has_triangle = [&](const std::vector<NodeId>& nodes) {
                for (std::size_t i = 0; i < nodes.size(); ++i)
                    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                        if (!adj[nodes[i]][nodes[j]]) continue;
                        for (std::size_t k = j + 1; k < nodes.size(); ++k)
                            if (adj[nodes[i]][nodes[k]] && adj[nodes[j]][nodes[k]])
                                return true;
                    }
                return false;
            };
            while (has_triangle(attach)) {
                // never drop the dominator at index 0
                const std::size_t drop = 1 + rng.below(attach.size() - 1);
                attach.erase(attach.begin() + drop);
            }
        }

        for (NodeId w : attach) {
            edges.emplace_back(w, v);
            adj[w][v] = adj[v][w] = 1;
        }
    }
    return build_graph(n, edges);
}

}  // namespace locert
