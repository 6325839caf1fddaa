#pragma once

// Shared fixtures and independent brute-force oracles. Everything here is
// deliberately implemented from first principles (adjacency matrices, DFS)
// rather than through the library's own decoding paths.

#include <utility>
#include <vector>

#include "locert/oracle.hpp"

namespace locert::testing {

inline Graph path_graph(int n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return build_graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return build_graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// center 0, leaves 1..k
inline Graph star_graph(int leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return build_graph(leaves + 1, edges);
}

// hub 0, rim 1..k as a cycle, spokes from every rim node to the hub
inline Graph wheel_graph(int rim) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int v = 1; v <= rim; ++v) edges.emplace_back(v, v == rim ? 1 : v + 1);
    for (int v = 1; v <= rim; ++v) edges.emplace_back(v, 0);
    return build_graph(rim + 1, edges);
}

// triangle 0,1,2 plus pendant 3 attached at 0
inline Graph paw_graph() {
    return build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

// certificate from an explicit arc list covering every edge
inline OrientationCertificate orient(const Graph& g,
                                     const std::vector<std::pair<NodeId, NodeId>>& arcs) {
    OrientationCertificate certs;
    certs.bits.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        certs.bits[v].assign(g.degree(v), 0);
    for (const auto& [tail, head] : arcs) {
        certs.bits[tail][g.port_to(tail, head)] = 1;
        certs.bits[head][g.port_to(head, tail)] = 0;
    }
    return certs;
}

// independent cycle detector: recursive DFS coloring over the raw bits
inline bool brute_has_directed_cycle(const Graph& g,
                                     const OrientationCertificate& certs) {
    const int n = g.node_count();
    std::vector<std::vector<NodeId>> next(n);
    for (const auto& e : g.edges()) {
        const int bu = certs.bits[e.u][e.port_u];
        const int bv = certs.bits[e.v][e.port_v];
        if (bu == 1 && bv == 0) next[e.u].push_back(e.v);
        if (bu == 0 && bv == 1) next[e.v].push_back(e.u);
    }
    std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
    std::vector<std::pair<NodeId, std::size_t>> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (color[start] != 0) continue;
        stack.push_back({start, 0});
        color[start] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < next[v].size()) {
                const NodeId w = next[v][i++];
                if (color[w] == 1) return true;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

// nodes whose bits are all 0 toward properly directed edges; independent of
// the library's sink extraction
inline std::vector<NodeId> brute_sinks(const Graph& g,
                                       const OrientationCertificate& certs) {
    std::vector<char> has_out(g.node_count(), 0);
    for (const auto& e : g.edges()) {
        const int bu = certs.bits[e.u][e.port_u];
        const int bv = certs.bits[e.v][e.port_v];
        if (bu == 1 && bv == 0) has_out[e.u] = 1;
        if (bu == 0 && bv == 1) has_out[e.v] = 1;
    }
    std::vector<NodeId> result;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!has_out[v]) result.push_back(v);
    return result;
}

// random spanning tree plus up to `extra` random chords
inline Graph random_connected_graph(int n, int extra, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<NodeId>(rng.below(v)), v);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : edges) adj[u][v] = adj[v][u] = 1;
    for (int k = 0; k < extra && n >= 3; ++k) {
        const NodeId u = static_cast<NodeId>(rng.below(n));
        const NodeId v = static_cast<NodeId>(rng.below(n));
        if (u == v || adj[u][v]) continue;
        edges.emplace_back(u, v);
        adj[u][v] = adj[v][u] = 1;
    }
    return build_graph(n, edges);
}

// arbitrary bit assignment of the correct shape, conflicts allowed
inline OrientationCertificate random_bits(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    OrientationCertificate certs;
    certs.bits.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        certs.bits[v].resize(g.degree(v));
        for (auto& b : certs.bits[v]) b = static_cast<std::uint8_t>(rng.below(2));
    }
    return certs;
}

// the drawn configuration of the wheel: rim cycle 1->2->...->rim->1, every
// spoke pointing at the hub
inline OrientationCertificate wheel_rim_cycle_cert(const Graph& wheel, int rim) {
    std::vector<std::pair<NodeId, NodeId>> arcs;
    for (int v = 1; v <= rim; ++v) arcs.emplace_back(v, v == rim ? 1 : v + 1);
    for (int v = 1; v <= rim; ++v) arcs.emplace_back(v, 0);
    return orient(wheel, arcs);
}

}  // namespace locert::testing
