#pragma once

#include <span>
#include <utility>
#include <vector>

#include "locert/errors.hpp"

namespace locert {

using NodeId = int;

// Undirected, connected, port-labeled graph. Nodes are 0..n-1. The ports of
// node v are 0..deg(v)-1, assigned in edge-insertion order, and are what
// certificate bits refer to. Immutable after construction.
class Graph {
public:
    struct Half {
        NodeId to;     // neighbor reached through this port
        int rev_port;  // port of `to` that leads back here
    };

    struct Edge {
        NodeId u, v;        // endpoints as inserted
        int port_u, port_v; // u's port toward v, v's port toward u
    };

    static Graph from_edges(int node_count,
                            const std::vector<std::pair<NodeId, NodeId>>& edges);

    int node_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(NodeId v) const {
        check_node(v);
        return static_cast<int>(adj_[v].size());
    }

    // entry i is the half-edge at port i of v
    std::span<const Half> ports(NodeId v) const {
        check_node(v);
        return adj_[v];
    }

    NodeId neighbor_at(NodeId v, int port) const;

    // port of u toward v, or -1 when u and v are not adjacent
    int find_port(NodeId u, NodeId v) const;

    // like find_port but throws NotAnEdge
    int port_to(NodeId u, NodeId v) const;

    bool has_edge(NodeId u, NodeId v) const { return find_port(u, v) >= 0; }

    // edges in insertion order; this order also fixes certificate
    // enumeration and JSON round trips
    const std::vector<Edge>& edges() const { return edges_; }

    void check_node(NodeId v) const {
        if (v < 0 || v >= static_cast<int>(adj_.size()))
            fail(Errc::IndexOutOfRange, "node index out of range");
    }

private:
    Graph() = default;
    std::vector<std::vector<Half>> adj_;
    std::vector<Edge> edges_;
};

// Validates symmetry, port bijectivity, simplicity and connectivity;
// throws DuplicateEdge / SelfLoop / Disconnected / IndexOutOfRange.
Graph build_graph(int node_count,
                  const std::vector<std::pair<NodeId, NodeId>>& edges);

}  // namespace locert
