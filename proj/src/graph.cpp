#include "locert/graph.hpp"

#include <queue>
#include <string>
#include <unordered_set>

namespace locert {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::Disconnected: return "Disconnected";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotAnEdge: return "NotAnEdge";
        case Errc::ConflictingEdge: return "ConflictingEdge";
        case Errc::MalformedCertificate: return "MalformedCertificate";
        case Errc::NotATree: return "NotATree";
        case Errc::InvalidOrdering: return "InvalidOrdering";
        case Errc::NoEligibleParent: return "NoEligibleParent";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::EmptySubset: return "EmptySubset";
        case Errc::MemberNotEnabled: return "MemberNotEnabled";
        case Errc::NothingEnabled: return "NothingEnabled";
        case Errc::BadFormat: return "BadFormat";
    }
    return "Unknown";
}

Graph Graph::from_edges(int node_count,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
    if (node_count <= 0)
        fail(Errc::InvalidArgument, "graph needs at least one node");

    Graph g;
    g.adj_.resize(node_count);
    g.edges_.reserve(edges.size());

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count)
            fail(Errc::IndexOutOfRange,
                 "edge endpoint out of range: (" + std::to_string(u) + "," +
                     std::to_string(v) + ")");
        if (u == v)
            fail(Errc::SelfLoop, "self-loop at node " + std::to_string(u));
        const NodeId lo = u < v ? u : v;
        const NodeId hi = u < v ? v : u;
        const std::uint64_t key =
            (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
        if (!seen.insert(key).second)
            fail(Errc::DuplicateEdge, "duplicate edge (" + std::to_string(u) +
                                          "," + std::to_string(v) + ")");

        const int port_u = static_cast<int>(g.adj_[u].size());
        const int port_v = static_cast<int>(g.adj_[v].size());
        g.adj_[u].push_back({v, port_v});
        g.adj_[v].push_back({u, port_u});
        g.edges_.push_back({u, v, port_u, port_v});
    }

    // connectivity by BFS from node 0
    std::vector<char> reached(node_count, 0);
    std::queue<NodeId> frontier;
    frontier.push(0);
    reached[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
        const NodeId v = frontier.front();
        frontier.pop();
        for (const Half& h : g.adj_[v]) {
            if (!reached[h.to]) {
                reached[h.to] = 1;
                ++count;
                frontier.push(h.to);
            }
        }
    }
    if (count != node_count)
        fail(Errc::Disconnected, "graph is not connected");

    return g;
}

NodeId Graph::neighbor_at(NodeId v, int port) const {
    check_node(v);
    if (port < 0 || port >= static_cast<int>(adj_[v].size()))
        fail(Errc::IndexOutOfRange, "port out of range at node " + std::to_string(v));
    return adj_[v][port].to;
}

int Graph::find_port(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    for (std::size_t i = 0; i < adj_[u].size(); ++i)
        if (adj_[u][i].to == v) return static_cast<int>(i);
    return -1;
}

int Graph::port_to(NodeId u, NodeId v) const {
    const int port = find_port(u, v);
    if (port < 0)
        fail(Errc::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) +
                                  ") is not an edge");
    return port;
}

Graph build_graph(int node_count,
                  const std::vector<std::pair<NodeId, NodeId>>& edges) {
    return Graph::from_edges(node_count, edges);
}

}  // namespace locert
