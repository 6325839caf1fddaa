#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "locert/certs.hpp"

namespace locert {

// A node's 1-ball, the only input a local checker may read. Local id 0 is
// the center and local id 1+i is the neighbor behind the center's port i;
// no global node ids survive the extraction. Edges cover the whole induced
// subgraph on N[center] (neighbor-neighbor edges included) and carry the
// original port numbers of both endpoints. Certificates are the per-node
// assignments restricted to the ball.
template <typename Cert>
struct View {
    struct Edge {
        int a, b;           // local ids, a < b
        int port_a, port_b; // a's port toward b, b's port toward a
        bool operator==(const Edge&) const = default;
    };

    int center = 0;
    int node_count = 0;
    std::vector<Edge> edges;
    std::vector<Cert> certs;
    std::optional<std::vector<int>> labels;

    bool operator==(const View&) const = default;
};

using OrientationView = View<BitString>;
using TernaryView = View<int>;

OrientationView extract_view(const Graph& g, const OrientationCertificate& certs,
                             NodeId v);
TernaryView extract_view(const Graph& g, const TernaryCertificate& certs,
                         const RootLabeling& labels, NodeId v);

// Assemble views from arbitrary per-node state, e.g. a simulator
// configuration. Accessors are called once per ball node.
OrientationView make_orientation_view(
    const Graph& g, NodeId v,
    const std::function<const BitString&(NodeId)>& cert_at);
TernaryView make_ternary_view(const Graph& g, NodeId v,
                              const std::function<int(NodeId)>& value_at,
                              const std::function<int(NodeId)>& label_at);

}  // namespace locert
