#include "locert/certs.hpp"

#include <string>

namespace locert {

void OrientationCertificate::validate(const Graph& g) const {
    if (static_cast<int>(bits.size()) != g.node_count())
        fail(Errc::MalformedCertificate, "certificate count != node count");
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (static_cast<int>(bits[v].size()) != g.degree(v))
            fail(Errc::MalformedCertificate,
                 "certificate of node " + std::to_string(v) +
                     " has length " + std::to_string(bits[v].size()) +
                     ", expected deg = " + std::to_string(g.degree(v)));
        for (std::uint8_t b : bits[v])
            if (b > 1)
                fail(Errc::MalformedCertificate,
                     "certificate bit of node " + std::to_string(v) + " not 0/1");
    }
}

void TernaryCertificate::validate(const Graph& g) const {
    if (static_cast<int>(values.size()) != g.node_count())
        fail(Errc::MalformedCertificate, "value count != node count");
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (values[v] < 0 || values[v] > 2)
            fail(Errc::MalformedCertificate,
                 "value of node " + std::to_string(v) + " outside {0,1,2}");
}

RootLabeling RootLabeling::single_root(int node_count, NodeId root) {
    if (root < 0 || root >= node_count)
        fail(Errc::IndexOutOfRange, "root index out of range");
    RootLabeling labeling;
    labeling.labels.assign(node_count, 0);
    labeling.labels[root] = 1;
    return labeling;
}

void RootLabeling::validate(const Graph& g) const {
    if (static_cast<int>(labels.size()) != g.node_count())
        fail(Errc::MalformedCertificate, "label count != node count");
    int roots = 0;
    for (int l : labels) {
        if (l != 0 && l != 1)
            fail(Errc::MalformedCertificate, "root labels must be 0 or 1");
        roots += l;
    }
    if (roots != 1)
        fail(Errc::MalformedCertificate,
             "expected exactly one root label, found " + std::to_string(roots));
}

NodeId RootLabeling::root() const {
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == 1) return static_cast<NodeId>(v);
    fail(Errc::MalformedCertificate, "labeling has no root");
}

EdgeStatus status_from_bits(int bit_u, int bit_v) {
    if (bit_u == 1 && bit_v == 0) return EdgeStatus::OutOfFirst;
    if (bit_u == 0 && bit_v == 1) return EdgeStatus::OutOfSecond;
    if (bit_u == 1) return EdgeStatus::ConflictBothOut;
    return EdgeStatus::ConflictBothIn;
}

namespace {

std::uint8_t bit_at(const OrientationCertificate& certs, NodeId v, int port) {
    if (v < 0 || v >= static_cast<int>(certs.bits.size()) ||
        port >= static_cast<int>(certs.bits[v].size()))
        fail(Errc::MalformedCertificate,
             "missing certificate bit at node " + std::to_string(v) + " port " +
                 std::to_string(port));
    return certs.bits[v][port] & 1;
}

}  // namespace

EdgeStatus edge_status(const Graph& g, const OrientationCertificate& certs,
                       NodeId u, NodeId v) {
    const int pu = g.port_to(u, v);
    const int pv = g.port_to(v, u);
    return status_from_bits(bit_at(certs, u, pu), bit_at(certs, v, pv));
}

std::vector<NodeId> out_neighbors(const Graph& g,
                                  const OrientationCertificate& certs,
                                  NodeId v) {
    std::vector<NodeId> out;
    const auto ports = g.ports(v);
    for (std::size_t i = 0; i < ports.size(); ++i) {
        const EdgeStatus s =
            status_from_bits(bit_at(certs, v, static_cast<int>(i)),
                             bit_at(certs, ports[i].to, ports[i].rev_port));
        if (is_conflict(s))
            fail(Errc::ConflictingEdge,
                 "edge (" + std::to_string(v) + "," + std::to_string(ports[i].to) +
                     ") is not directed");
        if (s == EdgeStatus::OutOfFirst) out.push_back(ports[i].to);
    }
    return out;
}

}  // namespace locert
