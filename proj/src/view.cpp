#include "locert/view.hpp"

namespace locert {

namespace {

// Shared ball assembly: local 0 = center, local 1+i = neighbor at the
// center's port i, edges carry the original port numbers.
template <typename Cert, typename CertAt>
View<Cert> build_ball(const Graph& g, NodeId v, CertAt&& cert_at) {
    g.check_node(v);
    const auto ports = g.ports(v);
    const int deg = static_cast<int>(ports.size());

    View<Cert> view;
    view.center = 0;
    view.node_count = deg + 1;

    for (int i = 0; i < deg; ++i)
        view.edges.push_back({0, 1 + i, i, ports[i].rev_port});
    for (int i = 0; i < deg; ++i) {
        for (int j = i + 1; j < deg; ++j) {
            const NodeId a = ports[i].to;
            const NodeId b = ports[j].to;
            const int pab = g.find_port(a, b);
            if (pab < 0) continue;
            view.edges.push_back({1 + i, 1 + j, pab, g.find_port(b, a)});
        }
    }

    view.certs.reserve(deg + 1);
    view.certs.push_back(cert_at(v));
    for (int i = 0; i < deg; ++i) view.certs.push_back(cert_at(ports[i].to));
    return view;
}

template <typename LabelAt>
void attach_labels(TernaryView& view, const Graph& g, NodeId v, LabelAt&& label_at) {
    const auto ports = g.ports(v);
    std::vector<int> labels;
    labels.reserve(ports.size() + 1);
    labels.push_back(label_at(v));
    for (const Graph::Half& h : ports) labels.push_back(label_at(h.to));
    view.labels = std::move(labels);
}

}  // namespace

OrientationView extract_view(const Graph& g, const OrientationCertificate& certs,
                             NodeId v) {
    if (static_cast<int>(certs.bits.size()) != g.node_count())
        fail(Errc::MalformedCertificate, "certificate count != node count");
    return build_ball<BitString>(
        g, v, [&](NodeId w) -> const BitString& { return certs.bits[w]; });
}

TernaryView extract_view(const Graph& g, const TernaryCertificate& certs,
                         const RootLabeling& labels, NodeId v) {
    if (static_cast<int>(certs.values.size()) != g.node_count() ||
        static_cast<int>(labels.labels.size()) != g.node_count())
        fail(Errc::MalformedCertificate, "assignment count != node count");
    TernaryView view =
        build_ball<int>(g, v, [&](NodeId w) { return certs.values[w]; });
    attach_labels(view, g, v, [&](NodeId w) { return labels.labels[w]; });
    return view;
}

OrientationView make_orientation_view(
    const Graph& g, NodeId v,
    const std::function<const BitString&(NodeId)>& cert_at) {
    return build_ball<BitString>(g, v, cert_at);
}

TernaryView make_ternary_view(const Graph& g, NodeId v,
                              const std::function<int(NodeId)>& value_at,
                              const std::function<int(NodeId)>& label_at) {
    TernaryView view = build_ball<int>(g, v, value_at);
    attach_labels(view, g, v, label_at);
    return view;
}

}  // namespace locert
