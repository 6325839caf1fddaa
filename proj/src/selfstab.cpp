#include "locert/selfstab.hpp"

#include <algorithm>
#include <string>

namespace locert {

const char* sim_scheme_name(SimScheme s) {
    switch (s) {
        case SimScheme::Tree: return "tree";
        case SimScheme::Chordal: return "chordal";
        case SimScheme::K4FreeDismantlable: return "k4fd";
        case SimScheme::SpanningTree: return "st";
    }
    return "?";
}

SchemeId orientation_scheme(SimScheme s) {
    switch (s) {
        case SimScheme::Tree: return SchemeId::Tree;
        case SimScheme::Chordal: return SchemeId::Chordal;
        case SimScheme::K4FreeDismantlable: return SchemeId::K4FreeDismantlable;
        case SimScheme::SpanningTree: break;
    }
    fail(Errc::InvalidArgument, "not an orientation scheme");
}

namespace {

bool is_orientation(SimScheme s) { return s != SimScheme::SpanningTree; }

void check_configuration(const Configuration& config) {
    if (static_cast<int>(config.states.size()) != config.graph.node_count())
        fail(Errc::InvalidArgument, "state count != node count");
    if (config.scheme == SimScheme::SpanningTree) {
        if (!config.labels)
            fail(Errc::InvalidArgument, "spanning-tree scheme needs root labels");
        config.labels->validate(config.graph);
    }
}

// A non-bot state that does not fit the node's alphabet. Arbitrary initial
// configurations may contain such payloads; they behave like bot for error
// propagation.
bool corrupt(const Configuration& config, NodeId v) {
    const NodeState& s = config.states[v];
    if (s.is_bot()) return false;
    if (is_orientation(config.scheme)) {
        if (!s.holds_bits()) return true;
        if (static_cast<int>(s.bits().size()) != config.graph.degree(v)) return true;
        for (std::uint8_t b : s.bits())
            if (b > 1) return true;
        return false;
    }
    return !s.holds_value() || s.value() < 0 || s.value() > 2;
}

// (B_1(v), x|N[v]) in R; requires every ball state present and well-formed.
bool view_accepted(const Configuration& config, NodeId v) {
    if (is_orientation(config.scheme)) {
        OrientationView view = make_orientation_view(
            config.graph, v,
            [&](NodeId w) -> const BitString& { return config.states[w].bits(); });
        return check_local(view, orientation_scheme(config.scheme)).accepted();
    }
    TernaryView view = make_ternary_view(
        config.graph, v, [&](NodeId w) { return config.states[w].value(); },
        [&](NodeId w) { return config.labels->labels[w]; });
    return check_st_local(view).accepted();
}

}  // namespace

Configuration make_configuration(Graph g, SimScheme scheme,
                                 std::optional<RootLabeling> labels) {
    Configuration config{std::move(g), scheme, std::move(labels), {}};
    config.states.assign(config.graph.node_count(), NodeState::bot());
    check_configuration(config);
    return config;
}

std::vector<Guard> enabled_guards(const Configuration& config) {
    check_configuration(config);
    const Graph& g = config.graph;
    std::vector<Guard> guards(g.node_count(), Guard::None);

    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (config.states[v].is_bot()) {
            guards[v] = Guard::S2;
            continue;
        }
        bool fire = corrupt(config, v);
        if (!fire) {
            for (const Graph::Half& h : g.ports(v))
                if (config.states[h.to].is_bot() || corrupt(config, h.to)) {
                    fire = true;
                    break;
                }
        }
        if (!fire) fire = !view_accepted(config, v);
        guards[v] = fire ? Guard::S1 : Guard::None;
    }
    return guards;
}

NodeState random_state(const Graph& g, SimScheme scheme, NodeId v, Rng& rng) {
    g.check_node(v);
    if (is_orientation(scheme)) {
        BitString bits(g.degree(v));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
        return NodeState::orientation(std::move(bits));
    }
    return NodeState::ternary(static_cast<int>(rng.below(3)));
}

namespace {

std::vector<NodeId> sorted_unique(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

Configuration apply_step(const Configuration& config,
                         const std::vector<NodeId>& members,
                         const std::vector<Guard>& guards, Rng& rng) {
    Configuration next = config;
    // members ascending: one rng draw order, reproducible across runs
    for (NodeId v : members) {
        if (guards[v] == Guard::S1)
            next.states[v] = NodeState::bot();
        else
            next.states[v] = random_state(config.graph, config.scheme, v, rng);
    }
    return next;
}

std::vector<NodeId> draw_subset(const std::vector<NodeId>& enabled, Rng& rng) {
    // uniform over the 2^k - 1 non-empty subsets by rejection
    std::vector<NodeId> subset;
    do {
        subset.clear();
        for (NodeId v : enabled)
            if (rng.coin()) subset.push_back(v);
    } while (subset.empty());
    return subset;
}

}  // namespace

std::vector<NodeId> schedule(const Configuration& config, Rng& rng) {
    const std::vector<Guard> guards = enabled_guards(config);
    std::vector<NodeId> enabled;
    for (NodeId v = 0; v < config.graph.node_count(); ++v)
        if (guards[v] != Guard::None) enabled.push_back(v);
    if (enabled.empty()) fail(Errc::NothingEnabled, "no guard is enabled");
    return draw_subset(enabled, rng);
}

Configuration step(const Configuration& config, const std::vector<NodeId>& subset,
                   Rng& rng) {
    if (subset.empty()) fail(Errc::EmptySubset, "activated subset is empty");
    const std::vector<Guard> guards = enabled_guards(config);
    const std::vector<NodeId> members = sorted_unique(subset);
    for (NodeId v : members) {
        config.graph.check_node(v);
        if (guards[v] == Guard::None)
            fail(Errc::MemberNotEnabled,
                 "node " + std::to_string(v) + " has no enabled guard");
    }
    return apply_step(config, members, guards, rng);
}

Configuration inject_faults(Configuration config, const std::vector<NodeId>& victims,
                            Rng& rng) {
    check_configuration(config);
    for (NodeId v : sorted_unique(victims)) {
        config.graph.check_node(v);
        if (is_orientation(config.scheme)) {
            const int deg = config.graph.degree(v);
            if (deg <= 62) {
                // uniform over the 2^deg certificates plus bot
                const std::uint64_t states = 1ull << deg;
                const std::uint64_t pick = rng.below(states + 1);
                if (pick == states) {
                    config.states[v] = NodeState::bot();
                } else {
                    BitString bits(deg);
                    for (int p = 0; p < deg; ++p)
                        bits[p] = static_cast<std::uint8_t>((pick >> p) & 1);
                    config.states[v] = NodeState::orientation(std::move(bits));
                }
            } else {
                // bot weight is below 2^-62 here; draw bits directly
                config.states[v] = random_state(config.graph, config.scheme, v, rng);
            }
        } else {
            const std::uint64_t pick = rng.below(4);
            config.states[v] = pick == 3 ? NodeState::bot()
                                         : NodeState::ternary(static_cast<int>(pick));
        }
    }
    return config;
}

std::uint64_t config_digest(const Configuration& config) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](std::uint64_t byte) {
        h ^= byte & 0xff;
        h *= 0x100000001b3ull;
    };
    auto feed64 = [&](std::uint64_t value) {
        for (int i = 0; i < 8; ++i) feed(value >> (8 * i));
    };
    feed(static_cast<std::uint64_t>(config.scheme));
    feed64(static_cast<std::uint64_t>(config.graph.node_count()));
    for (const NodeState& s : config.states) {
        if (s.is_bot()) {
            feed(0xAC);
        } else if (s.holds_bits()) {
            feed(0xB0);
            feed64(s.bits().size());
            for (std::uint8_t b : s.bits()) feed(b);
        } else {
            feed(0xC0);
            feed64(static_cast<std::uint64_t>(s.value()));
        }
    }
    return h;
}

RunResult run(Configuration start, std::uint64_t seed,
              std::uint64_t activation_budget, bool record_entries,
              const StepCallback& on_step) {
    check_configuration(start);
    Rng rng(seed);
    RunResult result{Trace{}, std::move(start)};
    Trace& trace = result.trace;

    for (;;) {
        const std::vector<Guard> guards = enabled_guards(result.final_config);
        std::vector<NodeId> enabled;
        for (NodeId v = 0; v < result.final_config.graph.node_count(); ++v)
            if (guards[v] != Guard::None) enabled.push_back(v);
        if (enabled.empty()) {
            trace.outcome = Trace::Outcome::Stabilized;
            return result;
        }

        const std::vector<NodeId> subset = draw_subset(enabled, rng);
        if (trace.activations + subset.size() > activation_budget) {
            trace.outcome = Trace::Outcome::BudgetExhausted;
            return result;
        }

        result.final_config = apply_step(result.final_config, subset, guards, rng);
        trace.steps += 1;
        trace.activations += subset.size();
        if (record_entries)
            trace.entries.push_back({subset, config_digest(result.final_config)});
        if (on_step) on_step(trace.steps, subset, result.final_config);
    }
}

bool configuration_correct(const Configuration& config) {
    check_configuration(config);
    const Graph& g = config.graph;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (config.states[v].is_bot() || corrupt(config, v)) return false;

    if (is_orientation(config.scheme)) {
        OrientationCertificate certs;
        certs.bits.reserve(g.node_count());
        for (const NodeState& s : config.states) certs.bits.push_back(s.bits());
        return verify_global(g, certs, orientation_scheme(config.scheme)).accepted;
    }
    TernaryCertificate certs;
    certs.values.reserve(g.node_count());
    for (const NodeState& s : config.states) certs.values.push_back(s.value());
    return verify_st_global(g, certs, *config.labels).accepted;
}

}  // namespace locert
