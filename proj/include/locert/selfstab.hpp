#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "locert/spanning_tree.hpp"

namespace locert {

// Scheme bindings the simulator can run.
enum class SimScheme { Tree, Chordal, K4FreeDismantlable, SpanningTree };
const char* sim_scheme_name(SimScheme s);
SchemeId orientation_scheme(SimScheme s);  // throws for SpanningTree

// Per-node simulator state: a certificate value or the reset state. The
// state space is exactly C_v plus the single extra reset state.
class NodeState {
public:
    static NodeState bot() { return NodeState{}; }
    static NodeState orientation(BitString bits) {
        NodeState s;
        s.cert_ = std::move(bits);
        return s;
    }
    static NodeState ternary(int value) {
        NodeState s;
        s.cert_ = value;
        return s;
    }

    bool is_bot() const { return !cert_.has_value(); }
    bool holds_bits() const {
        return cert_ && std::holds_alternative<BitString>(*cert_);
    }
    bool holds_value() const {
        return cert_ && std::holds_alternative<int>(*cert_);
    }
    const BitString& bits() const { return std::get<BitString>(*cert_); }
    int value() const { return std::get<int>(*cert_); }

    bool operator==(const NodeState&) const = default;

private:
    std::optional<std::variant<BitString, int>> cert_;
};

struct Configuration {
    Graph graph;
    SimScheme scheme = SimScheme::Tree;
    std::optional<RootLabeling> labels;  // SpanningTree input
    std::vector<NodeState> states;
};

// All nodes reset.
Configuration make_configuration(Graph g, SimScheme scheme,
                                 std::optional<RootLabeling> labels = std::nullopt);

enum class Guard { None, S1, S2 };

// Guards, evaluated in order S1 then S2 per node:
//   S1: state != bot and (view not accepted, or some neighbor is bot)
//   S2: state == bot
// A state whose payload does not fit the node's alphabet (wrong bit length,
// value outside {0,1,2}) counts as corruption: it trips S1 at the node
// itself and, like bot, at every neighbor.
std::vector<Guard> enabled_guards(const Configuration& config);

// Uniformly random non-empty subset of the enabled nodes; throws
// NothingEnabled when no guard is enabled.
std::vector<NodeId> schedule(const Configuration& config, Rng& rng);

// Fires the enabled guard of every member simultaneously, all reading the
// pre-step configuration: S1 members reset, S2 members draw a uniformly
// random certificate from their alphabet. Throws EmptySubset /
// MemberNotEnabled.
Configuration step(const Configuration& config, const std::vector<NodeId>& subset,
                   Rng& rng);

// Each victim's state is replaced by a uniform draw from C_v plus bot;
// everyone else is untouched.
Configuration inject_faults(Configuration config, const std::vector<NodeId>& victims,
                            Rng& rng);

// Uniform draw from C_v alone (no bot).
NodeState random_state(const Graph& g, SimScheme scheme, NodeId v, Rng& rng);

std::uint64_t config_digest(const Configuration& config);

struct Trace {
    enum class Outcome { Stabilized, BudgetExhausted };
    struct Entry {
        std::vector<NodeId> activated;
        std::uint64_t digest;  // configuration digest after the step
    };

    Outcome outcome = Outcome::Stabilized;
    std::uint64_t steps = 0;
    std::uint64_t activations = 0;
    std::vector<Entry> entries;  // filled only when requested
};

struct RunResult {
    Trace trace;
    Configuration final_config;
};

using StepCallback = std::function<void(
    std::uint64_t step, const std::vector<NodeId>& activated,
    const Configuration& after)>;

// Iterates schedule+step on one rng stream seeded with `seed` until no
// guard is enabled or the next step would exceed `activation_budget` total
// node-activations. BudgetExhausted is an outcome, not an error.
RunResult run(Configuration start, std::uint64_t seed,
              std::uint64_t activation_budget, bool record_entries = false,
              const StepCallback& on_step = {});

// No bot states and the bound scheme's verifier accepts everywhere.
bool configuration_correct(const Configuration& config);

}  // namespace locert
