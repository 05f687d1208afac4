#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cqda/relations.hpp"

namespace cqda {

using GateId = std::uint32_t;
/// Bitset over the circuit's universe positions.
using VarSet = boost::dynamic_bitset<>;

enum class GateKind { top, bot, decision, product };

struct DecisionEdge {
    Value value;
    GateId child;

    bool operator==(DecisionEdge const&) const = default;
};

struct Gate {
    GateKind kind = GateKind::top;
    /// Universe position of the tested variable (decision gates only).
    std::size_t var = 0;
    /// Sorted by value, values distinct (decision gates only).
    std::vector<DecisionEdge> edges;
    /// Product inputs.
    std::vector<GateId> children;
};

/// Append-only gate arena. Gate 0 is the shared Top, gate 1 the shared Bot.
/// A gate's inputs must already exist when it is added, so ids are a
/// topological order.
class Circuit {
  public:
    static constexpr GateId top = 0;
    static constexpr GateId bot = 1;

    Circuit(Domain domain, VarOrder universe);

    GateId add_decision(std::size_t var, std::vector<DecisionEdge> edges);
    GateId add_product(std::vector<GateId> children);
    void set_output(GateId id);

    GateId output() const { return m_output; }
    Gate const& gate(GateId id) const { return m_gates.at(id); }
    std::size_t gate_count() const { return m_gates.size(); }
    VarSet const& vars(GateId id) const { return m_vars.at(id); }
    Domain const& domain() const { return m_domain; }
    VarOrder const& universe() const { return m_universe; }

  private:
    void check_child(GateId child) const;

    Domain m_domain;
    VarOrder m_universe;
    std::vector<Gate> m_gates;
    std::vector<VarSet> m_vars;
    GateId m_output = top;
};

/// Number of DAG edges: decision edges plus product inputs.
std::size_t circuit_size(Circuit const& c);

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> problems;
};

Diagnostics validate_decomposable(Circuit const& c);
/// Every decision gate tests the order-minimum of its variable set.
bool validate_ordered(Circuit const& c, VarOrder const& order);

/// Gates reachable from the output, inputs before the gates using them.
std::vector<GateId> topological_order(Circuit const& c);
/// Non-product gates reachable from v through product gates only.
std::vector<GateId> sink(Circuit const& c, GateId v);

/// rel(v) over var(v), columns in universe order. Throws TooLarge past 2^22 rows.
Relation gate_relation(Circuit const& c, GateId v);
/// rel(out) x D^{X \ var(out)}, columns in universe order.
Relation semantics_bruteforce(Circuit const& c);

/// Drops Bot edges and gates with empty relations.
Circuit prune(Circuit const& c);

/// Text form: header lines `domain`, `universe`, `output`, then one gate per
/// line as `id kind var [value->id ...]`, inputs first.
std::string dump_circuit(Circuit const& c);
/// Inverse of dump_circuit; gate lines may appear in any order.
/// Throws CycleDetected or InvalidCircuit.
Circuit load_circuit(std::string const& text);

}  // namespace cqda
