#include "cqda/compile.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>

namespace cqda {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(Key const& k) const noexcept
    {
        std::size_t h = k.size();
        for (auto x : k) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

constexpr std::uint32_t unassigned = std::numeric_limits<std::uint32_t>::max();

/// Atom rows with columns sorted by decreasing compile position, so the
/// assigned arguments of an atom always form a prefix of the key columns.
struct AtomData {
    bool positive = true;
    std::vector<std::size_t> vars;  // compile positions, key column order
    std::vector<Row> rows;          // sorted in key column order
};

class Compiler {
  public:
    Compiler(SignedQuery const& q, Database const& db, VarOrder const& order)
        : m_db(db), m_n(order.size()), m_circuit(db.domain(), order.reversed()), m_value(m_n, 0),
          m_assigned(m_n, false)
    {
        validate(q);
        check_schema(q, db);
        for (auto const& a : q.atoms) {
            AtomData data;
            data.positive = a.positive();
            std::vector<std::size_t> pos;
            for (auto const& v : a.args) {
                if (!order.contains(v)) {
                    throw InvalidOrder("compile order misses variable '" + v + "'");
                }
                pos.push_back(order.position(v));
            }
            std::vector<std::size_t> cols(pos.size());
            for (std::size_t i = 0; i < cols.size(); ++i) {
                cols[i] = i;
            }
            std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) { return pos[a] > pos[b]; });
            for (auto c : cols) {
                data.vars.push_back(pos[c]);
            }
            for (auto const& row : db.table(a.symbol).rows) {
                Row r;
                for (auto c : cols) {
                    r.push_back(row[c]);
                }
                data.rows.push_back(std::move(r));
            }
            std::sort(data.rows.begin(), data.rows.end());
            m_atoms.push_back(std::move(data));
        }
    }

    Compiled run()
    {
        std::vector<std::uint32_t> all;
        for (std::uint32_t i = 0; i < m_atoms.size(); ++i) {
            if (m_atoms[i].positive && m_atoms[i].rows.empty()) {
                return finish(Circuit::bot);
            }
            all.push_back(i);
        }
        // Components of the query itself are compiled independently.
        auto comps = components(all);
        std::vector<GateId> parts;
        for (auto const& comp : comps) {
            parts.push_back(solve(comp));
        }
        if (parts.empty()) {
            return finish(Circuit::top);
        }
        if (parts.size() == 1) {
            return finish(parts[0]);
        }
        return finish(m_circuit.add_product(std::move(parts)));
    }

  private:
    struct Frame {
        std::vector<std::uint32_t> atoms;
        Key key;
        std::size_t x = 0;
        Value d = 0;
        bool solving = false;
        std::vector<DecisionEdge> edges;
        std::vector<std::vector<std::uint32_t>> comps;
        std::size_t next_comp = 0;
        std::vector<GateId> results;
    };

    Compiled finish(GateId out)
    {
        m_circuit.set_output(out);
        m_stats.gates = m_circuit.gate_count();
        m_stats.edges = circuit_size(m_circuit);
        return Compiled{std::move(m_circuit), m_stats};
    }

    std::size_t universe_position(std::size_t compile_position) const { return m_n - 1 - compile_position; }

    /// Some row agrees with every assigned argument.
    bool matches(AtomData const& a) const
    {
        Row prefix;
        std::size_t i = 0;
        for (; i < a.vars.size() && m_assigned[a.vars[i]]; ++i) {
            prefix.push_back(m_value[a.vars[i]]);
        }
        auto const p = prefix.size();
        auto lo = std::lower_bound(a.rows.begin(), a.rows.end(), prefix, [p](Row const& row, Row const& key) {
            return std::lexicographical_compare(row.begin(), row.begin() + p, key.begin(), key.end());
        });
        auto hi = std::upper_bound(lo, a.rows.end(), prefix, [p](Row const& key, Row const& row) {
            return std::lexicographical_compare(key.begin(), key.end(), row.begin(), row.begin() + p);
        });
        bool rest_assigned = false;
        for (std::size_t j = i; j < a.vars.size(); ++j) {
            rest_assigned = rest_assigned || m_assigned[a.vars[j]];
        }
        if (!rest_assigned) {
            return lo != hi;
        }
        return std::any_of(lo, hi, [&](Row const& row) {
            for (std::size_t j = i; j < a.vars.size(); ++j) {
                if (m_assigned[a.vars[j]] && row[j] != m_value[a.vars[j]]) {
                    return false;
                }
            }
            return true;
        });
    }

    bool fully_assigned(AtomData const& a) const
    {
        return std::all_of(a.vars.begin(), a.vars.end(), [&](std::size_t v) { return m_assigned[v]; });
    }

    bool mentions(AtomData const& a, std::size_t x) const
    {
        return std::find(a.vars.begin(), a.vars.end(), x) != a.vars.end();
    }

    std::vector<std::vector<std::uint32_t>> components(std::vector<std::uint32_t> const& atoms) const
    {
        std::vector<std::vector<std::size_t>> vars;
        for (auto i : atoms) {
            vars.push_back(m_atoms[i].vars);
        }
        auto part = partition_atoms(vars, m_assigned);
        std::vector<std::vector<std::uint32_t>> out;
        for (auto const& comp : part.components) {
            std::vector<std::uint32_t> ids;
            for (auto i : comp) {
                ids.push_back(atoms[i]);
            }
            std::sort(ids.begin(), ids.end());
            out.push_back(std::move(ids));
        }
        return out;
    }

    Key key_of(std::vector<std::uint32_t> const& atoms) const
    {
        std::vector<std::size_t> vars;
        for (auto i : atoms) {
            vars.insert(vars.end(), m_atoms[i].vars.begin(), m_atoms[i].vars.end());
        }
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        Key key(atoms.begin(), atoms.end());
        key.push_back(unassigned);
        for (auto v : vars) {
            key.push_back(m_assigned[v] ? m_value[v] : unassigned);
        }
        return key;
    }

    std::size_t branch_variable(std::vector<std::uint32_t> const& atoms) const
    {
        std::size_t best = 0;
        bool found = false;
        for (auto i : atoms) {
            for (auto v : m_atoms[i].vars) {
                if (!m_assigned[v] && (!found || v > best)) {
                    best = v;
                    found = true;
                }
            }
        }
        return best;
    }

    /// Cache lookup, or a new frame on the stack.
    std::optional<GateId> request(std::vector<std::uint32_t> atoms)
    {
        Key key = key_of(atoms);
        auto it = m_cache.find(key);
        if (it != m_cache.end()) {
            ++m_stats.cache_hits;
            return it->second;
        }
        ++m_stats.rec_calls;
        Frame f;
        f.x = branch_variable(atoms);
        f.atoms = std::move(atoms);
        f.key = std::move(key);
        m_stack.push_back(std::move(f));
        return std::nullopt;
    }

    GateId solve(std::vector<std::uint32_t> const& atoms)
    {
        if (auto hit = request(atoms)) {
            return *hit;
        }
        std::size_t const d_size = m_db.domain().size();
        GateId result = Circuit::bot;
        auto deliver = [&](GateId g) {
            if (m_stack.empty()) {
                result = g;
            } else {
                m_stack.back().results.push_back(g);
                ++m_stack.back().next_comp;
            }
        };

        while (!m_stack.empty()) {
            Frame& f = m_stack.back();
            if (!f.solving) {
                if (f.d == d_size) {
                    GateId g = m_circuit.add_decision(universe_position(f.x), std::move(f.edges));
                    m_cache.emplace(std::move(f.key), g);
                    m_stack.pop_back();
                    deliver(g);
                    continue;
                }
                m_assigned[f.x] = true;
                m_value[f.x] = f.d;
                if (!consistent(f.atoms, f.x)) {
                    f.edges.push_back({f.d, Circuit::bot});
                    m_assigned[f.x] = false;
                    ++f.d;
                    continue;
                }
                std::vector<std::uint32_t> kept;
                for (auto i : f.atoms) {
                    AtomData const& a = m_atoms[i];
                    if (!a.positive && mentions(a, f.x) && !matches(a)) {
                        continue;
                    }
                    kept.push_back(i);
                }
                f.comps = components(kept);
                f.next_comp = 0;
                f.results.clear();
                f.solving = true;
            }

            Frame& g = m_stack.back();
            if (g.next_comp == g.comps.size()) {
                GateId child = Circuit::top;
                if (g.results.size() == 1) {
                    child = g.results[0];
                } else if (g.results.size() > 1) {
                    child = m_circuit.add_product(g.results);
                }
                g.edges.push_back({g.d, child});
                m_assigned[g.x] = false;
                ++g.d;
                g.solving = false;
                continue;
            }
            if (auto hit = request(g.comps[g.next_comp])) {
                m_stack.back().results.push_back(*hit);
                ++m_stack.back().next_comp;
            }
        }
        return result;
    }

    bool consistent(std::vector<std::uint32_t> const& atoms, std::size_t x) const
    {
        for (auto i : atoms) {
            AtomData const& a = m_atoms[i];
            if (!mentions(a, x)) {
                continue;
            }
            if (a.positive) {
                if (!matches(a)) {
                    return false;
                }
            } else if (fully_assigned(a) && matches(a)) {
                return false;
            }
        }
        return true;
    }

    Database const& m_db;
    std::size_t m_n;
    Circuit m_circuit;
    std::vector<AtomData> m_atoms;
    std::vector<Value> m_value;
    std::vector<bool> m_assigned;
    std::vector<Frame> m_stack;
    std::unordered_map<Key, GateId, KeyHash> m_cache;
    CompileStats m_stats;
};

}  // namespace

Compiled dpll_compile(SignedQuery const& q, Database const& db, VarOrder const& compile_order)
{
    return Compiler(q, db, compile_order).run();
}

}  // namespace cqda
