#include "cqda/project.hpp"

#include <algorithm>

namespace cqda {

Circuit project_circuit(Circuit const& c, AccessIndex const& idx, std::size_t keep)
{
    VarOrder const& u = c.universe();
    if (keep > u.size()) {
        throw InvalidOrder("cannot keep more variables than the universe has");
    }
    std::vector<std::string> kept(u.vars().begin(), u.vars().begin() + static_cast<std::ptrdiff_t>(keep));
    Circuit out(c.domain(), VarOrder(kept));

    std::vector<GateId> map(c.gate_count(), Circuit::bot);
    for (GateId g : topological_order(c)) {
        Gate const& gate = c.gate(g);
        switch (gate.kind) {
        case GateKind::top:
            map[g] = Circuit::top;
            break;
        case GateKind::bot:
            map[g] = Circuit::bot;
            break;
        case GateKind::decision:
            if (gate.var >= keep) {
                map[g] = idx.rel_count(g) != 0 ? Circuit::top : Circuit::bot;
            } else {
                std::vector<DecisionEdge> edges;
                for (auto const& e : gate.edges) {
                    edges.push_back({e.value, map[e.child]});
                }
                map[g] = out.add_decision(gate.var, std::move(edges));
            }
            break;
        case GateKind::product: {
            std::vector<GateId> children;
            bool dead = false;
            for (auto child : gate.children) {
                GateId m = map[child];
                dead = dead || m == Circuit::bot;
                if (m != Circuit::top) {
                    children.push_back(m);
                }
            }
            if (dead) {
                map[g] = Circuit::bot;
            } else if (children.empty()) {
                map[g] = Circuit::top;
            } else if (children.size() == 1) {
                map[g] = children[0];
            } else {
                map[g] = out.add_product(std::move(children));
            }
            break;
        }
        }
    }
    out.set_output(map[c.output()]);
    return out;
}

VarOrder normalize_order(SignedQuery const& q, std::optional<VarOrder> const& user)
{
    validate(q);
    auto const all = q.vars();
    auto const free = q.free_vars();
    auto is_free = [&](std::string const& x) { return std::find(free.begin(), free.end(), x) != free.end(); };

    std::vector<std::string> order;
    if (!user) {
        order = free;
    } else {
        bool seen_bound = false;
        for (auto const& x : *user) {
            if (std::find(all.begin(), all.end(), x) == all.end()) {
                throw InvalidOrder("order lists '" + x + "', which is not a query variable");
            }
            if (is_free(x)) {
                if (seen_bound) {
                    throw NotFreeConnex("free variable '" + x + "' comes after a non-free variable");
                }
            } else {
                seen_bound = true;
            }
            order.push_back(x);
        }
        for (auto const& y : free) {
            if (!user->contains(y)) {
                throw InvalidOrder("order must list free variable '" + y + "'");
            }
        }
    }
    for (auto const& x : all) {
        if (std::find(order.begin(), order.end(), x) == order.end()) {
            order.push_back(x);
        }
    }
    return VarOrder(order);
}

QueryAccess::QueryAccess(SignedQuery const& q, Database const& db, std::optional<VarOrder> const& order,
                         AccessOptions options)
    : m_order(normalize_order(q, order)),
      m_answer_order(m_order.restricted(q.free_vars())),
      m_domain(db.domain()),
      m_binarized(options.binarize),
      m_circuit(build(q, db)),
      m_index(m_circuit),
      m_count(cqda::count(m_circuit, m_index))
{
}

Circuit QueryAccess::build(SignedQuery const& q, Database const& db)
{
    std::size_t keep = m_answer_order.size();
    Circuit full = [&] {
        if (m_binarized) {
            auto compiled = compile_binarized(q, db, m_order.reversed());
            m_codec = compiled.codec;
            m_stats = compiled.stats;
            keep *= m_codec.bits();
            return std::move(compiled.circuit);
        }
        auto compiled = dpll_compile(q, db, m_order.reversed());
        m_stats = compiled.stats;
        return std::move(compiled.circuit);
    }();
    m_compiled_size = circuit_size(full);
    return project_circuit(full, AccessIndex(full), keep);
}

Row QueryAccess::access(BigInt const& k) const
{
    if (k < 1 || k > m_count) {
        throw OutOfRange("k out of range (count=" + m_count.get_str() + ")");
    }
    Row row = direct_access(m_circuit, m_index, k);
    return m_binarized ? m_codec.debin_row(row, m_answer_order.size()) : row;
}

Tuple QueryAccess::access_tuple(BigInt const& k) const
{
    return row_to_tuple(access(k), m_answer_order);
}

BigInt QueryAccess::rank(Row const& t) const
{
    if (t.size() != m_answer_order.size()) {
        throw InvalidQuery("tuple length differs from the number of free variables");
    }
    return cqda::rank(m_circuit, m_index, m_binarized ? m_codec.bin_row(t) : t);
}

bool QueryAccess::contains(Row const& t) const
{
    if (t.size() != m_answer_order.size()) {
        return false;
    }
    if (std::any_of(t.begin(), t.end(), [&](Value v) { return v >= m_domain.size(); })) {
        return false;
    }
    return cqda::contains(m_circuit, m_index, m_binarized ? m_codec.bin_row(t) : t);
}

std::vector<Row> QueryAccess::enumerate(BigInt const& from, std::size_t limit) const
{
    std::vector<Row> out;
    if (limit == 0) {
        return out;
    }
    if (from < 1 || from > m_count) {
        throw OutOfRange("k out of range (count=" + m_count.get_str() + ")");
    }
    for (BigInt k = from; k <= m_count && out.size() < limit; ++k) {
        out.push_back(access(k));
    }
    return out;
}

QueryAccess da_conjunctive(SignedQuery const& q, Database const& db, std::optional<VarOrder> const& order,
                           AccessOptions options)
{
    return QueryAccess(q, db, order, options);
}

}  // namespace cqda
