#include "cqda/access.hpp"

#include <algorithm>

namespace cqda {

AccessIndex::AccessIndex(Circuit const& c)
{
    std::size_t const n = c.universe().size();
    BigInt const d = static_cast<unsigned long>(c.domain().size());
    m_power.resize(n + 1);
    m_power[0] = 1;
    for (std::size_t e = 1; e <= n; ++e) {
        m_power[e] = m_power[e - 1] * d;
    }

    std::size_t const gates = c.gate_count();
    m_rel.resize(gates);
    m_nrel.resize(gates);
    m_var_count.resize(gates);
    for (GateId g = 0; g < gates; ++g) {
        Gate const& gate = c.gate(g);
        m_var_count[g] = c.vars(g).count();
        switch (gate.kind) {
        case GateKind::top:
            m_rel[g] = 1;
            break;
        case GateKind::bot:
            m_rel[g] = 0;
            break;
        case GateKind::product:
            m_rel[g] = 1;
            for (auto child : gate.children) {
                m_rel[g] *= m_rel[child];
            }
            break;
        case GateKind::decision: {
            BigInt running = 0;
            for (auto const& e : gate.edges) {
                running += m_rel[e.child] * m_power[m_var_count[g] - 1 - m_var_count[e.child]];
                m_nrel[g].push_back(running);
            }
            m_rel[g] = running;
            break;
        }
        }
    }
}

AccessIndex preprocess(Circuit const& c)
{
    return AccessIndex(c);
}

BigInt count(Circuit const& c, AccessIndex const& idx)
{
    GateId out = c.output();
    return idx.rel_count(out) * idx.power(c.universe().size() - idx.var_count(out));
}

FrontierWalker::FrontierWalker(Circuit const& c, AccessIndex const& idx) : m_c(c), m_idx(idx)
{
    expand(c.output());
}

void FrontierWalker::expand(GateId root)
{
    std::vector<GateId> todo{root};
    while (!todo.empty()) {
        GateId g = todo.back();
        todo.pop_back();
        Gate const& gate = m_c.gate(g);
        switch (gate.kind) {
        case GateKind::top:
            break;
        case GateKind::bot:
            m_empty = true;
            break;
        case GateKind::product:
            todo.insert(todo.end(), gate.children.begin(), gate.children.end());
            break;
        case GateKind::decision:
            m_gates.push_back(g);
            m_covered += m_idx.var_count(g);
            break;
        }
    }
}

std::ptrdiff_t FrontierWalker::next_gate() const
{
    for (std::size_t i = 0; i < m_gates.size(); ++i) {
        if (m_c.gate(m_gates[i]).var == m_assigned) {
            return static_cast<std::ptrdiff_t>(i);
        }
    }
    return -1;
}

BigInt FrontierWalker::others_product(std::ptrdiff_t skip, std::size_t free_vars) const
{
    BigInt p = m_idx.power(free_vars);
    for (std::size_t i = 0; i < m_gates.size(); ++i) {
        if (static_cast<std::ptrdiff_t>(i) != skip) {
            p *= m_idx.rel_count(m_gates[i]);
        }
    }
    return p;
}

void FrontierWalker::assign(Value d)
{
    if (m_assigned >= m_c.universe().size()) {
        throw Error("all variables are already assigned");
    }
    if (!m_empty) {
        auto vi = next_gate();
        if (vi >= 0) {
            GateId v = m_gates[static_cast<std::size_t>(vi)];
            m_gates.erase(m_gates.begin() + vi);
            m_covered -= m_idx.var_count(v);
            auto const& edges = m_c.gate(v).edges;
            auto it = std::lower_bound(edges.begin(), edges.end(), d,
                                       [](DecisionEdge const& e, Value x) { return e.value < x; });
            if (it == edges.end() || it->value != d) {
                m_empty = true;
            } else {
                expand(it->child);
            }
        } else if (d >= m_c.domain().size()) {
            m_empty = true;
        }
    }
    ++m_assigned;
}

BigInt FrontierWalker::extensions() const
{
    if (m_empty) {
        return 0;
    }
    return others_product(-1, m_c.universe().size() - m_assigned - m_covered);
}

std::pair<Value, BigInt> FrontierWalker::count_leq(BigInt const& n) const
{
    std::size_t const vars = m_c.universe().size();
    if (m_assigned >= vars) {
        throw Error("all variables are already assigned");
    }
    if (m_empty || n < 1) {
        throw OutOfRange("no answer at that position");
    }
    auto vi = next_gate();
    if (vi >= 0) {
        GateId v = m_gates[static_cast<std::size_t>(vi)];
        BigInt p = others_product(vi, vars - m_assigned - m_covered);
        if (p == 0) {
            throw OutOfRange("no answer at that position");
        }
        BigInt target = (n + p - 1) / p;
        auto const& nrel = m_idx.nrel(v);
        auto it = std::lower_bound(nrel.begin(), nrel.end(), target);
        if (it == nrel.end()) {
            throw OutOfRange("no answer at that position");
        }
        auto i = static_cast<std::size_t>(it - nrel.begin());
        BigInt below = i > 0 ? BigInt(nrel[i - 1] * p) : BigInt(0);
        return {m_c.gate(v).edges[i].value, below};
    }
    BigInt p = others_product(-1, vars - m_assigned - 1 - m_covered);
    if (p == 0) {
        throw OutOfRange("no answer at that position");
    }
    BigInt r = (n + p - 1) / p;
    if (r > static_cast<unsigned long>(m_c.domain().size())) {
        throw OutOfRange("no answer at that position");
    }
    BigInt below = (r - 1) * p;
    return {static_cast<Value>(r.get_ui() - 1), below};
}

BigInt FrontierWalker::count_less(Value d) const
{
    std::size_t const vars = m_c.universe().size();
    if (m_empty) {
        return 0;
    }
    auto vi = next_gate();
    if (vi >= 0) {
        GateId v = m_gates[static_cast<std::size_t>(vi)];
        auto const& edges = m_c.gate(v).edges;
        auto it = std::lower_bound(edges.begin(), edges.end(), d,
                                   [](DecisionEdge const& e, Value x) { return e.value < x; });
        auto i = static_cast<std::size_t>(it - edges.begin());
        if (i == 0) {
            return 0;
        }
        return m_idx.nrel(v)[i - 1] * others_product(vi, vars - m_assigned - m_covered);
    }
    Value below = std::min<Value>(d, static_cast<Value>(m_c.domain().size()));
    return BigInt(static_cast<unsigned long>(below)) * others_product(-1, vars - m_assigned - 1 - m_covered);
}

Frontier frontier(Circuit const& c, AccessIndex const& idx, Row const& prefix)
{
    if (prefix.size() > c.universe().size()) {
        throw NotAPrefix("assignment is longer than the universe");
    }
    FrontierWalker w(c, idx);
    for (auto v : prefix) {
        w.assign(v);
    }
    if (w.empty()) {
        return Frontier{true, {}};
    }
    return Frontier{false, w.gates()};
}

Frontier frontier(Circuit const& c, AccessIndex const& idx, Tuple const& tau)
{
    VarOrder const& u = c.universe();
    Row prefix;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (i >= u.size()) {
            throw NotAPrefix("assignment binds variables outside the universe");
        }
        auto it = tau.find(u[i]);
        if (it == tau.end()) {
            throw NotAPrefix("assignment does not bind a prefix of the universe");
        }
        prefix.push_back(it->second);
    }
    return frontier(c, idx, prefix);
}

std::pair<Value, BigInt> count_leq(Circuit const& c, AccessIndex const& idx, Row const& prefix, BigInt const& n)
{
    FrontierWalker w(c, idx);
    for (auto v : prefix) {
        w.assign(v);
    }
    return w.count_leq(n);
}

Row direct_access(Circuit const& c, AccessIndex const& idx, BigInt const& k)
{
    BigInt const total = count(c, idx);
    if (k < 1 || k > total) {
        throw OutOfRange("k out of range (count=" + total.get_str() + ")");
    }
    FrontierWalker w(c, idx);
    BigInt rest = k;
    Row out;
    for (std::size_t p = 0; p < c.universe().size(); ++p) {
        auto [d, below] = w.count_leq(rest);
        rest -= below;
        w.assign(d);
        out.push_back(d);
    }
    return out;
}

Tuple direct_access_tuple(Circuit const& c, AccessIndex const& idx, BigInt const& k)
{
    return row_to_tuple(direct_access(c, idx, k), c.universe());
}

BigInt rank(Circuit const& c, AccessIndex const& idx, Row const& t)
{
    if (t.size() != c.universe().size()) {
        throw InvalidQuery("tuple length differs from the universe size");
    }
    BigInt lo = 0;
    BigInt hi = count(c, idx);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (direct_access(c, idx, mid) <= t) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

BigInt rank_by_prefix_counts(Circuit const& c, AccessIndex const& idx, Row const& t)
{
    if (t.size() != c.universe().size()) {
        throw InvalidQuery("tuple length differs from the universe size");
    }
    FrontierWalker w(c, idx);
    BigInt total = 0;
    for (auto v : t) {
        total += w.count_less(v);
        w.assign(v);
        if (w.empty()) {
            return total;
        }
    }
    return total + w.extensions();
}

bool contains(Circuit const& c, AccessIndex const& idx, Row const& t)
{
    if (t.size() != c.universe().size()) {
        return false;
    }
    FrontierWalker w(c, idx);
    for (auto v : t) {
        w.assign(v);
    }
    return !w.empty();
}

std::vector<Row> enumerate(Circuit const& c, AccessIndex const& idx, BigInt const& from, std::size_t limit)
{
    std::vector<Row> out;
    if (limit == 0) {
        return out;
    }
    BigInt const total = count(c, idx);
    if (from < 1 || from > total) {
        throw OutOfRange("k out of range (count=" + total.get_str() + ")");
    }
    for (BigInt k = from; k <= total && out.size() < limit; ++k) {
        out.push_back(direct_access(c, idx, k));
    }
    return out;
}

Row tuple_to_row(Tuple const& t, VarOrder const& order)
{
    Row r;
    for (auto const& x : order) {
        auto it = t.find(x);
        if (it == t.end()) {
            throw InvalidQuery("tuple misses variable '" + x + "'");
        }
        r.push_back(it->second);
    }
    if (t.size() != order.size()) {
        throw InvalidQuery("tuple binds variables outside the order");
    }
    return r;
}

Tuple row_to_tuple(Row const& r, VarOrder const& order)
{
    Tuple t;
    for (std::size_t i = 0; i < order.size(); ++i) {
        t[order[i]] = r.at(i);
    }
    return t;
}

}  // namespace cqda
