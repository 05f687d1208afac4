#include "cqda/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace cqda {

Circuit::Circuit(Domain domain, VarOrder universe) : m_domain(std::move(domain)), m_universe(std::move(universe))
{
    m_gates.push_back(Gate{GateKind::top, 0, {}, {}});
    m_gates.push_back(Gate{GateKind::bot, 0, {}, {}});
    m_vars.emplace_back(m_universe.size());
    m_vars.emplace_back(m_universe.size());
}

void Circuit::check_child(GateId child) const
{
    if (child >= m_gates.size()) {
        throw InvalidCircuit("gate input " + std::to_string(child) + " does not exist yet");
    }
}

GateId Circuit::add_decision(std::size_t var, std::vector<DecisionEdge> edges)
{
    if (var >= m_universe.size()) {
        throw InvalidCircuit("decision variable outside the universe");
    }
    VarSet vars(m_universe.size());
    vars.set(var);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].value >= m_domain.size()) {
            throw InvalidCircuit("decision edge value outside the domain");
        }
        if (i > 0 && edges[i - 1].value >= edges[i].value) {
            throw InvalidCircuit("decision edges must be sorted by value without repeats");
        }
        check_child(edges[i].child);
        vars |= m_vars[edges[i].child];
    }
    m_gates.push_back(Gate{GateKind::decision, var, std::move(edges), {}});
    m_vars.push_back(std::move(vars));
    return static_cast<GateId>(m_gates.size() - 1);
}

GateId Circuit::add_product(std::vector<GateId> children)
{
    if (children.size() < 2) {
        throw InvalidCircuit("a product gate needs at least two inputs");
    }
    VarSet vars(m_universe.size());
    for (auto child : children) {
        check_child(child);
        vars |= m_vars[child];
    }
    m_gates.push_back(Gate{GateKind::product, 0, {}, std::move(children)});
    m_vars.push_back(std::move(vars));
    return static_cast<GateId>(m_gates.size() - 1);
}

void Circuit::set_output(GateId id)
{
    check_child(id);
    m_output = id;
}

namespace {

std::vector<GateId> reachable_from(Circuit const& c, GateId root)
{
    std::vector<bool> seen(c.gate_count(), false);
    std::vector<GateId> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        GateId id = stack.back();
        stack.pop_back();
        auto const& g = c.gate(id);
        auto visit = [&](GateId child) {
            if (!seen[child]) {
                seen[child] = true;
                stack.push_back(child);
            }
        };
        for (auto const& e : g.edges) {
            visit(e.child);
        }
        for (auto child : g.children) {
            visit(child);
        }
    }
    // Arena ids are already topological.
    std::vector<GateId> out;
    for (GateId id = 0; id < c.gate_count(); ++id) {
        if (seen[id]) {
            out.push_back(id);
        }
    }
    return out;
}

}  // namespace

std::vector<GateId> topological_order(Circuit const& c)
{
    return reachable_from(c, c.output());
}

std::size_t circuit_size(Circuit const& c)
{
    std::size_t n = 0;
    for (auto id : topological_order(c)) {
        n += c.gate(id).edges.size() + c.gate(id).children.size();
    }
    return n;
}

Diagnostics validate_decomposable(Circuit const& c)
{
    Diagnostics d;
    for (auto id : topological_order(c)) {
        auto const& g = c.gate(id);
        if (g.kind == GateKind::product) {
            VarSet seen(c.universe().size());
            for (auto child : g.children) {
                if (seen.intersects(c.vars(child))) {
                    d.ok = false;
                    d.problems.push_back("product gate " + std::to_string(id) + " has overlapping inputs");
                    break;
                }
                seen |= c.vars(child);
            }
        } else if (g.kind == GateKind::decision) {
            for (auto const& e : g.edges) {
                if (c.vars(e.child).test(g.var)) {
                    d.ok = false;
                    d.problems.push_back("decision gate " + std::to_string(id) + " tests " +
                                         c.universe()[g.var] + " again below itself");
                    break;
                }
            }
        }
    }
    return d;
}

bool validate_ordered(Circuit const& c, VarOrder const& order)
{
    std::vector<std::size_t> rank(c.universe().size());
    for (std::size_t i = 0; i < c.universe().size(); ++i) {
        rank[i] = order.position(c.universe()[i]);
    }
    for (auto id : topological_order(c)) {
        auto const& g = c.gate(id);
        if (g.kind != GateKind::decision) {
            continue;
        }
        auto const& vars = c.vars(id);
        for (auto i = vars.find_first(); i != VarSet::npos; i = vars.find_next(i)) {
            if (i != g.var && rank[i] < rank[g.var]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<GateId> sink(Circuit const& c, GateId v)
{
    std::vector<GateId> out;
    std::vector<GateId> stack{v};
    while (!stack.empty()) {
        GateId id = stack.back();
        stack.pop_back();
        auto const& g = c.gate(id);
        if (g.kind == GateKind::product) {
            for (auto it = g.children.rbegin(); it != g.children.rend(); ++it) {
                stack.push_back(*it);
            }
        } else {
            out.push_back(id);
        }
    }
    return out;
}

namespace {

std::vector<std::string> var_names(Circuit const& c, VarSet const& vars)
{
    std::vector<std::string> out;
    for (auto i = vars.find_first(); i != VarSet::npos; i = vars.find_next(i)) {
        out.push_back(c.universe()[i]);
    }
    return out;
}

}  // namespace

Relation gate_relation(Circuit const& c, GateId v)
{
    std::size_t const limit = std::size_t{1} << 22;
    std::unordered_map<GateId, Relation> memo;
    std::size_t const d = c.domain().size();

    for (auto id : reachable_from(c, v)) {
        auto const& g = c.gate(id);
        auto const& vars = c.vars(id);
        std::vector<std::string> columns = var_names(c, vars);
        double space = 1;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            space *= static_cast<double>(d);
        }
        if (space > double(limit)) {
            throw TooLarge("gate relation exceeds 2^22 tuples");
        }

        switch (g.kind) {
        case GateKind::top:
            memo.emplace(id, Relation::unit());
            break;
        case GateKind::bot:
            memo.emplace(id, Relation({}, {}));
            break;
        case GateKind::product: {
            Relation r = Relation::unit();
            for (auto child : g.children) {
                r = join(r, memo.at(child));
            }
            memo.emplace(id, r.reorder(columns));
            break;
        }
        case GateKind::decision: {
            std::vector<Row> rows;
            for (auto const& e : g.edges) {
                Relation const& child = memo.at(e.child);
                std::vector<std::string> pad;
                for (auto const& name : columns) {
                    if (name != c.universe()[g.var] && !child.has_column(name)) {
                        pad.push_back(name);
                    }
                }
                Relation x = Relation({c.universe()[g.var]}, {Row{e.value}});
                Relation r = join(join(x, child), Relation::full(pad, c.domain())).reorder(columns);
                rows.insert(rows.end(), r.rows().begin(), r.rows().end());
            }
            memo.emplace(id, Relation(columns, std::move(rows)));
            break;
        }
        }
    }
    return memo.at(v);
}

Relation semantics_bruteforce(Circuit const& c)
{
    Relation out = gate_relation(c, c.output());
    std::vector<std::string> pad;
    for (auto const& v : c.universe()) {
        if (!out.has_column(v)) {
            pad.push_back(v);
        }
    }
    double space = 1;
    for (std::size_t i = 0; i < c.universe().size(); ++i) {
        space *= static_cast<double>(c.domain().size());
    }
    if (space > double(std::size_t{1} << 22)) {
        throw TooLarge("circuit relation exceeds 2^22 tuples");
    }
    return join(out, Relation::full(pad, c.domain())).reorder(c.universe().vars());
}

Circuit prune(Circuit const& c)
{
    Circuit out(c.domain(), c.universe());
    std::unordered_map<GateId, GateId> map{{Circuit::top, Circuit::top}, {Circuit::bot, Circuit::bot}};
    for (auto id : topological_order(c)) {
        if (id == Circuit::top || id == Circuit::bot) {
            continue;
        }
        auto const& g = c.gate(id);
        if (g.kind == GateKind::product) {
            std::vector<GateId> children;
            bool empty = false;
            for (auto child : g.children) {
                GateId m = map.at(child);
                empty = empty || m == Circuit::bot;
                children.push_back(m);
            }
            map[id] = empty ? Circuit::bot : out.add_product(std::move(children));
        } else if (g.kind == GateKind::decision) {
            std::vector<DecisionEdge> edges;
            for (auto const& e : g.edges) {
                GateId m = map.at(e.child);
                if (m != Circuit::bot) {
                    edges.push_back({e.value, m});
                }
            }
            map[id] = edges.empty() ? Circuit::bot : out.add_decision(g.var, std::move(edges));
        }
    }
    out.set_output(map.at(c.output()));
    return out;
}

namespace {

bool needs_quotes(std::string const& s)
{
    if (s.empty() || s[0] == '"') {
        return true;
    }
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '-' || ch == '>') {
            return true;
        }
    }
    return false;
}

std::string token(std::string const& s)
{
    return needs_quotes(s) ? nlohmann::json(s).dump() : s;
}

class LineReader {
  public:
    explicit LineReader(std::string const& line) : m_line(line) {}

    bool done()
    {
        skip();
        return m_pos >= m_line.size();
    }

    /// Bare word or JSON string; stops before "->" when `edge` is set.
    std::string word(bool edge = false)
    {
        skip();
        if (m_pos >= m_line.size()) {
            throw InvalidCircuit("unexpected end of line: " + m_line);
        }
        if (m_line[m_pos] == '"') {
            std::size_t end = m_pos + 1;
            while (end < m_line.size() && m_line[end] != '"') {
                end += m_line[end] == '\\' ? 2 : 1;
            }
            if (end >= m_line.size()) {
                throw InvalidCircuit("unterminated string: " + m_line);
            }
            std::string quoted = m_line.substr(m_pos, end + 1 - m_pos);
            m_pos = end + 1;
            return nlohmann::json::parse(quoted).get<std::string>();
        }
        std::size_t start = m_pos;
        while (m_pos < m_line.size() && !std::isspace(static_cast<unsigned char>(m_line[m_pos]))) {
            if (edge && m_line.compare(m_pos, 2, "->") == 0) {
                break;
            }
            ++m_pos;
        }
        return m_line.substr(start, m_pos - start);
    }

    bool arrow()
    {
        if (m_line.compare(m_pos, 2, "->") == 0) {
            m_pos += 2;
            return true;
        }
        return false;
    }

  private:
    void skip()
    {
        while (m_pos < m_line.size() && std::isspace(static_cast<unsigned char>(m_line[m_pos]))) {
            ++m_pos;
        }
    }

    std::string const& m_line;
    std::size_t m_pos = 0;
};

long parse_id(std::string const& s)
{
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size() || v < 0) {
            throw InvalidCircuit("bad gate id '" + s + "'");
        }
        return v;
    } catch (std::logic_error const&) {
        throw InvalidCircuit("bad gate id '" + s + "'");
    }
}

struct RawGate {
    GateKind kind;
    std::string var;
    std::vector<std::pair<std::string, long>> edges;
    std::vector<long> children;
};

}  // namespace

std::string dump_circuit(Circuit const& c)
{
    std::ostringstream out;
    out << "domain " << nlohmann::json(c.domain().values()).dump() << "\n";
    out << "universe " << nlohmann::json(c.universe().vars()).dump() << "\n";
    out << "output " << c.output() << "\n";
    for (auto id : topological_order(c)) {
        auto const& g = c.gate(id);
        out << id;
        switch (g.kind) {
        case GateKind::top:
            out << " top";
            break;
        case GateKind::bot:
            out << " bot";
            break;
        case GateKind::decision:
            out << " dec " << token(c.universe()[g.var]);
            for (auto const& e : g.edges) {
                out << " " << token(c.domain().value(e.value)) << "->" << e.child;
            }
            break;
        case GateKind::product:
            out << " prod";
            for (auto child : g.children) {
                out << " " << child;
            }
            break;
        }
        out << "\n";
    }
    return out.str();
}

Circuit load_circuit(std::string const& text)
{
    std::istringstream in(text);
    std::string line;
    std::optional<Domain> domain;
    std::optional<VarOrder> universe;
    std::optional<long> output;
    std::map<long, RawGate> raw;

    while (std::getline(in, line)) {
        LineReader r(line);
        if (r.done()) {
            continue;
        }
        std::string head = r.word();
        if (head == "domain" || head == "universe") {
            auto pos = line.find(head) + head.size();
            auto values = nlohmann::json::parse(line.substr(pos)).get<std::vector<std::string>>();
            if (head == "domain") {
                domain = Domain(values);
            } else {
                universe = VarOrder(values);
            }
            continue;
        }
        if (head == "output") {
            output = parse_id(r.word());
            continue;
        }
        long id = parse_id(head);
        std::string kind = r.word();
        RawGate g{GateKind::top, {}, {}, {}};
        if (kind == "top") {
            g.kind = GateKind::top;
        } else if (kind == "bot") {
            g.kind = GateKind::bot;
        } else if (kind == "dec") {
            g.kind = GateKind::decision;
            g.var = r.word();
            while (!r.done()) {
                std::string value = r.word(true);
                if (!r.arrow()) {
                    throw InvalidCircuit("expected value->id in: " + line);
                }
                g.edges.emplace_back(value, parse_id(r.word()));
            }
        } else if (kind == "prod") {
            g.kind = GateKind::product;
            while (!r.done()) {
                g.children.push_back(parse_id(r.word()));
            }
        } else {
            throw InvalidCircuit("unknown gate kind '" + kind + "'");
        }
        if (!raw.emplace(id, std::move(g)).second) {
            throw InvalidCircuit("gate " + std::to_string(id) + " defined twice");
        }
    }
    if (!domain || !universe || !output) {
        throw InvalidCircuit("circuit text needs domain, universe and output lines");
    }

    Circuit c(*domain, *universe);
    std::map<long, GateId> placed;
    std::map<long, int> state;  // 1 = on stack, 2 = placed
    auto place = [&](long root) {
        std::vector<std::pair<long, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [id, expanded] = stack.back();
            stack.pop_back();
            if (state[id] == 2) {
                continue;
            }
            auto it = raw.find(id);
            if (it == raw.end()) {
                throw InvalidCircuit("gate " + std::to_string(id) + " is referenced but not defined");
            }
            RawGate const& g = it->second;
            if (!expanded) {
                if (state[id] == 1) {
                    throw CycleDetected("gate " + std::to_string(id) + " lies on a cycle");
                }
                state[id] = 1;
                stack.push_back({id, true});
                auto visit = [&](long child) {
                    if (state[child] == 1) {
                        throw CycleDetected("gate " + std::to_string(child) + " lies on a cycle");
                    }
                    if (state[child] == 0) {
                        stack.push_back({child, false});
                    }
                };
                for (auto const& e : g.edges) {
                    visit(e.second);
                }
                for (auto child : g.children) {
                    visit(child);
                }
                continue;
            }
            GateId out = Circuit::top;
            switch (g.kind) {
            case GateKind::top:
                out = Circuit::top;
                break;
            case GateKind::bot:
                out = Circuit::bot;
                break;
            case GateKind::decision: {
                std::vector<DecisionEdge> edges;
                for (auto const& [value, child] : g.edges) {
                    edges.push_back({domain->index(value), placed.at(child)});
                }
                std::sort(edges.begin(), edges.end(),
                          [](DecisionEdge const& a, DecisionEdge const& b) { return a.value < b.value; });
                out = c.add_decision(universe->position(g.var), std::move(edges));
                break;
            }
            case GateKind::product: {
                std::vector<GateId> children;
                for (auto child : g.children) {
                    children.push_back(placed.at(child));
                }
                out = c.add_product(std::move(children));
                break;
            }
            }
            placed[id] = out;
            state[id] = 2;
        }
    };
    for (auto const& [id, g] : raw) {
        place(id);
    }
    if (!placed.count(*output)) {
        throw InvalidCircuit("output gate is not defined");
    }
    c.set_output(placed.at(*output));
    return c;
}

}  // namespace cqda
