#include "cqda/query.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cqda {

std::vector<std::string> SignedQuery::vars() const
{
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (auto const& a : atoms) {
        for (auto const& v : a.args) {
            if (seen.insert(v).second) {
                out.push_back(v);
            }
        }
    }
    return out;
}

std::vector<std::string> SignedQuery::free_vars() const
{
    return free ? *free : vars();
}

bool SignedQuery::is_join() const
{
    return !free || free->size() == vars().size();
}

bool SignedQuery::has_negation() const
{
    return std::any_of(atoms.begin(), atoms.end(), [](Atom const& a) { return !a.positive(); });
}

void validate(SignedQuery const& q)
{
    std::unordered_set<std::string> symbols;
    for (auto const& a : q.atoms) {
        if (a.args.empty()) {
            throw InvalidQuery("atom '" + a.symbol + "' has no arguments");
        }
        if (!symbols.insert(a.symbol).second) {
            throw SelfJoinError("relation '" + a.symbol + "' occurs more than once");
        }
        std::unordered_set<std::string> args;
        for (auto const& v : a.args) {
            if (!args.insert(v).second) {
                throw RepeatedVariableError("variable '" + v + "' repeated in atom '" + a.symbol + "'");
            }
        }
    }
    if (q.free) {
        auto vars = q.vars();
        std::unordered_set<std::string> known(vars.begin(), vars.end());
        std::unordered_set<std::string> head;
        for (auto const& v : *q.free) {
            if (!known.count(v)) {
                throw InvalidQuery("head variable '" + v + "' occurs in no atom");
            }
            if (!head.insert(v).second) {
                throw RepeatedVariableError("variable '" + v + "' repeated in the head");
            }
        }
    }
}

void check_schema(SignedQuery const& q, Database const& db)
{
    for (auto const& a : q.atoms) {
        auto const& t = db.table(a.symbol);
        if (t.arity != a.args.size()) {
            throw ArityMismatch("relation '" + a.symbol + "' has arity " + std::to_string(t.arity) +
                                " but is used with " + std::to_string(a.args.size()) + " arguments");
        }
    }
}

namespace {

class Parser {
  public:
    explicit Parser(std::string const& text) : m_text(text) {}

    SignedQuery parse()
    {
        SignedQuery q;
        q.head = identifier("head name");
        expect('(');
        skip_space();
        if (peek() == '*') {
            advance();
            expect(')');
        } else {
            std::vector<std::string> head;
            skip_space();
            if (peek() != ')') {
                head.push_back(identifier("variable"));
                while (accept(',')) {
                    head.push_back(identifier("variable"));
                }
            }
            expect(')');
            q.free = std::move(head);
        }
        expect(':');
        if (peek() != '-') {
            fail("expected ':-'");
        }
        advance();
        do {
            q.atoms.push_back(literal());
        } while (accept(','));
        expect('.');
        skip_space();
        if (m_pos != m_text.size()) {
            fail("unexpected text after the final '.'");
        }
        validate(q);
        return q;
    }

  private:
    Atom literal()
    {
        Atom a;
        skip_space();
        if (peek() == '!') {
            advance();
            a.sign = Sign::negative;
        }
        a.symbol = identifier("relation name");
        expect('(');
        a.args.push_back(identifier("variable"));
        while (accept(',')) {
            a.args.push_back(identifier("variable"));
        }
        expect(')');
        return a;
    }

    std::string identifier(char const* what)
    {
        skip_space();
        std::size_t start = m_pos;
        if (m_pos >= m_text.size() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
            fail(std::string("expected ") + what);
        }
        while (m_pos < m_text.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            advance();
        }
        return m_text.substr(start, m_pos - start);
    }

    void expect(char c)
    {
        skip_space();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    bool accept(char c)
    {
        skip_space();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void skip_space()
    {
        while (m_pos < m_text.size()) {
            char c = m_text[m_pos];
            if (c == '%' || c == '#') {
                while (m_pos < m_text.size() && m_text[m_pos] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    char peek() const { return m_pos < m_text.size() ? m_text[m_pos] : '\0'; }

    void advance()
    {
        if (m_text[m_pos] == '\n') {
            ++m_line;
            m_column = 1;
        } else {
            ++m_column;
        }
        ++m_pos;
    }

    [[noreturn]] void fail(std::string const& message) const
    {
        if (m_pos >= m_text.size()) {
            throw SyntaxError(message + " at end of input", m_line, m_column);
        }
        throw SyntaxError(message + ", found '" + std::string(1, m_text[m_pos]) + "'", m_line, m_column);
    }

    std::string const& m_text;
    std::size_t m_pos = 0;
    std::size_t m_line = 1;
    std::size_t m_column = 1;
};

std::string join_names(std::vector<std::string> const& names)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? "," : "") + names[i];
    }
    return out;
}

bool positive_consistent(Atom const& a, Tuple const& tau, Table const& t)
{
    std::vector<std::pair<std::size_t, Value>> bound;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        auto it = tau.find(a.args[i]);
        if (it != tau.end()) {
            bound.emplace_back(i, it->second);
        }
    }
    return std::any_of(t.rows.begin(), t.rows.end(), [&](Row const& row) {
        return std::all_of(bound.begin(), bound.end(), [&](auto const& b) { return row[b.first] == b.second; });
    });
}

}  // namespace

SignedQuery parse_query(std::string const& text)
{
    return Parser(text).parse();
}

std::string to_string(SignedQuery const& q)
{
    std::string out = q.head + "(" + (q.free ? join_names(*q.free) : "*") + ") :- ";
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        auto const& a = q.atoms[i];
        out += (i ? ", " : "") + std::string(a.positive() ? "" : "!") + a.symbol + "(" + join_names(a.args) + ")";
    }
    return out + ".";
}

SignedHypergraph hypergraph_of(SignedQuery const& q)
{
    std::vector<std::vector<std::string>> pos, neg;
    for (auto const& a : q.atoms) {
        (a.positive() ? pos : neg).push_back(a.args);
    }
    return SignedHypergraph(q.vars(), pos, neg);
}

bool atom_consistent(Atom const& a, Tuple const& tau, Database const& db)
{
    auto const& t = db.table(a.symbol);
    if (t.arity != a.args.size()) {
        throw ArityMismatch("relation '" + a.symbol + "' used with the wrong number of arguments");
    }
    if (a.positive()) {
        return positive_consistent(a, tau, t);
    }
    Row row;
    for (auto const& v : a.args) {
        auto it = tau.find(v);
        if (it == tau.end()) {
            return true;
        }
        row.push_back(it->second);
    }
    return !std::binary_search(t.rows.begin(), t.rows.end(), row);
}

Simplified simplify(SignedQuery const& q, Tuple const& tau, Database const& db)
{
    Simplified out;
    out.query.head = q.head;
    out.query.free = q.free;
    for (auto const& a : q.atoms) {
        if (!a.positive()) {
            Atom pos = a;
            pos.sign = Sign::positive;
            if (!atom_consistent(pos, tau, db)) {
                continue;
            }
        }
        out.query.atoms.push_back(a);
    }
    auto kept = out.query.vars();
    std::unordered_set<std::string> keep(kept.begin(), kept.end());
    for (auto const& v : q.vars()) {
        if (!keep.count(v) && !tau.count(v)) {
            out.dropped.push_back(v);
        }
    }
    if (out.query.free) {
        std::erase_if(*out.query.free, [&](std::string const& v) { return !keep.count(v); });
    }
    return out;
}

AtomPartition partition_atoms(std::vector<std::vector<std::size_t>> const& atom_vars,
                              std::vector<bool> const& assigned)
{
    std::size_t const m = atom_vars.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    AtomPartition out;
    std::unordered_map<std::size_t, std::size_t> owner;
    std::vector<bool> open(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (auto v : atom_vars[i]) {
            if (assigned[v]) {
                continue;
            }
            open[i] = true;
            auto [it, fresh] = owner.emplace(v, i);
            if (!fresh) {
                parent[find(i)] = find(it->second);
            }
        }
        if (!open[i]) {
            out.settled.push_back(i);
        }
    }
    std::unordered_map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < m; ++i) {
        if (!open[i]) {
            continue;
        }
        auto [it, fresh] = slot.emplace(find(i), out.components.size());
        if (fresh) {
            out.components.emplace_back();
        }
        out.components[it->second].push_back(i);
    }
    return out;
}

TauComponents tau_components(SignedQuery const& q, std::vector<std::string> const& assigned_vars)
{
    auto vars = q.vars();
    std::unordered_map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        id[vars[i]] = i;
    }
    std::vector<bool> assigned(vars.size(), false);
    for (auto const& v : assigned_vars) {
        auto it = id.find(v);
        if (it != id.end()) {
            assigned[it->second] = true;
        }
    }
    std::vector<std::vector<std::size_t>> atom_vars;
    for (auto const& a : q.atoms) {
        std::vector<std::size_t> ids;
        for (auto const& v : a.args) {
            ids.push_back(id[v]);
        }
        atom_vars.push_back(std::move(ids));
    }

    auto part = partition_atoms(atom_vars, assigned);
    TauComponents out;
    for (auto const& comp : part.components) {
        SignedQuery sub;
        sub.head = q.head;
        for (auto i : comp) {
            sub.atoms.push_back(q.atoms[i]);
        }
        out.components.push_back(std::move(sub));
    }
    for (auto i : part.settled) {
        out.settled.push_back(q.atoms[i]);
    }
    return out;
}

Relation eval_bruteforce(SignedQuery const& q, Database const& db)
{
    validate(q);
    check_schema(q, db);
    auto const vars = q.vars();
    std::size_t const d = db.domain().size();
    std::size_t const n = vars.size();

    double total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<double>(d);
    }
    if (total > double(1 << 24)) {
        throw TooLarge("brute-force evaluation over more than 2^24 assignments");
    }

    std::unordered_map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < n; ++i) {
        id[vars[i]] = i;
    }
    struct Check {
        bool positive;
        std::vector<std::size_t> cols;
        Table const* table;
    };
    std::vector<Check> checks;
    for (auto const& a : q.atoms) {
        Check c{a.positive(), {}, &db.table(a.symbol)};
        for (auto const& v : a.args) {
            c.cols.push_back(id[v]);
        }
        checks.push_back(std::move(c));
    }

    auto const out_vars = q.free_vars();
    std::vector<std::size_t> out_cols;
    for (auto const& v : out_vars) {
        out_cols.push_back(id[v]);
    }

    std::vector<Row> answers;
    if (d == 0 && n > 0) {
        return Relation(out_vars, {});
    }
    Row sigma(n, 0);
    Row probe;
    while (true) {
        bool ok = true;
        for (auto const& c : checks) {
            probe.clear();
            for (auto col : c.cols) {
                probe.push_back(sigma[col]);
            }
            bool present = std::binary_search(c.table->rows.begin(), c.table->rows.end(), probe);
            if (present != c.positive) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Row out;
            for (auto col : out_cols) {
                out.push_back(sigma[col]);
            }
            answers.push_back(std::move(out));
        }
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++sigma[i] < d) {
                break;
            }
            sigma[i] = 0;
            if (i == 0) {
                i = n + 1;
                break;
            }
        }
        if (n == 0 || i == n + 1) {
            break;
        }
    }
    return Relation(out_vars, std::move(answers));
}

}  // namespace cqda
