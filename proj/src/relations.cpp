#include "cqda/relations.hpp"

#include <algorithm>
#include <numeric>

namespace cqda {

Domain::Domain(std::vector<std::string> values) : m_values(std::move(values))
{
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (!m_index.emplace(m_values[i], static_cast<Value>(i)).second) {
            throw InvalidDatabase("duplicate domain value '" + m_values[i] + "'");
        }
    }
}

Domain Domain::range(std::size_t n)
{
    std::vector<std::string> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(std::to_string(i));
    }
    return Domain(std::move(values));
}

bool Domain::contains(std::string const& value) const
{
    return m_index.count(value) != 0;
}

Value Domain::index(std::string const& value) const
{
    auto it = m_index.find(value);
    if (it == m_index.end()) {
        throw InvalidDatabase("value '" + value + "' is not in the domain");
    }
    return it->second;
}

VarOrder::VarOrder(std::vector<std::string> vars) : m_vars(std::move(vars))
{
    for (std::size_t i = 0; i < m_vars.size(); ++i) {
        if (!m_position.emplace(m_vars[i], i).second) {
            throw InvalidOrder("variable '" + m_vars[i] + "' repeated in order");
        }
    }
}

std::size_t VarOrder::position(std::string const& var) const
{
    auto it = m_position.find(var);
    if (it == m_position.end()) {
        throw InvalidOrder("variable '" + var + "' missing from order");
    }
    return it->second;
}

VarOrder VarOrder::reversed() const
{
    return VarOrder(std::vector<std::string>(m_vars.rbegin(), m_vars.rend()));
}

VarOrder VarOrder::restricted(std::vector<std::string> const& keep) const
{
    std::vector<std::string> out;
    for (auto const& v : m_vars) {
        if (std::find(keep.begin(), keep.end(), v) != keep.end()) {
            out.push_back(v);
        }
    }
    return VarOrder(std::move(out));
}

namespace {

void sort_unique(std::vector<Row>& rows)
{
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace

Relation::Relation(std::vector<std::string> columns, std::vector<Row> rows)
    : m_columns(std::move(columns)), m_rows(std::move(rows))
{
    for (std::size_t i = 0; i < m_columns.size(); ++i) {
        for (std::size_t j = i + 1; j < m_columns.size(); ++j) {
            if (m_columns[i] == m_columns[j]) {
                throw RepeatedVariableError("relation column '" + m_columns[i] + "' repeated");
            }
        }
    }
    for (auto const& row : m_rows) {
        if (row.size() != m_columns.size()) {
            throw ArityMismatch("row width differs from column count");
        }
    }
    sort_unique(m_rows);
}

Relation Relation::from_tuples(std::vector<std::string> columns, std::vector<Tuple> const& tuples)
{
    std::vector<Row> rows;
    rows.reserve(tuples.size());
    for (auto const& t : tuples) {
        if (t.size() != columns.size()) {
            throw ArityMismatch("tuple does not bind exactly the relation's variables");
        }
        Row row;
        for (auto const& c : columns) {
            auto it = t.find(c);
            if (it == t.end()) {
                throw ArityMismatch("tuple misses variable '" + c + "'");
            }
            row.push_back(it->second);
        }
        rows.push_back(std::move(row));
    }
    return Relation(std::move(columns), std::move(rows));
}

Relation Relation::full(std::vector<std::string> columns, Domain const& domain)
{
    std::vector<Row> rows;
    std::size_t const n = columns.size();
    std::size_t const d = domain.size();
    if (n == 0) {
        rows.emplace_back();
        return Relation(std::move(columns), std::move(rows));
    }
    if (d == 0) {
        return Relation(std::move(columns), {});
    }
    Row row(n, 0);
    while (true) {
        rows.push_back(row);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++row[i] < d) {
                break;
            }
            row[i] = 0;
            if (i == 0) {
                return Relation(std::move(columns), std::move(rows));
            }
        }
    }
}

Relation Relation::unit()
{
    return Relation({}, {Row{}});
}

bool Relation::has_column(std::string const& var) const
{
    return std::find(m_columns.begin(), m_columns.end(), var) != m_columns.end();
}

std::size_t Relation::column(std::string const& var) const
{
    auto it = std::find(m_columns.begin(), m_columns.end(), var);
    if (it == m_columns.end()) {
        throw InvalidQuery("relation has no variable '" + var + "'");
    }
    return static_cast<std::size_t>(it - m_columns.begin());
}

bool Relation::contains(Row const& row) const
{
    return std::binary_search(m_rows.begin(), m_rows.end(), row);
}

bool Relation::contains(Tuple const& t) const
{
    if (t.size() != m_columns.size()) {
        return false;
    }
    Row row;
    for (auto const& c : m_columns) {
        auto it = t.find(c);
        if (it == t.end()) {
            return false;
        }
        row.push_back(it->second);
    }
    return contains(row);
}

Tuple Relation::tuple(std::size_t i) const
{
    Tuple t;
    for (std::size_t c = 0; c < m_columns.size(); ++c) {
        t[m_columns[c]] = m_rows[i][c];
    }
    return t;
}

std::vector<Tuple> Relation::tuples() const
{
    std::vector<Tuple> out;
    out.reserve(m_rows.size());
    for (std::size_t i = 0; i < m_rows.size(); ++i) {
        out.push_back(tuple(i));
    }
    return out;
}

Relation Relation::reorder(std::vector<std::string> const& columns) const
{
    if (columns.size() != m_columns.size()) {
        throw InvalidQuery("reorder needs a permutation of the columns");
    }
    std::vector<std::size_t> src;
    for (auto const& c : columns) {
        src.push_back(column(c));
    }
    std::vector<Row> rows;
    rows.reserve(m_rows.size());
    for (auto const& row : m_rows) {
        Row r;
        r.reserve(src.size());
        for (auto s : src) {
            r.push_back(row[s]);
        }
        rows.push_back(std::move(r));
    }
    return Relation(columns, std::move(rows));
}

std::pair<std::size_t, std::size_t> Relation::prefix_range(Row const& prefix) const
{
    auto const p = prefix.size();
    auto less_row = [p](Row const& row, Row const& key) {
        return std::lexicographical_compare(row.begin(), row.begin() + p, key.begin(), key.end());
    };
    auto less_key = [p](Row const& key, Row const& row) {
        return std::lexicographical_compare(key.begin(), key.end(), row.begin(), row.begin() + p);
    };
    auto lo = std::lower_bound(m_rows.begin(), m_rows.end(), prefix, less_row);
    auto hi = std::upper_bound(lo, m_rows.end(), prefix, less_key);
    return {static_cast<std::size_t>(lo - m_rows.begin()), static_cast<std::size_t>(hi - m_rows.begin())};
}

Relation Relation::project(std::vector<std::string> const& columns) const
{
    std::vector<std::size_t> src;
    for (auto const& c : columns) {
        src.push_back(column(c));
    }
    std::vector<Row> rows;
    rows.reserve(m_rows.size());
    for (auto const& row : m_rows) {
        Row r;
        for (auto s : src) {
            r.push_back(row[s]);
        }
        rows.push_back(std::move(r));
    }
    return Relation(columns, std::move(rows));
}

bool Relation::same_tuples(Relation const& other) const
{
    if (other.m_columns.size() != m_columns.size()) {
        return false;
    }
    for (auto const& c : m_columns) {
        if (!other.has_column(c)) {
            return false;
        }
    }
    return other.reorder(m_columns).m_rows == m_rows;
}

void Database::add_table(std::string const& name, std::size_t arity, std::vector<Row> rows)
{
    if (arity == 0) {
        throw InvalidDatabase("relation '" + name + "' must have positive arity");
    }
    for (auto const& row : rows) {
        if (row.size() != arity) {
            throw ArityMismatch("relation '" + name + "' has a tuple of length " +
                                std::to_string(row.size()) + ", expected " + std::to_string(arity));
        }
        for (auto v : row) {
            if (v >= m_domain.size()) {
                throw InvalidDatabase("relation '" + name + "' has a value outside the domain");
            }
        }
    }
    sort_unique(rows);
    m_tables[name] = Table{arity, std::move(rows)};
}

void Database::add_table(std::string const& name, std::size_t arity,
                         std::vector<std::vector<std::string>> const& rows)
{
    std::vector<Row> encoded;
    encoded.reserve(rows.size());
    for (auto const& row : rows) {
        Row r;
        for (auto const& v : row) {
            r.push_back(m_domain.index(v));
        }
        encoded.push_back(std::move(r));
    }
    add_table(name, arity, std::move(encoded));
}

Table const& Database::table(std::string const& name) const
{
    auto it = m_tables.find(name);
    if (it == m_tables.end()) {
        throw UnknownRelation("unknown relation '" + name + "'");
    }
    return it->second;
}

Relation Database::relation(std::string const& name, std::vector<std::string> const& vars) const
{
    auto const& t = table(name);
    if (t.arity != vars.size()) {
        throw ArityMismatch("relation '" + name + "' has arity " + std::to_string(t.arity) +
                            " but is used with " + std::to_string(vars.size()) + " arguments");
    }
    return Relation(vars, t.rows);
}

std::size_t Database::size() const
{
    std::size_t n = m_domain.size();
    for (auto const& [name, t] : m_tables) {
        n += t.rows.size();
    }
    return n;
}

bool compatible(Tuple const& a, Tuple const& b)
{
    for (auto const& [var, value] : a) {
        auto it = b.find(var);
        if (it != b.end() && it->second != value) {
            return false;
        }
    }
    return true;
}

Tuple restrict(Tuple const& t, std::vector<std::string> const& vars)
{
    Tuple out;
    for (auto const& v : vars) {
        auto it = t.find(v);
        if (it != t.end()) {
            out.insert(*it);
        }
    }
    return out;
}

Relation join(Relation const& r1, Relation const& r2)
{
    std::vector<std::string> columns = r1.columns();
    std::vector<std::size_t> shared1, shared2, extra2;
    for (std::size_t j = 0; j < r2.columns().size(); ++j) {
        auto const& c = r2.columns()[j];
        if (r1.has_column(c)) {
            shared1.push_back(r1.column(c));
            shared2.push_back(j);
        } else {
            extra2.push_back(j);
            columns.push_back(c);
        }
    }

    std::map<Row, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < r2.rows().size(); ++i) {
        Row key;
        for (auto j : shared2) {
            key.push_back(r2.rows()[i][j]);
        }
        by_key[key].push_back(i);
    }

    std::vector<Row> rows;
    for (auto const& row1 : r1.rows()) {
        Row key;
        for (auto j : shared1) {
            key.push_back(row1[j]);
        }
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            continue;
        }
        for (auto i : it->second) {
            Row row = row1;
            for (auto j : extra2) {
                row.push_back(r2.rows()[i][j]);
            }
            rows.push_back(std::move(row));
        }
    }
    return Relation(std::move(columns), std::move(rows));
}

Relation extended_union(Relation const& r1, Relation const& r2, Domain const& domain)
{
    std::vector<std::string> only1, only2;
    for (auto const& c : r1.columns()) {
        if (!r2.has_column(c)) {
            only1.push_back(c);
        }
    }
    for (auto const& c : r2.columns()) {
        if (!r1.has_column(c)) {
            only2.push_back(c);
        }
    }
    Relation a = join(r1, Relation::full(only2, domain));
    Relation b = join(r2, Relation::full(only1, domain)).reorder(a.columns());
    std::vector<Row> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Relation(a.columns(), std::move(rows));
}

Relation select_prefix(Relation const& r, Tuple const& tau)
{
    std::vector<std::pair<std::size_t, Value>> checks;
    for (auto const& [var, value] : tau) {
        checks.emplace_back(r.column(var), value);
    }
    std::vector<Row> rows;
    for (auto const& row : r.rows()) {
        bool keep = std::all_of(checks.begin(), checks.end(),
                                [&](auto const& c) { return row[c.first] == c.second; });
        if (keep) {
            rows.push_back(row);
        }
    }
    return Relation(r.columns(), std::move(rows));
}

Cmp lex_compare(Tuple const& t1, Tuple const& t2, VarOrder const& order)
{
    for (auto const& var : order) {
        auto a = t1.find(var);
        auto b = t2.find(var);
        if (a == t1.end() || b == t2.end()) {
            continue;
        }
        if (a->second < b->second) {
            return Cmp::LT;
        }
        if (a->second > b->second) {
            return Cmp::GT;
        }
    }
    return Cmp::EQ;
}

std::vector<Tuple> sorted_tuples(Relation const& r, VarOrder const& order)
{
    std::vector<std::string> columns = order.restricted(r.columns()).vars();
    if (columns.size() != r.columns().size()) {
        throw InvalidOrder("order does not cover the relation's variables");
    }
    return r.reorder(columns).tuples();
}

Tuple kth_tuple_bruteforce(Relation const& r, VarOrder const& order, BigInt const& k)
{
    if (k < 1 || k > BigInt(static_cast<unsigned long>(r.size()))) {
        throw OutOfRange("k out of range (count=" + std::to_string(r.size()) + ")");
    }
    std::vector<std::string> columns = order.restricted(r.columns()).vars();
    if (columns.size() != r.columns().size()) {
        throw InvalidOrder("order does not cover the relation's variables");
    }

    std::vector<std::size_t> pos;
    for (auto const& c : columns) {
        pos.push_back(r.column(c));
    }
    std::vector<Row const*> current;
    for (auto const& row : r.rows()) {
        current.push_back(&row);
    }

    std::size_t remaining = k.get_ui();
    Tuple result;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        std::map<Value, std::size_t> counts;
        for (auto const* row : current) {
            ++counts[(*row)[pos[i]]];
        }
        std::size_t below = 0;
        Value chosen = 0;
        for (auto const& [value, n] : counts) {
            if (below + n >= remaining) {
                chosen = value;
                break;
            }
            below += n;
        }
        remaining -= below;
        result[columns[i]] = chosen;
        std::erase_if(current, [&](Row const* row) { return (*row)[pos[i]] != chosen; });
    }
    return result;
}

}  // namespace cqda
