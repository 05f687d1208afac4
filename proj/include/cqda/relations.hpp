#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "cqda/errors.hpp"

namespace cqda {

/// Zero-based position of a value in its domain (rank - 1).
using Value = std::uint32_t;
using Row = std::vector<Value>;
using BigInt = mpz_class;

/// Ordered finite domain. The declaration order is the order used everywhere.
class Domain {
  public:
    Domain() = default;
    explicit Domain(std::vector<std::string> values);

    /// Domain "0", "1", ..., "n-1".
    static Domain range(std::size_t n);

    std::size_t size() const { return m_values.size(); }
    std::vector<std::string> const& values() const { return m_values; }
    std::string const& value(Value v) const { return m_values.at(v); }

    bool contains(std::string const& value) const;
    /// Throws InvalidDatabase for values outside the domain.
    Value index(std::string const& value) const;
    /// 1-based rank.
    std::size_t rank(std::string const& value) const { return index(value) + 1; }

    bool operator==(Domain const& other) const { return m_values == other.m_values; }

  private:
    std::vector<std::string> m_values;
    std::unordered_map<std::string, Value> m_index;
};

/// Sequence of distinct variable names, smallest first.
class VarOrder {
  public:
    VarOrder() = default;
    explicit VarOrder(std::vector<std::string> vars);
    VarOrder(std::initializer_list<std::string> vars) : VarOrder(std::vector<std::string>(vars)) {}

    std::size_t size() const { return m_vars.size(); }
    bool empty() const { return m_vars.empty(); }
    std::vector<std::string> const& vars() const { return m_vars; }
    std::string const& operator[](std::size_t i) const { return m_vars[i]; }
    auto begin() const { return m_vars.begin(); }
    auto end() const { return m_vars.end(); }

    bool contains(std::string const& var) const { return m_position.count(var) != 0; }
    /// Throws InvalidOrder for unknown variables.
    std::size_t position(std::string const& var) const;

    VarOrder reversed() const;
    /// Keeps the variables of `keep` in this order's sequence.
    VarOrder restricted(std::vector<std::string> const& keep) const;

    bool operator==(VarOrder const& other) const { return m_vars == other.m_vars; }

  private:
    std::vector<std::string> m_vars;
    std::unordered_map<std::string, std::size_t> m_position;
};

/// Named tuple: variable -> domain value.
using Tuple = std::map<std::string, Value>;

enum class Cmp { LT, EQ, GT };

/// Set of tuples over `columns`, stored as rows sorted lexicographically
/// column by column. Narrowing a column prefix is a binary search.
class Relation {
  public:
    Relation() = default;
    Relation(std::vector<std::string> columns, std::vector<Row> rows);

    static Relation from_tuples(std::vector<std::string> columns, std::vector<Tuple> const& tuples);
    /// D^columns.
    static Relation full(std::vector<std::string> columns, Domain const& domain);
    /// The relation over no variables containing the empty tuple.
    static Relation unit();

    std::vector<std::string> const& columns() const { return m_columns; }
    std::vector<Row> const& rows() const { return m_rows; }
    std::size_t size() const { return m_rows.size(); }
    bool empty() const { return m_rows.empty(); }

    bool has_column(std::string const& var) const;
    std::size_t column(std::string const& var) const;

    bool contains(Row const& row) const;
    bool contains(Tuple const& t) const;
    Tuple tuple(std::size_t i) const;
    std::vector<Tuple> tuples() const;

    /// Same tuple set with columns permuted into `columns`; rows re-sorted.
    Relation reorder(std::vector<std::string> const& columns) const;
    /// Rows (by index) whose first `prefix.size()` columns equal `prefix`.
    std::pair<std::size_t, std::size_t> prefix_range(Row const& prefix) const;
    Relation project(std::vector<std::string> const& columns) const;

    /// Set equality regardless of column order.
    bool same_tuples(Relation const& other) const;

  private:
    std::vector<std::string> m_columns;
    std::vector<Row> m_rows;
};

/// Positional relation instance of a database.
struct Table {
    std::size_t arity = 0;
    std::vector<Row> rows;  // sorted, unique
};

class Database {
  public:
    Database() = default;
    explicit Database(Domain domain) : m_domain(std::move(domain)) {}

    Domain const& domain() const { return m_domain; }
    std::map<std::string, Table> const& tables() const { return m_tables; }

    /// Rows are sorted and deduplicated. Throws InvalidDatabase on bad values.
    void add_table(std::string const& name, std::size_t arity, std::vector<Row> rows);
    void add_table(std::string const& name, std::size_t arity,
                   std::vector<std::vector<std::string>> const& rows);

    bool has(std::string const& name) const { return m_tables.count(name) != 0; }
    /// Throws UnknownRelation.
    Table const& table(std::string const& name) const;
    /// The table viewed as a relation over the given variables.
    Relation relation(std::string const& name, std::vector<std::string> const& vars) const;

    /// Total tuple count plus domain size.
    std::size_t size() const;

  private:
    Domain m_domain;
    std::map<std::string, Table> m_tables;
};

bool compatible(Tuple const& a, Tuple const& b);
Tuple restrict(Tuple const& t, std::vector<std::string> const& vars);

Relation join(Relation const& r1, Relation const& r2);
/// (r1 x D^{X2\X1}) u (r2 x D^{X1\X2}) over the union of the columns.
Relation extended_union(Relation const& r1, Relation const& r2, Domain const& domain);
/// Tuples of r agreeing with tau on tau's variables.
Relation select_prefix(Relation const& r, Tuple const& tau);

Cmp lex_compare(Tuple const& t1, Tuple const& t2, VarOrder const& order);
/// Rows of r in lexicographic order of `order` (which must cover r's columns).
std::vector<Tuple> sorted_tuples(Relation const& r, VarOrder const& order);
/// k-th tuple (1-based) of r in the lexicographic order induced by `order`,
/// computed one variable at a time from prefix counts.
Tuple kth_tuple_bruteforce(Relation const& r, VarOrder const& order, BigInt const& k);

}  // namespace cqda
