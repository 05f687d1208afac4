#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cqda/access.hpp"
#include "cqda/query.hpp"

namespace cqda {

/// Direct access to a set of rows ordered lexicographically.
class DAProvider {
  public:
    virtual ~DAProvider() = default;

    virtual BigInt count() const = 0;
    /// 1-based. Throws OutOfRange.
    virtual Row kth(BigInt const& k) const = 0;
    /// Number of rows <= t.
    virtual BigInt rank(Row const& t) const;
};

using DAProviderPtr = std::shared_ptr<DAProvider const>;

/// Number of rows <= t by binary search over kth.
BigInt rank_via_da(DAProvider const& p, Row const& t);

/// A materialized sorted row list.
class ExplicitDA : public DAProvider {
  public:
    explicit ExplicitDA(std::vector<Row> rows);

    BigInt count() const override;
    Row kth(BigInt const& k) const override;
    BigInt rank(Row const& t) const override;

  private:
    std::vector<Row> m_rows;
};

/// Direct access through a compiled circuit, rows in universe order.
class CircuitDA : public DAProvider {
  public:
    explicit CircuitDA(Circuit c);

    BigInt count() const override { return m_count; }
    Row kth(BigInt const& k) const override;
    BigInt rank(Row const& t) const override;

    Circuit const& circuit() const { return m_circuit; }

  private:
    Circuit m_circuit;
    AccessIndex m_index;
    BigInt m_count;
};

/// Direct access to S2 \ S1 given direct access to S2 and rank access to S1 ⊆ S2.
/// Answers to kth are memoized, as the recursion asks for the same positions repeatedly.
class SubtractDA : public DAProvider {
  public:
    SubtractDA(DAProviderPtr s2, DAProviderPtr s1);

    BigInt count() const override { return m_count; }
    Row kth(BigInt const& k) const override;
    BigInt rank(Row const& t) const override;

  private:
    DAProviderPtr m_s2;
    DAProviderPtr m_s1;
    BigInt m_count;
    mutable std::mutex m_mutex;
    mutable std::map<BigInt, Row> m_memo;
};

DAProviderPtr subtract_da(DAProviderPtr s2, DAProviderPtr s1);

/// Negative atoms (by index into q.atoms) split into those read as positive
/// (N1) and those kept negative (N2).
struct QnnSpec {
    std::vector<std::size_t> n1;
    std::vector<std::size_t> n2;
};

/// The positive atoms, the N1 atoms made positive and the N2 atoms.
SignedQuery qnn_query(SignedQuery const& q, QnnSpec const& spec);

/// Direct access for a negation-free query; its answers are rows over the
/// full access order.
using BaseFactory = std::function<DAProviderPtr(SignedQuery const& positive)>;

/// Direct access to the answers of qnn_query(q, spec) over the full access
/// order, built from negation-free queries by repeated subtraction.
DAProviderPtr qnn_da(SignedQuery const& q, QnnSpec const& spec, BaseFactory const& base);

/// Compiles negation-free queries over the full access order.
BaseFactory circuit_base(Database const& db, VarOrder const& access_order);

/// Direct access to the answers of a signed join query through the reduction.
/// Rows are over `access_order`, which must list exactly var(q).
DAProviderPtr signed_da_via_reduction(SignedQuery const& q, Database const& db, VarOrder const& access_order);

}  // namespace cqda
