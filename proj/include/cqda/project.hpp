#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqda/access.hpp"
#include "cqda/compile.hpp"
#include "cqda/query.hpp"

namespace cqda {

/// Keeps the first `keep` universe variables: decision gates on later
/// variables become Top when their relation is nonempty and Bot otherwise.
Circuit project_circuit(Circuit const& c, AccessIndex const& idx, std::size_t keep);

/// Full access order for q: the free variables first, in the order given,
/// then the remaining variables. A user order may omit non-free variables,
/// which are appended in order of first appearance. Throws NotFreeConnex
/// when a non-free variable precedes a free one, InvalidOrder otherwise.
VarOrder normalize_order(SignedQuery const& q, std::optional<VarOrder> const& user = std::nullopt);

struct AccessOptions {
    bool binarize = true;
};

/// Direct access to the answers of a signed conjunctive query, in the
/// lexicographic order of the free variables.
class QueryAccess {
  public:
    QueryAccess(SignedQuery const& q, Database const& db, std::optional<VarOrder> const& order = std::nullopt,
                AccessOptions options = {});

    /// Access order over all of var(q); the answer variables are its prefix.
    VarOrder const& order() const { return m_order; }
    VarOrder const& answer_order() const { return m_answer_order; }
    Domain const& domain() const { return m_domain; }

    BigInt const& count() const { return m_count; }
    /// Values over answer_order(). Throws OutOfRange.
    Row access(BigInt const& k) const;
    Tuple access_tuple(BigInt const& k) const;
    /// Number of answers <= t; the 1-based position of t when it is an answer.
    BigInt rank(Row const& t) const;
    bool contains(Row const& t) const;
    std::vector<Row> enumerate(BigInt const& from, std::size_t limit) const;

    /// The projected circuit answers are read from.
    Circuit const& circuit() const { return m_circuit; }
    CompileStats const& stats() const { return m_stats; }
    /// Size of the circuit before projection.
    std::size_t compiled_size() const { return m_compiled_size; }
    bool binarized() const { return m_binarized; }

  private:
    VarOrder m_order;
    VarOrder m_answer_order;
    Domain m_domain;
    bool m_binarized;
    BinCodec m_codec;
    CompileStats m_stats;
    std::size_t m_compiled_size = 0;
    Circuit m_circuit;
    AccessIndex m_index;
    BigInt m_count;

    Circuit build(SignedQuery const& q, Database const& db);
};

QueryAccess da_conjunctive(SignedQuery const& q, Database const& db, std::optional<VarOrder> const& order = std::nullopt,
                           AccessOptions options = {});

}  // namespace cqda
