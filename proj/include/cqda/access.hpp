#pragma once

#include <cstddef>
#include <vector>

#include "cqda/circuit.hpp"
#include "cqda/relations.hpp"

namespace cqda {

/// Counting tables for an ordered decomposable circuit.
class AccessIndex {
  public:
    explicit AccessIndex(Circuit const& c);

    /// |rel(v)|.
    BigInt const& rel_count(GateId v) const { return m_rel.at(v); }
    /// For a decision gate, entry i counts rel(v) tuples whose value on the
    /// tested variable is at most the value of edge i.
    std::vector<BigInt> const& nrel(GateId v) const { return m_nrel.at(v); }
    std::size_t var_count(GateId v) const { return m_var_count.at(v); }
    /// |D|^e for e <= |X|.
    BigInt const& power(std::size_t e) const { return m_power.at(e); }

  private:
    std::vector<BigInt> m_rel;
    std::vector<std::vector<BigInt>> m_nrel;
    std::vector<std::size_t> m_var_count;
    std::vector<BigInt> m_power;
};

AccessIndex preprocess(Circuit const& c);

/// |rel(out) x D^{X \ var(out)}|.
BigInt count(Circuit const& c, AccessIndex const& idx);

/// Gates whose relations, multiplied together with the free remaining
/// variables, give the selection of the circuit's relation by a prefix
/// assignment. Maintained incrementally one variable at a time.
class FrontierWalker {
  public:
    FrontierWalker(Circuit const& c, AccessIndex const& idx);

    /// Number of universe variables assigned so far.
    std::size_t assigned() const { return m_assigned; }
    bool empty() const { return m_empty; }
    std::vector<GateId> const& gates() const { return m_gates; }

    /// Assigns the next universe variable.
    void assign(Value d);

    /// Smallest d for the next variable such that at least n answers extend
    /// the current prefix with a value <= d, and the number of answers
    /// extending it with a value < d. Throws OutOfRange when fewer than n exist.
    std::pair<Value, BigInt> count_leq(BigInt const& n) const;
    /// Number of answers extending the prefix with a value < d for the next variable.
    BigInt count_less(Value d) const;
    /// Number of answers extending the prefix.
    BigInt extensions() const;

  private:
    void expand(GateId g);
    /// Index into m_gates of the decision gate testing the next variable.
    std::ptrdiff_t next_gate() const;
    BigInt others_product(std::ptrdiff_t skip, std::size_t free_vars) const;

    Circuit const& m_c;
    AccessIndex const& m_idx;
    std::vector<GateId> m_gates;
    std::size_t m_covered = 0;
    std::size_t m_assigned = 0;
    bool m_empty = false;
};

struct Frontier {
    bool empty = false;
    std::vector<GateId> gates;
};

/// Frontier after assigning `prefix` to the first universe variables.
Frontier frontier(Circuit const& c, AccessIndex const& idx, Row const& prefix);
/// Same, for a tuple that must bind exactly a universe prefix (NotAPrefix otherwise).
Frontier frontier(Circuit const& c, AccessIndex const& idx, Tuple const& tau);

/// Value of the variable after `prefix` and the count below it, as in FrontierWalker::count_leq.
std::pair<Value, BigInt> count_leq(Circuit const& c, AccessIndex const& idx, Row const& prefix, BigInt const& n);

/// The k-th answer (1-based) in universe order. Throws OutOfRange.
Row direct_access(Circuit const& c, AccessIndex const& idx, BigInt const& k);
Tuple direct_access_tuple(Circuit const& c, AccessIndex const& idx, BigInt const& k);

/// Number of answers <= t, found by binary search over direct_access.
/// Equals the 1-based position of t when t is an answer.
BigInt rank(Circuit const& c, AccessIndex const& idx, Row const& t);
/// Same number, from prefix counts in one left-to-right pass.
BigInt rank_by_prefix_counts(Circuit const& c, AccessIndex const& idx, Row const& t);
bool contains(Circuit const& c, AccessIndex const& idx, Row const& t);

/// Answers from..from+limit-1, clipped to the count. `from` must lie in
/// [1, count] unless limit is 0.
std::vector<Row> enumerate(Circuit const& c, AccessIndex const& idx, BigInt const& from, std::size_t limit);

Row tuple_to_row(Tuple const& t, VarOrder const& order);
Tuple row_to_tuple(Row const& r, VarOrder const& order);

}  // namespace cqda
