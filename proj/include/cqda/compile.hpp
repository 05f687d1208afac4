#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cqda/circuit.hpp"
#include "cqda/query.hpp"
#include "cqda/relations.hpp"

namespace cqda {

struct CompileStats {
    /// Distinct consistent (subquery, assignment) calls, i.e. cache misses.
    std::uint64_t rec_calls = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t gates = 0;
    std::uint64_t edges = 0;
};

struct Compiled {
    Circuit circuit;
    CompileStats stats;
};

/// Exhaustive DPLL with component caching. `compile_order` must cover var(q)
/// and may list extra variables, which stay unconstrained. The largest
/// variable is branched on first, so the circuit's universe is the reversed
/// compile order and the circuit is ordered for it.
Compiled dpll_compile(SignedQuery const& q, Database const& db, VarOrder const& compile_order);

/// Bit encoding of a domain: b = max(1, ceil(log2 |D|)) bits, x^1 least significant.
class BinCodec {
  public:
    BinCodec() = default;
    BinCodec(Domain domain, std::vector<std::string> vars);

    std::size_t bits() const { return m_bits; }
    Domain const& domain() const { return m_domain; }
    std::vector<std::string> const& vars() const { return m_vars; }

    /// Bit variables of x, x^1 first.
    std::vector<std::string> const& bit_vars(std::string const& x) const;
    /// Bits of a value, least significant first.
    Row encode(Value v) const;
    /// Throws RankOutOfDomain when the bits spell a number >= |D|.
    Value decode(Row const& bits) const;

    Tuple bin_tuple(Tuple const& t) const;
    Tuple debin_tuple(Tuple const& t) const;

    /// Each x replaced by x^1, ..., x^b.
    VarOrder expand_compile_order(VarOrder const& order) const;
    /// Each x replaced by x^b, ..., x^1 (most significant first).
    VarOrder expand_access_order(VarOrder const& order) const;
    /// Decodes a row over expand_access_order(vars) into values over vars.
    Row debin_row(Row const& bits, std::size_t var_count) const;
    Row bin_row(Row const& values) const;

  private:
    Domain m_domain;
    std::vector<std::string> m_vars;
    std::size_t m_bits = 1;
    std::unordered_map<std::string, std::vector<std::string>> m_bit_vars;
};

struct Binarized {
    Database db;
    SignedQuery query;
    /// Compile order over the bit variables.
    VarOrder order;
    BinCodec codec;
};

/// Bit-blasts the query and database over domain {0,1}. Variables that occur
/// in no positive atom get a positive domain atom over their bits when |D| is
/// not a power of two, so patterns past |D| never become answers.
Binarized binarize(Database const& db, SignedQuery const& q, VarOrder const& compile_order);
Tuple debin_tuple(Tuple const& t, BinCodec const& codec);

struct CompiledBinarized {
    Circuit circuit;
    BinCodec codec;
    CompileStats stats;
};

CompiledBinarized compile_binarized(SignedQuery const& q, Database const& db, VarOrder const& compile_order);

}  // namespace cqda
