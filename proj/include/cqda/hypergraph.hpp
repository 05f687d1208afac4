#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cqda/relations.hpp"

namespace cqda {

/// Bitmask over a hypergraph's vertex names; at most 64 vertices.
using VertexSet = std::uint64_t;
using Rational = mpq_class;

inline constexpr std::size_t max_vertices = 64;

inline VertexSet bit(std::size_t i)
{
    return VertexSet{1} << i;
}

inline int popcount(VertexSet s)
{
    return __builtin_popcountll(s);
}

/// "3/2", or "1" for integral values.
std::string to_string(Rational const& r);

/// Vertices are named; a vertex's bit is its index in `names()`.
/// `vertices()` can be a strict subset of the names after removals.
class Hypergraph {
  public:
    Hypergraph() = default;
    Hypergraph(std::vector<std::string> vertices, std::vector<std::vector<std::string>> const& edges);
    Hypergraph(std::vector<std::string> names, VertexSet vertices, std::vector<VertexSet> edges);

    std::vector<std::string> const& names() const { return m_names; }
    VertexSet vertices() const { return m_vertices; }
    std::vector<VertexSet> const& edges() const { return m_edges; }

    /// Throws VertexNotFound.
    std::size_t index(std::string const& name) const;
    VertexSet set_of(std::vector<std::string> const& names) const;
    std::vector<std::string> names_of(VertexSet s) const;
    /// Order given by names, as bit indices.
    std::vector<std::size_t> indices(VarOrder const& order) const;

    /// Distinct edges, in first-occurrence order.
    std::vector<VertexSet> distinct_edges() const;

  private:
    std::vector<std::string> m_names;
    VertexSet m_vertices = 0;
    std::vector<VertexSet> m_edges;
};

class SignedHypergraph {
  public:
    SignedHypergraph() = default;
    SignedHypergraph(std::vector<std::string> vertices,
                     std::vector<std::vector<std::string>> const& positive,
                     std::vector<std::vector<std::string>> const& negative);
    SignedHypergraph(std::vector<std::string> names, VertexSet vertices,
                     std::vector<VertexSet> positive, std::vector<VertexSet> negative);

    std::vector<std::string> const& names() const { return m_names; }
    VertexSet vertices() const { return m_vertices; }
    std::vector<VertexSet> const& positive() const { return m_positive; }
    std::vector<VertexSet> const& negative() const { return m_negative; }

    /// (V, E+ u E-).
    Hypergraph unsigned_hypergraph() const;
    /// (V, E+ u {E-[i] : bit i of keep}).
    Hypergraph with_negative(std::uint64_t keep) const;

  private:
    std::vector<std::string> m_names;
    VertexSet m_vertices = 0;
    std::vector<VertexSet> m_positive;
    std::vector<VertexSet> m_negative;
};

/// H/v: drop v from every edge and add its open neighbourhood as an edge.
Hypergraph remove_vertex(Hypergraph const& h, std::string const& v);
/// H \ S: drop S from the vertex set and from every edge; empty edges vanish.
Hypergraph delete_vertices(Hypergraph const& h, VertexSet s);

/// Closed neighbourhood of v in H/eliminated (empty when v lies in no edge).
VertexSet neighbourhood(std::vector<VertexSet> const& edges, std::size_t v, VertexSet eliminated);

int cover_number(VertexSet s, std::vector<VertexSet> const& family);
Rational fractional_cover_number(VertexSet s, std::vector<VertexSet> const& family);

/// Widths of a fixed elimination order; the order's first variable is eliminated first.
int how_width(Hypergraph const& h, VarOrder const& order);
Rational fhow_width(Hypergraph const& h, VarOrder const& order);
int show_width(SignedHypergraph const& h, VarOrder const& order);
Rational sfhow_width(SignedHypergraph const& h, VarOrder const& order);
int bhow_width(Hypergraph const& h, VarOrder const& order);
Rational bfhow_width(Hypergraph const& h, VarOrder const& order);

/// Maximum over edge subsets of the best hyperorder width.
int bhtw_bruteforce(Hypergraph const& h);

bool is_nest_point(Hypergraph const& h, std::string const& v);
std::optional<VarOrder> beta_elim_order(Hypergraph const& h);
bool is_nest_set(Hypergraph const& h, VertexSet s);

struct NestSetElimination {
    int width = 0;
    std::vector<VertexSet> sets;
};
std::optional<NestSetElimination> nest_set_elimination(Hypergraph const& h, int k_max);
std::optional<int> nsw_bruteforce(Hypergraph const& h, int k_max);

/// Adds a fresh vertex u' (u followed by primes) to every edge holding u.
SignedHypergraph clone_vertex(SignedHypergraph const& h, std::string const& u);
Hypergraph clone_vertex(Hypergraph const& h, std::string const& u);
/// The name clone_vertex picks for the copy of u.
std::string clone_name(std::vector<std::string> const& names, std::string const& u);
VarOrder insert_after(VarOrder const& order, std::string const& u, std::string const& copy);

enum class Measure { how, fhow, show, sfhow, bhow, bfhow, nsw };

Measure parse_measure(std::string const& name);
std::string to_string(Measure m);
bool is_fractional(Measure m);

/// Width of an elimination order under a measure. Unsigned measures use
/// E+ u E-. nsw has no per-order form and is rejected here.
Rational width_of(SignedHypergraph const& h, Measure m, VarOrder const& order);

struct OrderSearch {
    VarOrder order;  // elimination order
    Rational width;
    bool exact = true;
};

/// Minimum-width elimination order. Exact subset dynamic programming while
/// n * 2^n fits the budget, otherwise a greedy choice reported as an upper bound.
OrderSearch best_order(SignedHypergraph const& h, Measure m);

/// True iff s is exactly a suffix of the elimination order.
bool is_free_connex(VarOrder const& order, std::vector<std::string> const& s);

}  // namespace cqda
