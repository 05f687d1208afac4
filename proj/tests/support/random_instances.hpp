#pragma once

#include <optional>
#include <random>

#include "cqda/hypergraph.hpp"
#include "cqda/query.hpp"
#include "cqda/relations.hpp"

namespace cqda::testing {

struct InstanceParams {
    std::size_t max_atoms = 4;
    std::size_t max_vars = 5;
    std::size_t max_domain = 4;
    std::size_t max_tuples = 20;
    std::size_t max_arity = 3;
    /// Probability that an atom is negated.
    double negation = 0.4;
};

struct Instance {
    SignedQuery query;
    Database db;
    /// Access order over var(query), most significant first.
    VarOrder order;
};

/// Join query without self-joins over variables x1..xn, a database with
/// random tables and a random access order.
Instance random_instance(std::mt19937_64& rng, InstanceParams const& params = {});

/// Same instance with the first `free` variables of its order made free.
Instance with_free_prefix(Instance inst, std::size_t free);

/// Random database for a fixed query.
Database random_database(std::mt19937_64& rng, SignedQuery const& q, std::size_t domain, std::size_t max_tuples);

VarOrder random_order(std::mt19937_64& rng, std::vector<std::string> vars);

/// Hypergraph on vertices v1..vn with m random nonempty edges, some negative.
SignedHypergraph random_signed_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// Rows of r over `order`, sorted lexicographically.
std::vector<Row> sorted_rows(Relation const& r, VarOrder const& order);

}  // namespace cqda::testing
