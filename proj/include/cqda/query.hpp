#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqda/hypergraph.hpp"
#include "cqda/relations.hpp"

namespace cqda {

enum class Sign { positive, negative };

struct Atom {
    Sign sign = Sign::positive;
    std::string symbol;
    std::vector<std::string> args;

    bool positive() const { return sign == Sign::positive; }
    bool operator==(Atom const&) const = default;
};

/// Self-join-free conjunction of signed atoms with an optional projection head.
struct SignedQuery {
    std::string head = "Q";
    std::vector<Atom> atoms;
    /// Head variables as written; absent means every variable is free.
    std::optional<std::vector<std::string>> free;

    /// Variables in order of first appearance.
    std::vector<std::string> vars() const;
    /// Head variables, or vars() for a join query.
    std::vector<std::string> free_vars() const;
    /// True when no variable is projected away.
    bool is_join() const;
    bool has_negation() const;

    bool operator==(SignedQuery const&) const = default;
};

/// Throws SelfJoinError, RepeatedVariableError or InvalidQuery.
void validate(SignedQuery const& q);
/// Throws UnknownRelation or ArityMismatch.
void check_schema(SignedQuery const& q, Database const& db);

/// Grammar: Head(v1,...) :- Lit {, Lit}* .   Lit is Name(v,...) or !Name(v,...).
/// Head(*) frees every variable.
SignedQuery parse_query(std::string const& text);
std::string to_string(SignedQuery const& q);

SignedHypergraph hypergraph_of(SignedQuery const& q);

bool atom_consistent(Atom const& a, Tuple const& tau, Database const& db);

struct Simplified {
    SignedQuery query;
    /// Variables no longer mentioned and not assigned by tau.
    std::vector<std::string> dropped;
};

/// Removes every negative atom whose positive version is inconsistent with tau.
Simplified simplify(SignedQuery const& q, Tuple const& tau, Database const& db);

struct AtomPartition {
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> settled;
};

/// Connected components of atoms linked by a shared unassigned variable.
/// Atoms are given as variable-id lists; components list atom indices ascending.
AtomPartition partition_atoms(std::vector<std::vector<std::size_t>> const& atom_vars,
                              std::vector<bool> const& assigned);

struct TauComponents {
    std::vector<SignedQuery> components;
    std::vector<Atom> settled;
};

TauComponents tau_components(SignedQuery const& q, std::vector<std::string> const& assigned_vars);

/// Answers by enumerating D^var(Q); projected to the free variables.
/// Columns are free_vars(). Throws TooLarge past 2^24 assignments.
Relation eval_bruteforce(SignedQuery const& q, Database const& db);

}  // namespace cqda
