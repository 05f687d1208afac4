#pragma once

#include <string>

#include <json.hpp>

#include "cqda/compile.hpp"
#include "cqda/query.hpp"
#include "cqda/relations.hpp"

namespace cqda {

/// {"domain": [...], "relations": {name: {"arity": a, "tuples": [[...], ...]}}}.
/// Domain values and tuple entries may be strings or numbers. Throws InvalidDatabase.
Database parse_database_json(std::string const& text);
/// Deterministic: relations sorted by name, tuples sorted in domain order.
std::string dump_database_json(Database const& db);

std::string read_file(std::string const& path);
void write_file(std::string const& path, std::string const& text);

Database load_database(std::string const& path);
SignedQuery load_query(std::string const& path);

nlohmann::json stats_json(CompileStats const& s);
/// {var: value} with domain values as strings.
nlohmann::json tuple_json(Tuple const& t, Domain const& domain);
/// Inverse of tuple_json. Throws InvalidDatabase for values outside the domain.
Tuple parse_tuple_json(nlohmann::json const& j, Domain const& domain);

}  // namespace cqda
