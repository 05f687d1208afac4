#include "cqda/io.hpp"

#include <fstream>
#include <sstream>

namespace cqda {

namespace {

using nlohmann::json;

std::string scalar(json const& j, char const* what)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_integer() || j.is_number_unsigned() || j.is_boolean()) {
        return j.dump();
    }
    throw InvalidDatabase(std::string(what) + " must be a string or an integer");
}

}  // namespace

Database parse_database_json(std::string const& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (json::parse_error const& e) {
        throw InvalidDatabase(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("domain") || !doc["domain"].is_array()) {
        throw InvalidDatabase("database needs a \"domain\" array");
    }
    std::vector<std::string> values;
    for (auto const& v : doc["domain"]) {
        values.push_back(scalar(v, "domain value"));
    }
    Database db{Domain(values)};
    if (!doc.contains("relations")) {
        return db;
    }
    if (!doc["relations"].is_object()) {
        throw InvalidDatabase("\"relations\" must be an object");
    }
    for (auto const& [name, rel] : doc["relations"].items()) {
        if (!rel.is_object() || !rel.contains("arity") || !rel["arity"].is_number_unsigned()) {
            throw InvalidDatabase("relation '" + name + "' needs a non-negative integer \"arity\"");
        }
        auto const arity = rel["arity"].get<std::size_t>();
        std::vector<std::vector<std::string>> rows;
        if (rel.contains("tuples")) {
            if (!rel["tuples"].is_array()) {
                throw InvalidDatabase("\"tuples\" of '" + name + "' must be an array");
            }
            for (auto const& t : rel["tuples"]) {
                if (!t.is_array()) {
                    throw InvalidDatabase("tuples of '" + name + "' must be arrays");
                }
                if (t.size() != arity) {
                    throw InvalidDatabase("relation '" + name + "' has a tuple of length " + std::to_string(t.size()) +
                                          ", expected " + std::to_string(arity));
                }
                std::vector<std::string> row;
                for (auto const& v : t) {
                    row.push_back(scalar(v, "tuple entry"));
                }
                rows.push_back(std::move(row));
            }
        }
        db.add_table(name, arity, rows);
    }
    return db;
}

std::string dump_database_json(Database const& db)
{
    json doc;
    doc["domain"] = db.domain().values();
    doc["relations"] = json::object();
    for (auto const& [name, table] : db.tables()) {
        json tuples = json::array();
        for (auto const& row : table.rows) {
            json t = json::array();
            for (auto v : row) {
                t.push_back(db.domain().value(v));
            }
            tuples.push_back(std::move(t));
        }
        doc["relations"][name] = {{"arity", table.arity}, {"tuples", std::move(tuples)}};
    }
    return doc.dump(2) + "\n";
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(std::string const& path, std::string const& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error("cannot write '" + path + "'");
    }
}

Database load_database(std::string const& path)
{
    return parse_database_json(read_file(path));
}

SignedQuery load_query(std::string const& path)
{
    return parse_query(read_file(path));
}

nlohmann::json stats_json(CompileStats const& s)
{
    return {{"rec_calls", s.rec_calls}, {"cache_hits", s.cache_hits}, {"gates", s.gates}, {"edges", s.edges}};
}

nlohmann::json tuple_json(Tuple const& t, Domain const& domain)
{
    json out = json::object();
    for (auto const& [x, v] : t) {
        out[x] = domain.value(v);
    }
    return out;
}

Tuple parse_tuple_json(nlohmann::json const& j, Domain const& domain)
{
    if (!j.is_object()) {
        throw InvalidDatabase("tuple must be a JSON object");
    }
    Tuple t;
    for (auto const& [x, v] : j.items()) {
        t[x] = domain.index(scalar(v, "tuple value"));
    }
    return t;
}

}  // namespace cqda
