#include <doctest.h>

#include "cqda/errors.hpp"
#include "cqda/io.hpp"
#include "support/fixtures.hpp"

using namespace cqda;
using namespace cqda::testing;

TEST_CASE("database files load")
{
    Database db = load_database(data_path("example51/db.json"));
    CHECK(db.domain() == Domain({"0", "1"}));
    CHECK(db.table("R").rows.size() == 4);
    CHECK(db.table("S").arity == 4);
    CHECK(load_query(data_path("example51/query.cq")) == example51_query());
}

TEST_CASE("load, dump, load is the identity")
{
    Database db = load_database(data_path("example51/db.json"));
    std::string text = dump_database_json(db);
    Database back = parse_database_json(text);
    CHECK(back.domain() == db.domain());
    CHECK(back.tables().size() == db.tables().size());
    for (auto const& [name, table] : db.tables()) {
        CHECK(back.table(name).arity == table.arity);
        CHECK(back.table(name).rows == table.rows);
    }
    CHECK(dump_database_json(back) == text);
}

TEST_CASE("numbers are accepted as values")
{
    Database db = parse_database_json(R"({"domain": [0, 1, "two"], "relations": {"R": {"arity": 1, "tuples": [[1], ["two"]]}}})");
    CHECK(db.domain().index("two") == 2);
    CHECK(db.table("R").rows == std::vector<Row>{{1}, {2}});
}

TEST_CASE("malformed databases")
{
    CHECK_THROWS_AS(parse_database_json("{"), InvalidDatabase);
    CHECK_THROWS_AS(parse_database_json(R"({"relations": {}})"), InvalidDatabase);
    CHECK_THROWS_AS(parse_database_json(R"({"domain": ["a", "a"]})"), InvalidDatabase);
    CHECK_THROWS_AS(parse_database_json(R"({"domain": ["a"], "relations": {"R": {"arity": 1, "tuples": [["b"]]}}})"),
                    InvalidDatabase);
    CHECK_THROWS_AS(parse_database_json(R"({"domain": ["a"], "relations": {"R": {"arity": 2, "tuples": [["a"]]}}})"),
                    InvalidDatabase);
    CHECK_THROWS_AS(parse_database_json(R"({"domain": ["a"], "relations": {"R": {"tuples": []}}})"), InvalidDatabase);
    CHECK_THROWS_AS(parse_database_json(R"({"domain": [[1]]})"), InvalidDatabase);
}

TEST_CASE("tuples as JSON")
{
    Domain d({"a", "b"});
    nlohmann::json j = tuple_json(Tuple{{"x", 1}}, d);
    CHECK(j["x"] == "b");
    CHECK(parse_tuple_json(j, d) == Tuple{{"x", 1}});
    CHECK_THROWS_AS(parse_tuple_json(nlohmann::json::parse(R"({"x": "c"})"), d), InvalidDatabase);
    CHECK_THROWS_AS(parse_tuple_json(nlohmann::json::array(), d), InvalidDatabase);
    CHECK(stats_json(CompileStats{3, 1, 7, 9})["edges"] == 9);
}

TEST_CASE("missing files")
{
    CHECK_THROWS_AS(read_file("/nonexistent/file"), Error);
}
