#include <doctest.h>

#include <random>

#include "cqda/errors.hpp"
#include "cqda/project.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace cqda;
using namespace cqda::testing;

TEST_CASE("projecting the annotated circuit")
{
    Circuit c = annotated_circuit();
    AccessIndex idx(c);
    Circuit p1 = project_circuit(c, idx, 1);
    CHECK(p1.universe() == VarOrder{"x1"});
    CHECK(semantics_bruteforce(p1).same_tuples(semantics_bruteforce(c).project({"x1"})));
    Circuit p2 = project_circuit(c, idx, 2);
    CHECK(semantics_bruteforce(p2).same_tuples(semantics_bruteforce(c).project({"x1", "x2"})));
    CHECK(circuit_size(p2) <= circuit_size(c));
    Circuit p0 = project_circuit(c, idx, 0);
    CHECK(p0.output() == Circuit::top);
    CHECK_THROWS_AS(project_circuit(c, idx, 4), InvalidOrder);
}

TEST_CASE("projection matches brute force on free-connex prefixes")
{
    std::mt19937_64 rng(51);
    for (int round = 0; round < 200; ++round) {
        Instance inst = random_instance(rng);
        Compiled comp = dpll_compile(inst.query, inst.db, inst.order.reversed());
        AccessIndex idx(comp.circuit);
        Relation full = semantics_bruteforce(comp.circuit);
        for (std::size_t j = 0; j <= inst.order.size(); ++j) {
            Circuit p = project_circuit(comp.circuit, idx, j);
            std::vector<std::string> kept(inst.order.vars().begin(), inst.order.vars().begin() + static_cast<std::ptrdiff_t>(j));
            CHECK(semantics_bruteforce(p).same_tuples(full.project(kept)));
            CHECK(circuit_size(p) <= circuit_size(comp.circuit));
            CHECK(validate_ordered(p, p.universe()));
        }
    }
}

TEST_CASE("order normalisation")
{
    SignedQuery q = parse_query("Q(x, y) :- R(x, z), S(z, y).");
    CHECK(normalize_order(q) == VarOrder{"x", "y", "z"});
    CHECK(normalize_order(q, VarOrder{"y", "x"}) == VarOrder{"y", "x", "z"});
    CHECK(normalize_order(q, VarOrder{"y", "x", "z"}) == VarOrder{"y", "x", "z"});
    CHECK_THROWS_AS(normalize_order(q, VarOrder{"x", "z", "y"}), NotFreeConnex);
    CHECK_THROWS_AS(normalize_order(q, VarOrder{"x"}), InvalidOrder);
    CHECK_THROWS_AS(normalize_order(q, VarOrder{"x", "y", "w"}), InvalidOrder);
}

TEST_CASE("worked example projected on x1, x2")
{
    SignedQuery q = example51_query();
    q.free = std::vector<std::string>{"x1", "x2"};
    QueryAccess qa(q, example51_db());
    CHECK(qa.count() == 4);
    CHECK(qa.answer_order() == VarOrder{"x1", "x2"});
    CHECK(qa.access(1) == Row{0, 0});
    CHECK(qa.access(4) == Row{1, 1});
    CHECK(qa.rank(Row{1, 0}) == 3);
    CHECK_THROWS_AS(qa.access(5), OutOfRange);
    CHECK(qa.enumerate(2, 10).size() == 3);
}

TEST_CASE("query access agrees with brute force, with and without binarisation")
{
    std::mt19937_64 rng(52);
    for (int round = 0; round < 200; ++round) {
        Instance inst = with_free_prefix(random_instance(rng), rng() % 6);
        auto expected =
            sorted_rows(eval_bruteforce(inst.query, inst.db), inst.order.restricted(inst.query.free_vars()));
        for (bool bin : {true, false}) {
            QueryAccess qa(inst.query, inst.db, inst.order, AccessOptions{bin});
            REQUIRE(qa.count() == expected.size());
            for (std::size_t k = 1; k <= expected.size(); ++k) {
                BigInt bk(static_cast<unsigned long>(k));
                CHECK(qa.access(bk) == expected[k - 1]);
                CHECK(qa.rank(expected[k - 1]) == bk);
                CHECK(qa.contains(expected[k - 1]));
            }
        }
    }
}

TEST_CASE("boolean queries have one empty answer or none")
{
    Database db{Domain::range(2)};
    db.add_table("R", 1, std::vector<Row>{{1}});
    QueryAccess yes(parse_query("Q() :- R(x)."), db);
    CHECK(yes.count() == 1);
    CHECK(yes.access(1).empty());
    QueryAccess no(parse_query("Q() :- R(x), !R2(x)."), [&] {
        Database d = db;
        d.add_table("R2", 1, std::vector<Row>{{1}});
        return d;
    }());
    CHECK(no.count() == 0);
}

TEST_CASE("binarisation changes the circuit, not the answers")
{
    Database db = inequality_db(5);
    QueryAccess bin(inequality_query(), db);
    QueryAccess plain(inequality_query(), db, std::nullopt, AccessOptions{false});
    CHECK(bin.binarized());
    CHECK_FALSE(plain.binarized());
    CHECK(bin.count() == 20);
    REQUIRE(plain.count() == 20);
    for (BigInt k = 1; k <= 20; ++k) {
        CHECK(bin.access(k) == plain.access(k));
    }
}
