#include <doctest.h>

#include <cmath>
#include <random>

#include "cqda/compile.hpp"
#include "cqda/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace cqda;
using namespace cqda::testing;

namespace {

bool has_product(Circuit const& c)
{
    for (GateId g : topological_order(c)) {
        if (c.gate(g).kind == GateKind::product) {
            return true;
        }
    }
    return false;
}

/// n * |db|^ceil(fhow) for positive queries, n * m^(show+1) * |db|^show otherwise.
double rec_call_bound(SignedQuery const& q, Database const& db, VarOrder const& compile_order)
{
    SignedHypergraph h = hypergraph_of(q);
    VarOrder elim = compile_order.restricted(q.vars());
    double const n = static_cast<double>(q.vars().size());
    double const size = static_cast<double>(db.size());
    if (!q.has_negation()) {
        Rational k = width_of(h, Measure::fhow, elim);
        mpz_class up = (k.get_num() + k.get_den() - 1) / k.get_den();
        return n * std::pow(size, up.get_d());
    }
    double const k = width_of(h, Measure::show, elim).get_d();
    double const m = static_cast<double>(q.atoms.size());
    return n * std::pow(m, k + 1) * std::pow(size, k);
}

}  // namespace

TEST_CASE("worked example: eight answers, a product and a cache hit")
{
    SignedQuery q = example51_query();
    Database db = example51_db();
    Compiled c = dpll_compile(q, db, VarOrder{"x4", "x3", "x2", "x1"});
    CHECK(c.circuit.universe() == VarOrder{"x1", "x2", "x3", "x4"});
    CHECK(semantics_bruteforce(c.circuit).size() == 8);
    CHECK(semantics_bruteforce(c.circuit).same_tuples(eval_bruteforce(q, db)));
    CHECK(has_product(c.circuit));
    CHECK(c.stats.cache_hits >= 1);
    CHECK(c.circuit.gate(c.circuit.output()).kind == GateKind::decision);
    CHECK(c.circuit.gate(c.circuit.output()).var == 0);
    CHECK(c.stats.gates == c.circuit.gate_count());
    CHECK(c.stats.edges == circuit_size(c.circuit));
}

TEST_CASE("decision gates keep an edge for every domain value")
{
    Compiled c = dpll_compile(example51_query(), example51_db(), VarOrder{"x4", "x3", "x2", "x1"});
    for (GateId g : topological_order(c.circuit)) {
        if (c.circuit.gate(g).kind == GateKind::decision) {
            CHECK(c.circuit.gate(g).edges.size() == 2);
        }
    }
}

TEST_CASE("disconnected queries compile to a product")
{
    Database db{Domain::range(3)};
    db.add_table("A", 1, std::vector<Row>{{0}, {2}});
    db.add_table("B", 1, std::vector<Row>{{1}});
    Compiled c = dpll_compile(parse_query("Q(*) :- A(x1), B(x2)."), db, VarOrder{"x2", "x1"});
    CHECK(c.circuit.gate(c.circuit.output()).kind == GateKind::product);
    CHECK(semantics_bruteforce(c.circuit).size() == 2);
}

TEST_CASE("an empty positive relation compiles to Bot without recursion")
{
    Database db{Domain::range(2)};
    db.add_table("A", 1, std::vector<Row>{});
    db.add_table("B", 1, std::vector<Row>{{1}});
    Compiled c = dpll_compile(parse_query("Q(*) :- A(x), B(y)."), db, VarOrder{"x", "y"});
    CHECK(c.circuit.output() == Circuit::bot);
    CHECK(c.stats.rec_calls == 0);
}

TEST_CASE("the query without atoms is Top")
{
    Database db{Domain::range(2)};
    Compiled c = dpll_compile(SignedQuery{}, db, VarOrder{});
    CHECK(c.circuit.output() == Circuit::top);
}

TEST_CASE("variables outside the query stay free")
{
    Database db{Domain::range(3)};
    db.add_table("A", 1, std::vector<Row>{{1}});
    Compiled c = dpll_compile(parse_query("Q(*) :- A(x)."), db, VarOrder{"x", "pad"});
    Relation sem = semantics_bruteforce(c.circuit);
    CHECK(sem.columns().size() == 2);
    CHECK(sem.size() == 3);
}

TEST_CASE("the order must cover the query")
{
    CHECK_THROWS_AS(dpll_compile(example51_query(), example51_db(), VarOrder{"x1", "x2"}), InvalidOrder);
    CHECK_THROWS_AS(dpll_compile(parse_query("Q(*) :- U(x)."), example51_db(), VarOrder{"x"}), UnknownRelation);
}

TEST_CASE("random compiles are correct, ordered and within the cache bound")
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        Instance inst = random_instance(rng);
        VarOrder compile_order = inst.order.reversed();
        Compiled c = dpll_compile(inst.query, inst.db, compile_order);
        INFO(to_string(inst.query));
        CHECK(semantics_bruteforce(c.circuit).same_tuples(eval_bruteforce(inst.query, inst.db)));
        CHECK(validate_ordered(c.circuit, inst.order));
        CHECK(validate_decomposable(c.circuit).ok);
        CHECK(static_cast<double>(c.stats.rec_calls) <= rec_call_bound(inst.query, inst.db, compile_order));
    }
}
