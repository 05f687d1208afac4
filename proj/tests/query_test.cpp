#include <doctest.h>

#include "cqda/errors.hpp"
#include "cqda/query.hpp"
#include "support/fixtures.hpp"

using namespace cqda;
using namespace cqda::testing;

TEST_CASE("parsing the query language")
{
    SignedQuery q = parse_query("% comment\nAns(x, y) :- R(x, z), !S(z, y), T(y).");
    CHECK(q.head == "Ans");
    REQUIRE(q.atoms.size() == 3);
    CHECK(q.atoms[1].sign == Sign::negative);
    CHECK(q.atoms[1].symbol == "S");
    CHECK(q.vars() == std::vector<std::string>{"x", "z", "y"});
    CHECK(q.free_vars() == std::vector<std::string>{"x", "y"});
    CHECK_FALSE(q.is_join());
    CHECK(q.has_negation());

    SignedQuery star = parse_query("Q(*) :- R(a,b).");
    CHECK(star.is_join());
    CHECK(star.free_vars() == std::vector<std::string>{"a", "b"});

    SignedQuery boolean = parse_query("Q() :- R(a).");
    CHECK(boolean.free_vars().empty());

    CHECK(parse_query(to_string(q)) == q);
}

TEST_CASE("syntax errors carry positions")
{
    try {
        parse_query("Q(x) :-\n  R(x,, y).");
        FAIL("expected SyntaxError");
    } catch (SyntaxError const& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }
    CHECK_THROWS_AS(parse_query("Q(x) :- R(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_query("Q(x) R(x)."), SyntaxError);
}

TEST_CASE("validation")
{
    CHECK_THROWS_AS(parse_query("Q(*) :- R(x), !R(y)."), SelfJoinError);
    CHECK_THROWS_AS(parse_query("Q(*) :- R(x, x)."), RepeatedVariableError);
    CHECK_THROWS_AS(parse_query("Q(w) :- R(x)."), InvalidQuery);
    CHECK_THROWS_AS(parse_query("Q(x, x) :- R(x)."), RepeatedVariableError);

    Database db = example51_db();
    CHECK_NOTHROW(check_schema(example51_query(), db));
    CHECK_THROWS_AS(check_schema(parse_query("Q(*) :- U(x)."), db), UnknownRelation);
    CHECK_THROWS_AS(check_schema(parse_query("Q(*) :- T(x)."), db), ArityMismatch);
}

TEST_CASE("hypergraph of a query keeps signs")
{
    SignedHypergraph h = hypergraph_of(example51_query());
    CHECK(h.names().size() == 4);
    CHECK(h.positive().size() == 2);
    CHECK(h.negative().size() == 1);
    CHECK(popcount(h.negative()[0]) == 4);
}

TEST_CASE("consistency and simplification")
{
    Database db = example51_db();
    SignedQuery q = example51_query();
    Atom const& s = q.atoms[0];
    Atom const& t = q.atoms[1];
    CHECK(atom_consistent(t, Tuple{{"x1", 0}}, db));
    CHECK_FALSE(atom_consistent(t, Tuple{{"x3", 0}}, db));
    CHECK(atom_consistent(s, Tuple{{"x1", 0}}, db));

    // x1 <- 1 rules S out, so !S disappears.
    Simplified simp = simplify(q, Tuple{{"x1", 1}}, db);
    CHECK(simp.query.atoms.size() == 2);
    CHECK(simplify(q, Tuple{{"x1", 0}}, db).query.atoms.size() == 3);
}

TEST_CASE("tau components")
{
    SignedQuery q = example51_query();
    // With x1 and x3 assigned, T is settled and S links R.
    TauComponents tc = tau_components(q, {"x1", "x3"});
    CHECK(tc.components.size() == 1);
    CHECK(tc.settled.size() == 1);
    CHECK(tc.settled[0].symbol == "T");

    SignedQuery simplified = parse_query("Q(*) :- T(x1,x3), R(x2,x4).");
    TauComponents split = tau_components(simplified, {"x1"});
    CHECK(split.components.size() == 2);

    AtomPartition p = partition_atoms({{0, 1}, {1, 2}, {3}}, {false, true, false, false});
    CHECK(p.components.size() == 3);
    AtomPartition joined = partition_atoms({{0, 1}, {1, 2}, {3}}, {false, false, false, false});
    CHECK(joined.components.size() == 2);
}

TEST_CASE("brute-force evaluation of the worked example")
{
    // T(x1,x3) x R(x2,x4) has 8 tuples; S's only tuple has x3 = 0, which T never allows.
    Relation ans = eval_bruteforce(example51_query(), example51_db());
    CHECK(ans.size() == 8);
    for (Value x1 : {0u, 1u}) {
        for (auto const& r : std::vector<Row>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
            CHECK(ans.contains(Tuple{{"x1", x1}, {"x2", r[0]}, {"x3", 1}, {"x4", r[1]}}));
        }
    }

    SignedQuery projected = parse_query("Q(x1, x2) :- !S(x1,x2,x3,x4), T(x1,x3), R(x2,x4).");
    CHECK(eval_bruteforce(projected, example51_db()).size() == 4);
}

TEST_CASE("negation-only query ranges over the whole domain")
{
    Database db{Domain::range(2)};
    db.add_table("R", 1, std::vector<Row>{{0}});
    Relation ans = eval_bruteforce(parse_query("Q(*) :- !R(x)."), db);
    CHECK(ans.size() == 1);
    CHECK(ans.contains(Tuple{{"x", 1}}));
}
