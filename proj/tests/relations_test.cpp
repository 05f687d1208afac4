#include <doctest.h>

#include <algorithm>
#include <random>

#include "cqda/errors.hpp"
#include "cqda/relations.hpp"

using namespace cqda;

TEST_CASE("domain ranks follow declaration order")
{
    Domain d({"c", "a", "b"});
    CHECK(d.size() == 3);
    CHECK(d.index("c") == 0);
    CHECK(d.rank("b") == 3);
    CHECK(d.value(1) == "a");
    CHECK_FALSE(d.contains("z"));
    CHECK_THROWS_AS(d.index("z"), InvalidDatabase);
    CHECK_THROWS_AS(Domain({"a", "a"}), InvalidDatabase);
    CHECK(Domain::range(3).values() == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("variable orders")
{
    VarOrder o{"x", "y", "z"};
    CHECK(o.position("z") == 2);
    CHECK(o.reversed() == VarOrder{"z", "y", "x"});
    CHECK(o.restricted({"z", "x"}) == VarOrder{"x", "z"});
    CHECK_THROWS_AS(VarOrder({"x", "x"}), InvalidOrder);
    CHECK_THROWS_AS(o.position("w"), InvalidOrder);
}

TEST_CASE("relations are sets of sorted rows")
{
    Relation r({"x", "y"}, {{1, 0}, {0, 1}, {1, 0}});
    CHECK(r.size() == 2);
    CHECK(r.rows().front() == Row{0, 1});
    CHECK(r.contains(Row{1, 0}));
    CHECK(r.contains(Tuple{{"x", 0}, {"y", 1}}));
    CHECK_FALSE(r.contains(Tuple{{"x", 0}, {"y", 0}}));
    CHECK_THROWS_AS(Relation({"x", "x"}, {}), RepeatedVariableError);

    Relation swapped = r.reorder({"y", "x"});
    CHECK(swapped.rows() == std::vector<Row>{{0, 1}, {1, 0}});
    CHECK(swapped.same_tuples(r));

    CHECK(Relation::unit().size() == 1);
    CHECK(Relation::full({"a", "b"}, Domain::range(3)).size() == 9);
    CHECK(r.project({"x"}).size() == 2);
    auto [lo, hi] = Relation({"x", "y"}, {{0, 0}, {0, 1}, {1, 1}}).prefix_range({0});
    CHECK(hi - lo == 2);
}

TEST_CASE("join, union and selection")
{
    Relation r({"x", "y"}, {{0, 0}, {0, 1}, {1, 1}});
    Relation s({"y", "z"}, {{1, 0}, {1, 1}});
    Relation j = join(r, s);
    CHECK(j.size() == 4);
    CHECK(j.contains(Tuple{{"x", 1}, {"y", 1}, {"z", 0}}));

    Relation a({"x"}, {{0}});
    Relation b({"y"}, {{1}});
    Relation u = extended_union(a, b, Domain::range(2));
    // {x=0} x D  union  D x {y=1}
    CHECK(u.size() == 3);

    Relation sel = select_prefix(r, Tuple{{"x", 0}});
    CHECK(sel.size() == 2);
    CHECK(compatible(Tuple{{"x", 0}}, Tuple{{"x", 0}, {"y", 1}}));
    CHECK_FALSE(compatible(Tuple{{"x", 1}}, Tuple{{"x", 0}}));
    CHECK(restrict(Tuple{{"x", 0}, {"y", 1}}, {"y"}) == Tuple{{"y", 1}});
}

TEST_CASE("lexicographic comparison follows the order, not the names")
{
    VarOrder o{"y", "x"};
    Tuple a{{"x", 0}, {"y", 1}};
    Tuple b{{"x", 1}, {"y", 0}};
    CHECK(lex_compare(a, b, o) == Cmp::GT);
    CHECK(lex_compare(b, a, o) == Cmp::LT);
    CHECK(lex_compare(a, a, o) == Cmp::EQ);
}

TEST_CASE("kth tuple by prefix counting matches sorting")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        std::size_t const d = 1 + rng() % 4;
        std::vector<Row> rows;
        for (std::size_t i = rng() % 20; i > 0; --i) {
            rows.push_back({static_cast<Value>(rng() % d), static_cast<Value>(rng() % d), static_cast<Value>(rng() % d)});
        }
        Relation r({"a", "b", "c"}, rows);
        std::vector<std::string> names{"a", "b", "c"};
        std::shuffle(names.begin(), names.end(), rng);
        VarOrder order(names);
        auto sorted = sorted_tuples(r, order);
        REQUIRE(sorted.size() == r.size());
        for (std::size_t k = 1; k <= sorted.size(); ++k) {
            CHECK(kth_tuple_bruteforce(r, order, BigInt(static_cast<unsigned long>(k))) == sorted[k - 1]);
        }
        for (std::size_t k = 1; k < sorted.size(); ++k) {
            CHECK(lex_compare(sorted[k - 1], sorted[k], order) == Cmp::LT);
        }
        CHECK_THROWS_AS(kth_tuple_bruteforce(r, order, BigInt(static_cast<unsigned long>(r.size() + 1))), OutOfRange);
    }
}

TEST_CASE("kth out of range reports the count")
{
    Relation r({"x"}, {{0}, {1}});
    try {
        kth_tuple_bruteforce(r, VarOrder{"x"}, 3);
        FAIL("expected OutOfRange");
    } catch (OutOfRange const& e) {
        CHECK(std::string(e.what()) == "k out of range (count=2)");
    }
}

TEST_CASE("database tables")
{
    Database db{Domain({"a", "b"})};
    db.add_table("R", 2, std::vector<std::vector<std::string>>{{"a", "b"}, {"b", "b"}, {"a", "b"}});
    CHECK(db.table("R").rows.size() == 2);
    CHECK(db.size() == 4);
    CHECK_THROWS_AS(db.table("S"), UnknownRelation);
    CHECK_THROWS_AS(db.relation("R", {"x"}), ArityMismatch);
    CHECK_THROWS_AS(db.add_table("S", 1, std::vector<std::vector<std::string>>{{"c"}}), InvalidDatabase);
    CHECK_THROWS_AS(db.add_table("S", 2, std::vector<Row>{{0}}), ArityMismatch);
    Relation r = db.relation("R", {"x", "y"});
    CHECK(r.contains(Tuple{{"x", 1}, {"y", 1}}));
}
