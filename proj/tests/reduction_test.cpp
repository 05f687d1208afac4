#include <doctest.h>

#include <algorithm>
#include <random>

#include "cqda/errors.hpp"
#include "cqda/project.hpp"
#include "cqda/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace cqda;
using namespace cqda::testing;

namespace {

std::vector<Row> all_rows(DAProvider const& p)
{
    std::vector<Row> out;
    for (BigInt k = 1; k <= p.count(); ++k) {
        out.push_back(p.kth(k));
    }
    return out;
}

/// Sorted answers of q over `order`; variables missing from q range over D.
std::vector<Row> padded_rows(SignedQuery const& q, Database const& db, VarOrder const& order)
{
    Relation ans = eval_bruteforce(q, db);
    std::vector<std::string> missing;
    for (auto const& x : order) {
        if (!ans.has_column(x)) {
            missing.push_back(x);
        }
    }
    if (!missing.empty()) {
        ans = join(ans, Relation::full(missing, db.domain()));
    }
    return sorted_rows(ans, order);
}

BaseFactory bruteforce_base(Database const& db, VarOrder const& order)
{
    return [&db, order](SignedQuery const& positive) -> DAProviderPtr {
        return std::make_shared<ExplicitDA>(padded_rows(positive, db, order));
    };
}

/// Dual recursion: Q_{N1 + {R}, N2} = Q_{N1, N2} \ Q_{N1, N2 + {R}}, reaching
/// every intermediate query from queries whose negative atoms all stay negative.
DAProviderPtr dual_da(SignedQuery const& q, QnnSpec const& spec, Database const& db, VarOrder const& order)
{
    if (spec.n1.empty()) {
        return std::make_shared<ExplicitDA>(padded_rows(qnn_query(q, spec), db, order));
    }
    QnnSpec smaller{{spec.n1.begin(), spec.n1.end() - 1}, spec.n2};
    QnnSpec negated = smaller;
    negated.n2.push_back(spec.n1.back());
    return subtract_da(dual_da(q, smaller, db, order), dual_da(q, negated, db, order));
}

}  // namespace

TEST_CASE("explicit providers")
{
    ExplicitDA p({{1, 0}, {0, 1}, {0, 1}});
    CHECK(p.count() == 2);
    CHECK(p.kth(1) == Row{0, 1});
    CHECK(p.rank(Row{0, 5}) == 1);
    CHECK(rank_via_da(p, Row{0, 5}) == 1);
    CHECK(rank_via_da(p, Row{2, 0}) == 2);
    CHECK_THROWS_AS(p.kth(3), OutOfRange);
}

TEST_CASE("subtraction against explicit set difference")
{
    std::mt19937_64 rng(61);
    for (int round = 0; round < 300; ++round) {
        std::vector<Row> s2;
        for (std::size_t i = rng() % 25; i > 0; --i) {
            s2.push_back({static_cast<Value>(rng() % 3), static_cast<Value>(rng() % 3), static_cast<Value>(rng() % 3)});
        }
        std::sort(s2.begin(), s2.end());
        s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
        std::vector<Row> s1;
        std::vector<Row> diff;
        for (auto const& r : s2) {
            (rng() % 2 ? s1 : diff).push_back(r);
        }
        auto p = subtract_da(std::make_shared<ExplicitDA>(s2), std::make_shared<ExplicitDA>(s1));
        REQUIRE(p->count() == diff.size());
        CHECK(all_rows(*p) == diff);
        for (std::size_t k = 0; k < diff.size(); ++k) {
            CHECK(p->rank(diff[k]) == k + 1);
            CHECK(rank_via_da(*p, diff[k]) == k + 1);
        }
        CHECK_THROWS_AS(p->kth(p->count() + 1), OutOfRange);
    }
}

TEST_CASE("qnn queries")
{
    SignedQuery q = parse_query("Q(*) :- A(x), !B(x), !C(x, y).");
    SignedQuery q1 = qnn_query(q, QnnSpec{{1}, {2}});
    REQUIRE(q1.atoms.size() == 3);
    CHECK(q1.atoms[1].positive());
    CHECK_FALSE(q1.atoms[2].positive());
    CHECK(qnn_query(q, QnnSpec{{}, {}}).atoms.size() == 1);
    CHECK_THROWS_AS(qnn_da(q, QnnSpec{{0}, {}}, BaseFactory{}), InvalidQuery);
}

TEST_CASE("worked example through the reduction")
{
    SignedQuery q = example51_query();
    Database db = example51_db();
    VarOrder order{"x1", "x2", "x3", "x4"};
    DAProviderPtr red = signed_da_via_reduction(q, db, order);
    QueryAccess circuit(q, db, order);
    REQUIRE(red->count() == 8);
    for (BigInt k = 1; k <= 8; ++k) {
        CHECK(red->kth(k) == circuit.access(k));
    }
}

TEST_CASE("positive queries pass straight to the base")
{
    Database db = example51_db();
    SignedQuery q = parse_query("Q(*) :- T(x1,x3), R(x2,x4).");
    DAProviderPtr p = signed_da_via_reduction(q, db, VarOrder{"x1", "x2", "x3", "x4"});
    CHECK(p->count() == 8);
    CHECK(dynamic_cast<CircuitDA const*>(p.get()) != nullptr);
}

TEST_CASE("empty answers")
{
    Database db{Domain::range(2)};
    db.add_table("A", 1, std::vector<Row>{{0}});
    db.add_table("B", 1, std::vector<Row>{{0}});
    DAProviderPtr p = signed_da_via_reduction(parse_query("Q(*) :- A(x), !B(x)."), db, VarOrder{"x"});
    CHECK(p->count() == 0);
    CHECK_THROWS_AS(p->kth(1), OutOfRange);
}

TEST_CASE("the reduction rejects projections and partial orders")
{
    Database db = example51_db();
    CHECK_THROWS_AS(signed_da_via_reduction(parse_query("Q(x1) :- T(x1,x3)."), db, VarOrder{"x1", "x3"}),
                    InvalidQuery);
    CHECK_THROWS_AS(signed_da_via_reduction(parse_query("Q(*) :- T(x1,x3)."), db, VarOrder{"x1"}), InvalidOrder);
}

TEST_CASE("both engines agree on random signed queries")
{
    std::mt19937_64 rng(62);
    InstanceParams params;
    params.max_domain = 3;
    for (int round = 0; round < 150; ++round) {
        Instance inst = random_instance(rng, params);
        DAProviderPtr red = signed_da_via_reduction(inst.query, inst.db, inst.order);
        QueryAccess circuit(inst.query, inst.db, inst.order);
        REQUIRE(red->count() == circuit.count());
        for (BigInt k = 1; k <= red->count(); ++k) {
            Row row = red->kth(k);
            CHECK(row == circuit.access(k));
            CHECK(red->rank(row) == k);
        }
    }
}

TEST_CASE("every intermediate query has direct access, in both recursion directions")
{
    std::mt19937_64 rng(63);
    InstanceParams params;
    params.max_domain = 3;
    params.negation = 0.6;
    for (int round = 0; round < 60; ++round) {
        Instance inst = random_instance(rng, params);
        std::vector<std::size_t> negatives;
        for (std::size_t i = 0; i < inst.query.atoms.size(); ++i) {
            if (!inst.query.atoms[i].positive()) {
                negatives.push_back(i);
            }
        }
        // Every split of the negative atoms into N1 and N2.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << negatives.size()); ++mask) {
            QnnSpec spec;
            for (std::size_t j = 0; j < negatives.size(); ++j) {
                ((mask >> j) & 1 ? spec.n1 : spec.n2).push_back(negatives[j]);
            }
            auto rows = padded_rows(qnn_query(inst.query, spec), inst.db, inst.order);

            auto forward = qnn_da(inst.query, spec, bruteforce_base(inst.db, inst.order));
            CHECK(all_rows(*forward) == rows);
            auto backward = dual_da(inst.query, spec, inst.db, inst.order);
            CHECK(all_rows(*backward) == rows);
        }
    }
}
