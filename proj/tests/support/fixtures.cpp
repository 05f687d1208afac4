#include "support/fixtures.hpp"

namespace cqda::testing {

std::string data_path(std::string const& relative)
{
    return std::string(CQDA_DATA_DIR) + "/" + relative;
}

SignedQuery example51_query()
{
    return parse_query("Q(x1,x2,x3,x4) :- !S(x1,x2,x3,x4), T(x1,x3), R(x2,x4).");
}

Database example51_db()
{
    Database db{Domain({"0", "1"})};
    db.add_table("S", 4, std::vector<Row>{{0, 0, 0, 0}});
    db.add_table("R", 2, std::vector<Row>{{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    db.add_table("T", 2, std::vector<Row>{{0, 1}, {1, 1}});
    return db;
}

namespace {

struct Built {
    Circuit circuit;
    AnnotatedGates gates;
};

Built build_annotated()
{
    Circuit c(Domain({"0", "1", "2"}), VarOrder({"x1", "x2", "x3"}));
    AnnotatedGates g{};
    g.x3_shared = c.add_decision(2, {{0, Circuit::top}, {1, Circuit::top}, {2, Circuit::bot}});
    g.x2_left = c.add_decision(1, {{0, g.x3_shared}, {1, g.x3_shared}});
    g.x2_middle = c.add_decision(1, {{0, g.x3_shared}, {1, g.x3_shared}, {2, g.x3_shared}});
    g.x2_product = c.add_decision(1, {{0, Circuit::top}, {1, Circuit::bot}, {2, Circuit::top}});
    g.x3_product = c.add_decision(2, {{1, Circuit::top}, {2, Circuit::top}});
    g.product = c.add_product({g.x2_product, g.x3_product});
    g.root = c.add_decision(0, {{0, g.x2_left}, {1, g.x2_middle}, {2, g.product}});
    c.set_output(g.root);
    return Built{std::move(c), g};
}

}  // namespace

Circuit annotated_circuit()
{
    return build_annotated().circuit;
}

AnnotatedGates annotated_gates()
{
    return build_annotated().gates;
}

SignedQuery binarize_example_query()
{
    return parse_query("Q(*) :- A(x1), B(x2), !R(x1,x2).");
}

Database binarize_example_db()
{
    Database db{Domain::range(4)};
    db.add_table("A", 1, std::vector<Row>{{0}, {1}, {2}});
    db.add_table("B", 1, std::vector<Row>{{1}, {2}, {3}});
    db.add_table("R", 2, std::vector<Row>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    return db;
}

SignedQuery inequality_query()
{
    return binarize_example_query();
}

Database inequality_db(std::size_t d)
{
    Database db{Domain::range(d)};
    std::vector<Row> all;
    std::vector<Row> diagonal;
    for (Value v = 0; v < d; ++v) {
        all.push_back({v});
        diagonal.push_back({v, v});
    }
    db.add_table("A", 1, all);
    db.add_table("B", 1, all);
    db.add_table("R", 2, diagonal);
    return db;
}

}  // namespace cqda::testing
