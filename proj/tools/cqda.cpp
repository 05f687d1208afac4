#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqda/access.hpp"
#include "cqda/compile.hpp"
#include "cqda/errors.hpp"
#include "cqda/hypergraph.hpp"
#include "cqda/io.hpp"
#include "cqda/project.hpp"
#include "cqda/reduction.hpp"

namespace {

using namespace cqda;
using ojson = nlohmann::ordered_json;

enum Exit { ok = 0, usage = 1, out_of_range = 2, budget_exceeded = 3 };

struct Options {
    std::string db_path;
    std::string query;
    std::string order;
    std::string engine = "circuit";
    bool no_binarize = false;
    bool stats = false;
    bool pretty = false;
    std::string measure = "fhow";
    std::string k;
    std::string tuple;
    std::string from = "1";
    std::optional<std::size_t> limit;
    std::string free;
    std::string output;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(std::string const& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

/// A path to a query file, or the query text itself.
SignedQuery read_query(std::string const& arg)
{
    if (std::filesystem::is_regular_file(arg)) {
        return load_query(arg);
    }
    if (arg.find(":-") != std::string::npos) {
        return parse_query(arg);
    }
    throw UsageError("cannot read query file '" + arg + "'");
}

std::optional<VarOrder> user_order(Options const& o)
{
    if (o.order.empty()) {
        return std::nullopt;
    }
    return VarOrder(split_list(o.order));
}

/// The given variables first, then the rest of var(q) by first appearance.
VarOrder full_order(SignedQuery const& q, std::optional<VarOrder> const& given)
{
    auto const all = q.vars();
    std::vector<std::string> order;
    if (given) {
        for (auto const& x : *given) {
            if (std::find(all.begin(), all.end(), x) == all.end()) {
                throw InvalidOrder("order lists '" + x + "', which is not a query variable");
            }
            order.push_back(x);
        }
    }
    for (auto const& x : all) {
        if (std::find(order.begin(), order.end(), x) == order.end()) {
            order.push_back(x);
        }
    }
    return VarOrder(order);
}

BigInt parse_big(std::string const& s, char const* what)
{
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) {
        throw UsageError(std::string(what) + " must be an integer");
    }
    return v;
}

void emit(Options const& o, ojson const& j)
{
    std::cout << (o.pretty ? j.dump(2) : j.dump()) << "\n";
}

ojson row_json(Row const& row, VarOrder const& order, Domain const& domain)
{
    ojson out = ojson::object();
    for (std::size_t i = 0; i < order.size(); ++i) {
        out[order[i]] = domain.value(row[i]);
    }
    return out;
}

ojson stats_object(CompileStats const& s)
{
    return ojson{{"rec_calls", s.rec_calls}, {"cache_hits", s.cache_hits}, {"gates", s.gates}, {"edges", s.edges}};
}

/// Uniform view over both engines.
class Engine {
  public:
    Engine(Options const& o, SignedQuery const& q, Database const& db) : m_domain(db.domain())
    {
        auto given = user_order(o);
        if (o.engine == "circuit") {
            m_circuit.emplace(q, db, given, AccessOptions{!o.no_binarize});
            m_order = m_circuit->answer_order();
        } else if (o.engine == "reduction") {
            if (!q.is_join()) {
                throw UsageError("the reduction engine supports join queries only (all variables free)");
            }
            VarOrder order = normalize_order(q, given);
            m_reduction = signed_da_via_reduction(q, db, order);
            m_order = order;
        } else {
            throw UsageError("unknown engine '" + o.engine + "'");
        }
    }

    VarOrder const& order() const { return m_order; }
    Domain const& domain() const { return m_domain; }

    BigInt count() const { return m_circuit ? m_circuit->count() : m_reduction->count(); }
    Row access(BigInt const& k) const { return m_circuit ? m_circuit->access(k) : m_reduction->kth(k); }
    BigInt rank(Row const& t) const { return m_circuit ? m_circuit->rank(t) : m_reduction->rank(t); }
    std::optional<CompileStats> stats() const
    {
        if (m_circuit) {
            return m_circuit->stats();
        }
        return std::nullopt;
    }

  private:
    Domain m_domain;
    VarOrder m_order;
    std::optional<QueryAccess> m_circuit;
    DAProviderPtr m_reduction;
};

void maybe_stats(Options const& o, Engine const& e)
{
    if (o.stats) {
        if (auto s = e.stats()) {
            emit(o, stats_object(*s));
        }
    }
}

int cmd_width(Options const& o)
{
    SignedQuery q = read_query(o.query);
    if (!o.db_path.empty()) {
        check_schema(q, load_database(o.db_path));
    }
    Measure m = parse_measure(o.measure);
    SignedHypergraph h = hypergraph_of(q);
    ojson out;
    out["measure"] = to_string(m);
    VarOrder elimination;
    Rational width;
    bool exact = true;
    if (auto given = user_order(o)) {
        if (m == Measure::nsw) {
            throw UsageError("nsw has no per-order form; omit --order");
        }
        elimination = full_order(q, given).reversed();
        width = width_of(h, m, elimination);
    } else {
        OrderSearch best = best_order(h, m);
        elimination = best.order;
        width = best.width;
        exact = best.exact;
    }
    out["order"] = elimination.reversed().vars();
    out["elimination_order"] = elimination.vars();
    if (width.get_den() == 1) {
        out["width"] = width.get_num().get_si();
    } else {
        out["width"] = to_string(width);
    }
    out["exact"] = exact;
    emit(o, out);
    return ok;
}

int cmd_compile(Options const& o)
{
    SignedQuery q = read_query(o.query);
    Database db = load_database(o.db_path);
    VarOrder compile_order = full_order(q, user_order(o)).reversed();
    std::string dump;
    CompileStats stats;
    if (o.no_binarize) {
        auto c = dpll_compile(q, db, compile_order);
        dump = dump_circuit(c.circuit);
        stats = c.stats;
    } else {
        auto c = compile_binarized(q, db, compile_order);
        dump = dump_circuit(c.circuit);
        stats = c.stats;
    }
    if (o.output.empty()) {
        std::cout << dump;
    } else {
        write_file(o.output, dump);
    }
    if (o.stats) {
        emit(o, stats_object(stats));
    }
    return ok;
}

int cmd_count(Options const& o)
{
    Engine e(o, read_query(o.query), load_database(o.db_path));
    emit(o, ojson{{"count", e.count().get_str()}});
    maybe_stats(o, e);
    return ok;
}

int cmd_access(Options const& o)
{
    Engine e(o, read_query(o.query), load_database(o.db_path));
    emit(o, row_json(e.access(parse_big(o.k, "--k")), e.order(), e.domain()));
    maybe_stats(o, e);
    return ok;
}

int cmd_rank(Options const& o)
{
    Engine e(o, read_query(o.query), load_database(o.db_path));
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(o.tuple);
    } catch (nlohmann::json::parse_error const&) {
        throw UsageError("--tuple must be a JSON object");
    }
    Tuple t = parse_tuple_json(j, e.domain());
    Row row = tuple_to_row(t, e.order());
    BigInt r = e.rank(row);
    bool answer = r > 0 && e.access(r) == row;
    emit(o, ojson{{"rank", r.get_str()}, {"answer", answer}});
    return ok;
}

int print_answers(Options const& o, Engine const& e)
{
    std::size_t limit = o.limit.value_or(std::numeric_limits<std::size_t>::max());
    if (limit == 0) {
        return ok;
    }
    BigInt from = parse_big(o.from, "--from");
    BigInt const total = e.count();
    if (from < 1 || from > total) {
        if (total == 0 && from == 1) {
            return ok;
        }
        throw OutOfRange("k out of range (count=" + total.get_str() + ")");
    }
    std::size_t printed = 0;
    for (BigInt k = from; k <= total && printed < limit; ++k, ++printed) {
        emit(o, row_json(e.access(k), e.order(), e.domain()));
    }
    return ok;
}

int cmd_enumerate(Options const& o)
{
    Engine e(o, read_query(o.query), load_database(o.db_path));
    return print_answers(o, e);
}

int cmd_project(Options const& o)
{
    SignedQuery q = read_query(o.query);
    q.free = split_list(o.free);
    Engine e(o, q, load_database(o.db_path));
    return print_answers(o, e);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Direct access to the answers of signed conjunctive queries"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_db) {
        if (needs_db) {
            sub->add_option("db", o.db_path, "Database JSON file")->required();
        }
        sub->add_option("query", o.query, "Query file, or the query text")->required();
        sub->add_option("--order", o.order, "Comma-separated variables, most significant first");
        sub->add_flag("--pretty", o.pretty, "Indented JSON");
    };
    auto engine_opts = [&](CLI::App* sub) {
        sub->add_option("--engine", o.engine, "circuit or reduction")->check(CLI::IsMember({"circuit", "reduction"}));
        sub->add_flag("--no-binarize", o.no_binarize, "Compile over the original domain");
        sub->add_flag("--stats", o.stats, "Print compile statistics");
    };

    auto* width = app.add_subcommand("width", "Width of the query hypergraph");
    common(width, false);
    width->add_option("--db", o.db_path, "Database to check the query against");
    width->add_option("--measure", o.measure, "how, fhow, show, sfhow, bhow, bfhow or nsw");

    auto* compile = app.add_subcommand("compile", "Compile the query into a circuit and dump it");
    common(compile, true);
    compile->add_flag("--no-binarize", o.no_binarize, "Compile over the original domain");
    compile->add_flag("--stats", o.stats, "Print compile statistics");
    compile->add_option("--output", o.output, "Write the dump to this file");

    auto* count = app.add_subcommand("count", "Number of answers");
    common(count, true);
    engine_opts(count);

    auto* access = app.add_subcommand("access", "The k-th answer");
    common(access, true);
    engine_opts(access);
    access->add_option("--k", o.k, "1-based position")->required();

    auto* rank = app.add_subcommand("rank", "Position of a tuple among the answers");
    common(rank, true);
    engine_opts(rank);
    rank->add_option("--tuple", o.tuple, "JSON object {var: value}")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Answers in order");
    common(enumerate, true);
    engine_opts(enumerate);
    enumerate->add_option("--from", o.from, "First position (1-based)");
    enumerate->add_option("--limit", o.limit, "Maximum number of answers");

    auto* project = app.add_subcommand("project", "Answers over the given free variables");
    common(project, true);
    engine_opts(project);
    project->add_option("--free", o.free, "Comma-separated free variables")->required();
    project->add_option("--from", o.from, "First position (1-based)");
    project->add_option("--limit", o.limit, "Maximum number of answers");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*width) {
            return cmd_width(o);
        }
        if (*compile) {
            return cmd_compile(o);
        }
        if (*count) {
            return cmd_count(o);
        }
        if (*access) {
            return cmd_access(o);
        }
        if (*rank) {
            return cmd_rank(o);
        }
        if (*enumerate) {
            return cmd_enumerate(o);
        }
        return cmd_project(o);
    } catch (OutOfRange const& e) {
        std::cerr << e.what() << "\n";
        return out_of_range;
    } catch (BudgetExceeded const& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return budget_exceeded;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
}
