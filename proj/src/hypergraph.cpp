#include "cqda/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "cqda/config.hpp"
#include "cqda/errors.hpp"
#include "cqda/rational_lp.hpp"

namespace cqda {

std::string to_string(Rational const& r)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) {
        return c.get_num().get_str();
    }
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::vector<VertexSet> dedup(std::vector<VertexSet> const& edges)
{
    std::vector<VertexSet> out;
    for (auto e : edges) {
        if (std::find(out.begin(), out.end(), e) == out.end()) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<std::size_t> members(VertexSet s)
{
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(__builtin_ctzll(s)));
        s &= s - 1;
    }
    return out;
}

std::unordered_map<std::string, std::size_t> index_names(std::vector<std::string> const& names)
{
    if (names.size() > max_vertices) {
        throw TooLarge("hypergraphs are limited to " + std::to_string(max_vertices) + " vertices");
    }
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!idx.emplace(names[i], i).second) {
            throw InvalidQuery("vertex '" + names[i] + "' repeated");
        }
    }
    return idx;
}

VertexSet to_set(std::unordered_map<std::string, std::size_t> const& idx, std::vector<std::string> const& names)
{
    VertexSet s = 0;
    for (auto const& n : names) {
        auto it = idx.find(n);
        if (it == idx.end()) {
            throw VertexNotFound("unknown vertex '" + n + "'");
        }
        s |= bit(it->second);
    }
    return s;
}

bool is_chain(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return popcount(a) < popcount(b); });
    for (std::size_t i = 1; i < sets.size(); ++i) {
        if ((sets[i - 1] & ~sets[i]) != 0) {
            return false;
        }
    }
    return true;
}

void check_subset_budget(std::size_t count, char const* what)
{
    if (count >= 64 || (std::uint64_t{1} << count) > budget()) {
        throw BudgetExceeded(std::string("2^") + std::to_string(count) + " " + what +
                             " exceed the enumeration budget of " + std::to_string(budget()));
    }
}

/// Per-step cost max_F c(N_F(v, eliminated), F) over a list of edge families.
class CostModel {
  public:
    CostModel(std::vector<std::vector<VertexSet>> families, bool fractional)
        : m_families(std::move(families)), m_fractional(fractional), m_memo(m_families.size())
    {}

    Rational step(std::size_t v, VertexSet eliminated) const
    {
        Rational worst = 0;
        for (std::size_t f = 0; f < m_families.size(); ++f) {
            VertexSet n = neighbourhood(m_families[f], v, eliminated);
            Rational c = cover(f, n);
            if (c > worst) {
                worst = c;
            }
        }
        return worst;
    }

  private:
    Rational cover(std::size_t f, VertexSet n) const
    {
        auto it = m_memo[f].find(n);
        if (it != m_memo[f].end()) {
            return it->second;
        }
        Rational c = m_fractional ? fractional_cover_number(n, m_families[f])
                                  : Rational(cover_number(n, m_families[f]));
        m_memo[f].emplace(n, c);
        return c;
    }

    std::vector<std::vector<VertexSet>> m_families;
    bool m_fractional;
    mutable std::vector<std::unordered_map<VertexSet, Rational>> m_memo;
};

Rational order_width(CostModel const& model, std::vector<std::size_t> const& order)
{
    Rational w = 0;
    VertexSet eliminated = 0;
    for (auto v : order) {
        Rational c = model.step(v, eliminated);
        if (c > w) {
            w = c;
        }
        eliminated |= bit(v);
    }
    return w;
}

std::vector<std::vector<VertexSet>> all_subfamilies(std::vector<VertexSet> const& edges)
{
    check_subset_budget(edges.size(), "edge subsets");
    std::vector<std::vector<VertexSet>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<VertexSet> family;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (mask & bit(i)) {
                family.push_back(edges[i]);
            }
        }
        out.push_back(std::move(family));
    }
    return out;
}

std::vector<std::vector<VertexSet>> signed_subfamilies(SignedHypergraph const& h)
{
    std::vector<VertexSet> neg = dedup(h.negative());
    check_subset_budget(neg.size(), "negative edge subsets");
    std::vector<std::vector<VertexSet>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << neg.size()); ++mask) {
        std::vector<VertexSet> family = h.positive();
        for (std::size_t i = 0; i < neg.size(); ++i) {
            if (mask & bit(i)) {
                family.push_back(neg[i]);
            }
        }
        out.push_back(dedup(family));
    }
    return out;
}

CostModel model_for(SignedHypergraph const& h, Measure m)
{
    switch (m) {
    case Measure::how:
    case Measure::fhow:
        return CostModel({h.unsigned_hypergraph().distinct_edges()}, m == Measure::fhow);
    case Measure::show:
    case Measure::sfhow:
        return CostModel(signed_subfamilies(h), m == Measure::sfhow);
    case Measure::bhow:
    case Measure::bfhow:
        return CostModel(all_subfamilies(h.unsigned_hypergraph().distinct_edges()), m == Measure::bfhow);
    case Measure::nsw:
        break;
    }
    throw InvalidQuery("nsw has no per-order width");
}

SignedHypergraph as_signed(Hypergraph const& h)
{
    return SignedHypergraph(h.names(), h.vertices(), h.edges(), {});
}

std::vector<std::size_t> checked_order(std::vector<std::string> const& names, VertexSet vertices,
                                       VarOrder const& order)
{
    auto idx = index_names(names);
    std::vector<std::size_t> out;
    VertexSet seen = 0;
    for (auto const& v : order) {
        auto it = idx.find(v);
        if (it == idx.end() || !(vertices & bit(it->second))) {
            throw VertexNotFound("order names unknown vertex '" + v + "'");
        }
        seen |= bit(it->second);
        out.push_back(it->second);
    }
    if (seen != vertices) {
        throw InvalidOrder("elimination order must be a permutation of the vertices");
    }
    return out;
}

Rational width_with(SignedHypergraph const& h, Measure m, VarOrder const& order)
{
    auto idx = checked_order(h.names(), h.vertices(), order);
    return order_width(model_for(h, m), idx);
}

VarOrder names_order(std::vector<std::string> const& names, std::vector<std::size_t> const& idx)
{
    std::vector<std::string> out;
    for (auto i : idx) {
        out.push_back(names[i]);
    }
    return VarOrder(std::move(out));
}

/// best[S] = min over the last eliminated v in S of max(best[S\v], step(v, S\v)).
std::pair<std::vector<std::size_t>, Rational> exact_best(CostModel const& model, std::vector<std::size_t> const& verts)
{
    std::size_t const n = verts.size();
    std::size_t const states = std::size_t{1} << n;
    std::vector<Rational> best(states);
    std::vector<int> last(states, -1);
    auto to_global = [&](std::size_t local_mask) {
        VertexSet s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (local_mask & (std::size_t{1} << i)) {
                s |= bit(verts[i]);
            }
        }
        return s;
    };
    for (std::size_t s = 1; s < states; ++s) {
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(s & (std::size_t{1} << i))) {
                continue;
            }
            std::size_t prev = s & ~(std::size_t{1} << i);
            Rational c = model.step(verts[i], to_global(prev));
            Rational w = c > best[prev] ? c : best[prev];
            if (first || w < best[s]) {
                best[s] = w;
                last[s] = static_cast<int>(i);
                first = false;
            }
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t s = states - 1; s != 0;) {
        auto i = static_cast<std::size_t>(last[s]);
        order.push_back(verts[i]);
        s &= ~(std::size_t{1} << i);
    }
    std::reverse(order.begin(), order.end());
    return {order, best[states - 1]};
}

std::pair<std::vector<std::size_t>, Rational> greedy_best(CostModel const& model, std::vector<std::string> const& names,
                                                          std::vector<std::size_t> verts)
{
    std::sort(verts.begin(), verts.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    std::vector<std::size_t> order;
    Rational width = 0;
    VertexSet eliminated = 0;
    std::vector<bool> used(verts.size(), false);
    for (std::size_t round = 0; round < verts.size(); ++round) {
        std::size_t pick = verts.size();
        Rational pick_cost;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (used[i]) {
                continue;
            }
            Rational c = model.step(verts[i], eliminated);
            if (pick == verts.size() || c < pick_cost) {
                pick = i;
                pick_cost = c;
            }
        }
        used[pick] = true;
        order.push_back(verts[pick]);
        eliminated |= bit(verts[pick]);
        if (pick_cost > width) {
            width = pick_cost;
        }
    }
    return {order, width};
}

bool exact_search_fits(std::size_t n)
{
    return n < 40 && (std::uint64_t{n} << n) <= budget();
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> vertices, std::vector<std::vector<std::string>> const& edges)
    : m_names(std::move(vertices))
{
    auto idx = index_names(m_names);
    m_vertices = m_names.size() == 64 ? ~VertexSet{0} : (bit(m_names.size()) - 1);
    for (auto const& e : edges) {
        m_edges.push_back(to_set(idx, e));
    }
}

Hypergraph::Hypergraph(std::vector<std::string> names, VertexSet vertices, std::vector<VertexSet> edges)
    : m_names(std::move(names)), m_vertices(vertices), m_edges(std::move(edges))
{
    index_names(m_names);
    for (auto e : m_edges) {
        if (e & ~m_vertices) {
            throw VertexNotFound("edge mentions a vertex outside the vertex set");
        }
    }
}

std::size_t Hypergraph::index(std::string const& name) const
{
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (m_names[i] == name && (m_vertices & bit(i))) {
            return i;
        }
    }
    throw VertexNotFound("unknown vertex '" + name + "'");
}

VertexSet Hypergraph::set_of(std::vector<std::string> const& names) const
{
    VertexSet s = 0;
    for (auto const& n : names) {
        s |= bit(index(n));
    }
    return s;
}

std::vector<std::string> Hypergraph::names_of(VertexSet s) const
{
    std::vector<std::string> out;
    for (auto i : members(s)) {
        out.push_back(m_names[i]);
    }
    return out;
}

std::vector<std::size_t> Hypergraph::indices(VarOrder const& order) const
{
    std::vector<std::size_t> out;
    for (auto const& v : order) {
        out.push_back(index(v));
    }
    return out;
}

std::vector<VertexSet> Hypergraph::distinct_edges() const
{
    return dedup(m_edges);
}

SignedHypergraph::SignedHypergraph(std::vector<std::string> vertices,
                                   std::vector<std::vector<std::string>> const& positive,
                                   std::vector<std::vector<std::string>> const& negative)
    : m_names(std::move(vertices))
{
    auto idx = index_names(m_names);
    m_vertices = m_names.size() == 64 ? ~VertexSet{0} : (bit(m_names.size()) - 1);
    for (auto const& e : positive) {
        m_positive.push_back(to_set(idx, e));
    }
    for (auto const& e : negative) {
        m_negative.push_back(to_set(idx, e));
    }
}

SignedHypergraph::SignedHypergraph(std::vector<std::string> names, VertexSet vertices,
                                   std::vector<VertexSet> positive, std::vector<VertexSet> negative)
    : m_names(std::move(names)), m_vertices(vertices), m_positive(std::move(positive)), m_negative(std::move(negative))
{
    index_names(m_names);
}

Hypergraph SignedHypergraph::unsigned_hypergraph() const
{
    std::vector<VertexSet> edges = m_positive;
    edges.insert(edges.end(), m_negative.begin(), m_negative.end());
    return Hypergraph(m_names, m_vertices, std::move(edges));
}

Hypergraph SignedHypergraph::with_negative(std::uint64_t keep) const
{
    std::vector<VertexSet> edges = m_positive;
    for (std::size_t i = 0; i < m_negative.size(); ++i) {
        if (keep & bit(i)) {
            edges.push_back(m_negative[i]);
        }
    }
    return Hypergraph(m_names, m_vertices, std::move(edges));
}

Hypergraph remove_vertex(Hypergraph const& h, std::string const& v)
{
    VertexSet const vb = bit(h.index(v));
    VertexSet open = 0;
    std::vector<VertexSet> edges;
    for (auto e : h.edges()) {
        if (e & vb) {
            open |= e;
        }
        VertexSet rest = e & ~vb;
        if (rest && std::find(edges.begin(), edges.end(), rest) == edges.end()) {
            edges.push_back(rest);
        }
    }
    open &= ~vb;
    if (open && std::find(edges.begin(), edges.end(), open) == edges.end()) {
        edges.push_back(open);
    }
    return Hypergraph(h.names(), h.vertices() & ~vb, std::move(edges));
}

Hypergraph delete_vertices(Hypergraph const& h, VertexSet s)
{
    std::vector<VertexSet> edges;
    for (auto e : h.edges()) {
        VertexSet rest = e & ~s;
        if (rest) {
            edges.push_back(rest);
        }
    }
    return Hypergraph(h.names(), h.vertices() & ~s, std::move(edges));
}

VertexSet neighbourhood(std::vector<VertexSet> const& edges, std::size_t v, VertexSet eliminated)
{
    VertexSet const vb = bit(v);
    VertexSet reached = vb;
    VertexSet pending = vb;
    bool in_edge = false;
    while (pending) {
        std::size_t u = static_cast<std::size_t>(__builtin_ctzll(pending));
        pending &= pending - 1;
        for (auto e : edges) {
            if (!(e & bit(u))) {
                continue;
            }
            in_edge = true;
            VertexSet fresh = e & ~reached;
            reached |= fresh;
            pending |= fresh & eliminated;
        }
    }
    if (!in_edge) {
        return 0;
    }
    return reached & ~eliminated;
}

int cover_number(VertexSet s, std::vector<VertexSet> const& family)
{
    if (s == 0) {
        return 0;
    }
    VertexSet all = 0;
    for (auto e : family) {
        all |= e;
    }
    if (s & ~all) {
        throw Uncoverable("vertex set is not covered by the edge family");
    }
    std::vector<VertexSet> useful;
    for (auto e : dedup(family)) {
        if (e & s) {
            useful.push_back(e & s);
        }
    }

    int best = popcount(s);
    std::function<void(VertexSet, int)> search = [&](VertexSet left, int used) {
        if (left == 0) {
            best = std::min(best, used);
            return;
        }
        if (used + 1 >= best) {
            return;
        }
        std::size_t v = static_cast<std::size_t>(__builtin_ctzll(left));
        for (auto e : useful) {
            if (e & bit(v)) {
                search(left & ~e, used + 1);
            }
        }
    };
    search(s, 0);
    return best;
}

Rational fractional_cover_number(VertexSet s, std::vector<VertexSet> const& family)
{
    if (s == 0) {
        return 0;
    }
    VertexSet all = 0;
    for (auto e : family) {
        all |= e;
    }
    if (s & ~all) {
        throw Uncoverable("vertex set is not covered by the edge family");
    }
    // Dual packing LP: max sum y_v subject to sum_{v in e} y_v <= 1 per edge.
    std::vector<std::size_t> verts = members(s);
    std::vector<std::vector<mpq_class>> a;
    for (auto e : dedup(family)) {
        if (!(e & s)) {
            continue;
        }
        std::vector<mpq_class> row(verts.size());
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (e & bit(verts[j])) {
                row[j] = 1;
            }
        }
        a.push_back(std::move(row));
    }
    std::vector<mpq_class> b(a.size(), mpq_class(1));
    std::vector<mpq_class> c(verts.size(), mpq_class(1));
    Rational r = lp_maximize(a, b, c);
    r.canonicalize();
    return r;
}

int how_width(Hypergraph const& h, VarOrder const& order)
{
    return static_cast<int>(width_with(as_signed(h), Measure::how, order).get_num().get_si());
}

Rational fhow_width(Hypergraph const& h, VarOrder const& order)
{
    return width_with(as_signed(h), Measure::fhow, order);
}

int show_width(SignedHypergraph const& h, VarOrder const& order)
{
    return static_cast<int>(width_with(h, Measure::show, order).get_num().get_si());
}

Rational sfhow_width(SignedHypergraph const& h, VarOrder const& order)
{
    return width_with(h, Measure::sfhow, order);
}

int bhow_width(Hypergraph const& h, VarOrder const& order)
{
    return static_cast<int>(width_with(as_signed(h), Measure::bhow, order).get_num().get_si());
}

Rational bfhow_width(Hypergraph const& h, VarOrder const& order)
{
    return width_with(as_signed(h), Measure::bfhow, order);
}

int bhtw_bruteforce(Hypergraph const& h)
{
    auto families = all_subfamilies(h.distinct_edges());
    std::vector<std::size_t> verts = members(h.vertices());
    if (!exact_search_fits(verts.size()) ||
        families.size() * (std::uint64_t{verts.size()} << verts.size()) > budget() * 16) {
        throw BudgetExceeded("hypergraph too large for the exhaustive beta-hypertree width");
    }
    Rational worst = 0;
    for (auto& family : families) {
        CostModel model({family}, false);
        Rational w = exact_best(model, verts).second;
        if (w > worst) {
            worst = w;
        }
    }
    return static_cast<int>(worst.get_num().get_si());
}

bool is_nest_point(Hypergraph const& h, std::string const& v)
{
    VertexSet const vb = bit(h.index(v));
    std::vector<VertexSet> incident;
    for (auto e : h.edges()) {
        if (e & vb) {
            incident.push_back(e);
        }
    }
    return is_chain(incident);
}

std::optional<VarOrder> beta_elim_order(Hypergraph const& h)
{
    Hypergraph current = h;
    std::vector<std::string> order;
    while (current.vertices()) {
        bool found = false;
        for (auto i : members(current.vertices())) {
            auto const& name = current.names()[i];
            if (is_nest_point(current, name)) {
                order.push_back(name);
                current = delete_vertices(current, bit(i));
                found = true;
                break;
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return VarOrder(std::move(order));
}

bool is_nest_set(Hypergraph const& h, VertexSet s)
{
    std::vector<VertexSet> rests;
    for (auto e : h.edges()) {
        if (e & s) {
            rests.push_back(e & ~s);
        }
    }
    return is_chain(rests);
}

std::optional<NestSetElimination> nest_set_elimination(Hypergraph const& h, int k_max)
{
    std::vector<std::size_t> all = members(h.vertices());
    if (all.size() > 20) {
        throw BudgetExceeded("nest set search is limited to 20 vertices");
    }
    if (all.empty()) {
        return NestSetElimination{0, {}};
    }

    for (int k = 1; k <= k_max && k <= static_cast<int>(all.size()); ++k) {
        std::unordered_set<VertexSet> failed;
        std::vector<VertexSet> chosen;
        std::uint64_t visited = 0;
        std::function<bool(VertexSet)> search = [&](VertexSet eliminated) -> bool {
            VertexSet left = h.vertices() & ~eliminated;
            if (left == 0) {
                return true;
            }
            if (failed.count(eliminated)) {
                return false;
            }
            if (++visited > budget()) {
                throw BudgetExceeded("nest set search exceeded the enumeration budget");
            }
            Hypergraph rest = delete_vertices(h, eliminated);
            for (VertexSet s = left; s; s = (s - 1) & left) {
                if (popcount(s) > k || !is_nest_set(rest, s)) {
                    continue;
                }
                chosen.push_back(s);
                if (search(eliminated | s)) {
                    return true;
                }
                chosen.pop_back();
            }
            failed.insert(eliminated);
            return false;
        };
        if (search(0)) {
            NestSetElimination out;
            out.sets = chosen;
            for (auto s : chosen) {
                out.width = std::max(out.width, popcount(s));
            }
            return out;
        }
    }
    return std::nullopt;
}

std::optional<int> nsw_bruteforce(Hypergraph const& h, int k_max)
{
    auto r = nest_set_elimination(h, k_max);
    if (!r) {
        return std::nullopt;
    }
    return r->width;
}

std::string clone_name(std::vector<std::string> const& names, std::string const& u)
{
    std::string name = u + "'";
    while (std::find(names.begin(), names.end(), name) != names.end()) {
        name += "'";
    }
    return name;
}

SignedHypergraph clone_vertex(SignedHypergraph const& h, std::string const& u)
{
    Hypergraph probe(h.names(), h.vertices(), {});
    VertexSet const ub = bit(probe.index(u));
    if (h.names().size() >= max_vertices) {
        throw TooLarge("no room for a cloned vertex");
    }
    std::vector<std::string> names = h.names();
    names.push_back(clone_name(h.names(), u));
    VertexSet const cb = bit(names.size() - 1);
    auto extend = [&](std::vector<VertexSet> edges) {
        for (auto& e : edges) {
            if (e & ub) {
                e |= cb;
            }
        }
        return edges;
    };
    return SignedHypergraph(std::move(names), h.vertices() | cb, extend(h.positive()), extend(h.negative()));
}

Hypergraph clone_vertex(Hypergraph const& h, std::string const& u)
{
    return clone_vertex(as_signed(h), u).unsigned_hypergraph();
}

VarOrder insert_after(VarOrder const& order, std::string const& u, std::string const& copy)
{
    std::vector<std::string> out;
    for (auto const& v : order) {
        out.push_back(v);
        if (v == u) {
            out.push_back(copy);
        }
    }
    return VarOrder(std::move(out));
}

Measure parse_measure(std::string const& name)
{
    static std::vector<std::pair<std::string, Measure>> const table = {
        {"how", Measure::how},   {"fhow", Measure::fhow},   {"show", Measure::show}, {"sfhow", Measure::sfhow},
        {"bhow", Measure::bhow}, {"bfhow", Measure::bfhow}, {"nsw", Measure::nsw},
    };
    for (auto const& [n, m] : table) {
        if (n == name) {
            return m;
        }
    }
    throw InvalidQuery("unknown width measure '" + name + "'");
}

std::string to_string(Measure m)
{
    switch (m) {
    case Measure::how: return "how";
    case Measure::fhow: return "fhow";
    case Measure::show: return "show";
    case Measure::sfhow: return "sfhow";
    case Measure::bhow: return "bhow";
    case Measure::bfhow: return "bfhow";
    case Measure::nsw: return "nsw";
    }
    return "?";
}

bool is_fractional(Measure m)
{
    return m == Measure::fhow || m == Measure::sfhow || m == Measure::bfhow;
}

Rational width_of(SignedHypergraph const& h, Measure m, VarOrder const& order)
{
    return width_with(h, m, order);
}

OrderSearch best_order(SignedHypergraph const& h, Measure m)
{
    std::vector<std::size_t> verts = members(h.vertices());
    if (m == Measure::nsw) {
        Hypergraph u = h.unsigned_hypergraph();
        auto r = nest_set_elimination(u, static_cast<int>(verts.size()));
        std::vector<std::size_t> order;
        for (auto s : r->sets) {
            for (auto i : members(s)) {
                order.push_back(i);
            }
        }
        return {names_order(h.names(), order), Rational(r->width), true};
    }
    CostModel model = model_for(h, m);
    if (exact_search_fits(verts.size())) {
        auto [order, w] = exact_best(model, verts);
        return {names_order(h.names(), order), w, true};
    }
    auto [order, w] = greedy_best(model, h.names(), verts);
    return {names_order(h.names(), order), w, false};
}

bool is_free_connex(VarOrder const& order, std::vector<std::string> const& s)
{
    std::unordered_set<std::string> want(s.begin(), s.end());
    for (auto const& v : want) {
        if (!order.contains(v)) {
            throw VertexNotFound("free variable '" + v + "' missing from the order");
        }
    }
    std::size_t const start = order.size() - want.size();
    for (std::size_t i = start; i < order.size(); ++i) {
        if (!want.count(order[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace cqda
