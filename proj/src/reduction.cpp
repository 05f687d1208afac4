#include "cqda/reduction.hpp"

#include <algorithm>

#include "cqda/compile.hpp"

namespace cqda {

namespace {

[[noreturn]] void out_of_range(BigInt const& total)
{
    throw OutOfRange("k out of range (count=" + total.get_str() + ")");
}

}  // namespace

BigInt DAProvider::rank(Row const& t) const
{
    return rank_via_da(*this, t);
}

BigInt rank_via_da(DAProvider const& p, Row const& t)
{
    BigInt lo = 0;
    BigInt hi = p.count();
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (p.kth(mid) <= t) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

ExplicitDA::ExplicitDA(std::vector<Row> rows) : m_rows(std::move(rows))
{
    std::sort(m_rows.begin(), m_rows.end());
    m_rows.erase(std::unique(m_rows.begin(), m_rows.end()), m_rows.end());
}

BigInt ExplicitDA::count() const
{
    return BigInt(static_cast<unsigned long>(m_rows.size()));
}

Row ExplicitDA::kth(BigInt const& k) const
{
    if (k < 1 || k > count()) {
        out_of_range(count());
    }
    return m_rows[k.get_ui() - 1];
}

BigInt ExplicitDA::rank(Row const& t) const
{
    auto it = std::upper_bound(m_rows.begin(), m_rows.end(), t);
    return BigInt(static_cast<unsigned long>(it - m_rows.begin()));
}

CircuitDA::CircuitDA(Circuit c) : m_circuit(std::move(c)), m_index(m_circuit), m_count(cqda::count(m_circuit, m_index))
{
}

Row CircuitDA::kth(BigInt const& k) const
{
    return direct_access(m_circuit, m_index, k);
}

BigInt CircuitDA::rank(Row const& t) const
{
    return rank_by_prefix_counts(m_circuit, m_index, t);
}

SubtractDA::SubtractDA(DAProviderPtr s2, DAProviderPtr s1)
    : m_s2(std::move(s2)), m_s1(std::move(s1)), m_count(m_s2->count() - m_s1->count())
{
}

Row SubtractDA::kth(BigInt const& k) const
{
    if (k < 1 || k > m_count) {
        out_of_range(m_count);
    }
    {
        std::lock_guard lock(m_mutex);
        auto it = m_memo.find(k);
        if (it != m_memo.end()) {
            return it->second;
        }
    }
    // r - rank1(kth2(r)) counts the S2 \ S1 rows among the first r rows of
    // S2 and is nondecreasing in r; the answer sits at its first reach of k.
    BigInt lo = k;
    BigInt hi = std::min(BigInt(k + m_s1->count()), m_s2->count());
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        Row row = m_s2->kth(mid);
        if (mid - m_s1->rank(row) >= k) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Row row = m_s2->kth(lo);
    std::lock_guard lock(m_mutex);
    m_memo.emplace(k, row);
    return row;
}

BigInt SubtractDA::rank(Row const& t) const
{
    return m_s2->rank(t) - m_s1->rank(t);
}

DAProviderPtr subtract_da(DAProviderPtr s2, DAProviderPtr s1)
{
    return std::make_shared<SubtractDA>(std::move(s2), std::move(s1));
}

SignedQuery qnn_query(SignedQuery const& q, QnnSpec const& spec)
{
    auto listed = [](std::vector<std::size_t> const& v, std::size_t i) {
        return std::find(v.begin(), v.end(), i) != v.end();
    };
    SignedQuery out;
    out.head = q.head;
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        Atom const& a = q.atoms[i];
        if (a.positive()) {
            out.atoms.push_back(a);
        } else if (listed(spec.n1, i)) {
            out.atoms.push_back(Atom{Sign::positive, a.symbol, a.args});
        } else if (listed(spec.n2, i)) {
            out.atoms.push_back(a);
        }
    }
    return out;
}

DAProviderPtr qnn_da(SignedQuery const& q, QnnSpec const& spec, BaseFactory const& base)
{
    for (auto i : spec.n1) {
        if (i >= q.atoms.size() || q.atoms[i].positive()) {
            throw InvalidQuery("N1 must list negative atoms");
        }
    }
    for (auto i : spec.n2) {
        if (i >= q.atoms.size() || q.atoms[i].positive()) {
            throw InvalidQuery("N2 must list negative atoms");
        }
    }
    if (spec.n2.empty()) {
        return base(qnn_query(q, spec));
    }
    // Q_{N1, N2' + {R}} = Q_{N1, N2'} \ Q_{N1 + {R}, N2'}
    QnnSpec rest{spec.n1, {spec.n2.begin(), spec.n2.end() - 1}};
    QnnSpec with_r = rest;
    with_r.n1.push_back(spec.n2.back());
    return subtract_da(qnn_da(q, rest, base), qnn_da(q, with_r, base));
}

BaseFactory circuit_base(Database const& db, VarOrder const& access_order)
{
    VarOrder compile_order = access_order.reversed();
    return [&db, compile_order](SignedQuery const& positive) -> DAProviderPtr {
        if (positive.has_negation()) {
            throw InvalidQuery("base queries must be negation-free");
        }
        return std::make_shared<CircuitDA>(dpll_compile(positive, db, compile_order).circuit);
    };
}

DAProviderPtr signed_da_via_reduction(SignedQuery const& q, Database const& db, VarOrder const& access_order)
{
    validate(q);
    check_schema(q, db);
    if (!q.is_join()) {
        throw InvalidQuery("the reduction handles join queries only");
    }
    auto vars = q.vars();
    if (access_order.size() != vars.size() ||
        !std::all_of(vars.begin(), vars.end(), [&](std::string const& x) { return access_order.contains(x); })) {
        throw InvalidOrder("access order must list exactly the query variables");
    }
    QnnSpec spec;
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        if (!q.atoms[i].positive()) {
            spec.n2.push_back(i);
        }
    }
    return qnn_da(q, spec, circuit_base(db, access_order));
}

}  // namespace cqda
