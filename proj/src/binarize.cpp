#include <algorithm>

#include "cqda/compile.hpp"

namespace cqda {

namespace {

std::size_t bits_for(std::size_t domain_size)
{
    std::size_t b = 1;
    while ((std::size_t{1} << b) < domain_size) {
        ++b;
    }
    return b;
}

}  // namespace

BinCodec::BinCodec(Domain domain, std::vector<std::string> vars)
    : m_domain(std::move(domain)), m_vars(std::move(vars)), m_bits(bits_for(m_domain.size()))
{
    for (auto const& x : m_vars) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= m_bits; ++i) {
            names.push_back(x + "^" + std::to_string(i));
        }
        m_bit_vars.emplace(x, std::move(names));
    }
}

std::vector<std::string> const& BinCodec::bit_vars(std::string const& x) const
{
    auto it = m_bit_vars.find(x);
    if (it == m_bit_vars.end()) {
        throw VertexNotFound("no bit variables for '" + x + "'");
    }
    return it->second;
}

Row BinCodec::encode(Value v) const
{
    Row bits(m_bits);
    for (std::size_t i = 0; i < m_bits; ++i) {
        bits[i] = (v >> i) & 1U;
    }
    return bits;
}

Value BinCodec::decode(Row const& bits) const
{
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) {
            throw RankOutOfDomain("bit value " + std::to_string(bits[i]) + " is not 0 or 1");
        }
        v |= std::uint64_t{bits[i]} << i;
    }
    if (v >= m_domain.size()) {
        throw RankOutOfDomain("bit pattern " + std::to_string(v) + " is outside a domain of size " +
                              std::to_string(m_domain.size()));
    }
    return static_cast<Value>(v);
}

Tuple BinCodec::bin_tuple(Tuple const& t) const
{
    Tuple out;
    for (auto const& [x, v] : t) {
        auto const& names = bit_vars(x);
        Row bits = encode(v);
        for (std::size_t i = 0; i < m_bits; ++i) {
            out[names[i]] = bits[i];
        }
    }
    return out;
}

Tuple BinCodec::debin_tuple(Tuple const& t) const
{
    Tuple out;
    for (auto const& x : m_vars) {
        auto const& names = bit_vars(x);
        if (!t.count(names[0])) {
            continue;
        }
        Row bits;
        for (auto const& name : names) {
            auto it = t.find(name);
            if (it == t.end()) {
                throw InvalidQuery("tuple binds only some bits of '" + x + "'");
            }
            bits.push_back(it->second);
        }
        out[x] = decode(bits);
    }
    return out;
}

VarOrder BinCodec::expand_compile_order(VarOrder const& order) const
{
    std::vector<std::string> out;
    for (auto const& x : order) {
        auto const& names = bit_vars(x);
        out.insert(out.end(), names.begin(), names.end());
    }
    return VarOrder(out);
}

VarOrder BinCodec::expand_access_order(VarOrder const& order) const
{
    std::vector<std::string> out;
    for (auto const& x : order) {
        auto const& names = bit_vars(x);
        out.insert(out.end(), names.rbegin(), names.rend());
    }
    return VarOrder(out);
}

Row BinCodec::debin_row(Row const& bits, std::size_t var_count) const
{
    if (bits.size() != var_count * m_bits) {
        throw InvalidQuery("bit row has the wrong length");
    }
    Row out;
    for (std::size_t j = 0; j < var_count; ++j) {
        Row lsb_first(bits.begin() + static_cast<std::ptrdiff_t>(j * m_bits),
                      bits.begin() + static_cast<std::ptrdiff_t>((j + 1) * m_bits));
        std::reverse(lsb_first.begin(), lsb_first.end());
        out.push_back(decode(lsb_first));
    }
    return out;
}

Row BinCodec::bin_row(Row const& values) const
{
    Row out;
    for (auto v : values) {
        if (v >= m_domain.size()) {
            throw RankOutOfDomain("value " + std::to_string(v) + " is outside the domain");
        }
        Row bits = encode(v);
        out.insert(out.end(), bits.rbegin(), bits.rend());
    }
    return out;
}

Binarized binarize(Database const& db, SignedQuery const& q, VarOrder const& compile_order)
{
    validate(q);
    check_schema(q, db);
    for (auto const& x : q.vars()) {
        if (!compile_order.contains(x)) {
            throw InvalidOrder("compile order misses variable '" + x + "'");
        }
    }
    BinCodec codec(db.domain(), compile_order.vars());
    for (auto const& x : compile_order) {
        for (auto const& name : codec.bit_vars(x)) {
            if (compile_order.contains(name)) {
                throw InvalidQuery("bit variable '" + name + "' clashes with a query variable");
            }
        }
    }
    std::size_t const b = codec.bits();

    Binarized out{Database(Domain::range(2)), SignedQuery{}, codec.expand_compile_order(compile_order), codec};
    out.query.head = q.head;
    if (q.free) {
        std::vector<std::string> free;
        for (auto const& y : *q.free) {
            auto const& names = codec.bit_vars(y);
            free.insert(free.end(), names.begin(), names.end());
        }
        out.query.free = free;
    }

    for (auto const& [name, table] : db.tables()) {
        std::vector<Row> rows;
        for (auto const& row : table.rows) {
            Row bits;
            for (auto v : row) {
                Row enc = codec.encode(v);
                bits.insert(bits.end(), enc.begin(), enc.end());
            }
            rows.push_back(std::move(bits));
        }
        out.db.add_table(name, table.arity * b, std::move(rows));
    }

    std::vector<std::string> guarded;
    for (auto const& a : q.atoms) {
        Atom bin{a.sign, a.symbol, {}};
        for (auto const& x : a.args) {
            auto const& names = codec.bit_vars(x);
            bin.args.insert(bin.args.end(), names.begin(), names.end());
        }
        out.query.atoms.push_back(std::move(bin));
        if (a.positive()) {
            guarded.insert(guarded.end(), a.args.begin(), a.args.end());
        }
    }

    std::size_t const d = db.domain().size();
    bool const power_of_two = d != 0 && (std::size_t{1} << b) == d;
    if (!power_of_two) {
        std::vector<Row> dom;
        for (Value v = 0; v < d; ++v) {
            dom.push_back(codec.encode(v));
        }
        for (auto const& x : compile_order) {
            if (std::find(guarded.begin(), guarded.end(), x) != guarded.end()) {
                continue;
            }
            std::string const name = "$dom_" + x;
            out.db.add_table(name, b, dom);
            out.query.atoms.push_back(Atom{Sign::positive, name, codec.bit_vars(x)});
        }
    }
    return out;
}

Tuple debin_tuple(Tuple const& t, BinCodec const& codec)
{
    return codec.debin_tuple(t);
}

CompiledBinarized compile_binarized(SignedQuery const& q, Database const& db, VarOrder const& compile_order)
{
    Binarized bin = binarize(db, q, compile_order);
    Compiled compiled = dpll_compile(bin.query, bin.db, bin.order);
    return CompiledBinarized{std::move(compiled.circuit), std::move(bin.codec), compiled.stats};
}

}  // namespace cqda
