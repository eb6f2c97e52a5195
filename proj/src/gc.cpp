#include "gcn/gc.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gcn {

GcElem::GcElem(PolyMatrix m) : PolyMatrix(std::move(m))
{
    for (const auto& p : entries())
        if (!p.only_uses({Var::D, Var::X, Var::S}))
            throw std::invalid_argument("gc_N element may only use d, x, s; got " + p.str());
}

std::map<unsigned, GcElem> GcElem::homogeneous_parts() const
{
    std::map<unsigned, GcElem> parts;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j)
            for (const auto& [m, c] : (*this)(i, j).terms()) {
                unsigned d = m[Var::D] + m[Var::X];
                auto it = parts.try_emplace(d, n()).first;
                it->second(i, j) += MPoly::term(m, c);
            }
    return parts;
}

LambdaPoly LambdaPoly::from_matrix(const PolyMatrix& m)
{
    LambdaPoly r(m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j)
            for (auto& [k, c] : m(i, j).split(Var::L)) {
                auto it = r.c_.try_emplace(k, m.n()).first;
                it->second(i, j) = c;
            }
    return r;
}

PolyMatrix LambdaPoly::coefficient(unsigned k) const
{
    auto it = c_.find(k);
    return it == c_.end() ? PolyMatrix(n_) : it->second;
}

PolyMatrix LambdaPoly::to_matrix() const
{
    PolyMatrix r(n_);
    for (const auto& [k, c] : c_)
        r += MPoly::term(Monomial::of(Var::L, k), 1) * c;
    return r;
}

ModVec ModVec::unit(std::size_t n, std::size_t i, const MPoly& p)
{
    ModVec v{std::vector<MPoly>(n)};
    v.entries[i] = p;
    return v;
}

ModVec operator-(const ModVec& a, const ModVec& b)
{
    require_same_size(a.n(), b.n(), "vector subtraction");
    ModVec r = a;
    for (std::size_t i = 0; i < a.n(); ++i)
        r.entries[i] -= b.entries[i];
    return r;
}

PolyMatrix bracket_with(const PolyMatrix& a, const PolyMatrix& b, const MPoly& nu)
{
    require_same_size(a.n(), b.n(), "lambda bracket");
    MPoly d = var(Var::D);
    MPoly x = var(Var::X);
    PolyMatrix a1 = a.substitute({{Var::D, -nu}, {Var::X, nu + d + x}});
    PolyMatrix b1 = b.substitute({{Var::D, nu + d}});
    PolyMatrix b2 = b.substitute({{Var::D, nu + d}, {Var::X, x - nu}});
    PolyMatrix a2 = a.substitute({{Var::D, -nu}});
    return a1 * b1 - b2 * a2;
}

ModVec action_with(const PolyMatrix& a, const ModVec& v, const MPoly& nu)
{
    require_same_size(a.n(), v.n(), "lambda action");
    MPoly d = var(Var::D);
    PolyMatrix a1 = a.substitute({{Var::D, -nu}, {Var::X, nu + d}});
    ModVec out{std::vector<MPoly>(v.n())};
    std::vector<MPoly> shifted(v.n());
    for (std::size_t j = 0; j < v.n(); ++j)
        shifted[j] = v.entries[j].substitute({{Var::D, nu + d}});
    for (std::size_t i = 0; i < v.n(); ++i)
        for (std::size_t j = 0; j < v.n(); ++j)
            if (!a1(i, j).is_zero() && !shifted[j].is_zero())
                out.entries[i] += a1(i, j) * shifted[j];
    return out;
}

LambdaPoly lambda_bracket(const GcElem& a, const GcElem& b)
{
    return LambdaPoly::from_matrix(bracket_with(a, b, var(Var::L)));
}

ModVec lambda_action(const GcElem& a, const ModVec& v)
{
    for (const auto& p : v.entries)
        if (!p.only_uses({Var::D, Var::S}))
            throw std::invalid_argument("module vector entries may only use d, s; got " + p.str());
    return action_with(a, v, var(Var::L));
}

GcElem nth_product(const GcElem& a, const GcElem& b, unsigned k)
{
    return GcElem(Rat(factorial(k)) * lambda_bracket(a, b).coefficient(k));
}

MPoly to_y(const MPoly& p)
{
    return p.substitute({{Var::X, (var(Var::Y) - var(Var::D)) * frac(1, 2)}});
}

MPoly from_y(const MPoly& p)
{
    return p.substitute({{Var::Y, 2 * var(Var::X) + var(Var::D)}});
}

PolyMatrix to_y(const PolyMatrix& a)
{
    return a.map([](const MPoly& p) { return to_y(p); });
}

PolyMatrix from_y(const PolyMatrix& a)
{
    return a.map([](const MPoly& p) { return from_y(p); });
}

std::string to_json(const GcElem& a)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.n(); ++j)
            row.push_back(a(i, j).str());
        rows.push_back(row);
    }
    return nlohmann::json{{"n", a.n()}, {"entries", rows}}.dump();
}

GcElem gc_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries") || !j["n"].is_number_unsigned())
        throw std::invalid_argument("expected {\"n\": N, \"entries\": [[...]]}");
    std::size_t n = j["n"].get<std::size_t>();
    const auto& rows = j["entries"];
    if (n == 0 || !rows.is_array() || rows.size() != n)
        throw std::invalid_argument("entries must be an N x N array with N >= 1");
    PolyMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw std::invalid_argument("row " + std::to_string(r) + " does not have N entries");
        for (std::size_t c = 0; c < n; ++c) {
            if (!rows[r][c].is_string())
                throw std::invalid_argument("entries must be polynomial strings");
            m(r, c) = parse_poly(rows[r][c].get<std::string>());
        }
    }
    return GcElem(std::move(m));
}

}  // namespace gcn
