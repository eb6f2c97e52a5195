#include "gcn/virasoro.hpp"

#include <stdexcept>

namespace gcn {

namespace {

MPoly dx_monomial(unsigned k, unsigned m)
{
    return MPoly::term(Monomial::of(Var::D, k) * Monomial::of(Var::X, m), 1);
}

}  // namespace

VirasoroElem::VirasoroElem(std::size_t n, MPoly alpha)
    : alpha_(std::move(alpha)),
      sigma_(1 - 2 * alpha_),
      elem_(GcElem::scalar(n, var(Var::X) + alpha_ * var(Var::D)))
{
    if (!alpha_.only_uses({Var::S}))
        throw std::invalid_argument("alpha must be rational or a polynomial in s, got " + alpha_.str());
    MPoly lam = var(Var::L);
    if (bracket_with(elem_, elem_, lam) != (var(Var::D) + 2 * lam) * elem_)
        throw std::logic_error("Virasoro relation fails for alpha = " + alpha_.str());
}

VirasoroElem VirasoroElem::from_sigma(std::size_t n, const MPoly& sigma)
{
    return VirasoroElem(n, (1 - sigma) * frac(1, 2));
}

VirasoroElem VirasoroElem::from_alpha(std::size_t n, const MPoly& alpha) { return VirasoroElem(n, alpha); }

MPoly q_basis(const MPoly& sigma, unsigned n)
{
    MPoly q;
    MPoly top = MPoly(int(n)) - sigma;
    for (unsigned k = 0; k <= n; ++k) {
        Rat c(binomial(2 * n - k, n));
        q += binom_poly(top, k) * c * dx_monomial(k, n - k);
    }
    return q * ratio(1, binomial(2 * n, n));
}

MPoly r_basis(const MPoly& sigma, unsigned n) { return to_y(q_basis(sigma, n)); }

bool q_recursion_holds(const MPoly& sigma, unsigned n)
{
    MPoly q = q_basis(sigma, n);
    MPoly two_alpha = 1 - sigma;
    auto c = [&](unsigned k) { return q.coeff(Var::D, k).coeff(Var::X, n - k); };
    if (c(0) != 1)
        return false;
    for (unsigned k = 1; k <= n; ++k) {
        MPoly lhs = c(k) * Rat(k * (2 * n - k + 1));
        MPoly rhs = c(k - 1) * Rat(n - k + 1) * (MPoly(int(n - k)) + two_alpha);
        if (lhs != rhs)
            return false;
    }
    return true;
}

const MPoly& QBasis::operator()(unsigned n) const
{
    std::lock_guard lock(mu_);
    auto it = cache_.find(n);
    if (it == cache_.end())
        it = cache_.emplace(n, q_basis(sigma_, n)).first;
    return it->second;
}

bool is_quasi_primary(const GcElem& a, const VirasoroElem& L)
{
    require_same_size(a.n(), L.n(), "is_quasi_primary");
    return nth_product(L.elem(), a, 2).is_zero();
}

ReducedElem ReducedElem::single(unsigned degree, const PolyMatrix& m)
{
    ReducedElem r(m.n());
    r.add(degree, m);
    return r;
}

PolyMatrix ReducedElem::component(unsigned degree) const
{
    auto it = c_.find(degree);
    return it == c_.end() ? PolyMatrix(n_) : it->second;
}

void ReducedElem::add(unsigned degree, const PolyMatrix& m)
{
    require_same_size(n_, m.n(), "reduced element");
    if (!m.only_uses({Var::S}))
        throw std::invalid_argument("reduced components must be matrices over Q[s]");
    auto it = c_.find(degree);
    if (it == c_.end()) {
        if (!m.is_zero())
            c_.emplace(degree, m);
        return;
    }
    it->second += m;
    if (it->second.is_zero())
        c_.erase(it);
}

std::string ReducedElem::str() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += "X^" + std::to_string(it->first) + "*" + it->second.str();
    }
    return out;
}

std::map<unsigned, ReducedElem> decompose(const GcElem& a, const VirasoroElem& L)
{
    require_same_size(a.n(), L.n(), "decompose");
    QBasis Q(L.sigma());
    std::map<unsigned, ReducedElem> out;
    std::size_t n = a.n();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            MPoly rest = a(r, c);
            // Peel off the highest x-power first; ∂^i Q_m only reaches x^m.
            while (!rest.is_zero()) {
                unsigned m = rest.degree(Var::X);
                MPoly xm = rest.coeff(Var::X, m);
                for (auto& [i, coef] : xm.split(Var::D)) {
                    auto it = out.try_emplace(i, n).first;
                    it->second.add(m, PolyMatrix::unit(n, r, c, coef));
                    rest -= coef * dx_monomial(i, 0) * Q(m);
                }
            }
        }
    return out;
}

ReducedElem project(const GcElem& a, const VirasoroElem& L)
{
    require_same_size(a.n(), L.n(), "project");
    std::size_t n = a.n();
    ReducedElem out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (auto& [m, coef] : a(r, c).evaluate(Var::D, 0).split(Var::X))
                out.add(m, PolyMatrix::unit(n, r, c, coef));
    return out;
}

GcElem lift(const ReducedElem& r, const VirasoroElem& L)
{
    require_same_size(r.n(), L.n(), "lift");
    QBasis Q(L.sigma());
    PolyMatrix out(r.n());
    for (const auto& [m, mat] : r.components())
        out += Q(m) * mat;
    return GcElem(std::move(out));
}

GcElem reconstruct(const std::map<unsigned, ReducedElem>& parts, const VirasoroElem& L)
{
    PolyMatrix out(L.n());
    for (const auto& [i, r] : parts)
        out += dx_monomial(i, 0) * lift(r, L);
    return GcElem(std::move(out));
}

}  // namespace gcn
