#include "gcn/jacobi.hpp"

#include "gcn/gc.hpp"
#include "gcn/virasoro.hpp"

#include <stdexcept>

namespace gcn {

MPoly jacobi_poly(const JacobiParams& p, unsigned n)
{
    MPoly y = var(Var::Y);
    MPoly t = (1 - y) * frac(1, 2);
    MPoly sum;
    MPoly t_pow(1);
    MPoly ab1 = MPoly(int(n) + 1) + p.alpha + p.beta;
    for (unsigned j = 0; j <= n; ++j) {
        MPoly c = rising(MPoly(int(j) + 1) + p.alpha, n - j) * rising(-MPoly(int(n)), j) * rising(ab1, j);
        sum += c * ratio(1, BigInt(factorial(n) * factorial(j))) * t_pow;
        t_pow *= t;
    }
    return sum;
}

bool check_ode(const JacobiParams& p, unsigned n)
{
    MPoly y = var(Var::Y);
    MPoly u = jacobi_poly(p, n);
    MPoly u1 = u.derivative(Var::Y);
    MPoly u2 = u1.derivative(Var::Y);
    MPoly lhs = (1 - y * y) * u2 + (p.beta - p.alpha - (p.alpha + p.beta + 2) * y) * u1
                + int(n) * (MPoly(int(n) + 1) + p.alpha + p.beta) * u;
    return lhs.is_zero();
}

bool check_symmetry(const JacobiParams& p, unsigned n)
{
    MPoly lhs = jacobi_poly(p, n);
    MPoly rhs = jacobi_poly({p.beta, p.alpha}, n).substitute({{Var::Y, -var(Var::Y)}});
    return n % 2 == 0 ? lhs == rhs : lhs == -rhs;
}

bool check_leading_coefficient(const JacobiParams& p, unsigned n)
{
    MPoly lead = jacobi_poly(p, n).coeff(Var::Y, n);
    MPoly expect = rising(MPoly(int(n) + 1) + p.alpha + p.beta, n)
                   * ratio(1, BigInt(factorial(n) * (BigInt(1) << n)));
    return lead == expect;
}

Series generating_series(const MPoly& sigma, unsigned order)
{
    MPoly y = var(Var::Y);
    MPoly z = var(Var::Z);
    MPoly d = var(Var::D);
    Series base = Series::from_poly(1 - 2 * y * z + d * d * z * z, order);
    Series R = series_sqrt(base);
    // numerator and denominator both halved so their constant terms are 1
    Series num = (Series::from_poly(1 - d * z, order) + R) * MPoly(frac(1, 2));
    Series den = (Series::from_poly(1 + d * z, order) + R) * MPoly(frac(1, 2));
    Series ratio_series = num * series_inverse(den);
    return series_inverse(R) * series_log_exp_pow(ratio_series, sigma);
}

bool generating_check(const MPoly& sigma, unsigned order)
{
    Series g = generating_series(sigma, order);
    for (unsigned n = 0; n <= order; ++n)
        if (g[n] != Rat(binomial(2 * n, n)) * r_basis(sigma, n))
            return false;
    return true;
}

MPoly homogenize(const MPoly& p, unsigned n)
{
    MPoly out;
    for (auto& [j, c] : p.split(Var::Y)) {
        if (j > n)
            throw std::invalid_argument("homogenize: y-degree exceeds n");
        out += c * MPoly::term(Monomial::of(Var::Y, j) * Monomial::of(Var::D, n - j), 1);
    }
    return out;
}

bool qn_jacobi_relation(const MPoly& sigma, unsigned n)
{
    Rat c(binomial(2 * n, n));
    MPoly hom = homogenize(jacobi_poly(JacobiParams::minus_plus(sigma), n), n);
    bool y_form = c * r_basis(sigma, n) == hom;
    bool x_form = c * q_basis(sigma, n) == from_y(hom);
    return y_form && x_form;
}

ParityResult parity_factorization(unsigned S, unsigned n)
{
    if (n < S)
        throw std::invalid_argument("parity_factorization requires n >= S");
    ParityResult r;
    MPoly y = var(Var::Y);
    MPoly sS = MPoly(int(S));
    auto minus = divide(jacobi_poly({-sS, sS}, n), (y - 1).pow(S), Var::Y);
    auto plus = divide(jacobi_poly({sS, -sS}, n), (y + 1).pow(S), Var::Y);
    r.quotient = minus.quotient;
    r.remainder_minus = minus.remainder;
    r.remainder_plus = plus.remainder;
    r.quotients_equal = minus.quotient == plus.quotient;
    MPoly reflected = minus.quotient.substitute({{Var::Y, -y}});
    r.parity = (n - S) % 2 == 0 ? reflected == minus.quotient : reflected == -minus.quotient;

    MPoly x = var(Var::X);
    MPoly d = var(Var::D);
    auto qa = divide(q_basis(sS, n), x.pow(S), Var::X);
    auto qb = divide(q_basis(-sS, n), (x + d).pow(S), Var::X);
    r.q_version = qa.exact() && qb.exact() && qa.quotient == qb.quotient
                  && qa.quotient == qa.quotient.substitute({{Var::D, -d}, {Var::X, d + x}});

    r.ok = minus.exact() && plus.exact() && r.quotients_equal && r.parity && r.q_version;
    if (!minus.exact())
        r.detail = "remainder of P^(-S,S) by (y-1)^S: " + minus.remainder.str();
    else if (!plus.exact())
        r.detail = "remainder of P^(S,-S) by (y+1)^S: " + plus.remainder.str();
    else if (!r.quotients_equal)
        r.detail = "quotients differ";
    else if (!r.parity)
        r.detail = "quotient has the wrong parity";
    else if (!r.q_version)
        r.detail = "Q_n factorization fails";
    return r;
}

}  // namespace gcn
