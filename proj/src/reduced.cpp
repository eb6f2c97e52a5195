#include "gcn/reduced.hpp"

#include <stdexcept>

namespace gcn {

namespace {

void check_k(unsigned m, unsigned n, unsigned k)
{
    if (k > m + n)
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds m + n = " + std::to_string(m + n));
}

}  // namespace

MPoly d_coeff(unsigned m, unsigned n, unsigned k, const MPoly& sigma)
{
    check_k(m, n, k);
    MPoly top_m = MPoly(int(m)) + sigma;
    MPoly top_n = MPoly(int(n)) - sigma;
    MPoly sum;
    for (unsigned i = 0; i <= std::min(m, k); ++i) {
        unsigned j = k - i;
        if (j > n)
            continue;
        Rat c(binomial(2 * m - i, m) * binomial(2 * n - j, n));
        sum += c * binom_poly(top_m, i) * binom_poly(top_n, j);
    }
    return sum * ratio(factorial(k), BigInt(binomial(2 * m, m) * binomial(2 * n, n)));
}

ReducedElem reduced_product(const ReducedPart& a, const ReducedPart& b, unsigned k, const MPoly& sigma)
{
    require_same_size(a.matrix.n(), b.matrix.n(), "reduced product");
    unsigned m = a.degree;
    unsigned n = b.degree;
    check_k(m, n, k);
    MPoly sign = k % 2 == 1 ? MPoly(1) : MPoly(-1);
    PolyMatrix c = d_coeff(m, n, k, sigma) * (a.matrix * b.matrix)
                   + sign * d_coeff(m, n, k, -sigma) * (b.matrix * a.matrix);
    return ReducedElem::single(m + n - k, c);
}

ReducedElem reduced_bracket_oracle(const ReducedPart& a, const ReducedPart& b, unsigned k, const MPoly& sigma)
{
    require_same_size(a.matrix.n(), b.matrix.n(), "reduced product");
    check_k(a.degree, b.degree, k);
    VirasoroElem L = VirasoroElem::from_sigma(a.matrix.n(), sigma);
    GcElem qa(q_basis(sigma, a.degree) * a.matrix);
    GcElem qb(q_basis(sigma, b.degree) * b.matrix);
    return project(nth_product(qa, qb, k), L);
}

std::vector<OracleCase> oracle_sweep(unsigned max_mn, const MPoly& sigma, Exec exec)
{
    std::vector<OracleCase> cases;
    for (unsigned m = 0; m <= max_mn; ++m)
        for (unsigned n = 0; n <= max_mn; ++n)
            for (unsigned k = 0; k <= m + n; ++k)
                cases.push_back({m, n, k, false});
    auto agree = index_map<char>(
        cases.size(),
        [&](std::size_t i) {
            const auto& c = cases[i];
            ReducedPart a{c.m, PolyMatrix::identity(1)};
            ReducedPart b{c.n, PolyMatrix::identity(1)};
            return char(reduced_product(a, b, c.k, sigma) == reduced_bracket_oracle(a, b, c.k, sigma));
        },
        exec);
    for (std::size_t i = 0; i < cases.size(); ++i)
        cases[i].agree = agree[i] != 0;
    return cases;
}

}  // namespace gcn
