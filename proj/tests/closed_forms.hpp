#ifndef GCN_TESTS_CLOSED_FORMS_HPP
#define GCN_TESTS_CLOSED_FORMS_HPP

// Closed-form scalar products X^m <k> X^n for special (m, n, k), symbolic σ.
// Each function returns std::nullopt outside the range where its formula applies.

#include "gcn/mpoly.hpp"

#include <optional>

namespace gcn::testing {

inline MPoly sig() { return var(Var::S); }

// prod_{i=lo}^{hi} (i^2 - σ^2)
inline MPoly square_product(unsigned lo, unsigned hi)
{
    MPoly p(1);
    for (unsigned i = lo; i <= hi; ++i)
        p *= MPoly(int(i * i)) - sig() * sig();
    return p;
}

// Low k, m <= n.
inline std::optional<MPoly> low_k_product(unsigned m, unsigned n, unsigned k)
{
    MPoly s = sig();
    int M = int(m), N = int(n);
    switch (k) {
    case 0:
        return MPoly{};
    case 1:
        if (m + n >= 1)
            return MPoly(M + N);
        return std::nullopt;
    case 2:
        if (m >= 1)
            return MPoly{};
        if (n >= 2)
            return -s * (N - 1);
        return std::nullopt;
    case 3:
        if (m + n >= 3) {
            MPoly bracket = MPoly(2 * M * M * N + 2 * N * N * M - M * M - N * N - 5 * M * N + 2 * M + 2 * N)
                            - 3 * s * s;
            return bracket * frac((M + N - 1) * (M + N - 2), 2 * (2 * M - 1) * (2 * N - 1));
        }
        return std::nullopt;
    case 4:
        if (m >= 2)
            return MPoly{};
        if (m == 1 && n >= 3)
            return -s * (1 - s * s) * (N - 2);
        if (m == 0 && n >= 4)
            return -s * (MPoly(N * N - 3 * N + 1) + s * s) * frac((N - 2) * (N - 3), 2 * N - 1);
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

// k = m + n.
inline MPoly top_k_product(unsigned m, unsigned n)
{
    MPoly s = sig();
    MPoly a = binom_poly(MPoly(int(m)) + s, m) * binom_poly(MPoly(int(n)) - s, n);
    MPoly b = binom_poly(MPoly(int(m)) - s, m) * binom_poly(MPoly(int(n)) + s, n);
    MPoly sign = (m + n) % 2 == 0 ? MPoly(1) : MPoly(-1);
    return (a - sign * b) * ratio(factorial(m + n), BigInt(binomial(2 * m, m) * binomial(2 * n, n)));
}

// X^m <2m> X^m, X^m <2m+1> X^{m+1}, X^m <2m+2> X^{m+2}; offset = n - m.
inline MPoly near_top_product(unsigned m, unsigned offset)
{
    MPoly base = square_product(1, m) * ratio(m + 1, binomial(2 * m, m));
    switch (offset) {
    case 0:
        return MPoly{};
    case 1:
        return base;
    default:
        return -sig() * base;
    }
}

// The same third line with the printed extra factor 1/2.
inline MPoly near_top_product_as_printed(unsigned m) { return near_top_product(m, 2) * frac(1, 2); }

// X^m <2m-1> X^m, m >= 1; lands in degree 1.
inline MPoly diagonal_product(unsigned m)
{
    return square_product(2, m) * ratio(2 * (m + 1), binomial(2 * m, m));
}

}  // namespace gcn::testing

#endif
