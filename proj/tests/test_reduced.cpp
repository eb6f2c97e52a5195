#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closed_forms.hpp"
#include "gcn/reduced.hpp"
#include "support.hpp"

using namespace gcn;
using namespace gcn::testing;

namespace {

const MPoly s = var(Var::S);

ReducedPart scalar_part(unsigned m) { return {m, PolyMatrix::identity(1)}; }

MPoly scalar_product(unsigned m, unsigned n, unsigned k)
{
    return reduced_product(scalar_part(m), scalar_part(n), k, s).component(m + n - k)(0, 0);
}

PolyMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n)
{
    PolyMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = int(rng() % 7) - 3;
    return a;
}

}  // namespace

TEST_CASE("d coefficient values")
{
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(d_coeff(m, n, 0, s) == 1);
            if (m >= 1 && n >= 1)
                CHECK(d_coeff(m, n, 1, s) == MPoly(frac(m + n, 2)));
            for (unsigned k = 0; k <= m + n; ++k) {
                CHECK(d_coeff(m, n, k, s) == d_coeff(n, m, k, -s));
                CHECK(d_coeff(m, n, k, s).degree(Var::S) <= k);
            }
        }
    CHECK(d_coeff(1, 1, 1, s) == 1);
    CHECK(d_coeff(2, 2, 3, s) == (4 - s * s) * frac(1, 2));
    CHECK(d_coeff(2, 2, 3, frac(1, 3)) == MPoly(frac(35, 18)));
    CHECK_THROWS_AS(d_coeff(1, 1, 3, s), std::invalid_argument);
}

TEST_CASE("d coefficient sign pattern at integer sigma")
{
    for (int S = 0; S <= 3; ++S)
        for (int sg : {1, -1})
            for (unsigned m = S; m <= 6; ++m)
                for (unsigned n = S; n <= 6; ++n)
                    for (unsigned k = 0; k <= m + n; ++k) {
                        MPoly v = d_coeff(m, n, k, sg * S);
                        REQUIRE(v.is_constant());
                        if (int(m + n - k) >= S)
                            CHECK(v.constant_term() > 0);
                        else
                            CHECK(v.is_zero());
                    }
}

TEST_CASE("closed-form special products")
{
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = m; n <= 5; ++n)
            for (unsigned k = 0; k <= std::min(4U, m + n); ++k)
                if (auto expect = low_k_product(m, n, k)) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(k);
                    CHECK(scalar_product(m, n, k) == *expect);
                }
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n)
            CHECK(scalar_product(m, n, m + n) == top_k_product(m, n));
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned off = 0; off <= 2; ++off)
            CHECK(scalar_product(m, m + off, 2 * m + off) == near_top_product(m, off));
    for (unsigned m = 1; m <= 5; ++m)
        CHECK(scalar_product(m, m, 2 * m - 1) == diagonal_product(m));
    CHECK(scalar_product(1, 2, 3) == 1 - s * s);
    // the printed third line is off by exactly 1/2
    CHECK(near_top_product_as_printed(2) * 2 == scalar_product(2, 4, 6));
    CHECK(near_top_product_as_printed(2) != scalar_product(2, 4, 6));
}

TEST_CASE("reduced skewsymmetry")
{
    std::mt19937_64 rng(8);
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned n = 0; n <= 4; ++n) {
            ReducedPart a{m, random_int_matrix(rng, 2)};
            ReducedPart b{n, random_int_matrix(rng, 2)};
            for (unsigned k = 0; k <= m + n; ++k) {
                ReducedElem ab = reduced_product(a, b, k, s);
                ReducedElem ba = reduced_product(b, a, k, s);
                PolyMatrix sign = PolyMatrix::scalar(2, k % 2 == 1 ? 1 : -1);
                CHECK(ab.component(m + n - k) == sign * ba.component(m + n - k));
            }
        }
}

TEST_CASE("oracle agreement")
{
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned n = 0; n <= 4; ++n)
            for (unsigned k = 0; k <= m + n; ++k)
                CHECK(reduced_bracket_oracle(scalar_part(m), scalar_part(n), k, s)
                      == reduced_product(scalar_part(m), scalar_part(n), k, s));
    std::mt19937_64 rng(3);
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n) {
            ReducedPart a{m, random_int_matrix(rng, 2)};
            ReducedPart b{n, random_int_matrix(rng, 2)};
            for (unsigned k = 0; k <= m + n; ++k)
                CHECK(reduced_bracket_oracle(a, b, k, s) == reduced_product(a, b, k, s));
        }
    // rational sigma specialization
    for (unsigned k = 0; k <= 5; ++k)
        CHECK(reduced_bracket_oracle(scalar_part(2), scalar_part(3), k, frac(5, 2))
              == reduced_product(scalar_part(2), scalar_part(3), k, frac(5, 2)));
}

TEST_CASE("oracle sweep, serial and parallel")
{
    auto a = oracle_sweep(3, var(Var::S), Exec::Serial);
    auto b = oracle_sweep(3, var(Var::S), Exec::Parallel);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == 64);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].agree);
        CHECK(b[i].agree);
        CHECK(a[i].m == b[i].m);
        CHECK(a[i].k == b[i].k);
    }
}
