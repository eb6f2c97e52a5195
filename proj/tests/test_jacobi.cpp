#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcn/jacobi.hpp"
#include "gcn/virasoro.hpp"
#include "support.hpp"

using namespace gcn;
using gcn::testing::P;

namespace {

const MPoly s = var(Var::S);
const MPoly y = var(Var::Y);

}  // namespace

TEST_CASE("jacobi polynomial values")
{
    auto sym = JacobiParams::symbolic();
    CHECK(jacobi_poly(sym, 0) == 1);
    CHECK(jacobi_poly({0, 0}, 2) == (3 * y * y - 1) * frac(1, 2));
    CHECK(jacobi_poly(JacobiParams::minus_plus(s), 1) == y - s);
    CHECK(jacobi_poly({-1, 1}, 2) == 3 * y * (y - 1) * frac(1, 2));
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(jacobi_poly(sym, n).evaluate(Var::Y, 1) == binom_poly(var(Var::A) + int(n), n));
    // Legendre P_3
    CHECK(jacobi_poly({0, 0}, 3) == (5 * y.pow(3) - 3 * y) * frac(1, 2));
}

TEST_CASE("ode, symmetry and leading coefficient")
{
    auto sym = JacobiParams::symbolic();
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(check_ode(sym, n));
        CHECK(check_symmetry(sym, n));
        CHECK(check_leading_coefficient(sym, n));
    }
    auto mp = JacobiParams::minus_plus(s);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(check_ode(mp, n));
        CHECK(check_symmetry(mp, n));
        CHECK(check_leading_coefficient(mp, n));
    }
}

TEST_CASE("generating function")
{
    Series g = generating_series(s, 3);
    CHECK(g[0] == 1);
    CHECK(g[1] == y - s * var(Var::D));
    CHECK(generating_check(s, 6));
    CHECK(generating_check(frac(3, 4), 5));
}

TEST_CASE("bridge to the quasi-primary basis")
{
    CHECK(homogenize(P("y^2 + 3*y + s"), 2) == P("y^2 + 3*y*d + s*d^2"));
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(qn_jacobi_relation(s, n));
    CHECK(2 * q_basis(s, 1) == P("2*x + d - s*d"));
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(Rat(binomial(2 * n, n)) * r_basis(s, n).evaluate(Var::D, 1)
              == jacobi_poly(JacobiParams::minus_plus(s), n));
}

TEST_CASE("parity of the divided polynomials")
{
    for (unsigned n = 0; n <= 8; ++n) {
        auto r = parity_factorization(0, n);
        CHECK(r.ok);
        CHECK(r.quotient == jacobi_poly({0, 0}, n));
    }
    auto r12 = parity_factorization(1, 2);
    CHECK(r12.ok);
    CHECK(r12.quotient == 3 * y * frac(1, 2));
    auto r33 = parity_factorization(3, 3);
    CHECK(r33.ok);
    CHECK(r33.quotient.is_constant());
    CHECK(q_basis(3, 3) == var(Var::X).pow(3));
    for (unsigned S = 1; S <= 4; ++S)
        for (unsigned n = S; n <= 10; ++n) {
            CAPTURE(S);
            CAPTURE(n);
            auto r = parity_factorization(S, n);
            CHECK(r.ok);
            CHECK(r.detail.empty());
        }
    CHECK_THROWS_AS(parity_factorization(3, 2), std::invalid_argument);
}
