#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcn/subalg.hpp"
#include "support.hpp"

#include <random>

using namespace gcn;
using gcn::testing::P;

namespace {

RatMatrix random_rat(std::mt19937_64& rng, std::size_t n)
{
    RatMatrix m(n, std::vector<Rat>(n));
    for (auto& row : m)
        for (auto& e : row)
            e = frac(long(rng() % 9) - 4, 1 + long(rng() % 3));
    return m;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b)
{
    return to_rat(to_poly(a) * to_poly(b));
}

std::vector<SubalgebraSpec> all_families(unsigned max_S, std::size_t max_N)
{
    std::vector<SubalgebraSpec> out;
    for (Sign sign : {Sign::Plus, Sign::Minus})
        for (unsigned S = 0; S <= max_S; ++S)
            for (std::size_t n = 1; n <= max_N; ++n) {
                for (std::size_t k = 0; k <= n; ++k)
                    out.push_back(SubalgebraSpec::rank_ideal(sign, S, k, n));
                out.push_back(SubalgebraSpec::star(sign, S, Antiinvolution::transpose(n)));
                if (n % 2 == 0)
                    out.push_back(SubalgebraSpec::star(sign, S, Antiinvolution::symplectic(n)));
            }
    return out;
}

}  // namespace

TEST_CASE("antiinvolution axioms")
{
    std::mt19937_64 rng(11);
    std::vector<Antiinvolution> invs = {Antiinvolution::transpose(2), Antiinvolution::symplectic(2),
                                        Antiinvolution::transpose(3), Antiinvolution::symplectic(4)};
    for (const auto& inv : invs)
        for (int t = 0; t < 5; ++t) {
            RatMatrix a = random_rat(rng, inv.n());
            RatMatrix b = random_rat(rng, inv.n());
            CHECK(inv.apply(inv.apply(a)) == a);
            CHECK(inv.apply(mul(a, b)) == mul(inv.apply(b), inv.apply(a)));
        }
    CHECK_THROWS_AS(Antiinvolution::symplectic(3), std::invalid_argument);
    CHECK_THROWS_AS(Antiinvolution::custom({{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Antiinvolution::custom({{1, 2}, {0, 1}}), std::invalid_argument);
    CHECK(Antiinvolution::custom({{0, 1}, {1, 0}}, "swap").name() == "swap");
}

TEST_CASE("I_{k,N} idempotents")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            IkN I{k, n};
            CHECK(I.matrix() * I.matrix() == I.matrix());
            CHECK(I.complement() == PolyMatrix::identity(n) - I.matrix());
            CHECK((I.matrix() * I.complement()).is_zero());
        }
}

TEST_CASE("membership")
{
    auto x = var(Var::X);
    for (unsigned S = 1; S <= 3; ++S) {
        auto spec = SubalgebraSpec::rank_ideal(Sign::Plus, S, 0, 1);
        CHECK(membership(spec, PolyMatrix::scalar(1, x.pow(S))));
        CHECK_FALSE(membership(spec, PolyMatrix::scalar(1, 1)));
    }
    for (unsigned S : {1u, 3u}) {
        auto spec = SubalgebraSpec::star(Sign::Plus, S, Antiinvolution::transpose(2));
        CHECK(membership(spec, PolyMatrix::scalar(2, 2 * x.pow(S))));
    }
    std::mt19937_64 rng(5);
    for (unsigned S = 0; S <= 3; ++S) {
        auto full = SubalgebraSpec::rank_ideal(Sign::Plus, S, 2, 2);
        for (int t = 0; t < 5; ++t)
            CHECK(membership(full, gcn::testing::random_gc(rng, 2, 4)));
    }
    auto minus = SubalgebraSpec::rank_ideal(Sign::Minus, 1, 1, 2);
    CHECK(membership(minus, PolyMatrix::unit(2, 1, 0, P("x + d"))));
    CHECK_FALSE(membership(minus, PolyMatrix::unit(2, 1, 0, P("x"))));
    CHECK(membership(minus, PolyMatrix::unit(2, 0, 1, P("x"))));
    auto plus = SubalgebraSpec::rank_ideal(Sign::Plus, 1, 1, 2);
    CHECK_FALSE(membership(plus, PolyMatrix::unit(2, 0, 1, P("d"))));
    CHECK(membership(plus, PolyMatrix::unit(2, 1, 0, P("d"))));
    CHECK_THROWS_AS(membership(plus, PolyMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("spanning sets")
{
    auto spec = SubalgebraSpec::rank_ideal(Sign::Plus, 1, 0, 1);
    auto set = spanning_set(spec, 2);
    REQUIRE(set.size() == 3);
    std::vector<MPoly> got;
    for (const auto& a : set)
        got.push_back(a(0, 0));
    for (const char* want : {"x", "x^2", "d*x"})
        CHECK(std::find(got.begin(), got.end(), P(want)) != got.end());

    // S = 0, transpose: p - p*(∂,-∂-x) vanishes on symmetric constants
    auto star0 = SubalgebraSpec::star(Sign::Plus, 0, Antiinvolution::transpose(2));
    std::size_t deg0 = 0;
    for (const auto& a : spanning_set(star0, 2))
        if (a.degree() == 0) {
            ++deg0;
            CHECK(a.transpose() == -a);
        }
    CHECK(deg0 == 1);

    for (const auto& s : all_families(3, 2))
        for (const auto& a : spanning_set(s, 4)) {
            CAPTURE(s.describe());
            CHECK(membership(s, a));
        }
}

TEST_CASE("closure and normalization of the families")
{
    for (const auto& s : all_families(2, 2)) {
        CAPTURE(s.describe());
        CHECK(verify_closure(s, 3).pass());
        CHECK(verify_normalized(s, 4).pass());
    }
}

TEST_CASE("negative control")
{
    auto spec = SubalgebraSpec::rank_ideal(Sign::Plus, 1, 0, 1);
    auto set = spanning_set(spec, 3);
    set.push_back(GcElem::scalar(1, 1));
    auto r = verify_closure_of(spec, set);
    CHECK_FALSE(r.pass());
    CHECK(r.checked == set.size() * set.size());
}

TEST_CASE("L_(2) kills x^S")
{
    for (unsigned S = 0; S <= 4; ++S) {
        auto L = SubalgebraSpec::rank_ideal(Sign::Plus, S, 0, 1).virasoro();
        CHECK(nth_product(L.elem(), GcElem::scalar(1, var(Var::X).pow(S)), 2).is_zero());
    }
}

TEST_CASE("scalar families")
{
    // N = 1: the four scalar families x^S C[∂,x], (x+∂)^S C[∂,x], and their star halves
    std::mt19937_64 rng(3);
    auto x = var(Var::X);
    auto xd = var(Var::X) + var(Var::D);
    for (unsigned S = 0; S <= 3; ++S)
        for (int t = 0; t < 10; ++t) {
            MPoly p = gcn::testing::random_poly(rng, {Var::D, Var::X}, 3, 3);
            MPoly sym = p + (S % 2 == 1 ? 1 : -1) * p.substitute({{Var::X, -var(Var::D) - x}});
            auto plus = SubalgebraSpec::rank_ideal(Sign::Plus, S, 0, 1);
            auto minus = SubalgebraSpec::rank_ideal(Sign::Minus, S, 0, 1);
            auto splus = SubalgebraSpec::star(Sign::Plus, S, Antiinvolution::transpose(1));
            auto sminus = SubalgebraSpec::star(Sign::Minus, S, Antiinvolution::transpose(1));
            CHECK(membership(plus, PolyMatrix::scalar(1, x.pow(S) * p)));
            CHECK(membership(minus, PolyMatrix::scalar(1, xd.pow(S) * p)));
            CHECK(membership(splus, PolyMatrix::scalar(1, x.pow(S) * sym)));
            CHECK(membership(sminus, PolyMatrix::scalar(1, xd.pow(S) * sym)));
            CHECK(membership(SubalgebraSpec::rank_ideal(Sign::Plus, S, 1, 1), PolyMatrix::scalar(1, p)));
        }
    for (unsigned S = 0; S <= 3; ++S) {
        CHECK(verify_closure(SubalgebraSpec::star(Sign::Minus, S, Antiinvolution::transpose(1)), 4).pass());
        CHECK(verify_closure(SubalgebraSpec::rank_ideal(Sign::Minus, S, 0, 1), 4).pass());
    }
}

TEST_CASE("invariant submodule")
{
    auto r = verify_submodule(SubalgebraSpec::rank_ideal(Sign::Minus, 1, 1, 2), 3);
    CHECK(r.pass());
    CHECK(r.proper);
    auto r0 = verify_submodule(SubalgebraSpec::rank_ideal(Sign::Minus, 0, 1, 2), 2);
    CHECK(r0.pass());
    CHECK_FALSE(r0.proper);
    CHECK_FALSE(verify_submodule(SubalgebraSpec::rank_ideal(Sign::Minus, 2, 3, 3), 1).proper);
    for (unsigned S = 1; S <= 2; ++S)
        CHECK(verify_submodule(SubalgebraSpec::rank_ideal(Sign::Minus, S, 1, 3), 2).pass());
    CHECK_THROWS_AS(verify_submodule(SubalgebraSpec::rank_ideal(Sign::Plus, 1, 1, 2), 2), std::invalid_argument);
}

TEST_CASE("reduced ladders")
{
    auto plus = SubalgebraSpec::rank_ideal(Sign::Plus, 2, 1, 2);
    CHECK(reduced_family(plus, 0).kind == SpaceKind::LeftIdeal);
    CHECK(reduced_family(plus, 1).describe() == "Mat*I_1");
    CHECK(reduced_family(plus, 2).kind == SpaceKind::Full);
    auto minus = SubalgebraSpec::rank_ideal(Sign::Minus, 2, 1, 2);
    CHECK(reduced_family(minus, 1).describe() == "I_1*Mat");
    auto star = SubalgebraSpec::star(Sign::Plus, 1, Antiinvolution::transpose(2));
    CHECK(reduced_family(star, 0).kind == SpaceKind::Zero);
    CHECK(reduced_family(star, 1).describe() == "A*=+A");
    CHECK(reduced_family(star, 2).describe() == "A*=-A");
    CHECK(reduced_family(star, 1).basis().size() == 3);
    CHECK(reduced_family(star, 2).basis().size() == 1);
    auto symp = SubalgebraSpec::star(Sign::Plus, 0, Antiinvolution::symplectic(2));
    CHECK(reduced_family(symp, 0).basis().size() == 3);

    CHECK(verify_reduced_family(star, 4, 4).pass());
    for (const auto& s : all_families(2, 2)) {
        CAPTURE(s.describe());
        CHECK(verify_reduced_family(s, 3, 3).pass());
    }
}

TEST_CASE("serial and parallel sweeps agree")
{
    auto spec = SubalgebraSpec::rank_ideal(Sign::Plus, 1, 0, 1);
    auto set = spanning_set(spec, 2);
    set.push_back(GcElem::scalar(1, 1));
    auto a = verify_closure_of(spec, set, Exec::Serial);
    auto b = verify_closure_of(spec, set, Exec::Parallel);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].i == b.violations[i].i);
        CHECK(a.violations[i].j == b.violations[i].j);
        CHECK(a.violations[i].element == b.violations[i].element);
    }
}
