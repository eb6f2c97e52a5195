#ifndef GCN_TESTS_SUPPORT_HPP
#define GCN_TESTS_SUPPORT_HPP

#include "gcn/gc.hpp"
#include "gcn/mpoly.hpp"

#include <random>
#include <vector>

namespace gcn::testing {

inline MPoly P(const char* text) { return parse_poly(text); }

// Sparse random polynomial in the given variables, total degree <= max_degree.
inline MPoly random_poly(std::mt19937_64& rng, std::vector<Var> vars, unsigned max_degree, unsigned terms)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    MPoly p;
    for (unsigned t = 0; t < terms; ++t) {
        unsigned d = deg(rng);
        Monomial m;
        for (unsigned i = 0; i < d; ++i) {
            Var v = vars[pick(rng)];
            m = m * Monomial::of(v);
        }
        int c = coef(rng);
        p += MPoly::term(m, frac(c == 0 ? 1 : c, 1 + long(rng() % 3)));
    }
    return p;
}

// Random element of gc_N with a few terms per entry; some entries left zero.
inline GcElem random_gc(std::mt19937_64& rng, std::size_t n, unsigned max_degree, unsigned terms = 2)
{
    GcElem a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 3 != 0)
                a(i, j) = random_poly(rng, {Var::D, Var::X}, max_degree, terms);
    return a;
}

}  // namespace gcn::testing

#endif
