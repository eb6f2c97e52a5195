#ifndef GCN_JACOBI_HPP
#define GCN_JACOBI_HPP

#include "gcn/series.hpp"

#include <string>

namespace gcn {

struct JacobiParams {
    MPoly alpha;
    MPoly beta;

    // Fully symbolic (Var::A, Var::B).
    static JacobiParams symbolic() { return {var(Var::A), var(Var::B)}; }
    // (α, β) = (-σ, σ).
    static JacobiParams minus_plus(const MPoly& sigma) { return {-sigma, sigma}; }
};

// P_n^{(α,β)}(y) as a polynomial in y and the parameter variables.
MPoly jacobi_poly(const JacobiParams& p, unsigned n);

bool check_ode(const JacobiParams& p, unsigned n);
// P^{(α,β)}(y) = (-1)^n P^{(β,α)}(-y)
bool check_symmetry(const JacobiParams& p, unsigned n);
// y^n coefficient equals 2^{-n} (n+α+β+1)_n / n!
bool check_leading_coefficient(const JacobiParams& p, unsigned n);

// (1-2yz+∂²z²)^{-1/2} [(1-∂z+R)/(1+∂z+R)]^σ with R = sqrt(1-2yz+∂²z²).
Series generating_series(const MPoly& sigma, unsigned order);
// z^n coefficient equals binom(2n,n) R_n^{(σ)}(∂,y) for all n <= order.
bool generating_check(const MPoly& sigma, unsigned order);

// Σ c_j y^j -> Σ c_j y^j ∂^{n-j}
MPoly homogenize(const MPoly& p, unsigned n);
// binom(2n,n) R_n(∂,y) = ∂^n P_n^{(-σ,σ)}(y/∂), and the same identity in (∂, x).
bool qn_jacobi_relation(const MPoly& sigma, unsigned n);

struct ParityResult {
    MPoly quotient;          // P_n^{(-S,S)} / (y-1)^S
    MPoly remainder_minus;   // of P_n^{(-S,S)} by (y-1)^S
    MPoly remainder_plus;    // of P_n^{(S,-S)} by (y+1)^S
    bool quotients_equal = false;
    bool parity = false;     // quotient(-y) = (-1)^{n-S} quotient(y)
    bool q_version = false;  // Q_n^{(S)} = x^S Q~, Q_n^{(-S)} = (x+∂)^S Q~, Q~(∂,x) = Q~(-∂,∂+x)
    bool ok = false;
    std::string detail;
};

// Requires n >= S; throws std::invalid_argument otherwise.
ParityResult parity_factorization(unsigned S, unsigned n);

}  // namespace gcn

#endif
