#ifndef GCN_REDUCED_HPP
#define GCN_REDUCED_HPP

#include "gcn/sweep.hpp"
#include "gcn/virasoro.hpp"

#include <vector>

namespace gcn {

/// X^m A: one homogeneous piece of the reduced space, A over Q[σ].
struct ReducedPart {
    unsigned degree;
    PolyMatrix matrix;
};

// d^{(σ)}_{m,n,k}; sigma is Var::S or a constant. Throws std::invalid_argument if k > m+n.
MPoly d_coeff(unsigned m, unsigned n, unsigned k, const MPoly& sigma);

// X^m A <k> X^n B = [d^{(σ)}_{m,n,k} AB + (-1)^{k+1} d^{(-σ)}_{m,n,k} BA] X^{m+n-k}
ReducedElem reduced_product(const ReducedPart& a, const ReducedPart& b, unsigned k, const MPoly& sigma);

// Lifts to Q_m A, Q_n B in gc_N, takes the k-th product there and projects back.
ReducedElem reduced_bracket_oracle(const ReducedPart& a, const ReducedPart& b, unsigned k, const MPoly& sigma);

struct OracleCase {
    unsigned m;
    unsigned n;
    unsigned k;
    bool agree;
};

// reduced_product against the oracle for scalar operands X^m, X^n (N = 1),
// every m, n <= max_mn and k <= m+n, ordered by (m, n, k).
std::vector<OracleCase> oracle_sweep(unsigned max_mn, const MPoly& sigma, Exec exec = Exec::Parallel);

}  // namespace gcn

#endif
