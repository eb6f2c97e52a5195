#ifndef GCN_DCOEFF_HPP
#define GCN_DCOEFF_HPP

#include "gcn/matrix.hpp"
#include "gcn/sweep.hpp"

#include <string>
#include <vector>

namespace gcn {

// D(σ;m,n,l) = Σ_{i+j=l} C(m+i,m) C(m+σ,m-i) C(n+j,n) C(n-σ,n-j), symbolic in Var::S.
// Throws std::invalid_argument if l > m+n.
MPoly big_d(unsigned m, unsigned n, unsigned l);

// P_m^{(σ,-σ)}(2x+1) P_n^{(-σ,σ)}(2x+1) = Σ_l D(σ;m,n,l) x^l
bool product_expansion_check(unsigned m, unsigned n);
// D(σ;m,n,l) (m+n-l)! / (C(2m,m) C(2n,n)) = d^{(σ)}_{m,n,m+n-l} for every l.
bool d_relation_check(unsigned m, unsigned n);

struct CheckReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// For m <= n and every l <= m+n: D(σ) = D(-σ) at σ = 0..m, and D = 0 at
// σ = l+1..n when l < n. Throws std::invalid_argument if m > n.
CheckReport verify_facts(unsigned m, unsigned n);

// Divisibility pattern of D(σ;m,n,l), m <= n:
//   n-m <= l:       D = ∏_{i=l+1}^{n} (i²-σ²) R with R even
//   l < n-m, l <= m: D = ∏_{i=l+1}^{m} (i²-σ²) ∏_{i=m+1}^{n} (i-σ) R with
//                    R(σ)∏(i-σ) = ∏(i+σ)R(-σ) at σ = 0..l
// Cases l < n-m with l > m are skipped.
CheckReport corollary_check(unsigned m, unsigned n);

// Rows [1, x, ..., x^{d-1}] for x in xs and [0, y, 0, y³, ...] for y in ys.
// Throws std::invalid_argument unless |xs| + |ys| = d.
RatMatrix rank_matrix(const std::vector<Rat>& xs, const std::vector<Rat>& ys, std::size_t d);
bool rank_certificate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, std::size_t d);

struct DEntry {
    unsigned m;
    unsigned n;
    unsigned l;
    MPoly value;
};

// All D(σ;m,n,l) with m, n <= max_mn, ordered by (m, n, l).
std::vector<DEntry> d_table(unsigned max_mn, Exec exec = Exec::Parallel);

}  // namespace gcn

#endif
