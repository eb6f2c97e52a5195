#ifndef GCN_VIRASORO_HPP
#define GCN_VIRASORO_HPP

#include "gcn/gc.hpp"

#include <map>
#include <mutex>
#include <string>

namespace gcn {

/// L = (x + α∂)·Id with σ = 1 - 2α; α is rational or a polynomial in σ.
class VirasoroElem {
public:
    static VirasoroElem from_sigma(std::size_t n, const MPoly& sigma);
    static VirasoroElem from_alpha(std::size_t n, const MPoly& alpha);

    std::size_t n() const { return elem_.n(); }
    const MPoly& alpha() const { return alpha_; }
    const MPoly& sigma() const { return sigma_; }
    const GcElem& elem() const { return elem_; }

private:
    VirasoroElem(std::size_t n, MPoly alpha);
    MPoly alpha_;
    MPoly sigma_;
    GcElem elem_;
};

// Quasi-primary basis element Q_n^{(σ)}(∂, x); sigma is Var::S or a constant.
MPoly q_basis(const MPoly& sigma, unsigned n);
// R_n^{(σ)}(∂, y) = Q_n at x = (y - ∂)/2.
MPoly r_basis(const MPoly& sigma, unsigned n);

// Coefficient ratio c_{n,k} k(2n-k+1) = c_{n,k-1} (n-k+1)(n-k+2α), checked on q_basis.
bool q_recursion_holds(const MPoly& sigma, unsigned n);

/// Append-only cache of Q_n for one σ. Safe to share between threads.
class QBasis {
public:
    explicit QBasis(MPoly sigma) : sigma_(std::move(sigma)) {}
    const MPoly& sigma() const { return sigma_; }
    const MPoly& operator()(unsigned n) const;

private:
    MPoly sigma_;
    mutable std::mutex mu_;
    mutable std::map<unsigned, MPoly> cache_;
};

bool is_quasi_primary(const GcElem& a, const VirasoroElem& L);

/// Σ_m Q_m^{(σ)} · A_m with matrices A_m over Q[σ].
class ReducedElem {
public:
    ReducedElem() = default;
    explicit ReducedElem(std::size_t n) : n_(n) {}
    static ReducedElem single(unsigned degree, const PolyMatrix& m);

    std::size_t n() const { return n_; }
    const std::map<unsigned, PolyMatrix>& components() const { return c_; }
    PolyMatrix component(unsigned degree) const;
    bool is_zero() const { return c_.empty(); }
    void add(unsigned degree, const PolyMatrix& m);

    friend bool operator==(const ReducedElem& a, const ReducedElem& b) = default;
    std::string str() const;

private:
    std::size_t n_ = 0;
    std::map<unsigned, PolyMatrix> c_;
};

// a = Σ_i ∂^i a^i with every a^i quasi-primary; returns i -> a^i in the Q-basis.
std::map<unsigned, ReducedElem> decompose(const GcElem& a, const VirasoroElem& L);
// Quasi-primary part a^0 computed by setting ∂ = 0 and reading x^n -> Q_n.
ReducedElem project(const GcElem& a, const VirasoroElem& L);
// Σ_m Q_m A_m as an element of gc_N.
GcElem lift(const ReducedElem& r, const VirasoroElem& L);
GcElem reconstruct(const std::map<unsigned, ReducedElem>& parts, const VirasoroElem& L);

}  // namespace gcn

#endif
