#ifndef GCN_GC_HPP
#define GCN_GC_HPP

#include "gcn/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace gcn {

/// Element A(∂, x) of gc_N under the symbol map; entries may only mention ∂, x and σ.
class GcElem : public PolyMatrix {
public:
    GcElem() = default;
    explicit GcElem(std::size_t n) : PolyMatrix(n) {}
    explicit GcElem(PolyMatrix m);

    static GcElem scalar(std::size_t n, const MPoly& p) { return GcElem(PolyMatrix::scalar(n, p)); }
    static GcElem unit(std::size_t n, std::size_t i, std::size_t j, const MPoly& p = 1)
    {
        return GcElem(PolyMatrix::unit(n, i, j, p));
    }

    // Total degree in (∂, x).
    unsigned degree() const { return total_degree({Var::D, Var::X}); }
    // Splits into parts homogeneous in (∂, x).
    std::map<unsigned, GcElem> homogeneous_parts() const;
};

/// Polynomial in λ with matrix coefficients; zero coefficients are not stored.
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::size_t n) : n_(n) {}
    // Splits a matrix whose entries mention λ (Var::L) by powers of λ.
    static LambdaPoly from_matrix(const PolyMatrix& m);

    std::size_t n() const { return n_; }
    const std::map<unsigned, PolyMatrix>& coeffs() const { return c_; }
    PolyMatrix coefficient(unsigned k) const;
    bool is_zero() const { return c_.empty(); }
    unsigned degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    PolyMatrix to_matrix() const;

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) = default;

private:
    std::size_t n_ = 0;
    std::map<unsigned, PolyMatrix> c_;
};

/// v(∂) in C[∂]^N; after an action the entries also carry λ.
struct ModVec {
    std::vector<MPoly> entries;

    std::size_t n() const { return entries.size(); }
    static ModVec unit(std::size_t n, std::size_t i, const MPoly& p = 1);
    friend bool operator==(const ModVec& a, const ModVec& b) = default;
    friend ModVec operator-(const ModVec& a, const ModVec& b);
};

// Raw forms with the spectral parameter given by an arbitrary polynomial nu:
//   A(-nu, nu+∂+x) B(nu+∂, x) - B(nu+∂, -nu+x) A(-nu, x)
// Extra variables in the operands (λ, μ, σ) are treated as constants.
PolyMatrix bracket_with(const PolyMatrix& a, const PolyMatrix& b, const MPoly& nu);
//   A(-nu, nu+∂) v(nu+∂)
ModVec action_with(const PolyMatrix& a, const ModVec& v, const MPoly& nu);

LambdaPoly lambda_bracket(const GcElem& a, const GcElem& b);
ModVec lambda_action(const GcElem& a, const ModVec& v);
// k! times the λ^k coefficient of [a λ b].
GcElem nth_product(const GcElem& a, const GcElem& b, unsigned k);

// x = (y - ∂)/2 and its inverse y = 2x + ∂.
PolyMatrix to_y(const PolyMatrix& a);
PolyMatrix from_y(const PolyMatrix& a);
MPoly to_y(const MPoly& p);
MPoly from_y(const MPoly& p);

// {"n": N, "entries": [[poly, ...], ...]}
std::string to_json(const GcElem& a);
// Throws std::invalid_argument (or ParseError) on malformed input.
GcElem gc_from_json(const std::string& text);

}  // namespace gcn

#endif
