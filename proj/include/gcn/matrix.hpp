#ifndef GCN_MATRIX_HPP
#define GCN_MATRIX_HPP

#include "gcn/mpoly.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gcn {

/// Square matrix with polynomial entries, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static PolyMatrix identity(std::size_t n) { return scalar(n, 1); }
    static PolyMatrix scalar(std::size_t n, const MPoly& p);
    static PolyMatrix unit(std::size_t n, std::size_t i, std::size_t j, const MPoly& p = 1);

    std::size_t n() const { return n_; }
    const MPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    MPoly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const std::vector<MPoly>& entries() const { return e_; }

    bool is_zero() const;
    unsigned total_degree(std::initializer_list<Var> vars) const;
    bool only_uses(std::initializer_list<Var> allowed) const;

    PolyMatrix map(const std::function<MPoly(const MPoly&)>& f) const;
    PolyMatrix substitute(const Bindings& b) const;
    PolyMatrix transpose() const;

    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const MPoly& p, const PolyMatrix& a);
    friend PolyMatrix operator*(const PolyMatrix& a, const MPoly& p) { return p * a; }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

    // Rows joined by "; ", entries by ", ".
    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<MPoly> e_;
};

void require_same_size(std::size_t a, std::size_t b, const char* op);

using RatMatrix = std::vector<std::vector<Rat>>;

// Exact Gaussian elimination over Q.
std::size_t rank(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Constant entries only; throws std::invalid_argument otherwise.
RatMatrix to_rat(const PolyMatrix& m);
PolyMatrix to_poly(const RatMatrix& m);

}  // namespace gcn

#endif
