#include "gcn/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcn {

PolyMatrix PolyMatrix::scalar(std::size_t n, const MPoly& p)
{
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::unit(std::size_t n, std::size_t i, std::size_t j, const MPoly& p)
{
    PolyMatrix m(n);
    m(i, j) = p;
    return m;
}

bool PolyMatrix::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const MPoly& p) { return p.is_zero(); });
}

unsigned PolyMatrix::total_degree(std::initializer_list<Var> vars) const
{
    unsigned d = 0;
    for (const auto& p : e_)
        d = std::max(d, p.total_degree(vars));
    return d;
}

bool PolyMatrix::only_uses(std::initializer_list<Var> allowed) const
{
    return std::all_of(e_.begin(), e_.end(), [&](const MPoly& p) { return p.only_uses(allowed); });
}

PolyMatrix PolyMatrix::map(const std::function<MPoly(const MPoly&)>& f) const
{
    PolyMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = f(e_[i]);
    return r;
}

PolyMatrix PolyMatrix::substitute(const Bindings& b) const
{
    PolyMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero())
            r.e_[i] = e_[i].substitute(b);
    return r;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

PolyMatrix PolyMatrix::operator-() const
{
    return map([](const MPoly& p) { return -p; });
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o)
{
    require_same_size(n_, o.n_, "matrix addition");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o)
{
    require_same_size(n_, o.n_, "matrix subtraction");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    require_same_size(a.n_, b.n_, "matrix product");
    std::size_t n = a.n_;
    PolyMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const MPoly& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += aik * b(k, j);
        }
    return r;
}

PolyMatrix operator*(const MPoly& p, const PolyMatrix& a)
{
    return a.map([&](const MPoly& e) { return p * e; });
}

std::string PolyMatrix::str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0)
            out += "; ";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j > 0)
                out += ", ";
            out += (*this)(i, j).str();
        }
    }
    return out + "]";
}

void require_same_size(std::size_t a, std::size_t b, const char* op)
{
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": size mismatch (" + std::to_string(a) + " vs "
                                    + std::to_string(b) + ")");
}

std::size_t rank(RatMatrix m)
{
    std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rat p = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RatMatrix to_rat(const PolyMatrix& m)
{
    RatMatrix r(m.n(), std::vector<Rat>(m.n()));
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (!m(i, j).is_constant())
                throw std::invalid_argument("matrix entry is not a constant: " + m(i, j).str());
            r[i][j] = m(i, j).constant_term();
        }
    return r;
}

PolyMatrix to_poly(const RatMatrix& m)
{
    PolyMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            r(i, j) = m[i][j];
    return r;
}

}  // namespace gcn
