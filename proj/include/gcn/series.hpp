#ifndef GCN_SERIES_HPP
#define GCN_SERIES_HPP

#include "gcn/mpoly.hpp"

#include <vector>

namespace gcn {

/// Truncated power series sum_{i<=order} c_i z^i with polynomial coefficients.
/// Binary operations truncate to the smaller order of the two operands.
class Series {
public:
    explicit Series(unsigned order);
    Series(unsigned order, std::vector<MPoly> coeffs);

    // Reads the z-expansion of p (which may mention Var::Z) up to order.
    static Series from_poly(const MPoly& p, unsigned order, Var z = Var::Z);

    unsigned order() const { return order_; }
    const MPoly& operator[](unsigned i) const { return c_[i]; }
    MPoly& operator[](unsigned i) { return c_[i]; }
    const std::vector<MPoly>& coeffs() const { return c_; }

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const MPoly& c);
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    unsigned order_;
    std::vector<MPoly> c_;
};

// All of the following require a constant term equal to 1 and throw
// std::domain_error otherwise.
Series series_inverse(const Series& s);
Series series_sqrt(const Series& s);
Series series_log(const Series& s);  // log s, zero constant term
Series series_exp(const Series& f);  // f must have zero constant term
Series series_log_exp_pow(const Series& s, const MPoly& exponent);

}  // namespace gcn

#endif
