#include "gcn/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcn {

namespace {

void require_unit(const Series& s, const char* op)
{
    if (s[0] != MPoly(1))
        throw std::domain_error(std::string(op) + ": constant term must be 1, got " + s[0].str());
}

}  // namespace

Series::Series(unsigned order) : order_(order), c_(order + 1) {}

Series::Series(unsigned order, std::vector<MPoly> coeffs) : order_(order), c_(std::move(coeffs))
{
    c_.resize(order + 1);
}

Series Series::from_poly(const MPoly& p, unsigned order, Var z)
{
    Series s(order);
    for (auto& [e, c] : p.split(z))
        if (e <= order)
            s.c_[e] = c;
    return s;
}

Series Series::operator-() const
{
    Series r(order_);
    for (unsigned i = 0; i <= order_; ++i)
        r.c_[i] = -c_[i];
    return r;
}

Series operator+(const Series& a, const Series& b)
{
    Series r(std::min(a.order_, b.order_));
    for (unsigned i = 0; i <= r.order_; ++i)
        r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b)
{
    Series r(std::min(a.order_, b.order_));
    for (unsigned i = 0; i <= r.order_; ++i)
        for (unsigned j = 0; i + j <= r.order_; ++j)
            if (!a.c_[i].is_zero() && !b.c_[j].is_zero())
                r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

Series operator*(const Series& a, const MPoly& c)
{
    Series r(a.order_);
    for (unsigned i = 0; i <= a.order_; ++i)
        r.c_[i] = a.c_[i] * c;
    return r;
}

Series series_inverse(const Series& s)
{
    require_unit(s, "series_inverse");
    Series t(s.order());
    t[0] = 1;
    for (unsigned n = 1; n <= s.order(); ++n) {
        MPoly acc;
        for (unsigned k = 1; k <= n; ++k)
            acc += s[k] * t[n - k];
        t[n] = -acc;
    }
    return t;
}

Series series_sqrt(const Series& s)
{
    require_unit(s, "series_sqrt");
    // t_0 = 1, 2 t_n = s_n - sum_{k=1}^{n-1} t_k t_{n-k}
    Series t(s.order());
    t[0] = 1;
    for (unsigned n = 1; n <= s.order(); ++n) {
        MPoly acc = s[n];
        for (unsigned k = 1; k < n; ++k)
            acc -= t[k] * t[n - k];
        t[n] = acc * frac(1, 2);
    }
    return t;
}

Series series_log(const Series& s)
{
    require_unit(s, "series_log");
    // (log s)' = s'/s, integrate termwise
    unsigned n = s.order();
    Series ds(n);
    for (unsigned i = 1; i <= n; ++i)
        ds[i - 1] = s[i] * Rat(i);
    Series q = ds * series_inverse(s);
    Series out(n);
    for (unsigned i = 1; i <= n; ++i)
        out[i] = q[i - 1] * frac(1, i);
    return out;
}

Series series_exp(const Series& f)
{
    if (!f[0].is_zero())
        throw std::domain_error("series_exp: argument must have zero constant term, got " + f[0].str());
    // n e_n = sum_{k=1}^n k f_k e_{n-k}
    Series e(f.order());
    e[0] = 1;
    for (unsigned n = 1; n <= f.order(); ++n) {
        MPoly acc;
        for (unsigned k = 1; k <= n; ++k)
            if (!f[k].is_zero())
                acc += f[k] * e[n - k] * Rat(k);
        e[n] = acc * frac(1, n);
    }
    return e;
}

Series series_log_exp_pow(const Series& s, const MPoly& exponent)
{
    require_unit(s, "series_log_exp_pow");
    return series_exp(series_log(s) * exponent);
}

}  // namespace gcn
