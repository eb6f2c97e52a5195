#include "gcn/dcoeff.hpp"

#include "gcn/jacobi.hpp"
#include "gcn/reduced.hpp"

#include <stdexcept>

namespace gcn {

namespace {

const MPoly& sigma_var()
{
    static const MPoly s = var(Var::S);
    return s;
}

MPoly reflect(const MPoly& p) { return p.substitute({{Var::S, -sigma_var()}}); }

Rat at(const MPoly& p, long v)
{
    return p.evaluate(Var::S, Rat(v)).constant_term();
}

// ∏_{i=lo}^{hi} (i² - σ²)
MPoly square_block(unsigned lo, unsigned hi)
{
    MPoly out(1);
    for (unsigned i = lo; i <= hi; ++i)
        out *= MPoly(int(i * i)) - sigma_var() * sigma_var();
    return out;
}

std::string tag(unsigned m, unsigned n, unsigned l)
{
    return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " l=" + std::to_string(l);
}

}  // namespace

MPoly big_d(unsigned m, unsigned n, unsigned l)
{
    if (l > m + n)
        throw std::invalid_argument("D(σ;m,n,l) needs l <= m+n, got l = " + std::to_string(l));
    const MPoly& s = sigma_var();
    MPoly sum;
    for (unsigned i = 0; i <= m && i <= l; ++i) {
        unsigned j = l - i;
        if (j > n)
            continue;
        Rat c(binomial(m + i, m) * binomial(n + j, n));
        sum += c * binom_poly(s + int(m), m - i) * binom_poly(int(n) - s, n - j);
    }
    return sum;
}

bool product_expansion_check(unsigned m, unsigned n)
{
    const MPoly& s = sigma_var();
    Bindings shift{{Var::Y, 2 * var(Var::X) + 1}};
    MPoly lhs = jacobi_poly(JacobiParams::minus_plus(-s), m).substitute(shift)
                * jacobi_poly(JacobiParams::minus_plus(s), n).substitute(shift);
    MPoly rhs;
    for (unsigned l = 0; l <= m + n; ++l)
        rhs += big_d(m, n, l) * var(Var::X).pow(l);
    return lhs == rhs;
}

bool d_relation_check(unsigned m, unsigned n)
{
    Rat norm = ratio(1, binomial(2 * m, m) * binomial(2 * n, n));
    for (unsigned l = 0; l <= m + n; ++l)
        if (big_d(m, n, l) * (Rat(factorial(m + n - l)) * norm) != d_coeff(m, n, m + n - l, sigma_var()))
            return false;
    return true;
}

CheckReport verify_facts(unsigned m, unsigned n)
{
    if (m > n)
        throw std::invalid_argument("verify_facts needs m <= n");
    CheckReport r;
    for (unsigned l = 0; l <= m + n; ++l) {
        MPoly d = big_d(m, n, l);
        ++r.checked;
        if (d.total_degree() > m + n - l)
            r.failures.push_back(tag(m, n, l) + ": degree " + std::to_string(d.total_degree()));
        for (long v = 0; v <= long(m); ++v) {
            ++r.checked;
            if (at(d, v) != at(d, -v))
                r.failures.push_back(tag(m, n, l) + ": D(" + std::to_string(v) + ") != D(-" + std::to_string(v) + ")");
        }
        for (long v = long(l) + 1; v <= long(n); ++v) {
            ++r.checked;
            if (at(d, v) != 0)
                r.failures.push_back(tag(m, n, l) + ": D(" + std::to_string(v) + ") != 0");
        }
    }
    return r;
}

CheckReport corollary_check(unsigned m, unsigned n)
{
    if (m > n)
        throw std::invalid_argument("corollary_check needs m <= n");
    CheckReport r;
    const MPoly& s = sigma_var();
    for (unsigned l = 0; l <= m + n; ++l) {
        MPoly d = big_d(m, n, l);
        if (l + m >= n) {
            unsigned a = l < n ? n - l : 0;
            auto q = divide(d, square_block(l + 1, n), Var::S);
            ++r.checked;
            if (!q.exact())
                r.failures.push_back(tag(m, n, l) + ": not divisible");
            else if (reflect(q.quotient) != q.quotient)
                r.failures.push_back(tag(m, n, l) + ": quotient not even");
            else if (!q.quotient.is_zero() && q.quotient.total_degree() + l + 2 * a > m + n)
                r.failures.push_back(tag(m, n, l) + ": quotient degree too high");
            continue;
        }
        if (l > m)
            continue;
        MPoly lin(1);
        MPoly lin_plus(1);
        for (unsigned i = m + 1; i <= n; ++i) {
            lin *= MPoly(int(i)) - s;
            lin_plus *= MPoly(int(i)) + s;
        }
        auto q = divide(d, square_block(l + 1, m) * lin, Var::S);
        ++r.checked;
        if (!q.exact()) {
            r.failures.push_back(tag(m, n, l) + ": not divisible");
            continue;
        }
        for (long v = 0; v <= long(l); ++v) {
            ++r.checked;
            if (at(q.quotient * lin, v) != at(lin_plus * reflect(q.quotient), v))
                r.failures.push_back(tag(m, n, l) + ": ratio condition at " + std::to_string(v));
        }
    }
    return r;
}

RatMatrix rank_matrix(const std::vector<Rat>& xs, const std::vector<Rat>& ys, std::size_t d)
{
    if (xs.size() + ys.size() != d)
        throw std::invalid_argument("rank matrix needs |xs| + |ys| = d");
    RatMatrix m;
    for (const Rat& x : xs) {
        std::vector<Rat> row(d);
        Rat p = 1;
        for (std::size_t c = 0; c < d; ++c, p *= x)
            row[c] = p;
        m.push_back(std::move(row));
    }
    for (const Rat& y : ys) {
        std::vector<Rat> row(d, 0);
        Rat p = 1;
        for (std::size_t c = 0; c < d; ++c, p *= y)
            if (c % 2 == 1)
                row[c] = p;
        m.push_back(std::move(row));
    }
    return m;
}

bool rank_certificate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, std::size_t d)
{
    return rank(rank_matrix(xs, ys, d)) + 1 >= d;
}

std::vector<DEntry> d_table(unsigned max_mn, Exec exec)
{
    std::size_t side = max_mn + 1;
    auto blocks = index_map<std::vector<DEntry>>(
        side * side,
        [&](std::size_t p) {
            unsigned m = unsigned(p / side);
            unsigned n = unsigned(p % side);
            std::vector<DEntry> out;
            for (unsigned l = 0; l <= m + n; ++l)
                out.push_back({m, n, l, big_d(m, n, l)});
            return out;
        },
        exec);
    std::vector<DEntry> out;
    for (auto& b : blocks)
        for (auto& e : b)
            out.push_back(std::move(e));
    return out;
}

}  // namespace gcn
