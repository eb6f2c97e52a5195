#ifndef GCN_RAT_HPP
#define GCN_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gcn {

// Exact rational scalar. GMP keeps it canonical (gcd(num, den) = 1, den > 0).
using Rat = mpq_class;
using BigInt = mpz_class;

BigInt factorial(unsigned n);

// Integer binomial C(n, k); zero when k > n or k < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

std::string to_string(const Rat& r);

// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input or q = 0.
Rat parse_rat(std::string_view text);

// n/d in canonical form; d must be nonzero.
inline Rat frac(long n, long d)
{
    Rat r{BigInt(n), BigInt(d)};
    r.canonicalize();
    return r;
}

inline Rat ratio(const BigInt& n, const BigInt& d)
{
    Rat r{n, d};
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace gcn

#endif
