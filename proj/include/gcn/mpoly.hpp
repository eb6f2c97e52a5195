#ifndef GCN_MPOLY_HPP
#define GCN_MPOLY_HPP

#include "gcn/rat.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcn {

// Global variable order. M is a scratch second spectral parameter (mu) used by
// the two-variable Jacobi identity and module-axiom checks.
enum class Var : std::uint8_t { D = 0, X, Y, L, S, A, B, Z, M };
inline constexpr std::size_t kNumVars = 9;

// Text names used by the grammar: d x y l s a b z m.
char var_symbol(Var v);
std::optional<Var> var_from_symbol(char c);

/// Exponent vector packed one byte per variable; comparison is lexicographic
/// with D most significant. Exponents are capped at 127 so that products can
/// be formed with a single add and an overflow test on the guard bits.
class Monomial {
public:
    static constexpr unsigned kMaxExponent = 127;

    constexpr Monomial() = default;
    static Monomial of(Var v, unsigned e = 1);

    unsigned operator[](Var v) const;
    Monomial with(Var v, unsigned e) const;
    unsigned total_degree() const;
    bool is_one() const { return hi_ == 0 && lo_ == 0; }
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;

    std::size_t hash() const
    {
        return static_cast<std::size_t>(hi_ * 0x9E3779B97F4A7C15ULL ^ (lo_ + 0x7F4A7C15ULL));
    }

private:
    static constexpr std::uint64_t kGuard = 0x8080808080808080ULL;
    std::uint64_t hi_ = 0;  // vars 0..7, var 0 in the top byte
    std::uint64_t lo_ = 0;  // vars 8..15
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MPoly;
using Bindings = std::map<Var, MPoly>;

/// Sparse polynomial over Q in the global variables. Terms are kept sorted by
/// monomial with no zero coefficients, so equality is term-list equality.
class MPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    MPoly() = default;
    MPoly(const Rat& c);  // NOLINT: constants promote implicitly
    MPoly(int c);         // NOLINT

    static MPoly var(Var v);
    static MPoly term(const Monomial& m, const Rat& c);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    Rat coefficient(const Monomial& m) const;

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    unsigned total_degree(std::initializer_list<Var> vars) const;
    bool uses(Var v) const;
    std::vector<Var> variables() const;
    bool only_uses(std::initializer_list<Var> allowed) const;

    // Degree in v -> coefficient polynomial (free of v).
    std::map<unsigned, MPoly> split(Var v) const;
    MPoly coeff(Var v, unsigned e) const;

    MPoly derivative(Var v) const;
    // Simultaneous substitution; variables without a binding are unchanged.
    MPoly substitute(const Bindings& bindings) const;
    MPoly evaluate(Var v, const Rat& value) const;
    MPoly pow(unsigned e) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
    friend MPoly operator*(MPoly a, int c) { return a *= Rat(c); }
    friend MPoly operator*(int c, MPoly a) { return a *= Rat(c); }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

inline MPoly var(Var v) { return MPoly::var(v); }

/// top (top-1) ... (top-k+1) / k!
MPoly binom_poly(const MPoly& top, unsigned k);

/// Rising factorial (a)(a+1)...(a+k-1).
MPoly rising(const MPoly& a, unsigned k);

struct DivResult {
    MPoly quotient;
    MPoly remainder;
    bool exact() const { return remainder.is_zero(); }
};

/// Division in (Q[other vars])[v]. The leading coefficient of the divisor in v
/// must be a nonzero rational constant, so the quotient never needs fractions
/// in the other variables. Throws std::invalid_argument otherwise.
DivResult divide(const MPoly& p, const MPoly& divisor, Var v);

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t column, const std::string& what);
    std::size_t column() const { return column_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t column_;
    std::string reason_;
};

/// Grammar: terms joined by + and -; a term is an optional integer or p/q
/// coefficient followed by '*'-separated factors var^k. Columns are 1-based.
MPoly parse_poly(std::string_view text);

}  // namespace gcn

#endif
