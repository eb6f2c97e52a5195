#include "gcn/mpoly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

namespace gcn {

namespace {

constexpr std::array<char, kNumVars> kSymbols{'d', 'x', 'y', 'l', 's', 'a', 'b', 'z', 'm'};

unsigned byte_shift(Var v)
{
    auto i = static_cast<unsigned>(v);
    return (7 - (i % 8)) * 8;
}

bool in_hi(Var v) { return static_cast<unsigned>(v) < 8; }

using Accumulator = std::unordered_map<Monomial, Rat, MonomialHash>;

std::vector<MPoly::Term> flatten(Accumulator& acc)
{
    std::vector<MPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.emplace_back(m, std::move(c));
    std::sort(out.begin(), out.end(),
              [](const MPoly::Term& a, const MPoly::Term& b) { return a.first < b.first; });
    return out;
}

}  // namespace

char var_symbol(Var v) { return kSymbols[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_symbol(char c)
{
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kSymbols[i] == c)
            return static_cast<Var>(i);
    return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned e) { return Monomial{}.with(v, e); }

unsigned Monomial::operator[](Var v) const
{
    std::uint64_t word = in_hi(v) ? hi_ : lo_;
    return static_cast<unsigned>((word >> byte_shift(v)) & 0xFF);
}

Monomial Monomial::with(Var v, unsigned e) const
{
    if (e > kMaxExponent)
        throw std::overflow_error("monomial exponent exceeds 127");
    Monomial r = *this;
    std::uint64_t& word = in_hi(v) ? r.hi_ : r.lo_;
    word &= ~(std::uint64_t{0xFF} << byte_shift(v));
    word |= std::uint64_t{e} << byte_shift(v);
    return r;
}

unsigned Monomial::total_degree() const
{
    unsigned d = 0;
    for (std::size_t i = 0; i < kNumVars; ++i)
        d += (*this)[static_cast<Var>(i)];
    return d;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < kNumVars; ++i)
        if ((*this)[static_cast<Var>(i)] > other[static_cast<Var>(i)])
            return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.hi_ = a.hi_ + b.hi_;
    r.lo_ = a.lo_ + b.lo_;
    if ((r.hi_ | r.lo_) & Monomial::kGuard)
        throw std::overflow_error("monomial exponent exceeds 127");
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.hi_ = a.hi_ - b.hi_;
    r.lo_ = a.lo_ - b.lo_;
    return r;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const Rat& c)
{
    if (c != 0)
        terms_.emplace_back(Monomial{}, c);
}

MPoly::MPoly(int c) : MPoly(Rat(c)) {}

MPoly MPoly::var(Var v) { return term(Monomial::of(v), 1); }

MPoly MPoly::term(const Monomial& m, const Rat& c)
{
    MPoly p;
    if (c != 0)
        p.terms_.emplace_back(m, c);
    return p;
}

bool MPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rat MPoly::constant_term() const { return coefficient(Monomial{}); }

Rat MPoly::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m)
        return it->second;
    return 0;
}

unsigned MPoly::degree(Var v) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m[v]);
    return d;
}

unsigned MPoly::total_degree() const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

unsigned MPoly::total_degree(std::initializer_list<Var> vars) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned t = 0;
        for (Var v : vars)
            t += m[v];
        d = std::max(d, t);
    }
    return d;
}

bool MPoly::uses(Var v) const
{
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.first[v] != 0; });
}

std::vector<Var> MPoly::variables() const
{
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (uses(static_cast<Var>(i)))
            out.push_back(static_cast<Var>(i));
    return out;
}

bool MPoly::only_uses(std::initializer_list<Var> allowed) const
{
    for (Var v : variables())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
            return false;
    return true;
}

std::map<unsigned, MPoly> MPoly::split(Var v) const
{
    std::map<unsigned, MPoly> out;
    for (const auto& [m, c] : terms_)
        out[m[v]].terms_.emplace_back(m.with(v, 0), c);
    for (auto& [e, p] : out)
        p.normalize();
    return out;
}

MPoly MPoly::coeff(Var v, unsigned e) const
{
    MPoly p;
    for (const auto& [m, c] : terms_)
        if (m[v] == e)
            p.terms_.emplace_back(m.with(v, 0), c);
    p.normalize();
    return p;
}

MPoly MPoly::derivative(Var v) const
{
    MPoly p;
    for (const auto& [m, c] : terms_) {
        unsigned e = m[v];
        if (e > 0)
            p.terms_.emplace_back(m.with(v, e - 1), c * e);
    }
    p.normalize();
    return p;
}

MPoly MPoly::substitute(const Bindings& bindings) const
{
    if (bindings.empty() || terms_.empty())
        return *this;
    std::array<const MPoly*, kNumVars> bound{};
    for (const auto& [v, p] : bindings)
        bound[static_cast<std::size_t>(v)] = &p;
    std::array<std::vector<MPoly>, kNumVars> powers;
    auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.emplace_back(1);
        while (cache.size() <= e)
            cache.push_back(cache.back() * *bound[i]);
        return cache[e];
    };

    Accumulator acc;
    for (const auto& [m, c] : terms_) {
        Monomial kept = m;
        MPoly factor(c);
        for (std::size_t i = 0; i < kNumVars; ++i) {
            auto v = static_cast<Var>(i);
            unsigned e = m[v];
            if (e == 0 || bound[i] == nullptr)
                continue;
            kept = kept.with(v, 0);
            factor = factor * power(i, e);
        }
        for (const auto& [fm, fc] : factor.terms_)
            acc[fm * kept] += fc;
    }
    MPoly out;
    out.terms_ = flatten(acc);
    return out;
}

MPoly MPoly::evaluate(Var v, const Rat& value) const { return substitute({{v, MPoly(value)}}); }

MPoly MPoly::pow(unsigned e) const
{
    MPoly result(1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e > 0)
            base *= base;
    }
    return result;
}

MPoly MPoly::operator-() const
{
    MPoly p = *this;
    for (auto& t : p.terms_)
        t.second = -t.second;
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rat c = a->second + b->second;
            if (c != 0)
                merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o)
{
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.is_constant())
        return b * a.terms_.front().second;
    if (b.is_constant())
        return a * b.terms_.front().second;
    Accumulator acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Rat prod;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            acc[ma * mb] += prod;
        }
    MPoly out;
    out.terms_ = flatten(acc);
    return out;
}

void MPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(out);
}

std::string MPoly::str() const
{
    if (terms_.empty())
        return "0";
    // Highest total degree first, ties broken by descending monomial order.
    std::vector<const Term*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        unsigned da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db)
            return da > db;
        return b->first < a->first;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
        const auto& [m, c] = *t;
        bool neg = c < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        Rat mag = abs(c);
        std::string factors;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            unsigned e = m[static_cast<Var>(i)];
            if (e == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += kSymbols[i];
            if (e > 1)
                factors += '^' + std::to_string(e);
        }
        if (factors.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += factors;
        else
            out += mag.get_str() + '*' + factors;
    }
    return out;
}

MPoly binom_poly(const MPoly& top, unsigned k)
{
    MPoly r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= top - MPoly(static_cast<int>(i));
    return r * ratio(1, factorial(k));
}

MPoly rising(const MPoly& a, unsigned k)
{
    MPoly r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= a + MPoly(static_cast<int>(i));
    return r;
}

DivResult divide(const MPoly& p, const MPoly& divisor, Var v)
{
    if (divisor.is_zero())
        throw std::invalid_argument("division by zero polynomial");
    unsigned dd = divisor.degree(v);
    MPoly lead = divisor.coeff(v, dd);
    if (!lead.is_constant())
        throw std::invalid_argument("divisor leading coefficient in " + std::string(1, var_symbol(v))
                                    + " is not a constant");
    Rat inv = 1 / lead.constant_term();
    DivResult r{MPoly{}, p};
    while (!r.remainder.is_zero()) {
        unsigned dr = r.remainder.degree(v);
        if (dr < dd)
            break;
        MPoly t = r.remainder.coeff(v, dr) * inv * MPoly::term(Monomial::of(v, dr - dd), 1);
        r.quotient += t;
        r.remainder -= t * divisor;
    }
    return r;
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(std::size_t column, const std::string& what)
    : std::invalid_argument("syntax error at column " + std::to_string(column) + ": " + what),
      column_(column),
      reason_(what)
{
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MPoly parse()
    {
        skip_ws();
        if (at_end())
            throw ParseError(col(), "empty expression");
        MPoly result;
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                break;
            }
            MPoly t = term();
            result += sign < 0 ? -t : t;
            first = false;
            skip_ws();
            if (at_end())
                break;
            if (peek() != '+' && peek() != '-')
                throw ParseError(col(), std::string("unexpected '") + peek() + "'");
        }
        if (!at_end())
            throw ParseError(col(), std::string("unexpected '") + peek() + "'");
        return result;
    }

private:
    MPoly term()
    {
        MPoly t = item();
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*')
                return t;
            ++pos_;
            skip_ws();
            t *= item();
        }
    }

    MPoly item()
    {
        if (at_end())
            throw ParseError(col(), "expected a coefficient or variable, found end of input");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num(digits());
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = col();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError(col(), "expected a denominator");
                BigInt den(digits());
                if (den == 0)
                    throw ParseError(at, "zero denominator");
                Rat q(num, den);
                q.canonicalize();
                return MPoly(q);
            }
            return MPoly(Rat(num));
        }
        auto v = var_from_symbol(c);
        if (!v)
            throw ParseError(col(), std::string("unknown symbol '") + c + "'");
        ++pos_;
        skip_ws();
        unsigned e = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(col(), at_end() ? "expected an exponent, found end of input"
                                                 : std::string("expected an exponent, found '") + peek() + "'");
            std::size_t at = col();
            std::string d = digits();
            if (d.size() > 3 || std::stoul(d) > Monomial::kMaxExponent)
                throw ParseError(at, "exponent too large");
            e = static_cast<unsigned>(std::stoul(d));
        }
        return MPoly::term(Monomial::of(*v, e), 1);
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t col() const { return pos_ + 1; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace gcn
