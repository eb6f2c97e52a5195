#include "gcn/rat.hpp"

#include <stdexcept>

namespace gcn {

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string to_string(const Rat& r)
{
    return r.get_str();
}

Rat parse_rat(std::string_view text)
{
    std::string s(text);
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (num.front() == '+')
        num.erase(0, 1);
    BigInt d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    Rat r{BigInt(num), d};
    r.canonicalize();
    return r;
}

}  // namespace gcn
