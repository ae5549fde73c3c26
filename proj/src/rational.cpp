#include "weyltasep/rational.hpp"

#include "weyltasep/errors.hpp"

#include <cctype>

namespace wt {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw InvalidParameter("empty number");
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r;
        if (r.set_str(text, 10) != 0)
            throw InvalidParameter("not a rational: " + text);
        if (r.get_den() == 0)
            throw InvalidParameter("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        char c = digits[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '-' || c == '+'))))
            throw InvalidParameter("not a decimal: " + text);
    }
    if (!digits.empty() && digits[0] == '+')
        digits.erase(0, 1);
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& r, int digits)
{
    if (digits < 0)
        throw InvalidParameter("negative digit count");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(r) * scale;
    // round half up on the magnitude
    BigInt q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (r < 0 && q != 0)
        s.insert(0, "-");
    return s;
}

Rational frac(const BigInt& a, const BigInt& b)
{
    if (b == 0)
        throw InvalidParameter("zero denominator");
    Rational r(a, b);
    r.canonicalize();
    return r;
}

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational power(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw ZeroParameter("zero to a negative power");
        return power(Rational(1) / base, -exponent);
    }
    Rational out(1);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

} // namespace wt
