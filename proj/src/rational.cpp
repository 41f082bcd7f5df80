#include "polar/rational.hpp"

namespace polar {

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("pow: zero base with negative exponent");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty rational");
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

Integer floor(const Rational& value)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

}  // namespace polar
