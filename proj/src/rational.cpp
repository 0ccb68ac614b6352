#include "leibniz/rational.hpp"

#include "leibniz/errors.hpp"

#include <cctype>

namespace leibniz {

namespace {

bool valid_integer(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string strip_plus(const std::string& s)
{
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw UsageError("malformed rational '" + text + "'");
    mpz_class p(strip_plus(num), 10);
    mpz_class q(den, 10);
    if (q == 0)
        throw UsageError("zero denominator in '" + text + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    // get_str already omits "/1"
    return value.get_str(10);
}

} // namespace leibniz
