#include "bergman/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bergman {

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& base, unsigned long exp)
{
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
    // A power of a canonical fraction is canonical.
    return Rational(num, den);
}

Rational abs(const Rational& value)
{
    return sgn(value) < 0 ? Rational(-value) : value;
}

Rational sum(std::vector<Rational> terms)
{
    if (terms.empty()) {
        return Rational(0);
    }
    while (terms.size() > 1) {
        std::size_t out = 0;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
            terms[out++] = terms[i] + terms[i + 1];
        }
        if (terms.size() % 2 == 1) {
            terms[out++] = std::move(terms.back());
        }
        terms.resize(out);
    }
    return std::move(terms.front());
}

double to_double(const Rational& value)
{
    return value.get_d();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text)) {
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    Integer n(std::string(text), 10);
    return negative ? Integer(-n) : n;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    }
    return make_rational(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

GaussianRational GaussianRational::reciprocal() const
{
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    const Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs)
{
    if (rhs.is_real()) {
        re_ *= rhs.re_;
        im_ *= rhs.re_;
        return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs)
{
    return *this *= rhs.reciprocal();
}

GaussianRational parse_gaussian(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty coefficient");
    }
    if (text.back() != 'i') {
        return GaussianRational(parse_rational(text));
    }
    std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    auto imaginary = [&](std::string_view part) {
        if (part.empty() || part == "+") {
            return Rational(1);
        }
        if (part == "-") {
            return Rational(-1);
        }
        return parse_rational(part);
    };
    if (split == std::string_view::npos) {
        return {Rational(0), imaginary(body)};
    }
    return {parse_rational(body.substr(0, split)), imaginary(body.substr(split))};
}

std::string to_string(const GaussianRational& value)
{
    if (value.is_real()) {
        return to_string(value.re());
    }
    std::string out;
    if (sgn(value.re()) != 0) {
        out = to_string(value.re());
        if (sgn(value.im()) > 0) {
            out += '+';
        }
    }
    return out + to_string(value.im()) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value)
{
    return os << to_string(value);
}

} // namespace bergman
