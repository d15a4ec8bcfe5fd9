#include "bergman/io.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace bergman::io {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

Exponent decode_exponent(const Json& j)
{
    if (j.is_number_unsigned()) {
        return j.get<Exponent>();
    }
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return static_cast<Exponent>(j.get<std::int64_t>());
    }
    throw std::invalid_argument("exponent must be a nonnegative integer");
}

} // namespace

Json encode_integer(const Integer& n)
{
    if (n.fits_slong_p()) {
        return Json(static_cast<std::int64_t>(n.get_si()));
    }
    return Json(n.get_str());
}

Json encode(const Rational& q)
{
    return Json::array({encode_integer(q.get_num()), encode_integer(q.get_den())});
}

Json encode(const GaussianRational& z)
{
    return Json::array({encode_integer(z.re().get_num()), encode_integer(z.re().get_den()),
                        encode_integer(z.im().get_num()), encode_integer(z.im().get_den())});
}

Json encode(const SparseSeries& f)
{
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back(Json::array({e, encode(c)}));
    }
    Json out{{"terms", std::move(terms)}, {"degree_bound", nullptr}};
    if (f.degree_bound()) {
        out["degree_bound"] = *f.degree_bound();
    }
    return out;
}

Json encode(const PiRational& v)
{
    Json out{{"pi_coeff", encode(v.coefficient().re())}};
    if (!v.is_real()) {
        out["pi_coeff_im"] = encode(v.coefficient().im());
    }
    return out;
}

Integer decode_integer(const Json& j)
{
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        Integer n;
        if (s.empty() || n.set_str(s, 10) != 0) {
            throw std::invalid_argument("malformed integer string '" + s + "'");
        }
        return n;
    }
    throw std::invalid_argument("expected an integer");
}

Rational decode_rational(const Json& j)
{
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("rational must be [num, den]");
    }
    return make_rational(decode_integer(j[0]), decode_integer(j[1]));
}

GaussianRational decode_gaussian(const Json& j)
{
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("Gaussian rational must be [re_num, re_den, im_num, im_den]");
    }
    return {make_rational(decode_integer(j[0]), decode_integer(j[1])),
            make_rational(decode_integer(j[2]), decode_integer(j[3]))};
}

SparseSeries decode_series(const Json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("series must be an object with a 'terms' array");
    }
    SparseSeries::Terms terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2) {
            throw std::invalid_argument("series term must be [exponent, coefficient]");
        }
        const Exponent e = decode_exponent(t[0]);
        if (terms.count(e)) {
            throw std::invalid_argument("repeated exponent " + std::to_string(e));
        }
        terms.emplace(e, decode_gaussian(t[1]));
    }
    std::optional<Exponent> bound;
    if (j.contains("degree_bound") && !j["degree_bound"].is_null()) {
        bound = decode_exponent(j["degree_bound"]);
    }
    return SparseSeries(std::move(terms), bound);
}

PiRational decode_pi(const Json& j)
{
    if (!j.is_object() || !j.contains("pi_coeff")) {
        throw std::invalid_argument("pi-multiple must carry 'pi_coeff'");
    }
    Rational im(0);
    if (j.contains("pi_coeff_im")) {
        im = decode_rational(j["pi_coeff_im"]);
    }
    return PiRational(GaussianRational(decode_rational(j["pi_coeff"]), im));
}

SparseSeries parse_series(std::string_view text)
{
    SparseSeries::Terms terms;
    if (trim(text).empty()) {
        return SparseSeries();
    }
    for (const auto& item : split(text, ',')) {
        const auto at = item.rfind('@');
        if (at == std::string::npos) {
            throw std::invalid_argument("series term '" + item + "' must look like coeff@exponent");
        }
        const std::string exp_text = trim(std::string_view(item).substr(at + 1));
        if (exp_text.empty() || exp_text.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("bad exponent in '" + item + "'");
        }
        const Exponent e = std::stoull(exp_text);
        terms[e] += parse_gaussian(trim(std::string_view(item).substr(0, at)));
    }
    return SparseSeries(std::move(terms));
}

Polynomial parse_polynomial(std::string_view text)
{
    std::vector<GaussianRational> coeffs;
    for (const auto& item : split(text, ',')) {
        coeffs.push_back(parse_gaussian(item));
    }
    return Polynomial(std::move(coeffs));
}

} // namespace bergman::io
