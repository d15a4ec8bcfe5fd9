#pragma once

// Wire formats.
//
// JSON:
//   rational          [num, den]
//   Gaussian rational [re_num, re_den, im_num, im_den]
//   series            {"terms": [[exponent, <gaussian>], ...], "degree_bound": D | null}
//   pi-multiple       {"pi_coeff": [num, den]}  plus "pi_coeff_im": [num, den]
//                     when the imaginary part is nonzero
//
// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings. Decoders accept both.
//
// Text (command line):
//   series            "c@e,c@e,..." where c is a Gaussian rational such as
//                     "3", "-1/2", "1/2+3/4i", "2i"
//   polynomial        "a0,a1,...,an"

#include <string_view>

#include "json.hpp"

#include "bergman/fta.hpp"
#include "bergman/rational.hpp"
#include "bergman/series.hpp"

namespace bergman::io {

using Json = nlohmann::json;

Json encode_integer(const Integer& n);
Json encode(const Rational& q);
Json encode(const GaussianRational& z);
Json encode(const SparseSeries& f);
Json encode(const PiRational& v);

/// All decoders throw std::invalid_argument on malformed input.
Integer decode_integer(const Json& j);
Rational decode_rational(const Json& j);
GaussianRational decode_gaussian(const Json& j);
SparseSeries decode_series(const Json& j);
PiRational decode_pi(const Json& j);

/// Repeated exponents are summed.
SparseSeries parse_series(std::string_view text);
Polynomial parse_polynomial(std::string_view text);

} // namespace bergman::io
