// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qadvice/rational.h"

#include <stdexcept>

namespace qadvice {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("Not a rational number: '" + std::string(whole) + "'");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("Not a rational number: '" + std::string(whole) + "'");
        }
    }
    return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    Rational result;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string_view::npos) {
        BigInt num = parse_integer(body.substr(0, slash), text);
        BigInt den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) {
            throw std::invalid_argument("Zero denominator in '" + std::string(text) + "'");
        }
        result = Rational(num, den);
    } else if (dot != std::string_view::npos) {
        auto int_part = body.substr(0, dot);
        auto frac_part = body.substr(dot + 1);
        BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
        BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
        BigInt scale = 1;
        for (size_t i = 0; i < frac_part.size(); i++) {
            scale *= 10;
        }
        result = Rational(whole * scale + frac, scale);
    } else {
        result = Rational(parse_integer(body, text));
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational &r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

BigInt ceil(const Rational &r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (q * den != num && num > 0) {
        q += 1;
    }
    return q;
}

Rational fractional_part(const Rational &r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt rem = num % den;  // sign follows num
    if (rem < 0) {
        rem += den;
    }
    return Rational(rem, den);
}

}  // namespace qadvice
