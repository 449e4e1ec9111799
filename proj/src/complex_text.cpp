// Copyright 2026 The Teleportrix Authors
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

#include "teleportrix/complex_text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "teleportrix/errors.hpp"

namespace teleportrix {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
bool is_decimal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        ++i;
    }
    std::size_t mantissa_digits = 0;
    while (i < s.size() && is_digit(s[i])) {
        ++i;
        ++mantissa_digits;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) {
            ++i;
            ++mantissa_digits;
        }
    }
    if (mantissa_digits == 0) {
        return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            ++i;
        }
        std::size_t exp_digits = 0;
        while (i < s.size() && is_digit(s[i])) {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) {
            return false;
        }
    }
    return i == s.size();
}

double parse_real(std::string_view token, std::string_view whole) {
    if (!is_decimal(token)) {
        throw ParseError("malformed number '" + std::string(token) + "' in '" + std::string(whole) + "'");
    }
    // from_chars rejects a leading '+'.
    std::string_view digits = token;
    if (digits.front() == '+') {
        digits.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range || !std::isfinite(value)) {
        throw ParseError("number '" + std::string(token) + "' is out of range");
    }
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("malformed number '" + std::string(token) + "' in '" + std::string(whole) + "'");
    }
    return value;
}

// Imaginary coefficient text: empty or a lone sign means unit magnitude.
double parse_imag(std::string_view token, std::string_view whole) {
    if (token.empty() || token == "+") {
        return 1.0;
    }
    if (token == "-") {
        return -1.0;
    }
    return parse_real(token, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty complex number");
    }
    if (text.back() != 'i') {
        return {parse_real(text, text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that does not belong to an exponent or lead the text.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_imag(body, text)};
    }
    return {parse_real(body.substr(0, split), text), parse_imag(body.substr(split), text)};
}

namespace {

std::string shortest(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

std::string format_complex(Complex z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) {
        return shortest(re);
    }
    std::string out = re == 0.0 ? std::string() : shortest(re);
    const std::string imag = shortest(im);
    if (!out.empty() && im > 0.0) {
        out += '+';
    }
    return out + imag + "i";
}

}  // namespace teleportrix
