#include "agora/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace agora {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* context) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error(std::string("rational overflow in ") + context);
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

rational make_normalized(i128 num, i128 den, const char* context) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return rational();
    i128 g = gcd128(num, den);
    return rational(narrow(num / g, context), narrow(den / g, context));
}

} // namespace

rational::rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    i128 num = numerator;
    i128 den = denominator;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    i128 g = gcd128(num, den);
    num_ = narrow(num / g, "construction");
    den_ = narrow(den / g, "construction");
}

rational rational::parse_decimal(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    i128 value = 0;
    i128 scale = 1;
    bool any_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point)
                throw parse_error("second '.' at position " + std::to_string(i) +
                                      " in decimal '" + std::string(text) + "'",
                                  i);
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw parse_error(std::string("invalid character '") + c + "' at position " +
                                  std::to_string(i) + " in decimal '" + std::string(text) + "'",
                              i);
        value = value * 10 + (c - '0');
        if (seen_point) scale *= 10;
        any_digit = true;
        if (value > (i128(1) << 100))
            throw std::overflow_error("decimal literal too large: " + std::string(text));
    }
    if (!any_digit)
        throw parse_error("no digits in decimal '" + std::string(text) + "'", i);
    if (negative) value = -value;
    return make_normalized(value, scale, "parse_decimal");
}

rational rational::operator-() const {
    rational r;
    r.num_ = narrow(-i128(num_), "negation");
    r.den_ = den_;
    return r;
}

rational operator+(const rational& a, const rational& b) {
    return make_normalized(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                           i128(a.den_) * b.den_, "addition");
}

rational operator-(const rational& a, const rational& b) {
    return make_normalized(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                           i128(a.den_) * b.den_, "subtraction");
}

rational operator*(const rational& a, const rational& b) {
    return make_normalized(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "multiplication");
}

rational operator/(const rational& a, const rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return make_normalized(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "division");
}

std::strong_ordering operator<=>(const rational& a, const rational& b) noexcept {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double rational::to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string rational::to_decimal_string(int max_fraction_digits) const {
    bool negative = num_ < 0;
    i128 num = negative ? -i128(num_) : i128(num_);
    i128 integral = num / den_;
    i128 rem = num % den_;

    std::string frac;
    for (int d = 0; d < max_fraction_digits && rem != 0; ++d) {
        rem *= 10;
        frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den_)));
        rem %= den_;
    }
    // Round half up on the first dropped digit, carrying into the integral part.
    if (rem != 0 && rem * 2 >= i128(den_)) {
        int pos = static_cast<int>(frac.size()) - 1;
        while (pos >= 0) {
            if (frac[pos] != '9') {
                ++frac[pos];
                break;
            }
            frac[pos] = '0';
            --pos;
        }
        if (pos < 0) ++integral;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();

    std::string out;
    if (negative && (integral != 0 || !frac.empty())) out.push_back('-');
    std::string digits;
    if (integral == 0) {
        digits = "0";
    } else {
        while (integral != 0) {
            digits.push_back(static_cast<char>('0' + static_cast<int>(integral % 10)));
            integral /= 10;
        }
        std::reverse(digits.begin(), digits.end());
    }
    out += digits;
    if (!frac.empty()) {
        out.push_back('.');
        out += frac;
    }
    return out;
}

} // namespace agora
