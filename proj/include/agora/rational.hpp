#pragma once

#include "agora/lang.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace agora {

// Exact rational over 64-bit integers, always normalized (gcd 1, positive
// denominator). Intermediates are computed in 128 bits and the normalized
// result must fit back into 64 bits, otherwise overflow_error is thrown.
//
// Scenario weights and thresholds are parsed from decimal strings into this
// type so that ensemble support values and every threshold comparison are
// decided exactly, never by floating tolerance.
class rational {
public:
    constexpr rational() noexcept : num_(0), den_(1) {}
    rational(std::int64_t numerator, std::int64_t denominator = 1);

    // "0.7" -> 7/10, "1" -> 1/1, ".25" -> 1/4. No exponents, no hex.
    static rational parse_decimal(std::string_view text);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }

    rational operator-() const;
    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }

    friend rational operator+(const rational& a, const rational& b);
    friend rational operator-(const rational& a, const rational& b);
    friend rational operator*(const rational& a, const rational& b);
    friend rational operator/(const rational& a, const rational& b);

    friend bool operator==(const rational& a, const rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) noexcept;

    double to_double() const noexcept;

    // "10/17"; integers render without the denominator.
    std::string to_string() const;

    // Decimal rendering rounded to at most max_fraction_digits, with trailing
    // zeros trimmed: 10/17 -> "0.588235", 7/10 -> "0.7", 1/1 -> "1".
    std::string to_decimal_string(int max_fraction_digits = 6) const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

inline rational min(const rational& a, const rational& b) { return a < b ? a : b; }
inline rational max(const rational& a, const rational& b) { return a < b ? b : a; }

} // namespace agora
