#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rationals and base-10 fixed-point numbers.
 *
 * Rational is an always-reduced fraction. Decimal is a signed integer
 * mantissa with a count of fractional digits, so that any printed digit
 * string is represented exactly. Addition, subtraction and multiplication
 * of Decimals are exact; division and roots round half-even to a requested
 * number of fractional digits.
 */

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <concepts>

namespace meanprop {

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) : q_(static_cast<long>(n)) {}

    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    // Accepts "3", "-3/4" and "1.25".
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& get() const { return q_; }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

private:
    mpq_class q_;
};

Rational abs(const Rational& r);
Rational square(const Rational& r);

// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& r);

class Decimal;

/// Working/reporting precision for iterative operations.
///
/// Iterations run at work_digits fractional digits; results are reported at
/// output_digits. guard_digits is the margin between the two.
struct PrecisionContext {
    int work_digits = 30;
    int output_digits = 20;
    int guard_digits = 10;

    // output + guard; throws DomainError if guard < 5 or output < 0.
    static PrecisionContext for_output(int output_digits, int guard_digits = 10);

    void validate() const;
};

class Decimal {
public:
    Decimal() = default;

    template <std::integral T>
    Decimal(T n) : unscaled_(static_cast<long>(n)) {}

    // value = unscaled * 10^-scale
    Decimal(mpz_class unscaled, int scale);

    // Plain notation: "2", "-0.5", "1.3646556077".
    static Decimal parse(std::string_view text);

    // Grouped notation: "2 00000 00000", "63534 43923", "1 36465 56077".
    // A leading group whose length differs from five is the integer part;
    // otherwise every group is fractional. fractional_digits, when given,
    // fixes the split explicitly. A trailing '.' is ignored.
    static Decimal parse_grouped(std::string_view text,
                                 std::optional<int> fractional_digits = std::nullopt);

    // Half-even rounding of an exact fraction to `digits` fractional digits.
    static Decimal from_rational(const Rational& r, int digits);

    [[nodiscard]] const mpz_class& unscaled() const { return unscaled_; }
    [[nodiscard]] int scale() const { return scale_; }
    [[nodiscard]] int sign() const { return sgn(unscaled_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }

    [[nodiscard]] Rational to_rational() const;

    // Same value at a larger scale. Throws std::invalid_argument if digits
    // would be dropped; use round_to for that.
    [[nodiscard]] Decimal widened(int scale) const;

    Decimal operator-() const { return Decimal(mpz_class(-unscaled_), scale_); }
    friend Decimal operator+(const Decimal& a, const Decimal& b);
    friend Decimal operator-(const Decimal& a, const Decimal& b);
    friend Decimal operator*(const Decimal& a, const Decimal& b);

    // Value comparison: 2.0 == 2.00.
    friend bool operator==(const Decimal& a, const Decimal& b);
    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

    // Plain notation with exactly scale() fractional digits.
    [[nodiscard]] std::string to_string() const;

private:
    mpz_class unscaled_;
    int scale_ = 0;
};

Decimal abs(const Decimal& a);

// Exact product; result scale is a.scale() + b.scale().
Decimal mul_exact(const Decimal& a, const Decimal& b);

// Half-even rounding to `digits` fractional digits (widens when digits > scale).
Decimal round_to(const Decimal& a, int digits);

// Truncation toward zero to `digits` fractional digits.
Decimal truncate_to(const Decimal& a, int digits);

// a / b rounded half-even to `digits` fractional digits.
Decimal divide(const Decimal& a, const Decimal& b, int digits);

// Correctly rounded (half-even) roots at `digits` fractional digits.
Decimal sqrt(const Decimal& a, int digits);
Decimal cbrt(const Decimal& a, int digits);

// Roots under a context, reported at ctx.output_digits.
Decimal sqrt(const Decimal& a, const PrecisionContext& ctx);
Decimal cbrt(const Decimal& a, const PrecisionContext& ctx);

// Integer part, then fractional digits in groups of five separated by single
// spaces. A zero integer part is elided when there are fractional digits.
std::string format_grouped(const Decimal& a);

// 10^-digits as a Decimal.
Decimal ulp(int digits);

namespace detail {

struct IntegerRoot {
    mpz_class floor;  // largest r with r^k <= m
    bool exact;       // r^k == m
};

// Newton iteration from above, falling back to bisection whenever a step
// leaves the bracket lo^k <= m < hi^k. Requires m >= 0, k >= 1.
IntegerRoot integer_root(const mpz_class& m, unsigned k);

// Half-even rounding of a non-negative integer scaled down by 10^drop.
// `inexact` marks that the true value exceeds `value` by less than one unit.
mpz_class round_half_even_shift(const mpz_class& value, unsigned drop, bool inexact);

mpz_class pow10(unsigned n);

}  // namespace detail

}  // namespace meanprop
