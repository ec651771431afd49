#include "meanprop/scalar.hpp"

#include "meanprop/error.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace meanprop {

namespace detail {

mpz_class pow10(unsigned n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
    return r;
}

mpz_class round_half_even_shift(const mpz_class& value, unsigned drop, bool inexact) {
    if (drop == 0) return value;
    const mpz_class unit = pow10(drop);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), unit.get_mpz_t());
    const mpz_class twice = 2 * r;
    const int c = cmp(twice, unit);
    if (c > 0 || (c == 0 && (inexact || mpz_odd_p(q.get_mpz_t()) != 0))) ++q;
    return q;
}

}  // namespace detail

namespace {

// Half-even division of integers, den > 0 after sign normalisation.
mpz_class divide_half_even(mpz_class num, mpz_class den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const bool negative = num < 0;
    if (negative) num = -num;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int c = cmp(mpz_class(2 * r), den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) ++q;
    return negative ? mpz_class(-q) : q;
}

void check_digits(int digits) {
    if (digits < 0) throw DomainError("negative digit count");
}

}  // namespace

Decimal::Decimal(mpz_class unscaled, int scale) : unscaled_(std::move(unscaled)), scale_(scale) {
    check_digits(scale);
}

Decimal Decimal::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    auto digits_only = [](std::string_view p) {
        return std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    };
    if (!digits_only(int_part) || !digits_only(frac_part))
        throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    std::string all(int_part);
    all += frac_part;
    if (all.empty()) all = "0";
    mpz_class u(all, 10);
    if (negative) u = -u;
    return Decimal(std::move(u), static_cast<int>(frac_part.size()));
}

Decimal Decimal::parse_grouped(std::string_view text, std::optional<int> fractional_digits) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (!s.empty() && s.back() == '.') s.remove_suffix(1);

    std::vector<std::string> groups;
    std::string current;
    for (char c : s) {
        if (c == ' ') {
            if (!current.empty()) groups.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) groups.push_back(std::move(current));
    if (groups.empty()) throw std::invalid_argument("empty grouped decimal");

    bool negative = false;
    if (groups.front().front() == '-') {
        negative = true;
        groups.front().erase(0, 1);
        if (groups.front().empty()) groups.erase(groups.begin());
        if (groups.empty()) throw std::invalid_argument("bad grouped decimal: '" + std::string(text) + "'");
    }
    for (const auto& g : groups) {
        if (!std::all_of(g.begin(), g.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }))
            throw std::invalid_argument("bad grouped decimal: '" + std::string(text) + "'");
    }

    std::string int_part;
    std::string frac_part;
    if (fractional_digits) {
        std::string all;
        for (const auto& g : groups) all += g;
        const int frac = *fractional_digits;
        if (frac < 0 || frac > static_cast<int>(all.size()))
            throw std::invalid_argument("fractional digit count does not fit '" + std::string(text) + "'");
        int_part = all.substr(0, all.size() - static_cast<std::size_t>(frac));
        frac_part = all.substr(all.size() - static_cast<std::size_t>(frac));
    } else {
        std::size_t first_frac = 0;
        const bool leading_is_integer = groups.front().size() != 5;
        if (leading_is_integer) {
            int_part = groups.front();
            first_frac = 1;
        }
        for (std::size_t i = first_frac; i < groups.size(); ++i) {
            const bool last = i + 1 == groups.size();
            if (groups[i].size() > 5 || (!last && groups[i].size() != 5))
                throw std::invalid_argument("fractional groups must have five digits: '" + std::string(text) + "'");
            frac_part += groups[i];
        }
    }
    std::string all = int_part + frac_part;
    if (all.empty()) all = "0";
    mpz_class u(all, 10);
    if (negative) u = -u;
    return Decimal(std::move(u), static_cast<int>(frac_part.size()));
}

Decimal Decimal::from_rational(const Rational& r, int digits) {
    check_digits(digits);
    mpz_class num = r.numerator() * detail::pow10(static_cast<unsigned>(digits));
    return Decimal(divide_half_even(std::move(num), r.denominator()), digits);
}

Rational Decimal::to_rational() const {
    return Rational(unscaled_, detail::pow10(static_cast<unsigned>(scale_)));
}

Decimal Decimal::widened(int scale) const {
    if (scale < scale_) throw std::invalid_argument("widened() cannot drop digits");
    return Decimal(unscaled_ * detail::pow10(static_cast<unsigned>(scale - scale_)), scale);
}

Decimal operator+(const Decimal& a, const Decimal& b) {
    const int s = std::max(a.scale_, b.scale_);
    return Decimal(a.widened(s).unscaled_ + b.widened(s).unscaled_, s);
}

Decimal operator-(const Decimal& a, const Decimal& b) {
    const int s = std::max(a.scale_, b.scale_);
    return Decimal(a.widened(s).unscaled_ - b.widened(s).unscaled_, s);
}

Decimal operator*(const Decimal& a, const Decimal& b) {
    return Decimal(a.unscaled_ * b.unscaled_, a.scale_ + b.scale_);
}

bool operator==(const Decimal& a, const Decimal& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    const int s = std::max(a.scale_, b.scale_);
    const int c = cmp(a.widened(s).unscaled_, b.widened(s).unscaled_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Decimal::to_string() const {
    mpz_class mag = abs(unscaled_);
    std::string digits = mag.get_str();
    if (static_cast<int>(digits.size()) <= scale_)
        digits.insert(0, static_cast<std::size_t>(scale_ - static_cast<int>(digits.size()) + 1), '0');
    std::string out = sign() < 0 ? "-" : "";
    const std::size_t int_len = digits.size() - static_cast<std::size_t>(scale_);
    out += digits.substr(0, int_len);
    if (scale_ > 0) {
        out += '.';
        out += digits.substr(int_len);
    }
    return out;
}

Decimal abs(const Decimal& a) { return a.sign() < 0 ? -a : a; }

Decimal mul_exact(const Decimal& a, const Decimal& b) { return a * b; }

Decimal round_to(const Decimal& a, int digits) {
    check_digits(digits);
    if (digits >= a.scale()) return a.widened(digits);
    const unsigned drop = static_cast<unsigned>(a.scale() - digits);
    const bool negative = a.sign() < 0;
    mpz_class r = detail::round_half_even_shift(abs(a.unscaled()), drop, false);
    return Decimal(negative ? mpz_class(-r) : r, digits);
}

Decimal truncate_to(const Decimal& a, int digits) {
    check_digits(digits);
    if (digits >= a.scale()) return a.widened(digits);
    mpz_class q;
    const mpz_class unit = detail::pow10(static_cast<unsigned>(a.scale() - digits));
    mpz_tdiv_q(q.get_mpz_t(), a.unscaled().get_mpz_t(), unit.get_mpz_t());
    return Decimal(q, digits);
}

Decimal divide(const Decimal& a, const Decimal& b, int digits) {
    check_digits(digits);
    if (b.is_zero()) throw DomainError("division by zero");
    mpz_class num = a.unscaled() * detail::pow10(static_cast<unsigned>(b.scale() + digits));
    mpz_class den = b.unscaled() * detail::pow10(static_cast<unsigned>(a.scale()));
    return Decimal(divide_half_even(std::move(num), std::move(den)), digits);
}

Decimal ulp(int digits) { return Decimal(mpz_class(1), digits); }

std::string format_grouped(const Decimal& a) {
    const std::string plain = abs(a).to_string();
    const auto dot = plain.find('.');
    std::string out = a.sign() < 0 ? "-" : "";
    if (dot == std::string::npos) return out + plain;

    const std::string int_part = plain.substr(0, dot);
    const std::string frac = plain.substr(dot + 1);
    bool first = true;
    if (int_part != "0") {
        out += int_part;
        first = false;
    }
    for (std::size_t i = 0; i < frac.size(); i += 5) {
        if (!first) out += ' ';
        out += frac.substr(i, 5);
        first = false;
    }
    return out;
}

}  // namespace meanprop
