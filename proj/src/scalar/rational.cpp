#include "meanprop/scalar.hpp"

#include "meanprop/error.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace meanprop {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }
    return Decimal::parse(text).to_rational();
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational square(const Rational& r) { return r * r; }

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    const auto num = detail::integer_root(r.numerator(), 2);
    const auto den = detail::integer_root(r.denominator(), 2);
    if (!num.exact || !den.exact) return std::nullopt;
    return Rational(num.floor, den.floor);
}

}  // namespace meanprop
