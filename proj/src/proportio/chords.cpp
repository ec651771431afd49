#include "meanprop/error.hpp"
#include "meanprop/proportio.hpp"

#include <algorithm>

namespace meanprop::proportio {

namespace {

// Sign of (d - x)^3 - d^2 x with both arguments scaled by the same power of ten.
int cubic_sign(const mpz_class& d, const mpz_class& x) {
    const mpz_class r = d - x;
    const mpz_class v = r * r * r - d * d * x;
    return sgn(v);
}

Rational cubic(const Rational& d, const Rational& x) {
    const Rational r = d - x;
    return r * r * r - d * d * x;
}

Rational cubic_slope(const Rational& d, const Rational& x) {
    const Rational r = d - x;
    return Rational(-3) * r * r - d * d;
}

}  // namespace

ChordSolution solve_continued_chords(const Decimal& d, const PrecisionContext& ctx) {
    ctx.validate();
    if (d.sign() <= 0) throw DomainError("diameter must be positive");

    const int w = std::max(ctx.work_digits, d.scale());
    const Decimal dw = d.widened(w);
    const mpz_class& big_d = dw.unscaled();

    // f(0) = d^3 > 0 and f(d) = -d^3 < 0; f is strictly decreasing between.
    mpz_class lo = 0;
    mpz_class hi = big_d;
    ChordSolution out;
    while (hi - lo > 1) {
        const mpz_class mid = (lo + hi) / 2;
        const int s = cubic_sign(big_d, mid);
        ++out.iterations;
        if (s > 0) {
            lo = mid;
        } else if (s < 0) {
            hi = mid;
        } else {
            lo = hi = mid;
        }
    }

    // Two Newton steps from the bracket midpoint, kept only while inside it.
    const mpz_class scale = detail::pow10(static_cast<unsigned>(w));
    const Rational lo_q(lo, scale);
    const Rational hi_q(hi, scale);
    const Rational dq = d.to_rational();
    Rational x = (lo_q + hi_q) / Rational(2);
    for (int step = 0; step < 2 && lo != hi; ++step) {
        const Rational next = x - cubic(dq, x) / cubic_slope(dq, x);
        if (next < lo_q || next > hi_q) break;
        x = next;
    }

    const Decimal xw = Decimal::from_rational(x, w);
    out.work.ad = dw;
    out.work.ab = xw;
    out.work.bd = dw - xw;
    out.work.bc = sqrt(mul_exact(out.work.ab, out.work.bd), w);
    const Decimal rest = dw - xw;
    out.residual = rest * rest * rest - dw * dw * xw;

    const int p = ctx.output_digits;
    out.reported.ad = round_to(d, p);
    out.reported.ab = Decimal::from_rational(x, p);
    out.reported.bd = out.reported.ad - out.reported.ab;
    out.reported.bc = sqrt(mul_exact(out.reported.ab, out.reported.bd), p);
    return out;
}

bool verify_continued_proportion(const std::vector<Decimal>& terms, const Decimal& tol) {
    if (terms.size() < 3) throw PreconditionError("a continued proportion needs at least three terms");
    for (std::size_t i = 0; i + 2 < terms.size(); ++i) {
        if (abs(terms[i] * terms[i + 2] - terms[i + 1] * terms[i + 1]) > tol) return false;
    }
    if (terms.size() == 4 && abs(terms[0] * terms[3] - terms[1] * terms[2]) > tol) return false;
    return true;
}

}  // namespace meanprop::proportio
