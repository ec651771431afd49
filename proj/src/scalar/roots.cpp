#include "meanprop/scalar.hpp"

#include "meanprop/error.hpp"

namespace meanprop {

namespace detail {

namespace {

mpz_class ipow(const mpz_class& x, unsigned k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

}  // namespace

IntegerRoot integer_root(const mpz_class& m, unsigned k) {
    if (m < 0) throw DomainError("integer root of a negative number");
    if (k == 0) throw DomainError("zeroth root");
    if (m < 2 || k == 1) return {m, true};

    // lo^k <= m < hi^k throughout.
    const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    mpz_class lo = 1;
    mpz_class hi;
    mpz_ui_pow_ui(hi.get_mpz_t(), 2, (bits + k - 1) / k);
    if (ipow(hi, k) <= m) ++hi;

    while (hi - lo > 1) {
        // Newton step from the upper end of the bracket.
        mpz_class step = ((k - 1) * hi + m / ipow(hi, k - 1)) / k;
        if (step <= lo || step >= hi) step = (lo + hi) / 2;
        if (ipow(step, k) <= m)
            lo = step;
        else
            hi = step;
    }
    return {lo, ipow(lo, k) == m};
}

}  // namespace detail

namespace {

// k-th root of |a| correctly rounded (half-even) at `digits` fractional
// digits; the sign is reapplied by the caller.
Decimal root_magnitude(const Decimal& a, unsigned k, int digits) {
    if (digits < 0) throw DomainError("negative digit count");
    // |a| * 10^(k*digits) as an integer, plus a flag for discarded digits.
    const int shift = static_cast<int>(k) * digits - a.scale();
    mpz_class m = abs(a.unscaled());
    bool inexact = false;
    if (shift >= 0) {
        m *= detail::pow10(static_cast<unsigned>(shift));
    } else {
        mpz_class r;
        const mpz_class unit = detail::pow10(static_cast<unsigned>(-shift));
        mpz_fdiv_qr(m.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), unit.get_mpz_t());
        inexact = r != 0;
    }
    // Two extra digits so the rounding decision sees past the last place.
    const unsigned extra = 2;
    m *= detail::pow10(k * extra);
    const auto root = detail::integer_root(m, k);
    const mpz_class rounded = detail::round_half_even_shift(root.floor, extra, inexact || !root.exact);
    return Decimal(rounded, digits);
}

}  // namespace

Decimal sqrt(const Decimal& a, int digits) {
    if (a.sign() < 0) throw DomainError("square root of a negative number");
    return root_magnitude(a, 2, digits);
}

Decimal cbrt(const Decimal& a, int digits) {
    const Decimal r = root_magnitude(a, 3, digits);
    return a.sign() < 0 ? -r : r;
}

Decimal sqrt(const Decimal& a, const PrecisionContext& ctx) {
    ctx.validate();
    return sqrt(a, ctx.output_digits);
}

Decimal cbrt(const Decimal& a, const PrecisionContext& ctx) {
    ctx.validate();
    return cbrt(a, ctx.output_digits);
}

PrecisionContext PrecisionContext::for_output(int output_digits, int guard_digits) {
    PrecisionContext ctx{output_digits + guard_digits, output_digits, guard_digits};
    ctx.validate();
    return ctx;
}

void PrecisionContext::validate() const {
    if (output_digits < 0) throw DomainError("output digits must be non-negative");
    if (guard_digits < 5) throw DomainError("guard digits must be at least 5");
    if (work_digits < output_digits + guard_digits)
        throw DomainError("work digits must cover output plus guard digits");
}

}  // namespace meanprop
