#include "meanprop/delian.hpp"

#include "meanprop/error.hpp"

#include <stdexcept>

namespace meanprop::delian {

using euclid::Point2;

std::string_view to_string(Method m) { return m == Method::instrument ? "instrument" : "compass"; }

Method parse_method(std::string_view name) {
    if (name == "instrument") return Method::instrument;
    if (name == "compass") return Method::compass;
    throw DomainError("unknown method '" + std::string(name) + "'");
}

namespace {

void check_pair(const Decimal& a, const Decimal& b) {
    if (a.sign() <= 0) throw DomainError("the smaller line must be positive");
    if (a > b) throw DomainError("the given AF must not exceed AC");
}

MeansResult degenerate(const Decimal& a, const PrecisionContext& ctx, Method m) {
    MeansResult r;
    r.m1 = r.m2 = round_to(a, ctx.output_digits);
    r.m1_work = r.m2_work = round_to(a, ctx.work_digits);
    r.t = Decimal(mpz_class(0), ctx.work_digits);
    r.residual = Decimal(mpz_class(0), ctx.work_digits);
    r.method = m;
    return r;
}

Rational cos_dac(const Rational& t) { return euclid::circle_point(t).x; }

// Sign of a/k - b k^2; positive at k = 0, where the cursor runs off to infinity.
int instrument_sign(const Rational& a, const Rational& b, const Rational& t) {
    const Rational k = cos_dac(t);
    if (k.sign() <= 0) return 1;
    return (a - b * k * k * k).sign();
}

// The compass sets D = O + (b/2)(circle point of s), O the midpoint of AC.
// Radius b/2: the text gives the aperture once as OC and once as AO.
Point2 compass_d(const Rational& b, const Rational& s) {
    const Rational r = b / Rational(2);
    const Point2 u = euclid::circle_point(s);
    return {r + r * u.x, r * u.y};
}

// Sign of a |AD| / D.x - D.x: the cursor crossing against the foot E.
int compass_sign(const Rational& a, const Rational& b, const Rational& s) {
    const Point2 d = compass_d(b, s);
    const Rational x2 = d.x * d.x;
    return (a * a * euclid::norm_sq(d) - x2 * x2).sign();
}

// Integer bisection of a sign function increasing in its argument, which is
// scaled by 10^w. Returns the final unit bracket (lo, hi) with sign(lo) < 0
// <= sign(hi).
template <typename Sign>
std::pair<mpz_class, mpz_class> bisect(mpz_class lo, mpz_class hi, Sign&& sign, int& iterations) {
    if (sign(lo) >= 0 || sign(hi) < 0) throw std::logic_error("bisection bracket lost its sign change");
    while (hi - lo > 1) {
        const mpz_class mid = (lo + hi) / 2;
        ++iterations;
        if (sign(mid) < 0) lo = mid;
        else hi = mid;
    }
    if (sign(lo) >= 0 || sign(hi) < 0) throw std::logic_error("bisection bracket lost its sign change");
    return {lo, hi};
}

}  // namespace

InstrumentState instrument_state(const Rational& a, const Rational& b, const Rational& t) {
    if (t.sign() <= 0 || t >= Rational(1)) throw DegeneratePositionError("D must lie strictly inside the arc");
    InstrumentState s;
    s.a = a;
    s.b = b;
    s.t = t;
    const Point2 dir = euclid::circle_point(t);
    const Point2 origin{Rational(0), Rational(0)};
    const Point2 c{b, Rational(0)};
    s.d_point = (b * dir.x) * dir;
    s.e_foot = euclid::foot(s.d_point, origin, c);
    s.f_foot = euclid::foot(s.e_foot, origin, s.d_point);
    const Rational k = dir.x;
    s.af_current = b * k * k * k;
    s.cursor_on_ac = a / k;
    s.residual = s.cursor_on_ac - s.e_foot.x;
    return s;
}

MeansResult two_means_instrument(const Decimal& a, const Decimal& b, const PrecisionContext& ctx) {
    ctx.validate();
    check_pair(a, b);
    if (a == b) return degenerate(a, ctx, Method::instrument);

    const Rational aq = a.to_rational();
    const Rational bq = b.to_rational();
    const int w = ctx.work_digits;
    const mpz_class unit = detail::pow10(static_cast<unsigned>(w));
    auto at = [&](const mpz_class& n) { return Rational(n, unit); };

    MeansResult r;
    r.method = Method::instrument;
    const auto [lo, hi] = bisect(
        mpz_class(0), unit, [&](const mpz_class& n) { return instrument_sign(aq, bq, at(n)); }, r.iterations);

    // Keep whichever end of the last bracket leaves the smaller gap on AC.
    const mpz_class& pick =
        hi == unit ? lo
                   : (abs(instrument_state(aq, bq, at(lo)).residual) <= abs(instrument_state(aq, bq, at(hi)).residual)
                          ? lo
                          : hi);
    const InstrumentState s = instrument_state(aq, bq, at(pick));
    const Rational ae = s.e_foot.x;
    const Rational ad = bq * cos_dac(s.t);

    r.t = Decimal(pick, w);
    r.m1_work = Decimal::from_rational(ae, w);
    r.m2_work = Decimal::from_rational(ad, w);
    r.m1 = Decimal::from_rational(ae, ctx.output_digits);
    r.m2 = Decimal::from_rational(ad, ctx.output_digits);
    r.residual = Decimal::from_rational(s.residual, w + ctx.guard_digits);
    return r;
}

MeansResult two_means_compass(const Decimal& a, const Decimal& b, const PrecisionContext& ctx) {
    ctx.validate();
    check_pair(a, b);
    if (a == b) return degenerate(a, ctx, Method::compass);

    const Rational aq = a.to_rational();
    const Rational bq = b.to_rational();
    const int w = ctx.work_digits;
    const mpz_class unit = detail::pow10(static_cast<unsigned>(w));
    auto at = [&](const mpz_class& n) { return Rational(n, unit); };
    auto sign = [&](const mpz_class& n) { return compass_sign(aq, bq, at(n)); };

    MeansResult r;
    r.method = Method::compass;
    // The leg sweeps from C (s = 0) towards A (s -> infinity).
    mpz_class hi = unit;
    while (sign(hi) < 0) {
        hi *= 2;
        ++r.iterations;
    }
    // The upper end: one working unit in s moves t by at most half a unit.
    const mpz_class pick = bisect(hi == unit ? mpz_class(0) : hi / 2, hi, sign, r.iterations).second;
    const Rational s = at(pick);

    // AE = D.x = b / (1 + s^2) and AD^2 = AC.AE.
    const Point2 d = compass_d(bq, s);
    const Rational ae = d.x;
    const int fine = 2 * w + ctx.guard_digits;
    const Decimal ad_sq = Decimal::from_rational(bq * ae, fine);

    r.m1_work = Decimal::from_rational(ae, w);
    r.m2_work = sqrt(ad_sq, w);
    r.m1 = Decimal::from_rational(ae, ctx.output_digits);
    r.m2 = sqrt(ad_sq, ctx.output_digits);

    // t = tan(DAC/2) from s = tan(DOC/2), with DOC = 2 DAC: t = s / (1 + sqrt(1 + s^2)).
    const Decimal sd(pick, w);
    const Decimal root = sqrt(Decimal(1) + sd * sd, w + ctx.guard_digits);
    r.t = divide(sd, Decimal(1) + root, w);

    const Decimal dx = Decimal::from_rational(ae, w + ctx.guard_digits);
    const Decimal ad = sqrt(ad_sq, w + ctx.guard_digits);
    r.residual = divide(a * ad, dx, w + ctx.guard_digits) - dx;
    return r;
}

MeansResult two_means(const Decimal& a, const Decimal& b, const PrecisionContext& ctx, Method m) {
    return m == Method::instrument ? two_means_instrument(a, b, ctx) : two_means_compass(a, b, ctx);
}

Decimal duplicate_cube(const Decimal& edge, const PrecisionContext& ctx) {
    if (edge.sign() <= 0) throw DomainError("cube edge must be positive");
    return two_means_instrument(edge, Decimal(2) * edge, ctx).m1;
}

}  // namespace meanprop::delian
