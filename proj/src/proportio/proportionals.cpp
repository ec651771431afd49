#include "meanprop/error.hpp"
#include "meanprop/proportio.hpp"

#include <stdexcept>

namespace meanprop::proportio {

using euclid::Point2;
using euclid::Point3;

namespace {

Rational length(const Rational& sq) {
    auto r = exact_sqrt(sq);
    if (!r) throw std::logic_error("construction produced an irrational length: " + sq.to_string());
    return *r;
}

void check_inputs(const Rational& ac, const Rational& t) {
    if (ac.sign() <= 0) throw DomainError("diameter AC must be positive");
    if (t.is_zero()) throw DegeneratePositionError("D coincides with C");
    if (t == Rational(1)) throw DegeneratePositionError("D coincides with A");
    if (t.sign() < 0 || t > Rational(1)) throw DomainError("arc parameter must lie in (0, 1)");
}

Point3 lift(const Point2& p) { return {p.x, p.y, Rational(0)}; }

bool equal_sides(const std::array<Point2, 3>& p, const std::array<Point2, 3>& q) {
    using euclid::dist_sq;
    return dist_sq(p[0], p[1]) == dist_sq(q[0], q[1]) && dist_sq(p[1], p[2]) == dist_sq(q[1], q[2]) &&
           dist_sq(p[2], p[0]) == dist_sq(q[2], q[0]);
}

ProportionalsQuad rounded(const Rational& af, const Rational& ae, const Rational& ad, const Rational& ac, int digits) {
    return {Decimal::from_rational(af, digits), Decimal::from_rational(ae, digits), Decimal::from_rational(ad, digits),
            Decimal::from_rational(ac, digits)};
}

}  // namespace

ExactPlanar construct_planar(const Rational& ac, const Rational& t) {
    using euclid::dist_sq;
    check_inputs(ac, t);
    ExactPlanar s;
    // A at the origin, AC along x; the direction of AD makes angle DAC with
    // tan(DAC / 2) = t, and AD = AC cos DAC since ADC is right at D.
    const Point2 dir = euclid::circle_point(t);
    s.a = {Rational(0), Rational(0)};
    s.c = {ac, Rational(0)};
    s.d = (ac * dir.x) * dir;
    s.e = euclid::foot(s.d, s.a, s.c);
    s.f = euclid::foot(s.e, s.a, s.d);
    s.g = euclid::reflect(s.e, s.a, s.d);

    s.ac = ac;
    s.ad = length(dist_sq(s.a, s.d));
    s.ae = length(dist_sq(s.a, s.e));
    s.af = length(dist_sq(s.a, s.f));

    s.eg_bisected = euclid::midpoint(s.e, s.g) == s.f && euclid::dot(s.g - s.e, s.d - s.a).is_zero();
    s.congruent_afg = equal_sides({s.a, s.f, s.g}, {s.a, s.f, s.e});
    s.congruent_dfg = equal_sides({s.d, s.f, s.g}, {s.d, s.f, s.e});
    s.right_at_g = euclid::check_clavius_31_3({s.g, s.a, s.d});
    return s;
}

ExactSphere construct_sphere(const Rational& ac, const Rational& t) {
    using euclid::dist_sq;
    const ExactPlanar p = construct_planar(ac, t);
    ExactSphere s;
    s.a = lift(p.a);
    s.c = lift(p.c);
    s.d = lift(p.d);
    s.e = lift(p.e);
    s.f = lift(p.f);
    // G rises from F in the plane through AD upright to the great circle,
    // on the circle with diameter AD: FG^2 = AF.FD = FE^2.
    s.g = s.f + Point3{Rational(0), Rational(0), length(dist_sq(s.f, s.e))};

    s.ac = ac;
    s.ad = length(dist_sq(s.a, s.d));
    s.ag = length(dist_sq(s.a, s.g));
    s.af = length(dist_sq(s.a, s.f));

    const Point3 up{Rational(0), Rational(0), Rational(1)};
    s.plane_normal_dot = euclid::dot(up, euclid::cross(s.d - s.a, s.g - s.a));
    s.fg_normal = euclid::check_4_11(s.g - s.f, s.d - s.a, s.e - s.f);
    const Point3 o{ac / Rational(2), Rational(0), Rational(0)};
    s.g_on_sphere = dist_sq(s.g, o) == square(ac / Rational(2));
    return s;
}

ProportionalsQuad four_proportionals_planar(const Decimal& ac, const Decimal& t, const PrecisionContext& ctx) {
    ctx.validate();
    const ExactPlanar s = construct_planar(ac.to_rational(), t.to_rational());
    return rounded(s.af, s.ae, s.ad, s.ac, ctx.output_digits);
}

ProportionalsQuad four_proportionals_sphere(const Decimal& ac, const Decimal& t, const PrecisionContext& ctx) {
    ctx.validate();
    const ExactSphere s = construct_sphere(ac.to_rational(), t.to_rational());
    if (!s.plane_normal_dot.is_zero() || !s.fg_normal || !s.g_on_sphere)
        throw std::logic_error("sphere construction lost perpendicularity");
    return rounded(s.af, s.ag, s.ad, s.ac, ctx.output_digits);
}

}  // namespace meanprop::proportio
