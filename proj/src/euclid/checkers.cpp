#include "meanprop/euclid.hpp"

#include "meanprop/error.hpp"

#include <stdexcept>

namespace meanprop::euclid {

namespace {

void require_nondegenerate(const Triangle& t) {
    if (signed_area2(t.a, t.b, t.c).is_zero()) throw PreconditionError("degenerate triangle");
}

void require_angle(const Triangle& t, AngleClass expected, const char* what) {
    require_nondegenerate(t);
    if (angle_at_a(t) != expected) throw PreconditionError(what);
}

// Product of the lengths of two collinear segments sharing a direction
// (or opposite directions): |u| |v| = |u . v|.
Rational collinear_length_product(const Point2& u, const Point2& v) {
    if (!cross(u, v).is_zero()) throw std::logic_error("segments are not collinear");
    return abs(dot(u, v));
}

Rational polygon_area(std::initializer_list<Point2> pts) {
    Rational twice;
    const Point2* prev = std::data(pts) + pts.size() - 1;
    for (const Point2& p : pts) {
        twice += cross(*prev, p);
        prev = &p;
    }
    return abs(twice) / Rational(2);
}

// Rectangle on segment p->q with the far side at aspect * |pq|, erected on
// the side opposite to `away`.
Rational rectangle_on_side(const Point2& p, const Point2& q, const Point2& away, const Rational& aspect) {
    Point2 normal = aspect * rotate_quarter(q - p);
    if (dot(normal, away - p).sign() > 0) normal = Rational(-1) * normal;
    return polygon_area({p, q, q + normal, p + normal});
}

Rational det3(const Point3& a, const Point3& b, const Point3& c) { return dot(a, cross(b, c)); }

Rational tetra_volume(const Point3& p0, const Point3& p1, const Point3& p2, const Point3& p3) {
    return abs(det3(p1 - p0, p2 - p0, p3 - p0)) / Rational(6);
}

bool same_points(const Parallelogram& p, const Point2& u, const Point2& v) {
    return (p.from == u && p.to == v) || (p.from == v && p.to == u);
}

void require_outward(const Parallelogram& p, const Point2& opposite_vertex) {
    const int side_of_vertex = cross(p.to - p.from, opposite_vertex - p.from).sign();
    const int side_of_offset = cross(p.to - p.from, p.offset).sign();
    if (side_of_offset == 0 || side_of_offset == side_of_vertex)
        throw PreconditionError("parallelogram is not erected outward on its side");
}

}  // namespace

Rational check_47_1(const Triangle& t) {
    require_angle(t, AngleClass::right, "47.1 needs a right angle at the designated vertex");
    return dist_sq(t.b, t.c) - (dist_sq(t.a, t.b) + dist_sq(t.a, t.c));
}

Rational check_12_2(const Triangle& t) {
    require_angle(t, AngleClass::obtuse, "12.2 needs an obtuse angle at the designated vertex");
    const Point2 h = foot(t.c, t.a, t.b);
    // The perpendicular falls outside, beyond a.
    if (dot(h - t.a, t.b - t.a).sign() >= 0) throw std::logic_error("12.2 foot not outside the side");
    const Rational rectangle = collinear_length_product(t.b - t.a, h - t.a);
    return dist_sq(t.b, t.c) - (dist_sq(t.a, t.b) + dist_sq(t.a, t.c) + Rational(2) * rectangle);
}

Rational check_13_2(const Triangle& t) {
    require_angle(t, AngleClass::acute, "13.2 needs an acute angle at the designated vertex");
    const Point2 h = foot(t.c, t.a, t.b);
    const Rational rectangle = collinear_length_product(t.b - t.a, h - t.a);
    return dist_sq(t.b, t.c) - (dist_sq(t.a, t.b) + dist_sq(t.a, t.c) - Rational(2) * rectangle);
}

bool check_3_3(const Point2& center, const std::pair<Point2, Point2>& chord) {
    const auto& [p, q] = chord;
    if (p == q) throw PreconditionError("3.3 chord endpoints coincide");
    if (signed_area2(center, p, q).is_zero()) throw PreconditionError("3.3 chord passes through the centre");
    const Point2 m = midpoint(p, q);
    const bool bisector_is_perpendicular = dot(m - center, q - p).is_zero();
    const bool perpendicular_bisects = foot(center, p, q) == m;
    if (bisector_is_perpendicular != perpendicular_bisects)
        throw std::logic_error("3.3 direct and converse disagree");
    return bisector_is_perpendicular && perpendicular_bisects;
}

Rational check_8_6_corollary(const Triangle& t) {
    require_angle(t, AngleClass::right, "8.6 needs a right angle at the designated vertex");
    const Point2 h = foot(t.a, t.b, t.c);
    const Rational altitude_sq = dist_sq(t.a, h);
    const Rational segments = collinear_length_product(h - t.b, t.c - h);
    return altitude_sq - segments;
}

Rational check_31_6(const Triangle& t, const Rational& aspect) {
    require_angle(t, AngleClass::right, "31.6 needs a right angle at the designated vertex");
    if (aspect.sign() <= 0) throw PreconditionError("31.6 aspect ratio must be positive");
    const Rational on_hyp = rectangle_on_side(t.b, t.c, t.a, aspect);
    const Rational on_ab = rectangle_on_side(t.a, t.b, t.c, aspect);
    const Rational on_ac = rectangle_on_side(t.a, t.c, t.b, aspect);
    return on_hyp - (on_ab + on_ac);
}

bool check_19_7(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    if (b.is_zero() || d.is_zero()) throw PreconditionError("19.7 needs non-zero second and fourth terms");
    const bool by_ratio = a / b == c / d;
    const bool by_product = a * d == b * c;
    if (by_ratio != by_product) throw std::logic_error("19.7 ratio and product routes disagree");
    return by_product;
}

bool check_20_7(const Rational& a, const Rational& b, const Rational& c) {
    if (b.is_zero() || c.is_zero()) throw PreconditionError("20.7 needs non-zero mean and last term");
    const bool by_ratio = a / b == b / c;
    const bool by_product = a * c == b * b;
    if (by_ratio != by_product) throw std::logic_error("20.7 ratio and product routes disagree");
    return by_product;
}

bool check_4_11(const Point3& line_dir, const Point3& u, const Point3& v) {
    const Point3 normal = cross(u, v);
    if (norm_sq(normal).is_zero()) throw PreconditionError("4.11 needs two intersecting, non-parallel lines");
    if (norm_sq(line_dir).is_zero()) throw PreconditionError("4.11 line direction is zero");

    // f(alpha, beta) = line . (alpha u + beta v) is linear; it vanishes for all
    // alpha, beta iff it vanishes on a basis. (1, 1) is evaluated as well and
    // must equal the sum of the basis values.
    const Rational f10 = dot(line_dir, u);
    const Rational f01 = dot(line_dir, v);
    const Rational f11 = dot(line_dir, u + v);
    if (f11 != f10 + f01) throw std::logic_error("4.11 bilinearity violated");
    const bool perpendicular_to_plane = f10.is_zero() && f01.is_zero();

    const bool along_normal = norm_sq(cross(line_dir, normal)).is_zero();
    if (perpendicular_to_plane != along_normal) throw std::logic_error("4.11 routes disagree");
    return perpendicular_to_plane;
}

PrismSplit split_prism(const std::array<Point3, 3>& base, const std::array<Point3, 3>& top) {
    const auto& [a, b, c] = base;
    const auto& [d, e, f] = top;
    PrismSplit out;
    out.prism_volume = abs(det3(b - a, c - a, d - a)) / Rational(2);
    out.tetra_volumes = {tetra_volume(a, b, c, f), tetra_volume(a, b, e, f), tetra_volume(a, d, e, f)};
    for (const Rational& v : out.tetra_volumes) out.residual += abs(out.prism_volume - Rational(3) * v);
    return out;
}

Rational check_7_12(const std::array<Point3, 3>& base, const std::array<Point3, 3>& top) {
    return split_prism(base, top).residual;
}

Rational check_7_12(const std::array<Point3, 3>& base, const Point3& apex_offset) {
    return check_7_12(base, {base[0] + apex_offset, base[1] + apex_offset, base[2] + apex_offset});
}

Rational Parallelogram::area() const { return abs(cross(to - from, offset)); }

Parallelogram pappus_third(const Triangle& t, const Parallelogram& p1, const Parallelogram& p2) {
    require_nondegenerate(t);
    if (!same_points(p1, t.a, t.b)) throw PreconditionError("Pappus: first parallelogram must stand on ab");
    if (!same_points(p2, t.a, t.c)) throw PreconditionError("Pappus: second parallelogram must stand on ac");
    require_outward(p1, t.c);
    require_outward(p2, t.b);

    // Far sides: a + o1 + s (b - a) and a + o2 + u (c - a).
    const Point2 ab = t.b - t.a;
    const Point2 ac = t.c - t.a;
    const Point2 rhs = p2.offset - p1.offset;
    const Rational det = cross(ac, ab);
    const Rational s = cross(ac, rhs) / det;
    const Point2 h = t.a + p1.offset + s * ab;
    return Parallelogram{t.b, t.c, t.a - h};
}

Rational check_pappus(const Triangle& t, const Parallelogram& p1, const Parallelogram& p2) {
    const Parallelogram third = pappus_third(t, p1, p2);
    return p1.area() + p2.area() - third.area();
}

bool check_clavius_31_3(const Triangle& t) {
    require_nondegenerate(t);
    const Point2 m = midpoint(t.b, t.c);
    const Rational radius_sq = dist_sq(t.b, t.c) / Rational(4);
    const Rational power = dist_sq(t.a, m) - radius_sq;  // > 0 outside, < 0 inside
    const Rational angle = dot(t.b - t.a, t.c - t.a);      // > 0 acute, < 0 obtuse
    // Larger segment (vertex outside the semicircle's circle) gives an acute
    // angle, smaller segment (inside) an obtuse one.
    if (power.sign() != angle.sign()) throw std::logic_error("31.3 scholium correspondence violated");
    return power.is_zero() && angle.is_zero();
}

}  // namespace meanprop::euclid
