#pragma once

/**
 * @file euclid.hpp
 * @brief Exact checkers for the Elements propositions the constructions rely on.
 *
 * Every predicate here is evaluated over Rational coordinates, without any
 * tolerance. Checkers that verify an identity return its residual (zero iff
 * the identity holds); checkers that verify an incidence return a bool.
 * A configuration that does not satisfy a proposition's hypothesis raises
 * PreconditionError.
 */

#include "meanprop/scalar.hpp"

#include <array>
#include <utility>

namespace meanprop::euclid {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
    Rational x;
    Rational y;
    Rational z;

    friend bool operator==(const Point3&, const Point3&) = default;
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& k, const Point2& p);
Rational dot(const Point2& a, const Point2& b);
Rational cross(const Point2& a, const Point2& b);  // z-component
Rational norm_sq(const Point2& v);
Rational dist_sq(const Point2& a, const Point2& b);
Point2 midpoint(const Point2& a, const Point2& b);
Point2 rotate_quarter(const Point2& v);  // +90 degrees

// Foot of the perpendicular from p onto the line through a and b.
Point2 foot(const Point2& p, const Point2& a, const Point2& b);

// Reflection of p across the line through a and b.
Point2 reflect(const Point2& p, const Point2& a, const Point2& b);

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
Point3 operator*(const Rational& k, const Point3& p);
Rational dot(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);
Rational norm_sq(const Point3& v);
Rational dist_sq(const Point3& a, const Point3& b);

// Point on the unit circle for parameter t: ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Point2 circle_point(const Rational& t);

// Point on the unit sphere by inverse stereographic projection of (s, t).
Point3 sphere_point(const Rational& s, const Rational& t);

// Triangle with a designated vertex `a`; angle-based checkers look at the
// angle there.
struct Triangle {
    Point2 a;
    Point2 b;
    Point2 c;
};

enum class AngleClass { acute, right, obtuse };

// Classification of the angle at t.a by the sign of (b-a).(c-a).
AngleClass angle_at_a(const Triangle& t);

// Twice the signed area.
Rational signed_area2(const Point2& a, const Point2& b, const Point2& c);

// 47.1: with the right angle at a, |bc|^2 - (|ab|^2 + |ac|^2).
Rational check_47_1(const Triangle& t);

// 12.2: with the angle at a obtuse, |bc|^2 - (|ab|^2 + |ac|^2 + 2 |ab| |ah|),
// h the foot of the perpendicular from c onto the extension of ab.
Rational check_12_2(const Triangle& t);

// 13.2: with the angle at a acute, |bc|^2 - (|ab|^2 + |ac|^2 - 2 |ab| |ah|),
// h the foot of the perpendicular from c onto ab.
Rational check_13_2(const Triangle& t);

// 3.3, both directions: the line from the centre through the chord's
// midpoint is perpendicular to it, and the perpendicular from the centre
// meets the chord at its midpoint. The chord must not pass through the centre.
bool check_3_3(const Point2& center, const std::pair<Point2, Point2>& chord);

// Corollary to 8.6: with the right angle at a, altitude^2 minus the
// product of the two base segments cut off by the altitude's foot.
Rational check_8_6_corollary(const Triangle& t);

// 31.6 with rectangles of aspect ratio `aspect` erected on each side as the
// similar figures: figure(bc) - (figure(ab) + figure(ac)). Right angle at a.
Rational check_31_6(const Triangle& t, const Rational& aspect);

// 19.7: a:b = c:d, evaluated both as a ratio equality and as a*d = b*c.
// The two routes must agree; returns whether the four are proportional.
bool check_19_7(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

// 20.7: a:b = b:c, evaluated both as a ratio equality and as a*c = b^2.
bool check_20_7(const Rational& a, const Rational& b, const Rational& c);

// 4.11: a line perpendicular to two intersecting lines (directions u, v) is
// perpendicular to every line of their plane. Checked as bilinearity of
// line.(alpha u + beta v) and, independently, as line parallel to u x v.
// u and v must not be parallel.
bool check_4_11(const Point3& line_dir, const Point3& u, const Point3& v);

// 7.12: the prism with base triangle and translated top splits into three
// tetrahedra of equal volume.
struct PrismSplit {
    Rational prism_volume;
    std::array<Rational, 3> tetra_volumes;
    Rational residual;  // sum over i of |prism - 3 * tetra_i|
};
PrismSplit split_prism(const std::array<Point3, 3>& base, const std::array<Point3, 3>& top);
Rational check_7_12(const std::array<Point3, 3>& base, const std::array<Point3, 3>& top);
Rational check_7_12(const std::array<Point3, 3>& base, const Point3& apex_offset);

// Parallelogram spanned by a base segment and an offset vector.
struct Parallelogram {
    Point2 from;
    Point2 to;
    Point2 offset;

    [[nodiscard]] Rational area() const;
};

// Pappus' generalisation of 47.1. p1 stands on side ab, p2 on side ac, both
// outward. The third parallelogram stands on bc with its other side equal and
// parallel to h->a, h being where the far sides of p1 and p2 meet. Returns
// area(p1) + area(p2) - area(third).
Rational check_pappus(const Triangle& t, const Parallelogram& p1, const Parallelogram& p2);
Parallelogram pappus_third(const Triangle& t, const Parallelogram& p1, const Parallelogram& p2);

// Clavius' converse of 31.3: the vertex a sees the chord bc at a right angle
// iff it lies on the circle with diameter bc. Returns true iff a is on that
// circle with a right angle there; the scholium's inside/obtuse and
// outside/acute correspondence is asserted along the way.
bool check_clavius_31_3(const Triangle& t);

}  // namespace meanprop::euclid
