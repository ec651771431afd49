#include "meanprop/euclid.hpp"

#include "meanprop/error.hpp"

namespace meanprop::euclid {

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rational& k, const Point2& p) { return {k * p.x, k * p.y}; }
Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
Rational norm_sq(const Point2& v) { return dot(v, v); }
Rational dist_sq(const Point2& a, const Point2& b) { return norm_sq(b - a); }
Point2 midpoint(const Point2& a, const Point2& b) { return Rational(1, 2) * (a + b); }
Point2 rotate_quarter(const Point2& v) { return {-v.y, v.x}; }

Point2 foot(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 dir = b - a;
    const Rational len = norm_sq(dir);
    if (len.is_zero()) throw DomainError("line through coincident points");
    return a + (dot(p - a, dir) / len) * dir;
}

Point2 reflect(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 f = foot(p, a, b);
    return Rational(2) * f - p;
}

Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Point3 operator*(const Rational& k, const Point3& p) { return {k * p.x, k * p.y, k * p.z}; }
Rational dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational norm_sq(const Point3& v) { return dot(v, v); }
Rational dist_sq(const Point3& a, const Point3& b) { return norm_sq(b - a); }

Point2 circle_point(const Rational& t) {
    const Rational t2 = t * t;
    const Rational den = Rational(1) + t2;
    return {(Rational(1) - t2) / den, Rational(2) * t / den};
}

Point3 sphere_point(const Rational& s, const Rational& t) {
    const Rational r2 = s * s + t * t;
    const Rational den = r2 + Rational(1);
    return {Rational(2) * s / den, Rational(2) * t / den, (r2 - Rational(1)) / den};
}

AngleClass angle_at_a(const Triangle& t) {
    const int s = dot(t.b - t.a, t.c - t.a).sign();
    return s > 0 ? AngleClass::acute : s < 0 ? AngleClass::obtuse : AngleClass::right;
}

Rational signed_area2(const Point2& a, const Point2& b, const Point2& c) { return cross(b - a, c - a); }

}  // namespace meanprop::euclid
