#include "meanprop/euclid_suite.hpp"

namespace meanprop::euclid {

Rational InstanceGenerator::rational(long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(mpz_class(num(rng_)), mpz_class(den(rng_)));
}

Rational InstanceGenerator::positive_rational(long max_num, long max_den) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(mpz_class(num(rng_)), mpz_class(den(rng_)));
}

Rational InstanceGenerator::unit_interval(long max_den) {
    std::uniform_int_distribution<long> den(2, max_den);
    const long q = den(rng_);
    std::uniform_int_distribution<long> num(1, q - 1);
    return Rational(mpz_class(num(rng_)), mpz_class(q));
}

Point2 InstanceGenerator::point() { return {rational(), rational()}; }

Point3 InstanceGenerator::point3() { return {rational(), rational(), rational()}; }

Point3 InstanceGenerator::nonzero_vector3() {
    for (;;) {
        Point3 v = point3();
        if (!norm_sq(v).is_zero()) return v;
    }
}

Point2 InstanceGenerator::unit_direction() { return circle_point(rational(40, 9)); }

Point3 InstanceGenerator::unit_direction3() { return sphere_point(rational(20, 7), rational(20, 7)); }

Point2 rotate(const Point2& v, const Point2& turn) {
    return {turn.x * v.x - turn.y * v.y, turn.y * v.x + turn.x * v.y};
}

Triangle InstanceGenerator::triangle_with_turn(const Point2& turn) {
    const Point2 a = point();
    const Point2 u = unit_direction();
    const Point2 v = rotate(u, turn);
    return {a, a + positive_rational() * u, a + positive_rational() * v};
}

Triangle InstanceGenerator::right_triangle() { return triangle_with_turn({Rational(0), Rational(1)}); }

Triangle InstanceGenerator::obtuse_triangle() {
    // Half-angle parameter above 1 puts the turn past 90 degrees.
    return triangle_with_turn(circle_point(Rational(1) + positive_rational(30, 7)));
}

Triangle InstanceGenerator::acute_triangle() { return triangle_with_turn(circle_point(unit_interval())); }

Triangle InstanceGenerator::triangle() {
    for (;;) {
        Triangle t{point(), point(), point()};
        if (!signed_area2(t.a, t.b, t.c).is_zero()) return t;
    }
}

}  // namespace meanprop::euclid
