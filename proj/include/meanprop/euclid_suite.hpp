#pragma once

// Seeded instance generators for the Euclid checkers and the property suite
// that runs every checker over valid and perturbed instances.

#include "meanprop/euclid.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace meanprop::euclid {

class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    Rational rational(long max_num = 50, long max_den = 12);
    Rational positive_rational(long max_num = 50, long max_den = 12);
    // Uniformly drawn from the rationals p/q with 0 < p/q < 1, q <= max_den.
    Rational unit_interval(long max_den = 64);
    Point2 point();
    Point3 point3();
    Point3 nonzero_vector3();

    // Rational point on the unit circle.
    Point2 unit_direction();
    // Rational point on the unit sphere.
    Point3 unit_direction3();

    // Triangles whose angle at `a` is right, obtuse or acute; built by
    // rotating a rational unit direction by another rational circle point.
    Triangle right_triangle();
    Triangle obtuse_triangle();
    Triangle acute_triangle();
    // Arbitrary non-degenerate triangle.
    Triangle triangle();

    std::mt19937_64& engine() { return rng_; }

private:
    Triangle triangle_with_turn(const Point2& turn);

    std::mt19937_64 rng_;
};

// Rotation of v by the angle whose cosine/sine are the coordinates of turn
// (turn must be a unit vector).
Point2 rotate(const Point2& v, const Point2& turn);

struct PropositionTally {
    std::string name;
    int valid_checked = 0;
    int valid_held = 0;
    int perturbed_checked = 0;
    int perturbed_detected = 0;

    [[nodiscard]] bool ok() const {
        return valid_held == valid_checked && perturbed_detected == perturbed_checked;
    }
};

// Runs every checker on `instances` constructively valid instances and as
// many perturbed ones. Propositions run concurrently, each with its own
// generator derived from `seed`; the result order is fixed.
std::vector<PropositionTally> run_suite(std::uint64_t seed, int instances);

}  // namespace meanprop::euclid
