#include "meanprop/euclid_suite.hpp"

#include "meanprop/error.hpp"

#include <functional>
#include <future>

namespace meanprop::euclid {

namespace {

using Trial = std::function<bool(InstanceGenerator&)>;

struct Proposition {
    const char* name;
    Trial valid;      // true when the proposition held
    Trial perturbed;  // true when the perturbation was detected
};

// A perturbation is detected when the checker refuses the hypothesis.
template <typename F>
bool rejected(F&& f) {
    try {
        f();
    } catch (const PreconditionError&) {
        return true;
    }
    return false;
}

// Mirror c across the line through a perpendicular to ab; flips the sign of
// the angle test at a.
Triangle flip_angle(const Triangle& t) {
    const Point2 normal_end = t.a + rotate_quarter(t.b - t.a);
    return {t.a, t.b, reflect(t.c, t.a, normal_end)};
}

// Pushes c off the right angle along ab.
Triangle skew(const Triangle& t, InstanceGenerator& g) {
    return {t.a, t.b, t.c + g.positive_rational(5, 9) * (t.b - t.a)};
}

std::vector<Proposition> propositions() {
    std::vector<Proposition> ps;

    ps.push_back({"47.1",
                  [](InstanceGenerator& g) { return check_47_1(g.right_triangle()).is_zero(); },
                  [](InstanceGenerator& g) {
                      const Triangle t = skew(g.right_triangle(), g);
                      return rejected([&] { check_47_1(t); });
                  }});

    ps.push_back({"12.2",
                  [](InstanceGenerator& g) { return check_12_2(g.obtuse_triangle()).is_zero(); },
                  [](InstanceGenerator& g) {
                      const Triangle t = flip_angle(g.obtuse_triangle());
                      return rejected([&] { check_12_2(t); });
                  }});

    ps.push_back({"13.2",
                  [](InstanceGenerator& g) { return check_13_2(g.acute_triangle()).is_zero(); },
                  [](InstanceGenerator& g) {
                      const Triangle t = flip_angle(g.acute_triangle());
                      return rejected([&] { check_13_2(t); });
                  }});

    ps.push_back({"12.2/13.2 by classification",
                  [](InstanceGenerator& g) {
                      const Triangle t = g.triangle();
                      switch (angle_at_a(t)) {
                          case AngleClass::obtuse: return check_12_2(t).is_zero();
                          case AngleClass::acute: return check_13_2(t).is_zero();
                          case AngleClass::right: return check_47_1(t).is_zero();
                      }
                      return false;
                  },
                  [](InstanceGenerator& g) {
                      const Triangle t = g.triangle();
                      if (angle_at_a(t) == AngleClass::obtuse) return rejected([&] { check_13_2(t); });
                      return rejected([&] { check_12_2(t); });
                  }});

    ps.push_back({"3.3",
                  [](InstanceGenerator& g) {
                      const Point2 o = g.point();
                      const Rational r = g.positive_rational();
                      Point2 u = g.unit_direction();
                      Point2 v = g.unit_direction();
                      while (u == v || u + v == Point2{}) v = g.unit_direction();
                      return check_3_3(o, {o + r * u, o + r * v});
                  },
                  [](InstanceGenerator& g) {
                      const Point2 o = g.point();
                      const Rational r = g.positive_rational();
                      Point2 u = g.unit_direction();
                      Point2 v = g.unit_direction();
                      while (u == v || u + v == Point2{}) v = g.unit_direction();
                      const Rational r2 = r + g.positive_rational(5, 9);
                      return !check_3_3(o, {o + r * u, o + r2 * v});
                  }});

    ps.push_back({"8.6 corollary",
                  [](InstanceGenerator& g) { return check_8_6_corollary(g.right_triangle()).is_zero(); },
                  [](InstanceGenerator& g) {
                      const Triangle t = skew(g.right_triangle(), g);
                      return rejected([&] { check_8_6_corollary(t); });
                  }});

    ps.push_back({"31.6",
                  [](InstanceGenerator& g) {
                      return check_31_6(g.right_triangle(), g.positive_rational(7, 5)).is_zero();
                  },
                  [](InstanceGenerator& g) {
                      const Triangle t = skew(g.right_triangle(), g);
                      const Rational aspect = g.positive_rational(7, 5);
                      return rejected([&] { check_31_6(t, aspect); });
                  }});

    auto nonzero = [](InstanceGenerator& g) {
        Rational r = g.rational();
        while (r.is_zero()) r = g.rational();
        return r;
    };

    ps.push_back({"19.7",
                  [nonzero](InstanceGenerator& g) {
                      const Rational p = nonzero(g), q = nonzero(g), k = nonzero(g);
                      return check_19_7(p, p * k, q, q * k);
                  },
                  [nonzero](InstanceGenerator& g) {
                      const Rational p = nonzero(g), q = nonzero(g), k = nonzero(g);
                      Rational d = q * k + g.positive_rational(3, 11);
                      if (d.is_zero()) d += Rational(1);
                      return !check_19_7(p, p * k, q, d);
                  }});

    ps.push_back({"20.7",
                  [nonzero](InstanceGenerator& g) {
                      const Rational p = nonzero(g), k = nonzero(g);
                      return check_20_7(p, p * k, p * k * k);
                  },
                  [nonzero](InstanceGenerator& g) {
                      const Rational p = nonzero(g), k = nonzero(g);
                      Rational c = p * k * k + g.positive_rational(3, 11);
                      if (c.is_zero()) c += Rational(1);
                      return !check_20_7(p, p * k, c);
                  }});

    auto plane_pair = [](InstanceGenerator& g) {
        Point3 u = g.nonzero_vector3();
        Point3 v = g.nonzero_vector3();
        while (norm_sq(cross(u, v)).is_zero()) v = g.nonzero_vector3();
        return std::pair{u, v};
    };

    ps.push_back({"4.11",
                  [plane_pair](InstanceGenerator& g) {
                      const auto [u, v] = plane_pair(g);
                      Rational scale = g.rational();
                      while (scale.is_zero()) scale = g.rational();
                      return check_4_11(scale * cross(u, v), u, v);
                  },
                  [plane_pair](InstanceGenerator& g) {
                      const auto [u, v] = plane_pair(g);
                      const Point3 line = cross(u, v) + g.positive_rational(3, 7) * u;
                      return !check_4_11(line, u, v);
                  }});

    ps.push_back({"7.12",
                  [](InstanceGenerator& g) {
                      const std::array<Point3, 3> base{g.point3(), g.point3(), g.point3()};
                      return check_7_12(base, g.point3()).is_zero();
                  },
                  [](InstanceGenerator& g) {
                      std::array<Point3, 3> base{g.point3(), g.point3(), g.point3()};
                      while (norm_sq(cross(base[1] - base[0], base[2] - base[0])).is_zero()) base[2] = g.point3();
                      const Point3 offset = g.point3();
                      std::array<Point3, 3> top{base[0] + offset, base[1] + offset, base[2] + offset};
                      const Point3 normal = cross(base[1] - base[0], base[2] - base[0]);
                      top[2] = top[2] + g.positive_rational(3, 5) * normal;
                      return !check_7_12(base, top).is_zero();
                  }});

    auto outward = [](const Point2& from, const Point2& to, const Point2& away, Point2 offset) {
        const int vertex_side = cross(to - from, away - from).sign();
        if (cross(to - from, offset).sign() == vertex_side) offset = Rational(-1) * offset;
        return Parallelogram{from, to, offset};
    };
    auto offset_off_side = [](InstanceGenerator& g, const Point2& from, const Point2& to) {
        Point2 o = g.point();
        while (cross(to - from, o).is_zero()) o = g.point();
        return o;
    };

    ps.push_back({"Pappus generalization of 47.1",
                  [outward, offset_off_side](InstanceGenerator& g) {
                      const Triangle t = g.triangle();
                      const Parallelogram p1 = outward(t.a, t.b, t.c, offset_off_side(g, t.a, t.b));
                      const Parallelogram p2 = outward(t.a, t.c, t.b, offset_off_side(g, t.a, t.c));
                      return check_pappus(t, p1, p2).is_zero();
                  },
                  [outward, offset_off_side](InstanceGenerator& g) {
                      const Triangle t = g.triangle();
                      Parallelogram p1 = outward(t.a, t.b, t.c, offset_off_side(g, t.a, t.b));
                      const Parallelogram p2 = outward(t.a, t.c, t.b, offset_off_side(g, t.a, t.c));
                      p1.offset = Rational(-1) * p1.offset;  // folded into the triangle
                      return rejected([&] { check_pappus(t, p1, p2); });
                  }});

    auto on_diameter_circle = [](InstanceGenerator& g, bool perturb) {
        const Point2 m = g.point();
        const Rational r = g.positive_rational();
        const Point2 u = g.unit_direction();
        Point2 w = g.unit_direction();
        while (w == u || w + u == Point2{}) w = g.unit_direction();
        const Rational ra = perturb ? r + g.positive_rational(5, 9) : r;
        return Triangle{m + ra * w, m + r * u, m - r * u};
    };

    ps.push_back({"Clavius scholium to 31.3",
                  [on_diameter_circle](InstanceGenerator& g) { return check_clavius_31_3(on_diameter_circle(g, false)); },
                  [on_diameter_circle](InstanceGenerator& g) {
                      return !check_clavius_31_3(on_diameter_circle(g, true));
                  }});

    ps.push_back({"rational circle parametrization",
                  [](InstanceGenerator& g) {
                      const Point2 p = circle_point(g.rational());
                      return (norm_sq(p) - Rational(1)).is_zero();
                  },
                  [](InstanceGenerator& g) {
                      const Point2 p = circle_point(g.rational()) + Point2{g.positive_rational(1, 50), Rational(0)};
                      return !(norm_sq(p) - Rational(1)).is_zero();
                  }});

    return ps;
}

PropositionTally run_one(const Proposition& p, std::uint64_t seed, int instances) {
    InstanceGenerator g(seed);
    PropositionTally tally;
    tally.name = p.name;
    for (int i = 0; i < instances; ++i) {
        ++tally.valid_checked;
        if (p.valid(g)) ++tally.valid_held;
        ++tally.perturbed_checked;
        if (p.perturbed(g)) ++tally.perturbed_detected;
    }
    return tally;
}

}  // namespace

std::vector<PropositionTally> run_suite(std::uint64_t seed, int instances) {
    const auto ps = propositions();
    std::vector<std::future<PropositionTally>> jobs;
    jobs.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::uint64_t sub_seed = seed * 0x9E3779B97F4A7C15ULL + i + 1;
        jobs.push_back(std::async(std::launch::async, run_one, std::cref(ps[i]), sub_seed, instances));
    }
    std::vector<PropositionTally> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace meanprop::euclid
