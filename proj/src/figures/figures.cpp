#include "meanprop/figures.hpp"

#include "meanprop/delian.hpp"
#include "meanprop/error.hpp"
#include "meanprop/proportio.hpp"
#include "meanprop/pyramid.hpp"
#include "svg.hpp"


namespace meanprop::figures {

namespace {

using euclid::Point2;
using euclid::Point3;
using svg::Vec;

Vec project(const Point3& p) {
    return {p.x + Rational(2, 5) * p.y, p.z + Rational(3, 10) * p.y};
}

Vec flat(const Point2& p) { return {p.x, p.y}; }

svg::Attributes data2(const Point2& p) { return {{"x", svg::coordinate(p.x)}, {"y", svg::coordinate(p.y)}}; }

svg::Attributes data3(const Point3& p) {
    return {{"x", svg::coordinate(p.x)}, {"y", svg::coordinate(p.y)}, {"z", svg::coordinate(p.z)}};
}

// Rational samples of the circle through centre c with orthogonal radius
// vectors u, v, for the half-angle parameters 0, 1/16, ..., 1, 16/15, ..., 16
// and their negatives: the full circle without transcendentals.
std::vector<Point3> circle_samples(const Point3& c, const Point3& u, const Point3& v, bool upper_only) {
    std::vector<Rational> ts;
    for (int k = 0; k <= 16; ++k) ts.emplace_back(k, 16);
    for (int k = 15; k >= 1; --k) ts.emplace_back(16, k);
    std::vector<Point3> out;
    auto at = [&](const Rational& t) {
        const Point2 w = euclid::circle_point(t);
        return c + w.x * u + w.y * v;
    };
    for (const Rational& t : ts) out.push_back(at(t));
    out.push_back(c - u);
    if (!upper_only) {
        for (auto it = ts.rbegin(); it != ts.rend(); ++it) out.push_back(at(-*it));
    }
    return out;
}

std::vector<Vec> projected(const std::vector<Point3>& pts) {
    std::vector<Vec> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(project(p));
    return out;
}

using Named3 = std::vector<std::pair<std::string, Point3>>;

void label_all(svg::Canvas& c, const Named3& pts) {
    for (const auto& [name, p] : pts) c.point(name, project(p), data3(p));
}

std::vector<Vec> extent(const Named3& pts) {
    std::vector<Vec> out;
    for (const auto& [name, p] : pts) out.push_back(project(p));
    return out;
}

void box_edges(svg::Canvas& c, const pyramid::BoxRealization& b) {
    const std::array<std::pair<const Point3*, const Point3*>, 12> edges{{
        {&b.d, &b.a}, {&b.d, &b.c}, {&b.d, &b.b}, {&b.a, &b.f}, {&b.a, &b.g}, {&b.c, &b.f},
        {&b.c, &b.e}, {&b.b, &b.g}, {&b.b, &b.e}, {&b.f, &b.h}, {&b.g, &b.h}, {&b.e, &b.h},
    }};
    for (const auto& [p, q] : edges) c.line(project(*p), project(*q), "hidden");
}

Named3 box_points(const pyramid::BoxRealization& b) {
    return {{"A", b.a}, {"B", b.b}, {"C", b.c}, {"D", b.d}, {"E", b.e}, {"F", b.f}, {"G", b.g}, {"H", b.h}};
}

void pyramid_edges(svg::Canvas& c, const pyramid::BoxRealization& b) {
    for (const auto& [p, q] : std::array<std::pair<const Point3*, const Point3*>, 6>{
             {{&b.d, &b.a}, {&b.d, &b.b}, {&b.d, &b.c}, {&b.a, &b.b}, {&b.b, &b.c}, {&b.c, &b.a}}})
        c.line(project(*p), project(*q), "edge");
}

std::string figure_1(const FigureSpec& s) {
    const pyramid::RightPyramid p(s.edges[0], s.edges[1], s.edges[2]);
    const auto b = pyramid::realize(p);
    svg::Canvas c(s.width, s.height, "Figure 1: pyramid ABCD right-angled at D in its parallelepiped");
    const Named3 pts = box_points(b);
    c.fit(extent(pts));
    box_edges(c, b);
    pyramid_edges(c, b);
    c.line(project(b.a), project(b.e), "diagonal", "AE");
    label_all(c, pts);
    return c.str();
}

std::string figure_2(const FigureSpec& s) {
    const pyramid::RightPyramid p(s.edges[0], s.edges[1], s.edges[2]);
    const auto b = pyramid::realize(p);
    svg::Canvas c(s.width, s.height, "Figure 2: half-prism ADC GBE with the rectangle AGEC");
    const Named3 pts{{"A", b.a}, {"B", b.b}, {"C", b.c}, {"D", b.d}, {"E", b.e}, {"G", b.g}};
    c.fit(extent(pts));
    c.polyline({project(b.a), project(b.d), project(b.c)}, "edge", true);
    c.polyline({project(b.g), project(b.b), project(b.e)}, "edge", true);
    c.line(project(b.a), project(b.g), "edge");
    c.line(project(b.d), project(b.b), "edge");
    c.line(project(b.c), project(b.e), "edge");
    c.line(project(b.a), project(b.b), "hidden");
    c.line(project(b.a), project(b.e), "diagonal", "AE");
    c.line(project(b.g), project(b.c), "diagonal", "GC");
    label_all(c, pts);
    return c.str();
}

std::string figure_3(const FigureSpec& s) {
    const pyramid::RightPyramid p(s.edges[0], s.edges[1], s.edges[2]);
    const auto b = pyramid::realize(p);
    svg::Canvas c(s.width, s.height, "Figure 3: the sphere about the pyramid and its parallelepiped");
    const Point3 o = Rational(1, 2) * b.h;
    // Radius from the squared diameter, to 10 decimals.
    const Rational radius =
        sqrt(Decimal::from_rational(pyramid::circumsphere_diameter_sq(p) / Rational(4), 20), 10).to_rational();
    const Point3 ex{radius, Rational(0), Rational(0)};
    const Point3 ey{Rational(0), radius, Rational(0)};
    const Point3 ez{Rational(0), Rational(0), radius};
    const auto equator = circle_samples(o, ex, ey, false);
    const auto meridian = circle_samples(o, ex, ez, false);
    Named3 pts = box_points(b);
    pts.emplace_back("O", o);
    std::vector<Vec> ext = extent(pts);
    for (const auto& v : projected(equator)) ext.push_back(v);
    for (const auto& v : projected(meridian)) ext.push_back(v);
    c.fit(ext);
    c.polyline(projected(equator), "edge", true);
    c.polyline(projected(meridian), "edge", true);
    box_edges(c, b);
    pyramid_edges(c, b);
    c.line(project(b.d), project(b.h), "diagonal", "DH");
    label_all(c, pts);
    return c.str();
}

std::string figure_4(const FigureSpec& s) {
    const auto sol = proportio::solve_continued_chords(s.diameter, PrecisionContext::for_output(10));
    const auto& r = sol.reported;
    svg::Canvas c(s.width, s.height, "Figure 4: successive lines AB, BC, BD, DA in the semicircle ACD");
    const Point2 a{Rational(0), Rational(0)};
    const Point2 d{r.ad.to_rational(), Rational(0)};
    const Point2 b{r.ab.to_rational(), Rational(0)};
    const Point2 cc{r.ab.to_rational(), r.bc.to_rational()};
    const Vec top{d.x / Rational(2), d.x / Rational(2)};
    c.fit({flat(a), flat(d), top});
    c.semicircle(flat(a), flat(d), "edge");
    c.line(flat(a), flat(d), "edge", "AD");
    c.line(flat(b), flat(cc), "edge", "BC");
    c.line(flat(a), flat(cc), "edge", "AC");
    c.line(flat(cc), flat(d), "edge", "CD");
    for (const auto& [name, p] : std::vector<std::pair<std::string, Point2>>{{"A", a}, {"B", b}, {"C", cc}, {"D", d}})
        c.point(name, flat(p), data2(p));
    return c.str();
}

std::string figure_5(const FigureSpec& s) {
    const auto q = proportio::construct_sphere(s.diameter.to_rational(), s.t);
    svg::Canvas c(s.width, s.height, "Figure 5: four proportionals AF, AE, AD, AC in the circle and the sphere");
    const Point3 o = Rational(1, 2) * q.c;
    const Rational r = q.ac / Rational(2);
    const auto great = circle_samples(o, Point3{r, Rational(0), Rational(0)}, Point3{Rational(0), r, Rational(0)}, true);
    // Semicircle AGD upright on AD.
    const Point3 m = Rational(1, 2) * q.d;
    const Point3 along = (Rational(1, 2)) * (q.a - q.d);
    const Point3 up{Rational(0), Rational(0), q.ad / Rational(2)};
    const auto upright = circle_samples(m, Rational(-1) * along, up, true);
    const Named3 pts{{"A", q.a}, {"C", q.c}, {"D", q.d}, {"E", q.e}, {"F", q.f}, {"G", q.g}};
    std::vector<Vec> ext = extent(pts);
    for (const auto& v : projected(great)) ext.push_back(v);
    for (const auto& v : projected(upright)) ext.push_back(v);
    c.fit(ext);
    c.polyline(projected(great), "edge");
    c.polyline(projected(upright), "hidden");
    c.line(project(q.a), project(q.c), "edge", "AC");
    c.line(project(q.a), project(q.d), "edge", "AD");
    c.line(project(q.d), project(q.c), "edge", "DC");
    c.line(project(q.d), project(q.e), "edge", "DE");
    c.line(project(q.e), project(q.f), "edge", "EF");
    c.line(project(q.f), project(q.g), "edge", "FG");
    c.line(project(q.a), project(q.g), "diagonal", "AG");
    c.line(project(q.g), project(q.d), "edge", "GD");
    label_all(c, pts);
    return c.str();
}

struct InstrumentPoints {
    Point2 a, c, d, e, f;
};

InstrumentPoints solved_instrument(const FigureSpec& s, delian::Method m) {
    const auto res = delian::two_means(s.a, s.b, PrecisionContext{}, m);
    const Rational b = s.b.to_rational();
    InstrumentPoints p;
    p.a = {Rational(0), Rational(0)};
    p.c = {b, Rational(0)};
    if (res.t.is_zero()) {  // a = b: D, E, F all at C
        p.d = p.e = p.f = p.c;
        return p;
    }
    const auto st = delian::instrument_state(s.a.to_rational(), b, res.t.to_rational());
    p.d = st.d_point;
    p.e = st.e_foot;
    p.f = st.f_foot;
    return p;
}

std::string figure_6(const FigureSpec& s) {
    const InstrumentPoints p = solved_instrument(s, delian::Method::instrument);
    const Rational b = s.b.to_rational();
    svg::Canvas c(s.width, s.height, "Figure 6: two means AE, AD between AF and AC with stylus and plumb line");
    const Point2 z = p.a + Rational(6, 5) * (p.d - p.a);
    const Point2 y = p.f + Rational(3, 2) * (p.e - p.f);
    const Point2 x = p.e - Point2{Rational(0), b / Rational(5)};
    const Point2 st = p.d + Point2{Rational(0), b / Rational(12)};
    const std::vector<std::pair<std::string, Point2>> pts{{"A", p.a}, {"C", p.c}, {"D", p.d}, {"E", p.e}, {"F", p.f},
                                                          {"Z", z},   {"Y", y},   {"X", x},   {"S", st}};
    std::vector<Vec> ext{Vec{b / Rational(2), b / Rational(2)}};
    for (const auto& [n, q] : pts) ext.push_back(flat(q));
    c.fit(ext);
    c.semicircle(flat(p.a), flat(p.c), "edge");
    c.line(flat(p.a), flat(p.c), "edge", "AC");
    c.line(flat(p.a), flat(z), "instrument", "AZ");
    c.line(flat(p.f), flat(y), "instrument", "FY");
    c.line(flat(p.d), flat(x), "hidden", "DX");
    c.line(flat(p.d), flat(st), "instrument", "DS");
    for (const auto& [n, q] : pts) c.point(n, flat(q), data2(q));
    return c.str();
}

std::string figure_7(const FigureSpec& s) {
    const InstrumentPoints p = solved_instrument(s, delian::Method::compass);
    const Rational b = s.b.to_rational();
    svg::Canvas c(s.width, s.height, "Figure 7: the same means with one aperture of the compass");
    const Point2 o = euclid::midpoint(p.a, p.c);
    const Point2 z = p.a + Rational(6, 5) * (p.d - p.a);
    const Point2 y = p.f + Rational(3, 2) * (p.e - p.f);
    const Rational reach = b / Rational(10);
    // KL fixed beyond C; MN slides, square to AC, through D and E.
    const Rational kx = b + reach;
    const Point2 k{kx, p.d.y + reach};
    const Point2 l{kx, -reach};
    const Point2 m{p.d.x, -reach};
    const Point2 n{p.d.x, p.d.y + reach};
    const std::vector<std::pair<std::string, Point2>> pts{
        {"A", p.a}, {"C", p.c}, {"O", o}, {"D", p.d}, {"E", p.e}, {"F", p.f},
        {"Z", z},   {"Y", y},   {"K", k}, {"L", l},   {"M", m},   {"N", n}};
    std::vector<Vec> ext{Vec{b / Rational(2), b / Rational(2)}};
    for (const auto& [name, q] : pts) ext.push_back(flat(q));
    c.fit(ext);
    c.semicircle(flat(p.a), flat(p.c), "edge");
    c.line(flat(p.a), flat(p.c), "edge", "AC");
    c.line(flat(o), flat(p.d), "instrument", "OD");
    c.line(flat(p.a), flat(z), "instrument", "AZ");
    c.line(flat(p.f), flat(y), "instrument", "FY");
    c.polyline({flat(k), flat(l), flat(m), flat(n)}, "hidden", true);
    for (const auto& [name, q] : pts) c.point(name, flat(q), data2(q));
    return c.str();
}

}  // namespace

std::string render(const FigureSpec& spec) {
    if (spec.width < 100 || spec.height < 100) throw UsageError("canvas must be at least 100 by 100");
    switch (spec.figure_id) {
        case 1: return figure_1(spec);
        case 2: return figure_2(spec);
        case 3: return figure_3(spec);
        case 4: return figure_4(spec);
        case 5: return figure_5(spec);
        case 6: return figure_6(spec);
        case 7: return figure_7(spec);
        default: throw UsageError("figure id must be 1 to 7, got " + std::to_string(spec.figure_id));
    }
}

}  // namespace meanprop::figures
