#include "meanprop/pyramid.hpp"

#include "meanprop/error.hpp"

namespace meanprop::pyramid {

using euclid::dist_sq;

RightPyramid::RightPyramid(Rational da, Rational db, Rational dc)
    : da_(std::move(da)), db_(std::move(db)), dc_(std::move(dc)) {
    if (da_.sign() <= 0 || db_.sign() <= 0 || dc_.sign() <= 0)
        throw DomainError("pyramid edges must be positive");
}

RightPyramid RightPyramid::scaled(const Rational& k) const { return {k * da_, k * db_, k * dc_}; }

BoxRealization realize(const RightPyramid& p) {
    const Rational zero;
    return {
        .a = {p.da(), zero, zero},
        .b = {zero, zero, p.db()},
        .c = {zero, p.dc(), zero},
        .d = {zero, zero, zero},
        .e = {zero, p.dc(), p.db()},
        .f = {p.da(), p.dc(), zero},
        .g = {p.da(), zero, p.db()},
        .h = {p.da(), p.dc(), p.db()},
    };
}

Rational diagonal_sq(const RightPyramid& p) {
    return square(p.da()) + square(p.db()) + square(p.dc());
}

Rational circumsphere_diameter_sq(const RightPyramid& p) {
    // The box is inscribed in the sphere through D, A, B, C; its diagonal DH
    // is a diameter.
    const BoxRealization box = realize(p);
    return dist_sq(box.d, box.h);
}

bool prism_diagonal_check(const RightPyramid& p) {
    const BoxRealization box = realize(p);
    // AGEC is a rectangle: AG vertical, AC in the base.
    if (!euclid::dot(box.g - box.a, box.c - box.a).is_zero()) return false;
    if (box.e - box.g != box.c - box.a) return false;
    const Rational ae = dist_sq(box.a, box.e);
    const Rational gc = dist_sq(box.g, box.c);
    return ae == gc && ae == diagonal_sq(p);
}

bool gram_feasible(const Rational& cos_ab, const Rational& cos_bc, const Rational& cos_ca) {
    const Rational one(1);
    const Rational minor_ab = one - square(cos_ab);
    const Rational minor_bc = one - square(cos_bc);
    const Rational minor_ca = one - square(cos_ca);
    const Rational det = one + Rational(2) * cos_ab * cos_bc * cos_ca
                       - square(cos_ab) - square(cos_bc) - square(cos_ca);
    return minor_ab.sign() >= 0 && minor_bc.sign() >= 0 && minor_ca.sign() >= 0 && det.sign() >= 0;
}

ObliqueVertexFrame::ObliqueVertexFrame(Rational a, Rational b, Rational c,
                                       Rational cos_ab, Rational cos_bc, Rational cos_ca)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      cos_ab_(std::move(cos_ab)), cos_bc_(std::move(cos_bc)), cos_ca_(std::move(cos_ca)) {
    if (a_.sign() <= 0 || b_.sign() <= 0 || c_.sign() <= 0)
        throw DomainError("frame edges must be positive");
    for (const Rational* cos : {&cos_ab_, &cos_bc_, &cos_ca_}) {
        if (abs(*cos) > Rational(1)) throw DomainError("cosine outside [-1, 1]");
    }
    if (!gram_feasible(cos_ab_, cos_bc_, cos_ca_))
        throw DomainError("no three directions have these pairwise cosines");
}

Rational oblique_diagonal_sq(const ObliqueVertexFrame& f) {
    return square(f.a()) + square(f.b()) + square(f.c())
         + Rational(2) * (f.a() * f.b() * f.cos_ab() + f.b() * f.c() * f.cos_bc() + f.c() * f.a() * f.cos_ca());
}

std::vector<std::string> verification_trace(const RightPyramid& p) {
    const BoxRealization box = realize(p);
    const Rational ab = dist_sq(box.a, box.b);
    const Rational be = dist_sq(box.b, box.e);
    const Rational ae = dist_sq(box.a, box.e);
    std::vector<std::string> out;
    out.push_back("AB^2 = DA^2 + DB^2 = " + square(p.da()).to_string() + " + " + square(p.db()).to_string() +
                  " = " + ab.to_string());
    out.push_back("BE = DC, angle ABE right: AE^2 = AB^2 + BE^2 = " + ab.to_string() + " + " + be.to_string() +
                  " = " + ae.to_string());
    out.push_back("DA^2 + DB^2 + DC^2 = " + diagonal_sq(p).to_string() +
                  (ae == diagonal_sq(p) ? " = AE^2" : " != AE^2"));
    out.push_back("rectangle AGEC: AE^2 = GC^2 = " + dist_sq(box.g, box.c).to_string() +
                  (prism_diagonal_check(p) ? " (holds)" : " (fails)"));
    out.push_back("circumscribed sphere: diameter^2 = " + circumsphere_diameter_sq(p).to_string());
    return out;
}

}  // namespace meanprop::pyramid
