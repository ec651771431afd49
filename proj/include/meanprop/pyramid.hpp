#pragma once

/**
 * @file pyramid.hpp
 * @brief Right-angled (trirectangular) pyramids and their enclosing solids.
 *
 * A pyramid ABCD right-angled at D is stored by its three edges from D.
 * Coordinate realisations put D at the origin with DA on x, DC on y and
 * DB on z; the enclosing parallelepiped then has the corners
 *
 *   D (0,0,0)   A (da,0,0)   C (0,dc,0)   F (da,dc,0)
 *   B (0,0,db)  G (da,0,db)  E (0,dc,db)  H (da,dc,db)
 *
 * so that AE and GC are diagonals of the whole solid.
 */

#include "meanprop/euclid.hpp"
#include "meanprop/scalar.hpp"

#include <string>
#include <vector>

namespace meanprop::pyramid {

using euclid::Point3;

class RightPyramid {
public:
    // Throws DomainError unless every edge is positive.
    RightPyramid(Rational da, Rational db, Rational dc);

    [[nodiscard]] const Rational& da() const { return da_; }
    [[nodiscard]] const Rational& db() const { return db_; }
    [[nodiscard]] const Rational& dc() const { return dc_; }

    [[nodiscard]] RightPyramid scaled(const Rational& k) const;

private:
    Rational da_;
    Rational db_;
    Rational dc_;
};

struct BoxRealization {
    Point3 a, b, c, d, e, f, g, h;
};

BoxRealization realize(const RightPyramid& p);

// da^2 + db^2 + dc^2: the squared diagonal of the enclosing parallelepiped.
Rational diagonal_sq(const RightPyramid& p);

// Squared diameter of the sphere through D, A, B, C: the sphere also
// circumscribes the box, whose diagonal is its diameter.
Rational circumsphere_diameter_sq(const RightPyramid& p);

// Half-prism on the right triangle ADC with top GBE: the diagonal AE of the
// rectangle AGEC equals the solid's diagonal GC, and both equal diagonal_sq.
bool prism_diagonal_check(const RightPyramid& p);

// Three edges from a common vertex with the cosines of the angles between
// each pair.
class ObliqueVertexFrame {
public:
    // Throws DomainError for non-positive edges, cosines outside [-1, 1] or a
    // Gram matrix that is not positive semidefinite.
    ObliqueVertexFrame(Rational a, Rational b, Rational c,
                       Rational cos_ab, Rational cos_bc, Rational cos_ca);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] const Rational& c() const { return c_; }
    [[nodiscard]] const Rational& cos_ab() const { return cos_ab_; }
    [[nodiscard]] const Rational& cos_bc() const { return cos_bc_; }
    [[nodiscard]] const Rational& cos_ca() const { return cos_ca_; }

private:
    Rational a_, b_, c_;
    Rational cos_ab_, cos_bc_, cos_ca_;
};

// All principal minors of the unit-diagonal Gram matrix are non-negative.
bool gram_feasible(const Rational& cos_ab, const Rational& cos_bc, const Rational& cos_ca);

// a^2 + b^2 + c^2 + 2(ab cos_ab + bc cos_bc + ca cos_ca): the two-dimensional
// obtuse/acute correction applied to each pair of edges.
Rational oblique_diagonal_sq(const ObliqueVertexFrame& f);

// Human-readable derivation of the identity for the CLI.
std::vector<std::string> verification_trace(const RightPyramid& p);

}  // namespace meanprop::pyramid
