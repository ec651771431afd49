#pragma once

/**
 * @file proportio.hpp
 * @brief Continued proportions in the semicircle: the chord problem, its
 * printed tables, and the four proportionals AF, AE, AD, AC.
 */

#include "meanprop/euclid.hpp"
#include "meanprop/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meanprop::proportio {

/// AB + BD = AD along the diameter; BC is the half-chord at B.
struct ChordConfig {
    Decimal ab;
    Decimal bc;
    Decimal bd;
    Decimal ad;
};

struct ChordSolution {
    ChordConfig work;      // at ctx.work_digits
    ChordConfig reported;  // at ctx.output_digits
    int iterations = 0;    // bisection steps
    Decimal residual;      // (d - x)^3 - d^2 x at the working x, exact
};

// Root x = AB in (0, d) of (d - x)^3 = d^2 x, so that AB:BC = BC:BD = BD:AD.
//
// The reported AB is x rounded half-even; BD is AD - AB and BC is the
// rounded square root of AB * BD, both taken from the reported values.
ChordSolution solve_continued_chords(const Decimal& d, const PrecisionContext& ctx);

struct TableRow {
    std::string label;
    Decimal value;
    std::string grouped;
    // Digits as they appear in print, when the diameter is the printed 2.
    std::optional<std::string> as_printed;
    // Set when as_printed differs from grouped.
    std::optional<std::string> misprint;
    // The same quantity formed from the unrounded chord lengths.
    std::optional<Decimal> from_true_root;
};

struct TableSection {
    std::string heading;
    std::vector<TableRow> rows;
};

struct PrintedTable {
    std::vector<TableSection> sections;  // lines, rectangles, squares
};

// Lines AD, AB, BC, BD, then the rectangles DAB, CBD and the squares
// BC^2, ABD (= AB.BD), BD^2, ADBC, all multiplied exactly from the
// 10-digit values. `true_root`, if given, fills from_true_root.
//
// Throws PreconditionError unless every input has exactly 10 fractional digits.
PrintedTable reproduce_table(const ChordConfig& rounded, const std::optional<ChordConfig>& true_root = std::nullopt);

const TableRow* find_row(const PrintedTable& table, std::string_view label);

struct ProportionalsQuad {
    Decimal af;
    Decimal ae;
    Decimal ad;
    Decimal ac;
};

// Exact construction for a rational parameter t = tan(DAC / 2).
struct ExactPlanar {
    euclid::Point2 a, c, d, e, f, g;
    Rational af, ae, ad, ac;
    bool eg_bisected;      // F is the midpoint of EG, EG perpendicular to AD
    bool congruent_afg;    // AFG and AFE have equal sides
    bool congruent_dfg;    // DFG and DFE have equal sides
    bool right_at_g;       // G on the circle with diameter AD
};

struct ExactSphere {
    euclid::Point3 a, c, d, e, f, g;
    Rational af, ag, ad, ac;
    Rational plane_normal_dot;  // great-circle normal . normal of plane AGD
    bool fg_normal;             // FG perpendicular to the great-circle plane
    bool g_on_sphere;
};

// Throws DegeneratePositionError for t = 0 (D at C) or t = 1 (D at A) and
// DomainError for t outside [0, 1] or ac <= 0.
ExactPlanar construct_planar(const Rational& ac, const Rational& t);
ExactSphere construct_sphere(const Rational& ac, const Rational& t);

// t is taken at face value as an exact fraction; lengths are rounded to
// ctx.output_digits.
ProportionalsQuad four_proportionals_planar(const Decimal& ac, const Decimal& t, const PrecisionContext& ctx);
ProportionalsQuad four_proportionals_sphere(const Decimal& ac, const Decimal& t, const PrecisionContext& ctx);

// Adjacent identities |t_i t_{i+2} - t_{i+1}^2| <= tol, and for four terms
// also |t_0 t_3 - t_1 t_2| <= tol.
bool verify_continued_proportion(const std::vector<Decimal>& terms, const Decimal& tol);

}  // namespace meanprop::proportio
