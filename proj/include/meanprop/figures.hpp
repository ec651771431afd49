#pragma once

/**
 * @file figures.hpp
 * @brief SVG drawings of the seven figures, computed from the solvers.
 *
 * Figures 1-3 show the right-angled pyramid, its half-prism and its sphere;
 * 4 and 5 the chord problem and the four proportionals (with the sphere
 * construction); 6 and 7 the stylus and compass instruments. Solids are
 * drawn in the oblique projection X = x + 2y/5, Y = z + 3y/10.
 *
 * Labeled points carry their model coordinates to 10 decimals in data-x,
 * data-y (and data-z for solids).
 */

#include "meanprop/scalar.hpp"

#include <array>
#include <string>

namespace meanprop::figures {

struct FigureSpec {
    int figure_id = 1;
    std::array<Rational, 3> edges{Rational(1), Rational(1), Rational(1)};  // DA, DB, DC
    Decimal diameter = 2;                                                   // AD in 4, AC in 5
    Rational t{1, 2};                                                       // tan(DAC/2) in 5
    Decimal a = 1;                                                          // AF in 6 and 7
    Decimal b = 2;                                                          // AC in 6 and 7
    int width = 480;
    int height = 360;
};

// Throws UsageError for a figure id outside 1..7 or a canvas under 100 units.
std::string render(const FigureSpec& spec);

}  // namespace meanprop::figures
