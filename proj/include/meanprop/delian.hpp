#pragma once

/**
 * @file delian.hpp
 * @brief Two mean proportionals between a < b by the two arc instruments.
 *
 * Both instruments move D along the semicircle on AC = b and stop when the
 * perpendicular from D to AC meets the cursor standing at AF = a on the
 * ruler AD, somewhere on AC. Then AE and AD are the two means.
 *
 * The first instrument (stylus and plumb line) is driven by t = tan(DAC/2)
 * directly. The second (compass with one foot at the midpoint O of AC)
 * is driven by the compass leg, s = tan(DOC/2), and reports the same t.
 */

#include "meanprop/euclid.hpp"
#include "meanprop/scalar.hpp"

#include <string_view>

namespace meanprop::delian {

enum class Method { instrument, compass };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);  // throws DomainError

// Geometry of the first instrument at an exact arc parameter.
struct InstrumentState {
    Rational a;
    Rational b;
    Rational t;
    euclid::Point2 d_point;
    euclid::Point2 e_foot;   // foot of the plumb line from D on AC
    euclid::Point2 f_foot;   // foot of the perpendicular from E on AD
    Rational af_current;     // AF = b k^3 with k = cos DAC
    Rational cursor_on_ac;   // where the cursor at AF = a crosses AC: a / k
    Rational residual;       // cursor_on_ac - AE
};

// Requires 0 < t < 1.
InstrumentState instrument_state(const Rational& a, const Rational& b, const Rational& t);

struct MeansResult {
    Decimal m1;        // AE at output digits
    Decimal m2;        // AD at output digits
    Decimal m1_work;   // at work digits
    Decimal m2_work;
    Decimal t;         // tan(DAC/2) at work digits
    int iterations = 0;
    Decimal residual;  // stopping predicate along AC at the returned position
    Method method = Method::instrument;
};

// Throws DomainError unless 0 < a <= b. For a = b the means are a itself.
MeansResult two_means_instrument(const Decimal& a, const Decimal& b, const PrecisionContext& ctx);
MeansResult two_means_compass(const Decimal& a, const Decimal& b, const PrecisionContext& ctx);
MeansResult two_means(const Decimal& a, const Decimal& b, const PrecisionContext& ctx, Method m);

// Edge of the cube of twice the volume: the first mean between edge and 2 edge.
Decimal duplicate_cube(const Decimal& edge, const PrecisionContext& ctx);

}  // namespace meanprop::delian
