#pragma once

#include "meanprop/scalar.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meanprop::figures::svg {

// A point of the drawing plane, in model units, y up.
struct Vec {
    Rational x;
    Rational y;
};

using Attributes = std::vector<std::pair<std::string, std::string>>;

// Collects elements in call order and maps model units onto the canvas so
// that everything passed to fit() is visible with a margin.
class Canvas {
public:
    Canvas(int width, int height, std::string title);

    void fit(const std::vector<Vec>& extent);

    void line(const Vec& p, const Vec& q, std::string_view cls, std::string_view id = {});
    void polyline(const std::vector<Vec>& pts, std::string_view cls, bool closed = false);
    void circle(const Vec& center, const Rational& radius, std::string_view cls);
    // Upper half of the circle on diameter pq, p to the left of q.
    void semicircle(const Vec& p, const Vec& q, std::string_view cls);
    void point(std::string_view label, const Vec& p, const Attributes& data);

    [[nodiscard]] std::string str() const;

private:
    [[nodiscard]] std::string sx(const Rational& x) const;
    [[nodiscard]] std::string sy(const Rational& y) const;
    [[nodiscard]] std::string length(const Rational& r) const;

    int width_;
    int height_;
    std::string title_;
    Rational scale_{1};
    Rational origin_x_;
    Rational origin_y_;
    std::vector<std::string> body_;
};

std::string coordinate(const Rational& v);  // 10 decimals, for data attributes

}  // namespace meanprop::figures::svg
