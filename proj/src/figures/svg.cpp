#include "svg.hpp"

#include <algorithm>

namespace meanprop::figures::svg {

namespace {

constexpr int margin = 30;
constexpr int screen_digits = 3;

std::string fixed(const Rational& v) { return Decimal::from_rational(v, screen_digits).to_string(); }

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string coordinate(const Rational& v) { return Decimal::from_rational(v, 10).to_string(); }

Canvas::Canvas(int width, int height, std::string title) : width_(width), height_(height), title_(std::move(title)) {}

void Canvas::fit(const std::vector<Vec>& extent) {
    if (extent.empty()) return;
    Rational min_x = extent.front().x, max_x = min_x;
    Rational min_y = extent.front().y, max_y = min_y;
    for (const Vec& v : extent) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const Rational room_x(width_ - 2 * margin);
    const Rational room_y(height_ - 2 * margin);
    const Rational span_x = max_x - min_x;
    const Rational span_y = max_y - min_y;
    if (span_x.is_zero() && span_y.is_zero()) {
        scale_ = Rational(1);
    } else if (span_x.is_zero()) {
        scale_ = room_y / span_y;
    } else if (span_y.is_zero()) {
        scale_ = room_x / span_x;
    } else {
        scale_ = std::min(room_x / span_x, room_y / span_y);
    }
    // Centre the drawing in the free space.
    origin_x_ = Rational(margin) + (room_x - scale_ * span_x) / Rational(2) - scale_ * min_x;
    origin_y_ = Rational(height_ - margin) - (room_y - scale_ * span_y) / Rational(2) + scale_ * min_y;
}

std::string Canvas::sx(const Rational& x) const { return fixed(origin_x_ + scale_ * x); }
std::string Canvas::sy(const Rational& y) const { return fixed(origin_y_ - scale_ * y); }
std::string Canvas::length(const Rational& r) const { return fixed(scale_ * r); }

void Canvas::line(const Vec& p, const Vec& q, std::string_view cls, std::string_view id) {
    std::string e = "<line";
    if (!id.empty()) e += " id=\"" + escape(id) + "\"";
    e += " class=\"" + escape(cls) + "\" x1=\"" + sx(p.x) + "\" y1=\"" + sy(p.y) + "\" x2=\"" + sx(q.x) + "\" y2=\"" +
         sy(q.y) + "\"/>";
    body_.push_back(std::move(e));
}

void Canvas::polyline(const std::vector<Vec>& pts, std::string_view cls, bool closed) {
    std::string e = closed ? "<polygon" : "<polyline";
    e += " class=\"" + escape(cls) + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) e += ' ';
        e += sx(pts[i].x) + "," + sy(pts[i].y);
    }
    e += "\"/>";
    body_.push_back(std::move(e));
}

void Canvas::circle(const Vec& center, const Rational& radius, std::string_view cls) {
    body_.push_back("<circle class=\"" + escape(cls) + "\" cx=\"" + sx(center.x) + "\" cy=\"" + sy(center.y) +
                    "\" r=\"" + length(radius) + "\"/>");
}

void Canvas::semicircle(const Vec& p, const Vec& q, std::string_view cls) {
    const Rational r = (q.x - p.x) / Rational(2);
    // From q over the top to p: counterclockwise on screen.
    body_.push_back("<path class=\"" + escape(cls) + "\" d=\"M " + sx(q.x) + " " + sy(q.y) + " A " + length(r) + " " +
                    length(r) + " 0 0 0 " + sx(p.x) + " " + sy(p.y) + "\"/>");
}

void Canvas::point(std::string_view label, const Vec& p, const Attributes& data) {
    std::string e = "<g class=\"point\" id=\"" + escape(label) + "\"";
    for (const auto& [k, v] : data) e += " data-" + escape(k) + "=\"" + escape(v) + "\"";
    e += "><circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"2.5\"/><text x=\"" +
         fixed(origin_x_ + scale_ * p.x + Rational(5)) + "\" y=\"" + fixed(origin_y_ - scale_ * p.y - Rational(5)) +
         "\">" + escape(label) + "</text></g>";
    body_.push_back(std::move(e));
}

std::string Canvas::str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_) +
           "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
           std::to_string(height_) + "\">\n";
    out += "<title>" + escape(title_) + "</title>\n";
    out += "<style>"
           "line,polyline,polygon,path,circle{fill:none;stroke:#222;stroke-width:1}"
           ".hidden{stroke-dasharray:4 3}.diagonal{stroke:#a22;stroke-width:1.5}"
           ".instrument{stroke:#236;stroke-width:1.5}.point circle{fill:#222}"
           "text{font:12px serif;fill:#222}"
           "</style>\n";
    for (const auto& e : body_) out += e + "\n";
    out += "</svg>\n";
    return out;
}

}  // namespace meanprop::figures::svg
