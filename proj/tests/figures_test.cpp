#include <doctest.h>

#include "meanprop/error.hpp"
#include "meanprop/figures.hpp"

#include <fstream>
#include <sstream>

using namespace meanprop;
using meanprop::figures::FigureSpec;
using meanprop::figures::render;

namespace {

std::string golden(int id) {
    std::ifstream in(std::string(MEANPROP_GOLDEN_DIR) + "/figure" + std::to_string(id) + ".svg", std::ios::binary);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

FigureSpec spec(int id) {
    FigureSpec s;
    s.figure_id = id;
    return s;
}

}  // namespace

TEST_CASE("figures match the golden files byte for byte") {
    for (int id = 1; id <= 7; ++id) {
        INFO("figure " << id);
        CHECK(render(spec(id)) == golden(id));
    }
}

TEST_CASE("rendering is deterministic") {
    for (int id = 1; id <= 7; ++id) CHECK(render(spec(id)) == render(spec(id)));
}

TEST_CASE("figure 1 labels the diagonal AE") {
    const std::string svg = render(spec(1));
    CHECK(svg.find("<line id=\"AE\" class=\"diagonal\"") != std::string::npos);
    for (const char* p : {"A", "B", "C", "D", "E", "F", "G", "H"})
        CHECK(svg.find("id=\"" + std::string(p) + "\" data-x") != std::string::npos);
}

TEST_CASE("figure 4 places B at the solved AB") {
    const std::string svg = render(spec(4));
    CHECK(svg.find("id=\"B\" data-x=\"0.6353443923\" data-y=\"0.0000000000\"") != std::string::npos);
    CHECK(svg.find("id=\"C\" data-x=\"0.6353443923\" data-y=\"0.9311424637\"") != std::string::npos);
    CHECK(svg.find("id=\"D\" data-x=\"2.0000000000\"") != std::string::npos);
}

TEST_CASE("figures 6 and 7 put E at the first mean") {
    // cbrt 2 for a = 1, b = 2.
    for (int id : {6, 7}) {
        const std::string svg = render(spec(id));
        CHECK(svg.find("id=\"E\" data-x=\"1.2599210499\" data-y=\"0.0000000000\"") != std::string::npos);
    }
}

TEST_CASE("figure 5 carries the sphere point G") {
    // t = 1/2, AC = 2: F = (54/125)(3/5, 4/5) and FG = FE = (18/25)(4/5).
    const std::string svg = render(spec(5));
    CHECK(svg.find("id=\"G\" data-x=\"0.2592000000\" data-y=\"0.3456000000\" data-z=\"0.5760000000\"") !=
          std::string::npos);
}

TEST_CASE("invalid figure requests") {
    CHECK_THROWS_AS(render(spec(0)), UsageError);
    CHECK_THROWS_AS(render(spec(8)), UsageError);
    FigureSpec s = spec(1);
    s.width = 50;
    CHECK_THROWS_AS(render(s), UsageError);
    FigureSpec bad = spec(6);
    bad.a = 3;
    CHECK_THROWS_AS(render(bad), DomainError);
}
