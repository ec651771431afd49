#include <doctest.h>

#include "meanprop/cli.hpp"
#include "meanprop/figures.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

using meanprop::cli::Environment;
using meanprop::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args, const Environment& env = {}) {
    std::ostringstream out, err;
    const int code = run(args, out, err, env);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (line.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("solve-chords reproduces the printed lines") {
    const Result r = call({"solve-chords", "--diameter", "2", "--digits", "10"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "AB    63534 43923  0.6353443923"));
    CHECK(has_line(r.out, "BC    93114 24637  0.9311424637"));
    CHECK(has_line(r.out, "BD  1 36465 56077  1.3646556077"));
    CHECK(has_line(r.out, "AD  2 00000 00000  2.0000000000"));
}

TEST_CASE("verify-table annotates misprints") {
    const Result r = call({"verify-table"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "         DAB.  1 27068 87846 00000 00000   misprint: printed '17068' where exact arithmetic gives '27068'"));
    CHECK(has_line(r.out, "         BD^2. 1 86228 49276 27056 29929   misprint: printed '86288' where exact arithmetic gives '86228'"));
    CHECK(has_line(r.out, "         ABD.    86702 62877 72943 70071   as printed"));
    CHECK(has_line(r.out, "table verified"));

    const Result j = call({"verify-table", "--json"});
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    const auto& cbd = doc["sections"][1]["rows"][1];
    CHECK(cbd["label"] == "CBD");
    CHECK(cbd["as_printed"] == "1 17068 87846 55798 69049");
    CHECK(cbd["as_computed"] == "1.27068878465579869049");
    CHECK(doc["verified"] == true);
}

TEST_CASE("means JSON") {
    const Result r = call({"means", "--a", "1", "--b", "2", "--digits", "10", "--json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["m1"] == "1.2599210499");
    CHECK(doc["m2"] == "1.5874010520");
    CHECK(doc["method"] == "instrument");
}

TEST_CASE("text and JSON agree on every numeric field") {
    const std::vector<std::vector<std::string>> commands{
        {"means", "--a", "1", "--b", "2", "--method", "compass"},
        {"solve-chords", "--diameter", "3.5", "--digits", "15"},
        {"duplicate-cube", "--edge", "2"},
        {"four-proportionals", "--t", "1/3", "--ac", "5"},
        {"pyramid", "--edges", "2", "3", "7", "--digits", "12"},
    };
    for (auto args : commands) {
        const Result text = call(args);
        args.push_back("--json");
        const Result json = call(args);
        REQUIRE(text.code == 0);
        REQUIRE(json.code == 0);
        const auto doc = nlohmann::json::parse(json.out);
        std::function<void(const nlohmann::json&)> visit = [&](const nlohmann::json& v) {
            if (v.is_object() || v.is_array()) {
                for (const auto& x : v) visit(x);
            } else if (v.is_string()) {
                const std::string s = v.get<std::string>();
                if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s.back())) != 0) && s.find('.') != std::string::npos) {
                    INFO(args.front() << ": " << s);
                    CHECK(text.out.find(s) != std::string::npos);
                }
            }
        };
        visit(doc);
    }
}

TEST_CASE("precision from the environment, flag wins") {
    Environment env;
    env.digits = "12";
    const auto doc = nlohmann::json::parse(call({"means", "--a", "1", "--b", "2", "--json"}, env).out);
    CHECK(doc["m1"] == "1.259921049895");
    const auto flag = nlohmann::json::parse(call({"means", "--a", "1", "--b", "2", "--json", "--digits", "5"}, env).out);
    CHECK(flag["m1"] == "1.25992");
    const auto plain = nlohmann::json::parse(call({"means", "--a", "1", "--b", "2", "--json"}).out);
    CHECK(plain["m1"] == "1.25992104989487316477");
    Environment bad;
    bad.digits = "many";
    CHECK(call({"means", "--a", "1", "--b", "2"}, bad).code == 2);
}

TEST_CASE("pyramid") {
    const Result r = call({"pyramid", "--edges", "3", "4", "12"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "diagonal^2 = 169"));
    CHECK(has_line(r.out, "diagonal = 13"));
    CHECK(has_line(r.out, "sphere diameter^2 = 169"));
    const Result o = call({"pyramid", "--edges", "1", "1", "1", "--cosines", "1/2", "1/2", "1/2"});
    CHECK(has_line(o.out, "oblique diagonal^2 = 6"));
    CHECK(call({"pyramid", "--edges", "1", "1", "1", "--cosines", "-3/4", "-3/4", "-3/4"}).code == 2);
    CHECK(call({"pyramid", "--edges", "1", "0", "1"}).code == 2);
    CHECK(call({"pyramid", "--edges", "1", "1"}).code == 2);
}

TEST_CASE("four-proportionals and duplicate-cube") {
    const Result q = call({"four-proportionals", "--t", "1/2", "--digits", "4"});
    CHECK(q.code == 0);
    CHECK(has_line(q.out, "AF = 0.4320  (54/125)"));
    CHECK(has_line(q.out, "AE = 0.7200  (18/25)"));
    const Result s = call({"four-proportionals", "--t", "1/2", "--digits", "4", "--sphere"});
    CHECK(s.code == 0);
    CHECK(has_line(s.out, "AG = 0.7200  (18/25)"));
    CHECK(has_line(s.out, "planes_perpendicular: yes"));
    CHECK(call({"four-proportionals", "--t", "0"}).code == 2);

    const Result c = call({"duplicate-cube", "--edge", "2", "--digits", "10"});
    CHECK(c.code == 0);
    CHECK(has_line(c.out, "doubled edge = 2.5198420998"));
}

TEST_CASE("check-props") {
    const Result r = call({"check-props", "--seed", "42", "--instances", "100"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "seed 42, 100 instances per proposition"));
    CHECK(has_line(r.out, "all propositions hold"));
    CHECK(call({"check-props", "--seed", "42", "--instances", "100"}).out == r.out);
}

TEST_CASE("figure") {
    const std::string path = "cli_test_figure4.svg";
    const Result r = call({"figure", "--id", "4", "--out", path});
    CHECK(r.code == 0);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    meanprop::figures::FigureSpec spec;
    spec.figure_id = 4;
    CHECK(s.str() == meanprop::figures::render(spec));
    std::remove(path.c_str());
    CHECK(call({"figure", "--id", "1"}).out == meanprop::figures::render({}));
    CHECK(call({"figure", "--id", "9"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(call({}).code == 2);
    CHECK(call({"square-the-circle"}).code == 2);
    CHECK(call({"means", "--a", "1"}).code == 2);
    CHECK(call({"means", "--a", "1", "--b", "2", "--method", "ruler"}).code == 2);
    CHECK(call({"means", "--a", "3", "--b", "2"}).code == 2);
    CHECK(call({"means", "--a", "x", "--b", "2"}).code == 2);
    CHECK(call({"solve-chords", "--digits", "0"}).code == 2);
    CHECK(call({"solve-chords", "--diameter", "-2"}).code == 2);
    const Result h = call({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("solve-chords") != std::string::npos);
}

TEST_CASE("identical flags give identical bytes") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"solve-chords", "--json"}, {"verify-table"}, {"means", "--a", "2", "--b", "9"},
          {"figure", "--id", "7"}}) {
        CHECK(call(args).out == call(args).out);
    }
}
