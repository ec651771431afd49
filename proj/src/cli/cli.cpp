#include "meanprop/cli.hpp"

#include "meanprop/delian.hpp"
#include "meanprop/error.hpp"
#include "meanprop/euclid_suite.hpp"
#include "meanprop/figures.hpp"
#include "meanprop/proportio.hpp"
#include "meanprop/pyramid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>

namespace meanprop::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
    std::optional<int> digits;
    std::optional<int> guard;
    bool json = false;
};

int parse_env_int(const std::optional<std::string>& text, const char* name, int fallback) {
    if (!text) return fallback;
    try {
        std::size_t used = 0;
        const int v = std::stoi(*text, &used);
        if (used == text->size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(name) + " must be an integer, got '" + *text + "'");
}

PrecisionContext context(const Common& c, const Environment& env) {
    const int digits = c.digits ? *c.digits : parse_env_int(env.digits, "MEANPROP_DIGITS", 20);
    const int guard = c.guard ? *c.guard : parse_env_int(env.guard, "MEANPROP_GUARD", 10);
    if (digits < 1) throw UsageError("precision must be at least one digit");
    return PrecisionContext::for_output(digits, guard);
}

void add_common(CLI::App* sub, Common& c, bool with_digits = true) {
    if (with_digits)
        sub->add_option("--digits", c.digits, "Output digits (default 20, or MEANPROP_DIGITS)")->check(CLI::Range(1, 10000));
    sub->add_option("--guard", c.guard, "Guard digits (default 10, or MEANPROP_GUARD)")->check(CLI::Range(5, 10000));
    sub->add_flag("--json", c.json, "Emit JSON");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// An exact square root when there is one, otherwise a rounded decimal.
std::string root_text(const Rational& sq, const PrecisionContext& ctx) {
    if (auto r = exact_sqrt(sq)) return r->to_string();
    return sqrt(Decimal::from_rational(sq, 2 * ctx.work_digits), ctx.output_digits).to_string();
}

std::string work_text(const Decimal& d, const PrecisionContext& ctx) {
    return round_to(d, ctx.work_digits + ctx.guard_digits).to_string();
}

// solve-chords -----------------------------------------------------------

struct ChordArgs {
    Common common;
    std::string diameter = "2";
};

int solve_chords(const ChordArgs& args, const Environment& env, std::ostream& out) {
    const PrecisionContext ctx = context(args.common, env);
    const Decimal d = Decimal::parse(args.diameter);
    const proportio::ChordSolution s = proportio::solve_continued_chords(d, ctx);
    const auto& r = s.reported;
    const bool ok = abs(s.residual) < ulp(ctx.output_digits) && r.ab + r.bd == r.ad;

    const std::vector<std::pair<std::string, const Decimal*>> lines{
        {"AD", &r.ad}, {"AB", &r.ab}, {"BC", &r.bc}, {"BD", &r.bd}};
    if (args.common.json) {
        Json j;
        j["command"] = "solve-chords";
        j["diameter"] = args.diameter;
        j["digits"] = ctx.output_digits;
        j["work_digits"] = ctx.work_digits;
        Json rows = Json::array();
        for (const auto& [label, v] : lines)
            rows.push_back({{"label", label}, {"value", v->to_string()}, {"grouped", format_grouped(*v)}});
        j["lines"] = rows;
        j["work"] = {{"AB", s.work.ab.to_string()},
                     {"BC", s.work.bc.to_string()},
                     {"BD", s.work.bd.to_string()},
                     {"AD", s.work.ad.to_string()}};
        j["cubic_residual"] = work_text(s.residual, ctx);
        j["iterations"] = s.iterations;
        j["verified"] = ok;
        emit(out, j);
    } else {
        out << "diameter " << args.diameter << ", " << ctx.output_digits << " digits (" << ctx.work_digits
            << " working)\n";
        std::size_t width = 0;
        for (const auto& [label, v] : lines) width = std::max(width, format_grouped(*v).size());
        for (const auto& [label, v] : lines)
            out << label << "  " << pad_left(format_grouped(*v), width) << "  " << v->to_string() << "\n";
        for (const auto& [label, v] : std::vector<std::pair<std::string, const Decimal*>>{
                 {"AB", &s.work.ab}, {"BC", &s.work.bc}, {"BD", &s.work.bd}, {"AD", &s.work.ad}})
            out << label << " (working) = " << v->to_string() << "\n";
        out << "cubic residual at working precision: " << work_text(s.residual, ctx) << "\n";
        out << "bisection steps: " << s.iterations << "\n";
        if (!ok) out << "verification FAILED\n";
    }
    return ok ? 0 : 1;
}

// verify-table -----------------------------------------------------------

struct TableArgs {
    Common common;
    std::string diameter = "2";
};

int verify_table(const TableArgs& args, const Environment& env, std::ostream& out) {
    Common c = args.common;
    c.digits = 10;
    const PrecisionContext ctx = context(c, env);
    const Decimal d = Decimal::parse(args.diameter);
    const auto rounded = proportio::solve_continued_chords(d, ctx).reported;
    const auto truth = proportio::solve_continued_chords(d, PrecisionContext{}).work;
    const proportio::PrintedTable table = proportio::reproduce_table(rounded, truth);

    // Rounded inputs keep the printed equalities only to about 10^-10.
    const Decimal tol = ulp(9);
    auto value = [&](const char* label) { return proportio::find_row(table, label)->value; };
    bool ok = abs(value("DAB") - value("CBD")) <= tol && abs(value("BC^2") - value("ABD")) <= tol &&
              abs(value("BD^2") - value("ADBC")) <= tol;
    std::set<std::string> misprinted;
    for (const auto& s : table.sections)
        for (const auto& r : s.rows)
            if (r.misprint) misprinted.insert(r.label);
    const bool printed = d == Decimal(2);
    if (printed) ok = ok && misprinted == std::set<std::string>{"DAB", "CBD", "BD^2"};

    if (args.common.json) {
        Json j;
        j["command"] = "verify-table";
        j["diameter"] = args.diameter;
        Json sections = Json::array();
        for (const auto& s : table.sections) {
            Json rows = Json::array();
            for (const auto& r : s.rows) {
                Json row;
                row["label"] = r.label;
                row["as_computed"] = r.value.to_string();
                row["grouped"] = r.grouped;
                row["as_printed"] = r.as_printed ? Json(*r.as_printed) : Json(nullptr);
                row["misprint"] = r.misprint ? Json(*r.misprint) : Json(nullptr);
                row["from_true_root"] = r.from_true_root ? Json(r.from_true_root->to_string()) : Json(nullptr);
                rows.push_back(row);
            }
            sections.push_back({{"heading", s.heading}, {"rows", rows}});
        }
        j["sections"] = sections;
        j["misprints"] = misprinted;
        j["verified"] = ok;
        emit(out, j);
        return ok ? 0 : 1;
    }

    std::size_t width = 0;
    for (const auto& s : table.sections)
        for (const auto& r : s.rows) width = std::max(width, r.grouped.size());
    bool first = true;
    for (const auto& s : table.sections) {
        if (!first) out << "\n" << s.heading << "\n";
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
            const auto& r = s.rows[i];
            std::string lead = "         ";
            if (first && i < 2) lead = i == 0 ? "Diameter " : "erit     ";
            out << lead << pad_right(r.label + ".", 6) << pad_left(r.grouped, width);
            if (r.misprint) out << "   misprint: " << *r.misprint;
            else if (r.as_printed) out << "   as printed";
            out << "\n";
        }
        first = false;
    }
    out << "\n";
    if (printed) out << "annotated misprints: " << misprinted.size() << "\n";
    out << (ok ? "table verified" : "table verification FAILED") << "\n";
    return ok ? 0 : 1;
}

// pyramid ----------------------------------------------------------------

struct PyramidArgs {
    Common common;
    std::vector<std::string> edges;
    std::vector<std::string> cosines;
};

int pyramid_cmd(const PyramidArgs& args, const Environment& env, std::ostream& out) {
    const PrecisionContext ctx = context(args.common, env);
    const Rational da = Rational::parse(args.edges.at(0));
    const Rational db = Rational::parse(args.edges.at(1));
    const Rational dc = Rational::parse(args.edges.at(2));
    const pyramid::RightPyramid p(da, db, dc);
    const Rational diag = pyramid::diagonal_sq(p);
    const Rational sphere = pyramid::circumsphere_diameter_sq(p);
    bool ok = pyramid::prism_diagonal_check(p) && sphere == diag;
    const auto trace = pyramid::verification_trace(p);

    std::optional<Rational> oblique;
    if (!args.cosines.empty()) {
        const pyramid::ObliqueVertexFrame f(da, db, dc, Rational::parse(args.cosines.at(0)),
                                            Rational::parse(args.cosines.at(1)), Rational::parse(args.cosines.at(2)));
        oblique = pyramid::oblique_diagonal_sq(f);
    }

    if (args.common.json) {
        Json j;
        j["command"] = "pyramid";
        j["edges"] = {da.to_string(), db.to_string(), dc.to_string()};
        j["diagonal_sq"] = diag.to_string();
        j["diagonal"] = root_text(diag, ctx);
        j["sphere_diameter_sq"] = sphere.to_string();
        if (oblique) {
            j["cosines"] = args.cosines;
            j["oblique_diagonal_sq"] = oblique->to_string();
            j["oblique_diagonal"] = root_text(*oblique, ctx);
        }
        j["trace"] = trace;
        j["verified"] = ok;
        emit(out, j);
    } else {
        out << "edges DA = " << da.to_string() << ", DB = " << db.to_string() << ", DC = " << dc.to_string() << "\n";
        out << "diagonal^2 = " << diag.to_string() << "\n";
        out << "diagonal = " << root_text(diag, ctx) << "\n";
        out << "sphere diameter^2 = " << sphere.to_string() << "\n";
        if (oblique) {
            out << "oblique diagonal^2 = " << oblique->to_string() << "\n";
            out << "oblique diagonal = " << root_text(*oblique, ctx) << "\n";
        }
        for (const auto& line : trace) out << "  " << line << "\n";
        if (!ok) out << "verification FAILED\n";
    }
    return ok ? 0 : 1;
}

// means and duplicate-cube -----------------------------------------------

struct MeansArgs {
    Common common;
    std::string a;
    std::string b;
    std::string method = "instrument";
};

int means_cmd(const MeansArgs& args, const Environment& env, std::ostream& out) {
    const PrecisionContext ctx = context(args.common, env);
    const Decimal a = Decimal::parse(args.a);
    const Decimal b = Decimal::parse(args.b);
    const delian::MeansResult r = delian::two_means(a, b, ctx, delian::parse_method(args.method));

    const Decimal c1 = a * r.m2_work - r.m1_work * r.m1_work;
    const Decimal c2 = r.m1_work * b - r.m2_work * r.m2_work;
    const Decimal c3 = a * b - r.m1_work * r.m2_work;
    const Decimal tol = ulp(ctx.output_digits);
    const bool ok = abs(c1) < tol && abs(c2) < tol && abs(c3) < tol;

    if (args.common.json) {
        Json j;
        j["command"] = "means";
        j["method"] = std::string(delian::to_string(r.method));
        j["a"] = args.a;
        j["b"] = args.b;
        j["digits"] = ctx.output_digits;
        j["work_digits"] = ctx.work_digits;
        j["m1"] = r.m1.to_string();
        j["m2"] = r.m2.to_string();
        j["m1_work"] = r.m1_work.to_string();
        j["m2_work"] = r.m2_work.to_string();
        j["t"] = r.t.to_string();
        j["iterations"] = r.iterations;
        j["residual"] = r.residual.to_string();
        j["checks"] = {{"a*m2 - m1^2", work_text(c1, ctx)},
                       {"m1*b - m2^2", work_text(c2, ctx)},
                       {"a*b - m1*m2", work_text(c3, ctx)}};
        j["verified"] = ok;
        emit(out, j);
    } else {
        out << "two means between " << args.a << " and " << args.b << " (" << delian::to_string(r.method) << ", "
            << ctx.output_digits << " digits)\n";
        out << "m1 = " << r.m1.to_string() << "\n";
        out << "m2 = " << r.m2.to_string() << "\n";
        out << "m1 (working) = " << r.m1_work.to_string() << "\n";
        out << "m2 (working) = " << r.m2_work.to_string() << "\n";
        out << "t = " << r.t.to_string() << "\n";
        out << "iterations = " << r.iterations << "\n";
        out << "residual = " << r.residual.to_string() << "\n";
        out << "a*m2 - m1^2 = " << work_text(c1, ctx) << "\n";
        out << "m1*b - m2^2 = " << work_text(c2, ctx) << "\n";
        out << "a*b - m1*m2 = " << work_text(c3, ctx) << "\n";
        if (!ok) out << "verification FAILED\n";
    }
    return ok ? 0 : 1;
}

struct CubeArgs {
    Common common;
    std::string edge;
};

int duplicate_cube_cmd(const CubeArgs& args, const Environment& env, std::ostream& out) {
    const PrecisionContext ctx = context(args.common, env);
    const Decimal e = Decimal::parse(args.edge);
    if (e.sign() <= 0) throw DomainError("cube edge must be positive");
    const delian::MeansResult r = delian::two_means_instrument(e, Decimal(2) * e, ctx);
    const Decimal ratio = divide(r.m1_work * r.m1_work * r.m1_work, e * e * e, ctx.work_digits);
    const bool ok = abs(ratio - Decimal(2)) < ulp(ctx.output_digits);
    if (args.common.json) {
        Json j;
        j["command"] = "duplicate-cube";
        j["edge"] = args.edge;
        j["digits"] = ctx.output_digits;
        j["doubled_edge"] = r.m1.to_string();
        j["doubled_edge_work"] = r.m1_work.to_string();
        j["volume_ratio"] = ratio.to_string();
        j["verified"] = ok;
        emit(out, j);
    } else {
        out << "edge = " << args.edge << "\n";
        out << "doubled edge = " << r.m1.to_string() << "\n";
        out << "doubled edge (working) = " << r.m1_work.to_string() << "\n";
        out << "volume ratio = " << ratio.to_string() << "\n";
        if (!ok) out << "verification FAILED\n";
    }
    return ok ? 0 : 1;
}

// four-proportionals -----------------------------------------------------

struct QuadArgs {
    Common common;
    std::string ac = "2";
    std::string t;
    bool sphere = false;
};

int four_proportionals_cmd(const QuadArgs& args, const Environment& env, std::ostream& out) {
    const PrecisionContext ctx = context(args.common, env);
    const Rational ac = Decimal::parse(args.ac).to_rational();
    const Rational t = Rational::parse(args.t);
    const int p = ctx.output_digits;

    std::vector<std::pair<std::string, Rational>> terms;
    bool ok = true;
    Json extra;
    if (args.sphere) {
        const auto s = proportio::construct_sphere(ac, t);
        terms = {{"AF", s.af}, {"AG", s.ag}, {"AD", s.ad}, {"AC", s.ac}};
        ok = s.plane_normal_dot.is_zero() && s.fg_normal && s.g_on_sphere;
        extra = {{"planes_perpendicular", s.plane_normal_dot.is_zero()},
                 {"fg_normal", s.fg_normal},
                 {"g_on_sphere", s.g_on_sphere}};
    } else {
        const auto s = proportio::construct_planar(ac, t);
        terms = {{"AF", s.af}, {"AE", s.ae}, {"AD", s.ad}, {"AC", s.ac}};
        ok = s.eg_bisected && s.congruent_afg && s.congruent_dfg && s.right_at_g;
        extra = {{"eg_bisected_at_f", s.eg_bisected},
                 {"afg_congruent_afe", s.congruent_afg},
                 {"dfg_congruent_dfe", s.congruent_dfg},
                 {"right_angle_at_g", s.right_at_g}};
    }
    const bool p19 = euclid::check_19_7(terms[0].second, terms[1].second, terms[2].second, terms[3].second);
    const bool p20 = euclid::check_20_7(terms[0].second, terms[1].second, terms[2].second) &&
                     euclid::check_20_7(terms[1].second, terms[2].second, terms[3].second);
    ok = ok && p19 && p20;

    if (args.common.json) {
        Json j;
        j["command"] = "four-proportionals";
        j["construction"] = args.sphere ? "sphere" : "planar";
        j["ac"] = args.ac;
        j["t"] = t.to_string();
        j["digits"] = p;
        Json q;
        for (const auto& [label, v] : terms) q[label] = Decimal::from_rational(v, p).to_string();
        j["quad"] = q;
        Json exact;
        for (const auto& [label, v] : terms) exact[label] = v.to_string();
        j["exact"] = exact;
        j["cross_products_equal"] = p19;
        j["means_squared_equal"] = p20;
        j["construction_checks"] = extra;
        j["verified"] = ok;
        emit(out, j);
    } else {
        out << (args.sphere ? "sphere" : "planar") << " construction, AC = " << args.ac << ", t = " << t.to_string()
            << "\n";
        for (const auto& [label, v] : terms)
            out << label << " = " << Decimal::from_rational(v, p).to_string() << "  (" << v.to_string() << ")\n";
        out << "cross products equal: " << (p19 ? "yes" : "no") << "\n";
        out << "means squared equal: " << (p20 ? "yes" : "no") << "\n";
        for (const auto& [k, v] : extra.items()) out << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
        if (!ok) out << "verification FAILED\n";
    }
    return ok ? 0 : 1;
}

// check-props ------------------------------------------------------------

struct PropsArgs {
    Common common;
    std::uint64_t seed = 42;
    int instances = 1000;
};

int check_props(const PropsArgs& args, std::ostream& out) {
    const auto tallies = euclid::run_suite(args.seed, args.instances);
    const bool ok = std::all_of(tallies.begin(), tallies.end(), [](const auto& t) { return t.ok(); });
    if (args.common.json) {
        Json j;
        j["command"] = "check-props";
        j["seed"] = args.seed;
        j["instances"] = args.instances;
        Json rows = Json::array();
        for (const auto& t : tallies)
            rows.push_back({{"name", t.name},
                            {"valid_checked", t.valid_checked},
                            {"valid_held", t.valid_held},
                            {"perturbed_checked", t.perturbed_checked},
                            {"perturbed_detected", t.perturbed_detected},
                            {"ok", t.ok()}});
        j["propositions"] = rows;
        j["all_hold"] = ok;
        emit(out, j);
    } else {
        out << "seed " << args.seed << ", " << args.instances << " instances per proposition\n";
        std::size_t width = 0;
        for (const auto& t : tallies) width = std::max(width, t.name.size());
        for (const auto& t : tallies)
            out << pad_right(t.name, width) << "  held " << t.valid_held << "/" << t.valid_checked
                << "  perturbations detected " << t.perturbed_detected << "/" << t.perturbed_checked
                << (t.ok() ? "" : "  FAILED") << "\n";
        out << (ok ? "all propositions hold" : "some propositions FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

// figure -----------------------------------------------------------------

struct FigureArgs {
    Common common;
    int id = 0;
    std::string out_path;
    std::vector<std::string> edges;
    std::string diameter = "2";
    std::string t = "1/2";
    std::string a = "1";
    std::string b = "2";
    int width = 480;
    int height = 360;
};

int figure_cmd(const FigureArgs& args, std::ostream& out) {
    figures::FigureSpec spec;
    spec.figure_id = args.id;
    if (!args.edges.empty())
        spec.edges = {Rational::parse(args.edges.at(0)), Rational::parse(args.edges.at(1)),
                      Rational::parse(args.edges.at(2))};
    spec.diameter = Decimal::parse(args.diameter);
    spec.t = Rational::parse(args.t);
    spec.a = Decimal::parse(args.a);
    spec.b = Decimal::parse(args.b);
    spec.width = args.width;
    spec.height = args.height;
    const std::string svg = figures::render(spec);

    if (args.out_path.empty()) {
        out << svg;
        return 0;
    }
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + args.out_path + "'");
    file << svg;
    file.close();
    if (!file) throw UsageError("cannot write '" + args.out_path + "'");
    if (args.common.json) {
        Json j;
        j["command"] = "figure";
        j["id"] = args.id;
        j["out"] = args.out_path;
        j["bytes"] = svg.size();
        emit(out, j);
    } else {
        out << "figure " << args.id << " written to " << args.out_path << " (" << svg.size() << " bytes)\n";
    }
    return 0;
}

}  // namespace

Environment Environment::from_process() {
    Environment env;
    if (const char* d = std::getenv("MEANPROP_DIGITS")) env.digits = d;
    if (const char* g = std::getenv("MEANPROP_GUARD")) env.guard = g;
    return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Continued proportions, mean proportionals and the right-angled pyramid", "meanprop"};
    app.require_subcommand(1);

    ChordArgs chords;
    auto* sc = app.add_subcommand("solve-chords", "Successive lines AB, BC, BD, DA in a semicircle");
    add_common(sc, chords.common);
    sc->add_option("--diameter", chords.diameter, "Diameter AD")->capture_default_str();

    TableArgs table;
    auto* vt = app.add_subcommand("verify-table", "Exact products of the 10-digit chord values against print");
    add_common(vt, table.common, false);
    vt->add_option("--diameter", table.diameter, "Diameter AD")->capture_default_str();

    PyramidArgs pyr;
    auto* py = app.add_subcommand("pyramid", "Right-angled pyramid: diagonal and circumscribed sphere");
    add_common(py, pyr.common);
    py->add_option("--edges", pyr.edges, "Edges DA DB DC")->expected(3)->required();
    py->add_option("--cosines", pyr.cosines, "Cosines of the angles AB, BC, CA for an oblique vertex")->expected(3);

    MeansArgs means;
    auto* mc = app.add_subcommand("means", "Two mean proportionals between a and b");
    add_common(mc, means.common);
    mc->add_option("--a", means.a, "Smaller line")->required();
    mc->add_option("--b", means.b, "Larger line")->required();
    mc->add_option("--method", means.method, "instrument or compass")
        ->check(CLI::IsMember({"instrument", "compass"}))
        ->capture_default_str();

    CubeArgs cube;
    auto* dc = app.add_subcommand("duplicate-cube", "Edge of the cube of twice the volume");
    add_common(dc, cube.common);
    dc->add_option("--edge", cube.edge, "Given edge")->required();

    QuadArgs quad;
    auto* fp = app.add_subcommand("four-proportionals", "AF, AE, AD, AC in the circle or the sphere");
    add_common(fp, quad.common);
    fp->add_option("--ac", quad.ac, "Diameter AC")->capture_default_str();
    fp->add_option("--t", quad.t, "tan(DAC/2), a fraction or decimal in (0, 1)")->required();
    fp->add_flag("--sphere", quad.sphere, "Use the construction in the sphere");

    PropsArgs props;
    auto* cp = app.add_subcommand("check-props", "Run the Euclid proposition checkers on random instances");
    add_common(cp, props.common, false);
    cp->add_option("--seed", props.seed, "Random seed")->capture_default_str();
    cp->add_option("--instances", props.instances, "Instances per proposition")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();

    FigureArgs fig;
    auto* fg = app.add_subcommand("figure", "Render one of the seven figures as SVG");
    add_common(fg, fig.common, false);
    fg->add_option("--id", fig.id, "Figure number 1-7")->required();
    fg->add_option("--out", fig.out_path, "Output file (default: standard output)");
    fg->add_option("--edges", fig.edges, "Edges DA DB DC for figures 1-3")->expected(3);
    fg->add_option("--diameter", fig.diameter, "Diameter for figures 4 and 5")->capture_default_str();
    fg->add_option("--t", fig.t, "Arc parameter for figure 5")->capture_default_str();
    fg->add_option("--a", fig.a, "Smaller line for figures 6 and 7")->capture_default_str();
    fg->add_option("--b", fig.b, "Larger line for figures 6 and 7")->capture_default_str();
    fg->add_option("--width", fig.width, "Canvas width")->capture_default_str();
    fg->add_option("--height", fig.height, "Canvas height")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*sc) return solve_chords(chords, env, out);
        if (*vt) return verify_table(table, env, out);
        if (*py) return pyramid_cmd(pyr, env, out);
        if (*mc) return means_cmd(means, env, out);
        if (*dc) return duplicate_cube_cmd(cube, env, out);
        if (*fp) return four_proportionals_cmd(quad, env, out);
        if (*cp) return check_props(props, out);
        if (*fg) return figure_cmd(fig, out);
    } catch (const std::invalid_argument& e) {  // usage, precondition, parse failures
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace meanprop::cli
