#include <doctest.h>

#include "meanprop/error.hpp"
#include "meanprop/euclid_suite.hpp"
#include "meanprop/proportio.hpp"

using namespace meanprop;
using namespace meanprop::proportio;

namespace {

Rational cubic(const Rational& d, const Rational& x) {
    const Rational r = d - x;
    return r * r * r - d * d * x;
}

// Plain bisection over exact fractions; independent of the integer-scaled
// bisection and Newton polish in the solver.
Rational bisect_oracle(const Rational& d, int steps) {
    Rational lo, hi = d;
    for (int i = 0; i < steps; ++i) {
        const Rational mid = (lo + hi) / Rational(2);
        (cubic(d, mid).sign() > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / Rational(2);
}

PrecisionContext ten_digits() { return PrecisionContext::for_output(10); }

}  // namespace

TEST_CASE("chord solution at d = 2 matches the printed lines") {
    const ChordSolution s = solve_continued_chords(Decimal(2), ten_digits());
    CHECK(s.reported.ab == Decimal::parse_grouped("63534 43923"));
    CHECK(s.reported.bc == Decimal::parse_grouped("93114 24637"));
    CHECK(s.reported.bd == Decimal::parse_grouped("1 36465 56077"));
    CHECK(s.reported.ab.to_string() == "0.6353443923");
    CHECK(s.reported.bc.to_string() == "0.9311424637");
    CHECK(s.reported.bd.to_string() == "1.3646556077");
    CHECK((s.reported.ab + s.reported.bd).to_string() == "2.0000000000");
    CHECK(s.iterations > 0);
}

TEST_CASE("chord solution at working precision") {
    const PrecisionContext ctx{};  // 30 / 20 / 10
    const ChordSolution s = solve_continued_chords(Decimal(2), ctx);
    // mpmath, 60 digits: 0.635344392343961345261032520577903486...
    CHECK(s.work.ab.to_string() == "0.635344392343961345261032520578");
    CHECK(s.reported.ab.to_string() == "0.63534439234396134526");
    CHECK(abs(s.residual) < ulp(20));
    // Sign change across one working ulp on either side.
    const Rational d(2);
    const Rational x = s.work.ab.to_rational();
    const Rational u = ulp(30).to_rational();
    CHECK(cubic(d, x - u).sign() > 0);
    CHECK(cubic(d, x + u).sign() < 0);
    // AB:BC = BC:BD = BD:AD at working precision.
    CHECK(verify_continued_proportion({s.work.ab, s.work.bc, s.work.bd, s.work.ad}, ulp(28)));
}

TEST_CASE("chord solution at d = 1 is half the d = 2 solution") {
    const PrecisionContext ctx{};
    const ChordSolution one = solve_continued_chords(Decimal(1), ctx);
    const ChordSolution two = solve_continued_chords(Decimal(2), ctx);
    // mpmath: 0.317672196171980672630516260288951743...
    CHECK(one.work.ab.to_string() == "0.317672196171980672630516260289");
    const Rational oracle = bisect_oracle(Rational(1), 120);
    CHECK(abs(one.work.ab.to_rational() - oracle) <= ulp(30).to_rational() / Rational(2));
    CHECK(abs(Rational(2) * one.work.ab.to_rational() - two.work.ab.to_rational()) <= ulp(30).to_rational() * Rational(2));
}

TEST_CASE("chord solution scale equivariance and residual") {
    euclid::InstanceGenerator g(21);
    const PrecisionContext ctx{};
    for (int i = 0; i < 40; ++i) {
        const Decimal d = Decimal::from_rational(g.positive_rational(), 6) + ulp(6);
        const Decimal k = Decimal::from_rational(g.positive_rational(), 3) + ulp(3);
        const ChordSolution base = solve_continued_chords(d, ctx);
        const ChordSolution scaled = solve_continued_chords(k * d, ctx);
        const Rational gap = abs(k.to_rational() * base.work.ab.to_rational() - scaled.work.ab.to_rational());
        CHECK(gap <= k.to_rational() * ulp(30).to_rational() + ulp(30).to_rational());
        CHECK(abs(scaled.residual) < ulp(20));
    }
}

TEST_CASE("chord solver rejects non-positive diameters") {
    CHECK_THROWS_AS(solve_continued_chords(Decimal(0), {}), DomainError);
    CHECK_THROWS_AS(solve_continued_chords(Decimal::parse("-1.5"), {}), DomainError);
}

TEST_CASE("table reproduction") {
    const ChordSolution s = solve_continued_chords(Decimal(2), ten_digits());
    const PrintedTable t = reproduce_table(s.reported, solve_continued_chords(Decimal(2), {}).work);
    REQUIRE(t.sections.size() == 3);

    auto row = [&](const char* label) {
        const TableRow* r = find_row(t, label);
        REQUIRE(r != nullptr);
        return *r;
    };
    for (const char* label : {"AD", "AB", "BC", "BD", "BC^2", "ABD", "ADBC"}) {
        INFO(label);
        const TableRow r = row(label);
        CHECK(r.as_printed == r.grouped);
        CHECK_FALSE(r.misprint);
    }
    // Exact products of the rounded values, from Python's decimal module.
    CHECK(row("DAB").value.to_string() == "1.27068878460000000000");
    CHECK(row("CBD").value.to_string() == "1.27068878465579869049");
    CHECK(row("BC^2").value.to_string() == "0.86702628770530581769");
    CHECK(row("ABD").value.to_string() == "0.86702628777294370071");
    CHECK(row("BD^2").value.to_string() == "1.86228492762705629929");
    CHECK(row("ADBC").value.to_string() == "1.86228492740000000000");

    CHECK(row("CBD").grouped == "1 27068 87846 55798 69049");
    CHECK(row("BD^2").grouped == "1 86228 49276 27056 29929");
    for (const char* label : {"DAB", "CBD"}) {
        const TableRow r = row(label);
        REQUIRE(r.misprint);
        CHECK(*r.misprint == "printed '17068' where exact arithmetic gives '27068'");
    }
    REQUIRE(row("BD^2").misprint);
    CHECK(*row("BD^2").misprint == "printed '86288' where exact arithmetic gives '86228'");

    // Tails as printed.
    auto tail = [](const std::string& s) { return s.substr(s.size() - 11); };
    CHECK(tail(row("CBD").grouped) == "55798 69049");
    CHECK(tail(row("BD^2").grouped) == "27056 29929");
    CHECK(tail(row("BC^2").grouped) == "05305 81769");
    CHECK(tail(row("ABD").grouped) == "72943 70071");

    // True-root products: BC^2 = AB.BD holds there, unlike the rounded table.
    CHECK(row("BC^2").from_true_root == row("ABD").from_true_root);
    CHECK(row("BC").from_true_root->to_string() == "0.93114246375353605331");
}

TEST_CASE("table needs 10-digit inputs") {
    const ChordSolution s = solve_continued_chords(Decimal(2), {});
    CHECK_THROWS_AS(reproduce_table(s.reported), PreconditionError);
    // A different diameter has nothing to compare against print.
    const ChordSolution other = solve_continued_chords(Decimal(3), ten_digits());
    const PrintedTable t = reproduce_table(other.reported);
    CHECK_FALSE(find_row(t, "AB")->as_printed);
}

TEST_CASE("four proportionals at t = 1/2") {
    // cos DAC = 3/5: AD = 6/5, AE = 18/25, AF = 54/125 for AC = 2.
    const ExactPlanar p = construct_planar(Rational(2), Rational(1, 2));
    CHECK(p.ad == Rational(6, 5));
    CHECK(p.ae == Rational(18, 25));
    CHECK(p.af == Rational(54, 125));
    CHECK(euclid::check_19_7(p.af, p.ae, p.ad, p.ac));
    CHECK(euclid::check_20_7(p.af, p.ae, p.ad));
    CHECK(euclid::check_20_7(p.ae, p.ad, p.ac));
    CHECK(p.eg_bisected);
    CHECK(p.congruent_afg);
    CHECK(p.congruent_dfg);
    CHECK(p.right_at_g);
}

TEST_CASE("four proportionals at 45 degrees") {
    const Decimal t = sqrt(Decimal(2), 30) - Decimal(1);
    const PrecisionContext ctx = ten_digits();
    const ProportionalsQuad q = four_proportionals_planar(Decimal(2), t, ctx);
    CHECK(q.af.to_string() == "0.7071067812");
    CHECK(q.ae.to_string() == "1.0000000000");
    CHECK(q.ad.to_string() == "1.4142135624");
    CHECK(q.ac.to_string() == "2.0000000000");
    const ProportionalsQuad s = four_proportionals_sphere(Decimal(2), t, ctx);
    CHECK(s.af == q.af);
    CHECK(s.ae == q.ae);
    CHECK(s.ad == q.ad);
    CHECK(s.ac == q.ac);
}

TEST_CASE("four proportionals approach (2,2,2,2) as D nears C") {
    Rational previous_gap(10);
    for (long n : {10L, 100L, 1000L, 10000L}) {
        const ExactPlanar p = construct_planar(Rational(2), Rational(1, n));
        CHECK(p.af < p.ae);
        CHECK(p.ae < p.ad);
        CHECK(p.ad < p.ac);
        const Rational gap = Rational(2) - p.af;
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
    CHECK(previous_gap < Rational(1, 1000000));  // 12 t^2 for small t
}

TEST_CASE("planar and sphere quads agree on rational parameters") {
    euclid::InstanceGenerator g(22);
    for (int i = 0; i < 100; ++i) {
        Rational t = g.unit_interval();
        while (t.is_zero() || t == Rational(1)) t = g.unit_interval();
        const Rational ac = g.positive_rational();
        const ExactPlanar p = construct_planar(ac, t);
        CHECK(euclid::check_19_7(p.af, p.ae, p.ad, p.ac));
        CHECK(euclid::check_20_7(p.af, p.ae, p.ad));
        CHECK(euclid::check_20_7(p.ae, p.ad, p.ac));
        CHECK(p.eg_bisected);
        CHECK(p.congruent_afg);
        CHECK(p.congruent_dfg);
        CHECK(p.right_at_g);
        const ExactSphere s = construct_sphere(ac, t);
        CHECK(s.af == p.af);
        CHECK(s.ag == p.ae);
        CHECK(s.ad == p.ad);
        CHECK(s.plane_normal_dot.is_zero());
        CHECK(s.fg_normal);
        CHECK(s.g_on_sphere);
    }
}

TEST_CASE("four proportionals reject degenerate positions") {
    CHECK_THROWS_AS(construct_planar(Rational(2), Rational(0)), DegeneratePositionError);
    CHECK_THROWS_AS(construct_planar(Rational(2), Rational(1)), DegeneratePositionError);
    CHECK_THROWS_AS(construct_planar(Rational(2), Rational(3, 2)), DomainError);
    CHECK_THROWS_AS(construct_planar(Rational(0), Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(four_proportionals_sphere(Decimal(2), Decimal(0), {}), DegeneratePositionError);
}

TEST_CASE("verify_continued_proportion") {
    CHECK(verify_continued_proportion({1, 2, 4, 8}, Decimal(0)));
    CHECK_FALSE(verify_continued_proportion({1, 2, 4, 9}, Decimal(0)));
    CHECK(verify_continued_proportion({1, 2, 4, 9}, Decimal(8)));
    CHECK(verify_continued_proportion({Decimal::parse("0.5"), 1, 2}, Decimal(0)));
    CHECK_THROWS_AS(verify_continued_proportion({1, 2}, Decimal(0)), PreconditionError);
}
