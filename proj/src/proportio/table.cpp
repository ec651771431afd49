#include "meanprop/error.hpp"
#include "meanprop/proportio.hpp"

#include <array>
#include <sstream>

namespace meanprop::proportio {

namespace {

constexpr int table_digits = 10;

struct Printed {
    const char* label;
    const char* digits;
};

// The tables as typeset for a diameter of 2.
constexpr std::array<Printed, 10> printed{{
    {"AD", "2 00000 00000"},
    {"AB", "63534 43923"},
    {"BC", "93114 24637"},
    {"BD", "1 36465 56077"},
    {"DAB", "1 17068 87846 00000 00000"},
    {"CBD", "1 17068 87846 55798 69049"},
    {"BC^2", "86702 62877 05305 81769"},
    {"ABD", "86702 62877 72943 70071"},
    {"BD^2", "1 86288 49276 27056 29929"},
    {"ADBC", "1 86228 49274 00000 00000"},
}};

const char* printed_digits(std::string_view label) {
    for (const auto& p : printed)
        if (label == p.label) return p.digits;
    return nullptr;
}

std::vector<std::string> split_groups(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string g; in >> g;) out.push_back(g);
    return out;
}

std::string describe_misprint(const std::string& as_printed, const std::string& computed) {
    const auto p = split_groups(as_printed);
    const auto c = split_groups(computed);
    if (p.size() != c.size()) return "printed '" + as_printed + "', exact arithmetic gives '" + computed + "'";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == c[i]) continue;
        if (!out.empty()) out += "; ";
        out += "printed '" + p[i] + "' where exact arithmetic gives '" + c[i] + "'";
    }
    return out;
}

TableRow make_row(std::string label, Decimal value, bool printed_diameter, const std::optional<Decimal>& true_value) {
    TableRow row;
    row.grouped = format_grouped(value);
    if (printed_diameter) {
        if (const char* p = printed_digits(label)) {
            row.as_printed = p;
            if (row.grouped != p) row.misprint = describe_misprint(p, row.grouped);
        }
    }
    row.label = std::move(label);
    row.value = std::move(value);
    row.from_true_root = true_value;
    return row;
}

}  // namespace

PrintedTable reproduce_table(const ChordConfig& c, const std::optional<ChordConfig>& true_root) {
    for (const Decimal* v : {&c.ab, &c.bc, &c.bd, &c.ad}) {
        if (v->scale() != table_digits)
            throw PreconditionError("table entries must carry exactly 10 fractional digits");
    }
    const bool printed_diameter = c.ad == Decimal(2);
    const int product_digits = 2 * table_digits;

    auto truth = [&](auto&& f) -> std::optional<Decimal> {
        if (!true_root) return std::nullopt;
        return round_to(f(*true_root), product_digits);
    };
    auto row = [&](std::string label, Decimal value, auto&& f) {
        return make_row(std::move(label), std::move(value), printed_diameter, truth(f));
    };

    PrintedTable t;
    t.sections.push_back({"lines",
                          {
                              row("AD", c.ad, [](const ChordConfig& x) { return x.ad; }),
                              row("AB", c.ab, [](const ChordConfig& x) { return x.ab; }),
                              row("BC", c.bc, [](const ChordConfig& x) { return x.bc; }),
                              row("BD", c.bd, [](const ChordConfig& x) { return x.bd; }),
                          }});
    t.sections.push_back({"rectangles",
                          {
                              row("DAB", c.ad * c.ab, [](const ChordConfig& x) { return x.ad * x.ab; }),
                              row("CBD", c.bc * c.bd, [](const ChordConfig& x) { return x.bc * x.bd; }),
                          }});
    t.sections.push_back({"squares",
                          {
                              row("BC^2", c.bc * c.bc, [](const ChordConfig& x) { return x.bc * x.bc; }),
                              row("ABD", c.ab * c.bd, [](const ChordConfig& x) { return x.ab * x.bd; }),
                              row("BD^2", c.bd * c.bd, [](const ChordConfig& x) { return x.bd * x.bd; }),
                              row("ADBC", c.ad * c.bc, [](const ChordConfig& x) { return x.ad * x.bc; }),
                          }});
    return t;
}

const TableRow* find_row(const PrintedTable& table, std::string_view label) {
    for (const auto& s : table.sections)
        for (const auto& r : s.rows)
            if (r.label == label) return &r;
    return nullptr;
}

}  // namespace meanprop::proportio
