#include "snortcgt/families.hpp"

#include "snortcgt/engine.hpp"
#include "snortcgt/notation.hpp"
#include "snortcgt/thermograph.hpp"

#include <iomanip>
#include <sstream>

namespace snort {

using cgt::Dyadic;
using cgt::Game;

Position make_star(int n, Tint centre) {
    if (n < 0) throw std::invalid_argument("star needs n >= 0");
    Position p;
    int c = p.add_vertex("c", centre);
    for (int i = 1; i <= n; ++i) {
        int leaf = p.add_vertex("l" + std::to_string(i));
        p.add_edge(c, leaf);
    }
    return p;
}

Position make_joined_stars(int n, Tint a, Tint b) {
    if (n < 0) throw std::invalid_argument("joined stars need n >= 0");
    Position p;
    int ca = p.add_vertex("a", a);
    int cb = p.add_vertex("b", b);
    p.add_edge(ca, cb);
    for (int i = 1; i <= n; ++i) {
        int la = p.add_vertex("a" + std::to_string(i));
        p.add_edge(ca, la);
        int lb = p.add_vertex("b" + std::to_string(i));
        p.add_edge(cb, lb);
    }
    return p;
}

Position make_caterpillar(CaterpillarSpec spec) {
    if (spec.n < 1) throw std::invalid_argument("caterpillar needs n >= 1");
    const int n = spec.n;
    Position p;
    int a = p.add_vertex("a");
    int b = p.add_vertex("b");
    int c = p.add_vertex("c");
    p.add_edge(a, b);
    p.add_edge(b, c);
    for (int i = 1; i <= n + 1; ++i) {
        p.add_edge(a, p.add_vertex("a" + std::to_string(i)));
        p.add_edge(c, p.add_vertex("c" + std::to_string(i)));
    }
    for (int i = 1; i <= n; ++i) {
        p.add_edge(b, p.add_vertex("b" + std::to_string(i)));
    }
    return p;
}

Position make_witness_tree() {
    std::vector<std::pair<std::string, Tint>> vertices;
    for (int i = 1; i <= 14; ++i) vertices.emplace_back(std::to_string(i), Tint::None);
    std::vector<std::pair<std::string, std::string>> edges = {
        {"1", "2"}, {"2", "3"}, {"1", "4"}, {"1", "5"}, {"1", "6"},
        {"2", "7"}, {"2", "8"}, {"7", "9"}, {"7", "10"}, {"7", "11"},
        {"3", "12"}, {"3", "13"}, {"3", "14"},
    };
    return Position(std::move(vertices), edges);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Star: return "star";
        case Family::TintedStar: return "tinted-star";
        case Family::JoinedStars: return "joined-stars";
        case Family::Caterpillar: return "caterpillar";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "star") return Family::Star;
    if (name == "tinted-star") return Family::TintedStar;
    if (name == "joined-stars") return Family::JoinedStars;
    if (name == "caterpillar") return Family::Caterpillar;
    throw UnsupportedFamily("unknown family: " + name);
}

namespace {

// s(n): 0 for even n, * for odd n.
Game parity_star(int n) {
    return n % 2 == 0 ? Game() : cgt::star();
}

// The game x + s where x is an integer and s is 0 or *.
Game int_plus(int x, int n_for_parity) {
    Game base = cgt::integer(x);
    if (n_for_parity % 2 == 0) return base;
    return cgt::make_game({base}, {base});  // x* in canonical form
}

Position family_position(Family f, int n) {
    switch (f) {
        case Family::Star: return make_star(n, Tint::None);
        case Family::TintedStar: return make_star(n, Tint::Blue);
        case Family::JoinedStars: return make_joined_stars(n, Tint::Blue, Tint::Red);
        case Family::Caterpillar: return make_caterpillar({n});
    }
    throw UnsupportedFamily("unknown family");
}

Dyadic expected_temperature(Family f, int n) {
    switch (f) {
        case Family::Star: return Dyadic(n);
        case Family::TintedStar: return Dyadic::fraction(n, 1);  // n/2
        case Family::JoinedStars: return Dyadic(n);
        case Family::Caterpillar: return Dyadic(2 * n + 1);
    }
    throw UnsupportedFamily("unknown family");
}

int expected_degree(Family f, int n) {
    switch (f) {
        case Family::Star: return n;
        case Family::TintedStar: return n;
        case Family::JoinedStars: return n + 1;
        case Family::Caterpillar: return n + 2;
    }
    throw UnsupportedFamily("unknown family");
}

}  // namespace

Game oracle_value(Family f, int n) {
    switch (f) {
        case Family::Star: {
            if (n < 0) throw UnsupportedFamily("star oracle needs n >= 0");
            Game g = cgt::integer(n);
            return cgt::canonicalize(cgt::make_game({g}, {cgt::negate(g)}));
        }
        case Family::TintedStar: {
            if (n < 1) throw UnsupportedFamily("tinted star oracle needs n >= 1");
            Game right = parity_star(n + 1);  // * when n even, 0 when n odd
            return cgt::canonicalize(cgt::make_game({cgt::integer(n)}, {right}));
        }
        case Family::JoinedStars: {
            if (n < 1) throw UnsupportedFamily("joined stars oracle needs n >= 1");
            Game g = int_plus(n, n);  // n or n*
            return cgt::canonicalize(cgt::make_game({g}, {cgt::negate(g)}));
        }
        case Family::Caterpillar: {
            if (n < 1) throw UnsupportedFamily("caterpillar oracle needs n >= 1");
            Game first = int_plus(2 * n + 1, n);
            Game inner = cgt::make_game({cgt::integer(3 * n + 2)}, {int_plus(2 * n + 2, n - 1)});
            Game second = cgt::make_game({inner}, {parity_star(n)});
            std::vector<Game> left{first, second};
            std::vector<Game> right{cgt::negate(first), cgt::negate(second)};
            return cgt::canonicalize(cgt::make_game(left, right));
        }
    }
    throw UnsupportedFamily("unknown family");
}

bool VerifyReport::all_passed() const {
    for (const auto& row : rows) {
        if (!row.passed()) return false;
    }
    return true;
}

VerifyReport verify_family(Family f, int n_min, int n_max) {
    VerifyReport report;
    report.family = f;
    for (int n = n_min; n <= n_max; ++n) {
        VerifyRow row;
        row.n = n;
        Position p = family_position(f, n);
        Game engine = value(p);
        Game oracle = oracle_value(f, n);
        row.engine_form = cgt::format_game(engine);
        row.oracle_form = cgt::format_game(oracle);
        row.forms_match = row.engine_form == row.oracle_form;
        row.values_equal = cgt::eq(engine, oracle);
        row.temperature = cgt::temperature(engine);
        row.expected_temperature = expected_temperature(f, n);
        row.temperature_ok = row.temperature == row.expected_temperature;
        row.degree = degree(p);
        row.expected_degree = expected_degree(f, n);
        row.degree_ok = row.degree == row.expected_degree;
        row.t_minus_deg = row.temperature - Dyadic(row.degree);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string report_text(const VerifyReport& report) {
    std::ostringstream out;
    std::size_t form_width = 14;
    for (const auto& row : report.rows) {
        form_width = std::max(form_width, row.engine_form.size());
    }
    out << "family: " << family_name(report.family) << "\n";
    out << std::left << std::setw(4) << "n" << std::setw(form_width + 2) << "canonical form"
        << std::setw(8) << "t(G)" << std::setw(8) << "deg(G)" << std::setw(10) << "t-deg"
        << "status\n";
    for (const auto& row : report.rows) {
        out << std::left << std::setw(4) << row.n << std::setw(form_width + 2) << row.engine_form
            << std::setw(8) << row.temperature.str() << std::setw(8) << row.degree
            << std::setw(10) << row.t_minus_deg.str() << (row.passed() ? "ok" : "FAIL");
        if (!row.forms_match) out << " [form: expected " << row.oracle_form << "]";
        if (!row.values_equal) out << " [value mismatch]";
        if (!row.temperature_ok) out << " [t: expected " << row.expected_temperature.str() << "]";
        if (!row.degree_ok) out << " [deg: expected " << row.expected_degree << "]";
        out << "\n";
    }
    out << (report.all_passed() ? "all rows pass" : "FAILURES present") << "\n";
    return out.str();
}

nlohmann::ordered_json report_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["family"] = family_name(report.family);
    j["allPassed"] = report.all_passed();
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["canonicalForm"] = row.engine_form;
        r["oracleForm"] = row.oracle_form;
        r["temperature"] = row.temperature.str();
        r["expectedTemperature"] = row.expected_temperature.str();
        r["degree"] = row.degree;
        r["expectedDegree"] = row.expected_degree;
        r["tMinusDeg"] = row.t_minus_deg.str();
        r["passed"] = row.passed();
        j["rows"].push_back(std::move(r));
    }
    return j;
}

}  // namespace snort
