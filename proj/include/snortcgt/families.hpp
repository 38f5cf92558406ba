#pragma once

#include "snortcgt/dyadic.hpp"
#include "snortcgt/game.hpp"
#include "snortcgt/position.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace snort {

class UnsupportedFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// K_{1,n}: centre plus n leaves, centre tinted as requested.
Position make_star(int n, Tint centre);

// Two K_{1,n} stars with their centres joined by an edge.
Position make_joined_stars(int n, Tint a, Tint b);

struct CaterpillarSpec {
    int n;  // >= 1
};

// Path a-b-c with n+1 leaves on a and c and n leaves on b (3n+5 vertices).
Position make_caterpillar(CaterpillarSpec spec);

// 14-vertex tree whose temperature exceeds its degree by 3/2; ships as the
// default seed for the search and as a regression fixture.
Position make_witness_tree();

enum class Family { Star, TintedStar, JoinedStars, Caterpillar };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Closed-form value of a family member, built from its formula and
// canonicalized:
//   star n               -> +-n
//   tinted star n        -> {n | *} (n even) / {n | 0} (n odd), centre blue
//   joined stars n       -> +-n (n even) / +-(n*) (n odd), opposite tints
//   caterpillar n        -> +-{2n+1+s(n), {{3n+2 | 2n+2+s(n-1)} | s(n)}},
//                           s(n) = 0 for even n, * for odd n
cgt::Game oracle_value(Family f, int n);

struct VerifyRow {
    int n = 0;
    std::string engine_form;
    std::string oracle_form;
    bool forms_match = false;    // formatted text identical
    bool values_equal = false;   // eq(engine, oracle)
    cgt::Dyadic temperature;
    cgt::Dyadic expected_temperature;
    bool temperature_ok = false;
    int degree = 0;
    int expected_degree = 0;
    bool degree_ok = false;
    cgt::Dyadic t_minus_deg;

    bool passed() const { return forms_match && values_equal && temperature_ok && degree_ok; }
};

struct VerifyReport {
    Family family = Family::Star;
    std::vector<VerifyRow> rows;
    bool all_passed() const;
};

// Computes each member with the engine and checks canonical text, value
// equality, temperature and degree against the closed forms.
VerifyReport verify_family(Family f, int n_min, int n_max);

std::string report_text(const VerifyReport& report);
nlohmann::ordered_json report_json(const VerifyReport& report);

}  // namespace snort
