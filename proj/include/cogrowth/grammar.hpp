#pragma once

#include <string>
#include <vector>

#include "cogrowth/groups.hpp"
#include "cogrowth/oracle.hpp"
#include "cogrowth/series.hpp"
#include "cogrowth/unipoly.hpp"

namespace cogrowth {

struct GrammarOptions {
    int max_factor_order = 12;
    // Replace the equation for F_{x^-1,{x^-1}} of a single-generator cyclic
    // factor by the syllable identity C = t^{d-1} A^{d-1}.
    bool syllable_shortcut = false;
};

// One product term: coeff * prod of unknowns (empty product = constant).
struct GrammarTerm {
    UniPoly coeff;
    std::vector<int> unknowns;
};

struct GrammarEquation {
    int lhs = 0;
    std::vector<GrammarTerm> rhs;
};

// Closed system over the unknowns F_{g,X} reachable from the root F_{1,0}.
struct EquationSystem {
    std::vector<std::string> unknown_names;
    std::vector<char> seed_one;  // 1 iff the unknown's g is the identity
    std::vector<GrammarEquation> equations;
    int root = 0;

    int size() const { return static_cast<int>(equations.size()); }
};

EquationSystem build_system(const FreeProductSpec& spec, const GrammarOptions& opts = {});

// Kleene fixpoint solution mod t^{N+1}; gains one t-order per round.
std::vector<TruncatedSeries> solve_system_all(const EquationSystem& sys, int N);
TruncatedSeries solve_system_series(const EquationSystem& sys, int N);

// format: "text" or "json"
std::string export_system(const EquationSystem& sys, const std::string& format);

}  // namespace cogrowth
