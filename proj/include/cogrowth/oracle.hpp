#pragma once

#include <stdexcept>
#include <vector>

#include "cogrowth/groups.hpp"
#include "cogrowth/rational.hpp"

namespace cogrowth {

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CogrowthOptions {
    long long state_cap = 50000000;
};

// a_n = number of length-n words over the alphabet whose product is the
// identity, for n = 0..n_max.  Exact DP over normal-form states, pruning
// states that cannot return within the remaining steps.
std::vector<Integer> cogrowth_sequence(const FreeProductSpec& spec, int n_max,
                                       const CogrowthOptions& opts = {});

// phi(alpha^n) for alpha = sum of the generating set in the group algebra,
// phi = coefficient of the identity; n = 0..n_max.
std::vector<Integer> finite_group_moments(const FiniteGroupTable& g,
                                          const GeneratingSetSpec& s, int n_max);

}  // namespace cogrowth
