#include "cogrowth/oracle.hpp"
#include "doctest.h"

using namespace cogrowth;

namespace {

FactorSpec cyc(int d, bool symmetric = false) {
    FiniteGroupTable g = FiniteGroupTable::cyclic(d);
    std::vector<int> gens{1 % d};
    if (symmetric && d > 2) gens.push_back(d - 1);
    return FactorSpec::finite(g, GeneratingSetSpec(g, gens), 1);
}

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("cogrowth: Z2*Z2") {
    FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    FreeProductSpec spec({FactorSpec::finite(z2, GeneratingSetSpec(z2, {1}), 2)});
    CHECK(cogrowth_sequence(spec, 6) == ints({1, 0, 2, 0, 6, 0, 20}));
}

TEST_CASE("cogrowth: Z2*Z3 with S={x,y}") {
    FreeProductSpec spec({cyc(2), cyc(3)});
    CHECK(cogrowth_sequence(spec, 7) == ints({1, 0, 1, 1, 1, 5, 2, 14}));
}

TEST_CASE("cogrowth: Z3*Z3 with S={x,y}") {
    FiniteGroupTable z3 = FiniteGroupTable::cyclic(3);
    FreeProductSpec spec({FactorSpec::finite(z3, GeneratingSetSpec(z3, {1}), 2)});
    CHECK(cogrowth_sequence(spec, 9) == ints({1, 0, 0, 2, 0, 0, 8, 0, 0, 38}));
}

TEST_CASE("cogrowth: single Z2 with S={x}") {
    FreeProductSpec spec({cyc(2)});
    CHECK(cogrowth_sequence(spec, 4) == ints({1, 0, 1, 0, 1}));
}

TEST_CASE("cogrowth: Z2*Z with S={x,y,y^-1}") {
    FreeProductSpec spec({cyc(2), FactorSpec::z(1)});
    CHECK(cogrowth_sequence(spec, 6) == ints({1, 0, 3, 0, 15, 0, 87}));
}

TEST_CASE("cogrowth: n_max guard and state cap") {
    FreeProductSpec spec({cyc(2), FactorSpec::z(1)});
    CHECK_THROWS_AS(cogrowth_sequence(spec, -1), std::domain_error);
    CogrowthOptions tiny;
    tiny.state_cap = 2;
    CHECK_THROWS_AS(cogrowth_sequence(spec, 8, tiny), CapacityError);
}

TEST_CASE("cogrowth: native Z path matches z_to_z2z2") {
    FreeProductSpec z({FactorSpec::z(1)});
    CHECK(cogrowth_sequence(z, 12) == cogrowth_sequence(z_to_z2z2(z), 12));

    FreeProductSpec z2z({cyc(2), FactorSpec::z(1)});
    CHECK(cogrowth_sequence(z2z, 12) == cogrowth_sequence(z_to_z2z2(z2z), 12));

    FreeProductSpec z3z({cyc(3, true), FactorSpec::z(1)});
    CHECK(cogrowth_sequence(z3z, 10) == cogrowth_sequence(z_to_z2z2(z3z), 10));
}

TEST_CASE("cogrowth: symmetric-set monotonicity a_{n+2} >= a_n") {
    FreeProductSpec spec({cyc(3, true), cyc(2)});
    auto a = cogrowth_sequence(spec, 12);
    for (size_t n = 0; n + 2 < a.size(); ++n) CHECK(a[n + 2] >= a[n]);
}

TEST_CASE("cogrowth: bipartite parity for Z2 factors") {
    FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    FreeProductSpec spec({FactorSpec::finite(z2, GeneratingSetSpec(z2, {1}), 3)});
    auto a = cogrowth_sequence(spec, 13);
    for (size_t n = 1; n < a.size(); n += 2) CHECK(a[n] == 0);
}

TEST_CASE("moments: Z2 with S={x}") {
    FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    CHECK(finite_group_moments(z2, GeneratingSetSpec(z2, {1}), 4) ==
          ints({1, 0, 1, 0, 1}));
}

TEST_CASE("moments: Z3 with S={x,x^-1}") {
    FiniteGroupTable z3 = FiniteGroupTable::cyclic(3);
    auto m = finite_group_moments(z3, GeneratingSetSpec(z3, {1, 2}), 8);
    for (int n = 0; n <= 8; ++n) {
        Integer expect;  // (2^n + 2(-1)^n)/3
        mpz_ui_pow_ui(expect.get_mpz_t(), 2, n);
        expect += (n % 2 == 0) ? 2 : -2;
        expect /= 3;
        CHECK(m[n] == expect);
    }
}

TEST_CASE("moments: Z4 with S={x}") {
    FiniteGroupTable z4 = FiniteGroupTable::cyclic(4);
    auto m = finite_group_moments(z4, GeneratingSetSpec(z4, {1}), 9);
    for (int n = 0; n <= 9; ++n) CHECK(m[n] == (n % 4 == 0 ? 1 : 0));
}

TEST_CASE("moments: single-factor consistency with the walk DP") {
    // With one finite factor, moments and cogrowth coincide.
    FiniteGroupTable z5 = FiniteGroupTable::cyclic(5);
    GeneratingSetSpec s(z5, {1, 4});
    FreeProductSpec spec({FactorSpec::finite(z5, s, 1)});
    CHECK(finite_group_moments(z5, s, 10) == cogrowth_sequence(spec, 10));
}
