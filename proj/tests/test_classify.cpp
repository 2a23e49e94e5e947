#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "petit/classify.hpp"

using namespace petit;

namespace {
std::vector<std::uint32_t> outside_base(const ExtensionTower& tower) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t rank = 0; rank < tower.top().size(); ++rank) {
        std::uint32_t code = tower.top().code_at_rank(rank);
        if (!tower.in_base(code)) out.push_back(code);
    }
    return out;
}

bool witness_holds(const ExtensionTower& tower, const GaloisGenerator& gen, unsigned m, std::uint32_t a,
                   std::uint32_t b, const IsoWitness& w) {
    return tower.sigma_pow(w.tau_exponent, a) == tower.top().mul(partial_norm(gen, m, w.k), b);
}
}  // namespace

TEST_CASE("iso_criterion basics") {
    auto tower = make_tower(2, 2);
    const FiniteField& f4 = tower->top();
    std::uint32_t w = f4.generator();
    GaloisGenerator sigma(tower, 1);

    auto A = PetitAlgebra::make_cyclic(tower, 1, 2, w);
    IsoVerdict self = iso_criterion(A, A);
    CHECK(self.status == IsoStatus::kIsomorphic);
    REQUIRE(self.witness.has_value());
    CHECK(witness_holds(*tower, sigma, 2, w, w, *self.witness));

    // a = w, b = w^2: tau must be the Frobenius (tau exponent 1), since the
    // partial norm image is {1}
    auto B = PetitAlgebra::make_cyclic(tower, 1, 2, f4.mul(w, w));
    IsoVerdict v = iso_criterion(A, B);
    CHECK(v.status == IsoStatus::kIsomorphic);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->tau_exponent == 1);
    CHECK(witness_holds(*tower, sigma, 2, w, f4.mul(w, w), *v.witness));

    CHECK_THROWS_AS(iso_criterion(A, PetitAlgebra::make_cyclic(tower, 1, 2, 1)), hypothesis_violation);
}

TEST_CASE("iso_criterion collapses to the F^x-multiple test when n = m") {
    auto tower = make_tower(2, 3);
    GaloisGenerator sigma(tower, 1);
    auto outside = outside_base(*tower);
    for (std::uint32_t a : outside)
        for (std::uint32_t b : outside) {
            auto A = PetitAlgebra::make_cyclic(tower, 1, 3, a);
            auto B = PetitAlgebra::make_cyclic(tower, 1, 3, b);
            bool fx_multiple = false;
            for (unsigned tau = 0; tau < 3; ++tau)
                for (std::uint32_t u : tower->base_image())
                    if (u && tower->sigma_pow(tau, a) == tower->top().mul(u, b)) fx_multiple = true;
            CHECK((iso_criterion(A, B).status == IsoStatus::kIsomorphic) == fx_multiple);
        }
}

TEST_CASE("iso_criterion is inconclusive below n = m - 1 when no witness shows") {
    auto tower = make_tower(3, 2);  // n = 2, m = 4
    const FiniteField& f9 = tower->top();
    std::uint32_t g = f9.generator();
    auto A = PetitAlgebra::make_cyclic(tower, 1, 4, g);
    auto B = PetitAlgebra::make_cyclic(tower, 1, 4, f9.pow(g, 2));
    CHECK(iso_criterion(A, B).status == IsoStatus::kInconclusive);
    // the sufficient direction still fires
    auto C = PetitAlgebra::make_cyclic(tower, 1, 4, f9.pow(g, 3));
    CHECK(iso_criterion(A, C).status == IsoStatus::kIsomorphic);  // sigma(g) = g^3
}

TEST_CASE("norm obstruction") {
    auto tower = make_tower(4, 3);
    const FiniteField& top = tower->top();
    auto outside = outside_base(*tower);

    // cubes of norms in F_4^x form {1}; pick N(a) != N(b) to obstruct
    std::uint32_t a = 0, b = 0;
    for (std::uint32_t x : outside) {
        if (tower->norm(x) != top.one() && !a) a = x;
        if (tower->norm(x) == top.one() && !b) b = x;
    }
    REQUIRE(a);
    REQUIRE(b);
    auto A = PetitAlgebra::make_cyclic(tower, 1, 3, a);
    auto B = PetitAlgebra::make_cyclic(tower, 1, 3, b);
    auto obstruction = norm_obstruction(A, B);
    REQUIRE(obstruction.has_value());
    CHECK(obstruction->status == IsoStatus::kNotIsomorphic);
    CHECK(obstruction->reason == "norm-obstruction");

    CHECK_FALSE(norm_obstruction(A, A).has_value());  // vacuous on equal constants

    // never contradicts the criterion
    for (std::uint32_t x : outside)
        for (std::uint32_t y : outside) {
            if (tower->top().rank_of(y) % 5) continue;  // sample
            auto X = PetitAlgebra::make_cyclic(tower, 1, 3, x);
            auto Y = PetitAlgebra::make_cyclic(tower, 1, 3, y);
            auto obs = norm_obstruction(X, Y);
            if (obs) CHECK(iso_criterion(X, Y).status == IsoStatus::kNotIsomorphic);
        }
}

TEST_CASE("brute-force oracle finds an automorphism of a proper algebra") {
    auto tower = make_tower(2, 2);
    auto A = PetitAlgebra::make_cyclic(tower, 1, 2, tower->top().generator());
    auto map = brute_force_iso(A, A);
    REQUIRE(map.has_value());
    CHECK(oracle_map_is_isomorphism(A, A, *map));
}

TEST_CASE("oracle agrees with the criterion at (2,2,2)") {
    auto tower = make_tower(2, 2);
    auto outside = outside_base(*tower);
    for (std::uint32_t a : outside)
        for (std::uint32_t b : outside) {
            auto A = PetitAlgebra::make_cyclic(tower, 1, 2, a);
            auto B = PetitAlgebra::make_cyclic(tower, 1, 2, b);
            bool found = brute_force_iso(A, B).has_value();
            CHECK(found == (iso_criterion(A, B).status == IsoStatus::kIsomorphic));
        }
}

TEST_CASE("cross-generator verdicts") {
    auto t22 = make_tower(2, 2);
    auto t23 = make_tower(2, 3);
    std::uint32_t w4 = t22->top().generator();
    std::uint32_t w8 = t23->top().generator();

    // different towers: left nuclei differ
    auto A4 = PetitAlgebra::make_cyclic(t22, 1, 2, w4);
    auto A8 = PetitAlgebra::make_cyclic(t23, 1, 2, w8);
    IsoVerdict different_towers = cross_generator_verdict(A4, A8);
    CHECK(different_towers.status == IsoStatus::kNotIsomorphic);
    CHECK(different_towers.reason == "nucleus-mismatch");

    // sigma vs sigma^2 over F_8, m = 3
    auto B1 = PetitAlgebra::make_cyclic(t23, 1, 3, w8);
    auto B2 = PetitAlgebra::make_cyclic(t23, 2, 3, w8);
    IsoVerdict cross = cross_generator_verdict(B1, B2);
    CHECK(cross.status == IsoStatus::kNotIsomorphic);
    CHECK(cross.reason == "cross-generator-rule");

    // same generator delegates to the criterion
    auto C1 = PetitAlgebra::make_cyclic(t23, 2, 3, w8);
    auto C2 = PetitAlgebra::make_cyclic(t23, 2, 3, t23->top().pow(w8, 2));
    CHECK(cross_generator_verdict(C1, C2).status == iso_criterion(C1, C2).status);

    CHECK_THROWS_AS(cross_generator_verdict(A4, PetitAlgebra::make_cyclic(t22, 1, 2, 1)), hypothesis_violation);
}

TEST_CASE("oracle spot checks: general modulus vs binomial across generators") {
    // t^2 - a_1 t - a_0 with both coefficients outside F against t^2 - b
    // over the other generator: no isomorphism shows up
    auto tower = make_tower(2, 3);
    const FiniteField& f8 = tower->top();
    std::uint32_t w = f8.generator();
    GaloisGenerator s1(tower, 1);
    auto outside = outside_base(*tower);
    const std::pair<std::uint32_t, std::uint32_t> coeffs[] = {
        {w, w}, {w, f8.pow(w, 2)}, {f8.pow(w, 3), f8.pow(w, 5)}};
    for (auto [a0, a1] : coeffs) {
        SkewPoly f(s1, {f8.neg(a0), f8.neg(a1), 1});
        auto A = PetitAlgebra::make(f);
        REQUIRE(A->proper());
        for (std::uint32_t b : outside) {
            auto B = PetitAlgebra::make_cyclic(tower, 2, 2, b);
            CHECK(brute_force_iso_all(A, B).empty());
        }
    }
}

TEST_CASE("cross-generator below n = m - 1 stays open above the oracle cap") {
    auto tower = make_tower(2, 5);  // K = F_32, m = 7 > n + 1
    std::uint32_t w = tower->top().generator();
    auto A = PetitAlgebra::make_cyclic(tower, 1, 7, w);
    auto B = PetitAlgebra::make_cyclic(tower, 2, 7, w);
    IsoVerdict v = cross_generator_verdict(A, B);
    CHECK(v.status == IsoStatus::kInconclusive);
    CHECK(v.reason == "cross-generator-open");
}

TEST_CASE("isotopy verdicts") {
    auto t23 = make_tower(2, 3);
    std::uint32_t w = t23->top().generator();

    // m = 2: unsupported regime
    auto small = PetitAlgebra::make_cyclic(t23, 1, 2, w);
    CHECK(isotopy_verdict(small, small).status == IsotopyStatus::kUnsupported);

    auto A = PetitAlgebra::make_cyclic(t23, 1, 3, w);
    auto B = PetitAlgebra::make_cyclic(t23, 2, 3, w);
    CHECK(isotopy_verdict(A, B).status == IsotopyStatus::kNotIsotopic);  // different generators

    // same generator: isotopic iff isomorphic
    auto C = PetitAlgebra::make_cyclic(t23, 1, 3, t23->frobenius(w));
    IsoVerdict iso = iso_criterion(A, C);
    REQUIRE(iso.status == IsoStatus::kIsomorphic);
    CHECK(isotopy_verdict(A, C).status == IsotopyStatus::kIsotopic);

    CensusResult cens = census(2, 3, 1);
    REQUIRE(cens.class_count == 2);
    auto D = PetitAlgebra::make_cyclic(t23, 1, 3, cens.representatives[0]);
    auto E = PetitAlgebra::make_cyclic(t23, 1, 3, cens.representatives[1]);
    CHECK(isotopy_verdict(D, E).status == IsotopyStatus::kNotIsotopic);
}

TEST_CASE("census partitions and counts") {
    CensusResult c23 = census(2, 3, 1);
    CHECK(c23.class_count == 2);
    CHECK(c23.formula_count == 2);

    CHECK(census(3, 2, 1).class_count == 2);
    CHECK(census(5, 2, 1).class_count == 3);
    CHECK(census(4, 3, 1).class_count == 8);
    CHECK(census(7, 3, 1).class_count == 20);

    // generator independence, representatives included
    CensusResult c1 = census(7, 3, 1), c2 = census(7, 3, 2);
    CHECK(c1.representatives == c2.representatives);

    // the partition realizes an equivalence relation consistent with the
    // criterion
    auto tower = make_tower(2, 3);
    auto outside = outside_base(*tower);
    for (std::uint32_t a : outside)
        for (std::uint32_t b : outside) {
            auto A = PetitAlgebra::make_cyclic(tower, 1, 3, a);
            auto B = PetitAlgebra::make_cyclic(tower, 1, 3, b);
            bool same_class = c23.class_index[a] == c23.class_index[b];
            CHECK(same_class == (iso_criterion(A, B).status == IsoStatus::kIsomorphic));
        }

    // census handles composite m (no formula)
    CensusResult c24 = census(2, 4, 1);
    CHECK_FALSE(c24.formula_count.has_value());
    CHECK(c24.class_count > 0);
}

TEST_CASE("S_2 parametrization") {
    S2Sets s9 = parametrize_S2(3);
    CHECK(s9.s2.members.size() == 2);
    CHECK(s9.s2.c == 2);  // least non-square in F_3
    CHECK(s9.s2_prime.members.size() == 2);

    S2Sets s25 = parametrize_S2(5);
    CHECK(s25.s2.members.size() == 3);
    CHECK(s25.s2.c == 2);

    // |S_2| = 1 + (q-1)/2
    S2Sets s49 = parametrize_S2(7);
    CHECK(s49.s2.members.size() == 1 + (7 - 1) / 2);

    CHECK_THROWS_AS(parametrize_S2(4), hypothesis_violation);  // even characteristic
}

TEST_CASE("S parametrization for m = 3 over F_7") {
    ParamSet set = parametrize_S(7, 3);
    CHECK(set.members.size() == 20);
    CHECK(set.b == 2);  // least non-cube in F_7

    auto tower = make_tower(7, 3);
    GaloisGenerator sigma(tower, 1);
    // sigma(beta) = zeta beta with zeta a primitive cube root in F_7
    CHECK(sigma(set.beta) == tower->top().mul(tower->embed(set.zeta), set.beta));
    CHECK(tower->base().mult_order(set.zeta) == 3);
    // every member has beta-support outside index 0
    for (const auto& member : set.members) CHECK((member.index_set & ~1u) != 0);

    // the other generator gives an equally valid transversal
    CHECK(parametrize_S(7, 3, 2).members.size() == 20);

    CHECK_THROWS_AS(parametrize_S(4, 3), hypothesis_violation);   // even characteristic
    CHECK_THROWS_AS(parametrize_S(7, 2), hypothesis_violation);   // m must be an odd prime
    CHECK_THROWS_AS(parametrize_S(5, 3), hypothesis_violation);   // no cube root of unity in F_5
}
