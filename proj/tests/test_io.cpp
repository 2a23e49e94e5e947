#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "petit/io.hpp"

using namespace petit;

TEST_CASE("element literals") {
    auto tower = make_tower(2, 3);
    const FiniteField& f8 = tower->top();
    std::uint32_t w = f8.generator();

    CHECK(parse_element(f8, "0") == 0);
    CHECK(parse_element(f8, "1") == f8.one());
    CHECK(parse_element(f8, "w") == w);
    CHECK(parse_element(f8, "w^3") == f8.pow(w, 3));
    CHECK(parse_element(f8, "1,0,1") == f8.code_from_coords(std::vector<std::uint32_t>{1, 0, 1}));

    auto f7 = make_field(7, 1);
    CHECK(parse_element(*f7, "2") == 2);
    CHECK(parse_element(*f7, "9") == 2);  // reduced mod p

    CHECK_THROWS_AS(parse_element(f8, "x^2"), error);
    CHECK_THROWS_AS(parse_element(f8, "1,0"), error);

    for (std::uint32_t code = 0; code < 8; ++code) CHECK(parse_element(f8, format_element(f8, code)) == code);
}

TEST_CASE("field and polynomial JSON round-trips") {
    auto tower = make_tower(2, 3);
    Json fj = field_json(tower->top());
    CHECK(fj["p"] == 2);
    CHECK(fj["e"] == 3);
    CHECK(fj["modulus"].size() == 4);

    GaloisGenerator sigma(tower, 2);
    SkewPoly f(sigma, {tower->top().generator(), 0, 1});
    SkewPoly back = skew_poly_from_json(tower, skew_poly_json(f));
    CHECK(back == f);

    for (std::uint32_t code = 0; code < 8; ++code)
        CHECK(element_from_json(tower->top(), element_json(tower->top(), code)) == code);
}

TEST_CASE("verdict and census JSON shapes") {
    auto tower = make_tower(2, 2);
    std::uint32_t w = tower->top().generator();
    auto A = PetitAlgebra::make_cyclic(tower, 1, 2, w);
    auto B = PetitAlgebra::make_cyclic(tower, 1, 2, tower->top().pow(w, 2));
    Json vj = iso_verdict_json(iso_criterion(A, B), tower->top());
    CHECK(vj["status"] == "Isomorphic");
    CHECK(vj.contains("witness"));
    CHECK(vj["witness"]["tau"] == 1);

    Json cj = census_json(census(2, 3, 1));
    CHECK(cj["schema"] == kSchemaVersion);
    CHECK(cj["count"] == 2);
    CHECK(cj["formula_count"] == 2);
    CHECK(cj["representatives"].size() == 2);

    Json aj = algebra_json(*A);
    CHECK(aj["q"] == 2);
    CHECK(aj["proper"] == true);
    CHECK(aj.contains("a"));
}

TEST_CASE("parametrization and code JSON shapes") {
    Json pj = param_set_json(parametrize_S2(3).s2);
    CHECK(pj["kind"] == "S2");
    CHECK(pj["members"].size() == 2);
    CHECK(pj["base_data"].contains("c"));

    auto tower = make_tower(2, 2);
    auto A = PetitAlgebra::make_cyclic(tower, 1, 2, tower->top().generator());
    RankCode code = build_rank_code(A);
    Json rj = rank_code_json(code);
    CHECK(rj["ambient"]["size"] == 2);
    CHECK(rj["basis"].size() == 4);
    CHECK_FALSE(rj.contains("codewords"));
    CHECK(rank_code_json(code, true)["codewords"].size() == 16);
    Json mj = mrd_report_json(mrd_check(code));
    CHECK(mj["mrd"] == true);
    CHECK(mj["min_rank_distance"] == 2);

    GaloisGenerator sigma(tower, 1);
    ConstaCode cc = constacyclic_from_divisor(tower, 1, 2, 1, SkewPoly(sigma, {1, 1}));
    Json ccj = consta_code_json(cc);
    CHECK(ccj["m"] == 2);
    CHECK(ccj["dimension"] == 1);
    CHECK(ccj["min_hamming_distance"] == 2);
    CHECK(ccj["shift_closed"] == true);
}

TEST_CASE("matrix text dump") {
    auto tower = make_tower(2, 2);
    auto A = PetitAlgebra::make_cyclic(tower, 1, 2, tower->top().generator());
    std::string text = matrix_text(right_mult_matrix_K(A, A->t_power(1)));
    CHECK(text.find('w') != std::string::npos);
    CHECK(text.find('[') != std::string::npos);
}

TEST_CASE("JSON output is deterministic") {
    Json a = census_json(census(7, 3, 1));
    Json b = census_json(census(7, 3, 1));
    CHECK(a.dump() == b.dump());
    CHECK(param_set_json(parametrize_S(7, 3)).dump() == param_set_json(parametrize_S(7, 3)).dump());
}
