#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "petit/fields.hpp"

using namespace petit;

TEST_CASE("canonical field construction") {
    auto f2 = make_field(2, 1);
    CHECK(f2->size() == 2);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});

    auto f4 = make_field(2, 2);
    CHECK(f4->size() == 4);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1

    auto f9 = make_field(3, 2);
    CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1, lex least irreducible

    // idempotent: same inputs give the identical interned field
    CHECK(make_field(3, 2).get() == f9.get());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_field(4, 1), non_prime_characteristic);
    CHECK_THROWS_AS(make_field(1, 1), non_prime_characteristic);
    CHECK_THROWS_AS(make_field(2, 21), size_cap_exceeded);
}

TEST_CASE("field axioms at small scale") {
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 1}}) {
        auto f = make_field(p, e);
        for (std::uint32_t a = 0; a < f->size(); ++a) {
            CHECK(f->pow(a, f->size()) == a);  // x^q = x
            for (std::uint32_t b = 0; b < f->size(); ++b) {
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (std::uint32_t c = 0; c < f->size(); ++c) {
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                }
            }
            if (a) CHECK(f->mul(a, f->inv(a)) == f->one());
        }
    }
}

TEST_CASE("canonical element order is lex on coordinates") {
    auto f4 = make_field(2, 2);
    // (0,0) < (0,1) < (1,0) < (1,1): 0 < x < 1 < x+1
    CHECK(f4->rank_of(0) == 0);
    CHECK(f4->rank_of(2) == 1);  // x
    CHECK(f4->rank_of(1) == 2);  // 1
    CHECK(f4->rank_of(3) == 3);
    for (std::uint32_t c = 0; c < 4; ++c) CHECK(f4->code_at_rank(f4->rank_of(c)) == c);
    // the canonical generator is the least primitive element, here x
    CHECK(f4->generator() == 2);
}

TEST_CASE("towers and embeddings") {
    auto t22 = make_tower(2, 2);
    CHECK(t22->base_image() == std::vector<std::uint32_t>{0, 1});

    auto t23 = make_tower(2, 3);
    CHECK(t23->base_image() == std::vector<std::uint32_t>{0, 1});

    auto t43 = make_tower(4, 3);
    CHECK(t43->base_image().size() == 4);
    const FiniteField& f4 = t43->base();
    for (std::uint32_t a = 0; a < f4.size(); ++a) {
        for (std::uint32_t b = 0; b < f4.size(); ++b) {
            CHECK(t43->embed(f4.add(a, b)) == t43->top().add(t43->embed(a), t43->embed(b)));
            CHECK(t43->embed(f4.mul(a, b)) == t43->top().mul(t43->embed(a), t43->embed(b)));
        }
        CHECK(t43->to_base(t43->embed(a)) == a);
    }
    CHECK(t43->embed(f4.one()) == t43->top().one());
}

TEST_CASE("relative frobenius fixes exactly the base image") {
    auto t43 = make_tower(4, 3);
    std::size_t fixed = 0;
    for (std::uint64_t x = 0; x < t43->top().size(); ++x) {
        std::uint32_t code = static_cast<std::uint32_t>(x);
        if (t43->frobenius(code) == code) {
            ++fixed;
            CHECK(t43->in_base(code));
        }
        // order exactly n
        std::uint32_t y = code;
        for (unsigned i = 0; i < 3; ++i) y = t43->frobenius(y);
        CHECK(y == code);
    }
    CHECK(fixed == 4);
    // order not smaller than n: some element moves under frobenius^1
    CHECK(t43->frobenius(t43->top().generator()) != t43->top().generator());
}

TEST_CASE("galois generators") {
    CHECK(generators(make_tower(2, 2)).size() == 1);
    auto g3 = generators(make_tower(2, 3));
    REQUIRE(g3.size() == 2);
    CHECK(g3[0].exponent() == 1);
    CHECK(g3[1].exponent() == 2);
    auto g4 = generators(make_tower(3, 4));
    REQUIRE(g4.size() == 2);
    CHECK(g4[0].exponent() == 1);
    CHECK(g4[1].exponent() == 3);

    // distinct as maps, and each orbit of a primitive element has size n
    auto tower = make_tower(2, 3);
    auto gens = generators(tower);
    std::uint32_t w = tower->top().generator();
    CHECK(gens[0](w) != gens[1](w));
    for (const auto& gen : gens) {
        std::uint32_t x = w;
        std::size_t orbit = 0;
        do {
            x = gen(x);
            ++orbit;
        } while (x != w);
        CHECK(orbit == 3);
    }
}

TEST_CASE("norms") {
    auto t22 = make_tower(2, 2);
    CHECK(t22->norm(t22->top().generator()) == t22->top().one());

    auto t23 = make_tower(2, 3);
    for (std::uint32_t x = 1; x < 8; ++x) CHECK(t23->norm(x) == t23->top().one());

    auto t32 = make_tower(3, 2);
    std::map<std::uint32_t, int> fibers;
    for (std::uint32_t x = 1; x < 9; ++x) ++fibers[t32->norm_to_base(x)];
    CHECK(fibers.size() == 2);  // onto F_3^x
    for (auto [v, count] : fibers) CHECK(count == 4);

    // multiplicativity
    auto t43 = make_tower(4, 3);
    for (std::uint32_t x = 0; x < 64; ++x)
        for (std::uint32_t y = 0; y < 64; y += 7)
            CHECK(t43->norm(t43->top().mul(x, y)) == t43->top().mul(t43->norm(x), t43->norm(y)));
}

TEST_CASE("trace lands in the base image and is additive") {
    auto t23 = make_tower(2, 3);
    for (std::uint32_t x = 0; x < 8; ++x) {
        CHECK(t23->in_base(t23->trace(x)));
        for (std::uint32_t y = 0; y < 8; ++y)
            CHECK(t23->trace(t23->top().add(x, y)) == t23->top().add(t23->trace(x), t23->trace(y)));
    }
}

TEST_CASE("partial norms") {
    auto t23 = make_tower(2, 3);
    GaloisGenerator sigma(t23, 1);
    std::uint32_t w = t23->top().generator();

    CHECK(partial_norm(sigma, 1, w) == w);
    CHECK(partial_norm(sigma, 2, w) == t23->top().mul(w, t23->top().mul(w, w)));  // w * sigma(w) = w^3
    CHECK(partial_norm(sigma, 2, w) == t23->top().pow(w, 3));
    for (std::uint32_t x = 0; x < 8; ++x) CHECK(partial_norm(sigma, 3, x) == t23->norm(x));

    // multiplicative in k
    for (std::uint32_t x = 1; x < 8; ++x)
        for (std::uint32_t y = 1; y < 8; ++y)
            CHECK(partial_norm(sigma, 2, t23->top().mul(x, y)) ==
                  t23->top().mul(partial_norm(sigma, 2, x), partial_norm(sigma, 2, y)));
}

TEST_CASE("partial norm images") {
    auto t23 = make_tower(2, 3);
    GaloisGenerator sigma3(t23, 1);
    CHECK(partial_norm_image(sigma3, 2).elements().size() == 7);  // z^3 onto F_8^x

    auto t22 = make_tower(2, 2);
    GaloisGenerator sigma2(t22, 1);
    auto image = partial_norm_image(sigma2, 2);
    CHECK(image.elements() == std::vector<std::uint32_t>{1});  // z sigma(z) = z^3 = 1

    // m = n: the image is the embedded F^x (norm surjectivity)
    auto t32 = make_tower(3, 2);
    GaloisGenerator sigma(t32, 1);
    auto full = partial_norm_image(sigma, 2);
    CHECK(full.elements().size() == 2);
    for (std::uint32_t v : full.elements()) CHECK(t32->in_base(v));

    // closed under product and inverse
    for (std::uint32_t x : image.elements())
        for (std::uint32_t y : image.elements()) {
            CHECK(image.contains(t22->top().mul(x, y)));
            CHECK(image.contains(t22->top().inv(x)));
        }
}

TEST_CASE("primitive roots of unity") {
    auto f4 = make_field(2, 2);
    auto root = primitive_root_of_unity(*f4, 3);
    REQUIRE(root.has_value());
    CHECK(f4->mult_order(*root) == 3);

    CHECK(!primitive_root_of_unity(*make_field(2, 1), 3).has_value());

    auto f7 = make_field(7, 1);
    auto root7 = primitive_root_of_unity(*f7, 3);
    REQUIRE(root7.has_value());
    CHECK(*root7 == 2);

    CHECK(primitive_root_of_unity(*f7, 1) == f7->one());
}

TEST_CASE("base coordinates of the top field") {
    auto t43 = make_tower(4, 3);
    for (std::uint64_t x = 0; x < t43->top().size(); ++x) {
        auto coords = t43->f_coords(static_cast<std::uint32_t>(x));
        REQUIRE(coords.size() == 3);
        CHECK(t43->from_f_coords(coords) == x);
    }
    for (std::uint32_t c = 0; c < 4; ++c) {
        auto coords = t43->f_coords(t43->embed(c));
        CHECK(coords[0] == c);
        CHECK(coords[1] == 0);
        CHECK(coords[2] == 0);
    }
}

TEST_CASE("construction determinism across repeated builds") {
    auto a = make_tower(3, 2);
    auto b = make_tower(3, 2);
    CHECK(a.get() == b.get());
    CHECK(a->top().generator() == b->top().generator());
    CHECK(a->base_image() == b->base_image());
}
