#include <catch2/catch_amalgamated.hpp>

#include "triforms/sweeps.hpp"
#include "triforms/triples.hpp"

using namespace triforms;

TEST_CASE("make_params validation and precedence") {
    CHECK_NOTHROW(make_params(5, 2));

    // a <= b is reported before anything else
    try {
        make_params(3, 3);
        FAIL("expected params_error");
    } catch (const params_error& e) {
        CHECK(e.violation == param_violation::order);
    }

    // a shared factor is reported even when the parity also matches
    try {
        make_params(9, 3);
        FAIL("expected params_error");
    } catch (const params_error& e) {
        CHECK(e.violation == param_violation::not_coprime);
    }

    try {
        make_params(9, 7);
        FAIL("expected params_error");
    } catch (const params_error& e) {
        CHECK(e.violation == param_violation::same_parity);
    }

    CHECK(validate_params(2, 0) == param_violation::order);
    CHECK(validate_params(2, 3) == param_violation::order);
    CHECK_FALSE(validate_params(2, 1).has_value());
}

TEST_CASE("triple_from_params") {
    CHECK(triple_from_params(make_params(5, 2)) == primitive_triple{20, 21, 29, 6});
    CHECK(triple_from_params(make_params(2, 1)) == primitive_triple{4, 3, 5, 1});
    CHECK(triple_from_params(make_params(7, 4)) == primitive_triple{56, 33, 65, 12});
}

TEST_CASE("forms_from_params") {
    CHECK(forms_from_params(make_params(5, 2)) == form_values{17, 29, 41});
    CHECK(forms_from_params(make_params(6, 1)) == form_values{27, 37, 47});
    CHECK(forms_from_params(make_params(2, 1)) == form_values{3, 5, 7});
}

TEST_CASE("enumerate_params") {
    CHECK(enumerate_params(3) == std::vector<triple_params>{{2, 1}, {3, 2}});
    CHECK(enumerate_params(4) == std::vector<triple_params>{{2, 1}, {3, 2}, {4, 1}, {4, 3}});
    CHECK(enumerate_params(2) == std::vector<triple_params>{{2, 1}});
    CHECK_THROWS_AS(enumerate_params(1), std::invalid_argument);

    // ordered by (a, b), no duplicates, all valid
    auto all = enumerate_params(200);
    for (std::size_t i = 0; i < all.size(); ++i) {
        REQUIRE_FALSE(validate_params(all[i].a, all[i].b).has_value());
        if (i > 0)
            REQUIRE(std::tuple(all[i - 1].a, all[i - 1].b) < std::tuple(all[i].a, all[i].b));
    }
}

TEST_CASE("check_pairwise_coprime") {
    CHECK(check_pairwise_coprime({17, 29, 41}));
    CHECK(check_pairwise_coprime({9, 13, 17}));
    CHECK(check_pairwise_coprime({27, 37, 47}));
    CHECK_FALSE(check_pairwise_coprime({3, 9, 5}));
}

TEST_CASE("structural identities over a range") {
    auto res = sweep_structural(400);
    CAPTURE(res.counterexamples);
    CHECK(res.pass());
    CHECK(res.cases > 0);
}

TEST_CASE("residue classes and parity predictions up to a = 2000") {
    for_each_params(2000, [](triple_params p) {
        form_values fv = forms_from_params(p);
        unsigned r13 = fv.n13 & 7, r15 = fv.n15 & 7, r17 = fv.n17 & 7;
        REQUIRE((r13 == 1 || r13 == 3));
        REQUIRE((r15 == 1 || r15 == 5));
        REQUIRE((r17 == 1 || r17 == 7));
        residue_triplet pred = residue_prediction(p);
        REQUIRE(pred.n13 == r13);
        REQUIRE(pred.n15 == r15);
        REQUIRE(pred.n17 == r17);
    });
}
