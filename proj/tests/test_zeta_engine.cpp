#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace torsupp;
using testutil::alpha;
using testutil::function_of;
using testutil::iv;
using testutil::rat;
using testutil::support_of;

namespace {

ResolutionData boolean_xy_resolution() {
    ResolutionData data;
    data.dimension = 2;
    data.noninvertible = {true, true};
    data.strata = {
        Stratum{"line-1", {DivisorRecord{"L1", iv({1, 0}), 1}}},
        Stratum{"line-2", {DivisorRecord{"L2", iv({0, 1}), 1}}},
        Stratum{"origin", {DivisorRecord{"E", iv({1, 1}), 0}}},
    };
    return data;
}

} // namespace

// ---------------------------------------------------------------------------
// Local zeta functions.
// ---------------------------------------------------------------------------

TEST_CASE("local zeta multiplies factors with exponent minus chi") {
    const Stratum concurrent{"origin", {DivisorRecord{"E", iv({1, 1, 1}), -1}}};
    CHECK(local_zeta(concurrent, 3) == function_of(3, {{iv({1, 1, 1}), 1}}));

    const Stratum node{"origin", {DivisorRecord{"E", iv({1, 1}), 0}}};
    CHECK(local_zeta(node, 2).is_one());

    const Stratum cusp{"origin",
                       {DivisorRecord{"E1", iv({2}), 1}, DivisorRecord{"E2", iv({3}), 1},
                        DivisorRecord{"E3", iv({6}), -1}}};
    CHECK(local_zeta(cusp, 1) ==
          function_of(1, {{iv({2}), -1}, {iv({3}), -1}, {iv({6}), 1}}));

    const Stratum bad{"origin", {DivisorRecord{"E", iv({0}), 1}}};
    CHECK_THROWS_AS(local_zeta(bad, 1), input_error);
}

// ---------------------------------------------------------------------------
// Support from resolution data.
// ---------------------------------------------------------------------------

TEST_CASE("support of three concurrent lines") {
    const ResolutionData data = testutil::load_resolution("res_concurrent3.json");
    CHECK(support_from_resolution(data) == support_of(3, {{iv({0, 0, 1}), "0"},
                                                          {iv({0, 1, 0}), "0"},
                                                          {iv({1, 0, 0}), "0"},
                                                          {iv({1, 1, 1}), "0"}}));
}

TEST_CASE("normal crossing double point contributes nothing") {
    CHECK(support_from_resolution(boolean_xy_resolution()) ==
          support_of(2, {{iv({0, 1}), "0"}, {iv({1, 0}), "0"}}));
}

TEST_CASE("empty divisor lists give the empty support") {
    ResolutionData data;
    data.dimension = 2;
    data.noninvertible = {true, true};
    data.strata = {Stratum{"a", {}}, Stratum{"b", {}}};
    CHECK(support_from_resolution(data).empty());
}

TEST_CASE("resolution data is validated") {
    ResolutionData data;
    data.dimension = 2;
    data.noninvertible = {true};
    data.strata = {Stratum{"a", {}}};
    CHECK_THROWS_AS(validate_resolution(data), input_error); // flag length

    data.noninvertible = {true, true};
    data.strata = {Stratum{"a", {}}, Stratum{"a", {}}};
    CHECK_THROWS_AS(validate_resolution(data), input_error); // duplicate name

    data.strata = {Stratum{"a", {DivisorRecord{"E", iv({1, 0}), 1},
                                 DivisorRecord{"E", iv({0, 1}), 1}}}};
    CHECK_THROWS_AS(validate_resolution(data), input_error); // duplicate label

    data.strata = {Stratum{"a", {DivisorRecord{"E", iv({0, 0}), 1}}}};
    CHECK_THROWS_AS(validate_resolution(data), input_error); // zero orders

    data.strata.clear();
    CHECK_THROWS_AS(validate_resolution(data), input_error); // no strata
}

// ---------------------------------------------------------------------------
// Non-degenerate specializations.
// ---------------------------------------------------------------------------

TEST_CASE("non-degeneracy requires surjectivity and positive column sums") {
    CHECK(check_nondegenerate(make_specialization_matrix({iv({1, 1})}), {true, true}));
    CHECK(!check_nondegenerate(make_specialization_matrix({iv({1, 0})}), {false, true}));
    CHECK(check_nondegenerate(make_specialization_matrix({iv({1, 0})}), {true, false}));
    CHECK(!check_nondegenerate(
        make_specialization_matrix({iv({1, 1}), iv({1, 1})}), {true, true}));
    CHECK_THROWS_AS(check_nondegenerate(make_specialization_matrix({iv({1, 1})}), {true}),
                    input_error);
}

TEST_CASE("specializing resolution data multiplies the orders") {
    ResolutionData squares;
    squares.dimension = 2;
    squares.noninvertible = {true, true};
    squares.strata = {Stratum{"origin", {DivisorRecord{"E", iv({1, 1}), -1}}}};

    const ResolutionData product =
        specialize_resolution(squares, make_specialization_matrix({iv({1, 1})}));
    CHECK(product.dimension == 1);
    CHECK(product.noninvertible == std::vector<bool>{true});
    REQUIRE(product.strata.size() == 1);
    CHECK(product.strata[0].divisors[0].orders == iv({2}));
    CHECK(product.strata[0].divisors[0].euler == -1);

    const ResolutionData same = specialize_resolution(
        squares, make_specialization_matrix({iv({1, 0}), iv({0, 1})}));
    CHECK(same == squares);

    const ResolutionData lines = testutil::load_resolution("res_concurrent3.json");
    const ResolutionData total =
        specialize_resolution(lines, make_specialization_matrix({iv({1, 1, 1})}));
    CHECK(total.strata[0].divisors[0].orders == iv({3}));
    CHECK(total.strata[0].divisors[0].euler == -1);
    CHECK(total.strata[1].divisors[0].orders == iv({1}));

    CHECK_THROWS_AS(
        specialize_resolution(squares,
                              make_specialization_matrix({iv({1, 1}), iv({1, 1})})),
        input_error);
}

TEST_CASE("noninvertible flags follow positive matrix entries") {
    ResolutionData data;
    data.dimension = 2;
    data.noninvertible = {true, false};
    data.strata = {Stratum{"s", {DivisorRecord{"E", iv({1, 1}), 1}}}};
    const ResolutionData out = specialize_resolution(
        data, make_specialization_matrix({iv({1, 0}), iv({0, 1})}));
    CHECK(out.noninvertible == std::vector<bool>{true, false});
    const ResolutionData mixed = specialize_resolution(
        data, make_specialization_matrix({iv({0, 2}), iv({1, 1})}));
    CHECK(mixed.noninvertible == std::vector<bool>{false, true});
}

// ---------------------------------------------------------------------------
// Witnesses.
// ---------------------------------------------------------------------------

TEST_CASE("witness certifies membership with a surviving divisor") {
    const ResolutionData lines = testutil::load_resolution("res_concurrent3.json");

    const auto at_origin = witness(lines, alpha("1/3,1/3,1/3"));
    REQUIRE(at_origin.has_value());
    CHECK(at_origin->stratum == "origin");
    CHECK(at_origin->divisor.orders == iv({1, 1, 1}));

    const auto on_line = witness(lines, alpha("0,1/2,1/2"));
    REQUIRE(on_line.has_value());
    CHECK(on_line->stratum == "line-1");
    CHECK(on_line->divisor.orders == iv({1, 0, 0}));

    CHECK(!witness(boolean_xy_resolution(), alpha("1/2,1/2")).has_value());
}

TEST_CASE("witness presence matches membership") {
    testutil::Rng rng(2026'20);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::pick(rng, 1, 3));
        const ResolutionData data = testutil::random_resolution(rng, r);
        const SupportSet support = support_from_resolution(data);
        for (int sample = 0; sample < 25; ++sample) {
            const TorsionPoint point = testutil::random_torsion_point(rng, r);
            const auto certificate = witness(data, point);
            CHECK(certificate.has_value() == member(support, point));
            if (certificate) {
                // The certificate really does certify.
                CHECK(is_integer(dot(certificate->divisor.orders, point.angles)));
                const Stratum* home = nullptr;
                for (const Stratum& stratum : data.strata)
                    if (stratum.name == certificate->stratum)
                        home = &stratum;
                REQUIRE(home != nullptr);
                const FactoredTorusFunction zeta = local_zeta(*home, r);
                bool survives = false;
                for (const MonomialFactor& factor : zeta.factors)
                    survives =
                        survives || factor.exponents == certificate->divisor.orders;
                CHECK(survives);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Commutation of specialization with the zeta and support computations.
// ---------------------------------------------------------------------------

TEST_CASE("one-variable specialization commutes with local zeta") {
    testutil::Rng rng(2026'21);
    std::vector<ResolutionData> corpus{testutil::load_resolution("res_cusp.json"),
                                       testutil::load_resolution("res_concurrent3.json"),
                                       boolean_xy_resolution()};
    for (const ResolutionData& data : corpus) {
        for (int trial = 0; trial < 10; ++trial) {
            const IntVector m = testutil::random_positive_vector(rng, data.dimension);
            const ResolutionData squeezed =
                specialize_resolution(data, make_specialization_matrix({m}));
            for (std::size_t s = 0; s < data.strata.size(); ++s)
                CHECK(specialize(local_zeta(data.strata[s], data.dimension), m) ==
                      local_zeta(squeezed.strata[s], 1));
        }
    }
}

TEST_CASE("pullback commutes with specializing the resolution") {
    // Sign-coherent strata keep the two routes comparable: with mixed chi
    // signs inside one synthetic stratum, two divisors can collide onto one
    // specialized exponent vector and cancel, which genuine per-stratum zeta
    // data (already merged) never does.
    testutil::Rng rng(2026'22);
    std::vector<ResolutionData> corpus{testutil::load_resolution("res_cusp.json"),
                                       testutil::load_resolution("res_concurrent3.json"),
                                       boolean_xy_resolution()};
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::pick(rng, 1, 4));
        corpus.push_back(testutil::random_resolution(rng, r, /*sign_coherent=*/true));
    }
    for (const ResolutionData& data : corpus) {
        for (int trial = 0; trial < 4; ++trial) {
            const std::size_t p =
                static_cast<std::size_t>(testutil::pick(rng, 1, data.dimension));
            const SpecializationMatrix m = testutil::random_nondegenerate_matrix(
                rng, p, data.dimension, data.noninvertible);
            CHECK(support_from_resolution(specialize_resolution(data, m)) ==
                  pullback_support(support_from_resolution(data), m));
        }
    }
}

TEST_CASE("resolution supports are inversion stable") {
    testutil::Rng rng(2026'23);
    CHECK(invert_set(support_from_resolution(testutil::load_resolution("res_cusp.json"))) ==
          support_from_resolution(testutil::load_resolution("res_cusp.json")));
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::pick(rng, 1, 3));
        const SupportSet support =
            support_from_resolution(testutil::random_resolution(rng, r));
        CHECK(invert_set(support) == support);
    }
}

TEST_CASE("specialized divisors never vanish") {
    testutil::Rng rng(2026'24);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::pick(rng, 2, 4));
        const std::size_t p = static_cast<std::size_t>(testutil::pick(rng, 1, r));
        const ResolutionData data = testutil::random_resolution(rng, r);
        const SpecializationMatrix m =
            testutil::random_nondegenerate_matrix(rng, p, r, data.noninvertible);
        const ResolutionData out = specialize_resolution(data, m);
        for (const Stratum& stratum : out.strata)
            for (const DivisorRecord& divisor : stratum.divisors)
                CHECK(!is_zero(divisor.orders));
    }
}
