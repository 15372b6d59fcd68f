#include "doctest.h"

#include <stdexcept>

#include "gtm/verify.hpp"
#include "gtm/word.hpp"

TEST_CASE("image count gaps are uniform across letters") {
    CHECK(gtm::check_image_count_gap(2, 2).passed());
    CHECK(gtm::check_image_count_gap(3, 2).passed());
    CHECK(gtm::check_image_count_gap(2, 4).passed());
}

TEST_CASE("count gaps scale with letter imbalance") {
    const gtm::CheckReport r = gtm::check_count_gap_scaling(3, 2, 40, 7);
    CHECK(r.passed());
    CHECK(r.instances > 0);
    CHECK(gtm::check_count_gap_scaling(2, 3, 40, 7).passed());
}

TEST_CASE("order-1 equivalence lifts through the substitution and back") {
    CHECK(gtm::check_abelian_lift(2, 2, 4).passed());
    CHECK(gtm::check_abelian_lift(3, 2, 3).passed());
}

TEST_CASE("equivalence of images rises one order per application") {
    CHECK(gtm::check_progression_counts(3, 2, 1, gtm::Word::parse(3, "01")).passed());
    CHECK(gtm::check_progression_counts(3, 2, 2, gtm::Word::parse(3, "01")).passed());
    CHECK(gtm::check_progression_counts(2, 3, 2, gtm::Word::parse(2, "0")).passed());
    CHECK_THROWS_AS(gtm::check_progression_counts(3, 2, 3, gtm::Word::parse(3, "01")),
                    std::invalid_argument);
}

TEST_CASE("context difference identity on random instances") {
    CHECK(gtm::check_context_difference(2, 2, 40, 1729).passed());
    CHECK(gtm::check_context_difference(3, 2, 25, 1729).passed());
    CHECK(gtm::check_context_difference(2, 2, 20, 99, true).passed());
}

TEST_CASE("factorization-based characterization of equivalence") {
    CHECK(gtm::check_factorization_characterization(2, 2, 10).passed());
}

TEST_CASE("pair classes agree with equivalence classes") {
    const gtm::CheckReport r = gtm::check_pair_class_agreement(2, 2, 8);
    CHECK(r.passed());
    CHECK(gtm::check_pair_class_agreement(2, 2, 11).passed());
}

TEST_CASE("complexity values match every applicable closed form") {
    CHECK(gtm::check_complexity_formulas(2, 2, 0, 20).passed());
    CHECK(gtm::check_complexity_formulas(3, 2, 9, 14).passed());
}

TEST_CASE("suite runner") {
    gtm::SuiteOptions options;
    options.m = 2;
    options.k = 2;
    options.instances = 25;
    for (const auto& r : gtm::run_suite("all", options)) {
        CAPTURE(r.check);
        CHECK(r.passed());
        const auto j = r.to_json();
        CHECK(j.contains("check"));
        CHECK(j.contains("params"));
        CHECK(j.contains("instances"));
        CHECK(j.contains("failures"));
        CHECK(j.contains("elapsed_ms"));
    }
    CHECK(gtm::run_suite("prop41", options).size() == 1);
    CHECK_THROWS_AS(gtm::run_suite("nonsense", options), std::invalid_argument);
    options.k = 1;
    CHECK_THROWS_AS(gtm::run_suite("all", options), std::invalid_argument);
}

TEST_CASE("reports are reproducible for a fixed seed") {
    const gtm::CheckReport a = gtm::check_count_gap_scaling(3, 2, 30, 42);
    const gtm::CheckReport b = gtm::check_count_gap_scaling(3, 2, 30, 42);
    CHECK(a.instances == b.instances);
    CHECK(a.failures == b.failures);
}
