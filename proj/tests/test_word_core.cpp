#include "doctest.h"

#include <stdexcept>
#include <string>

#include "gtm/word.hpp"

using gtm::Word;

TEST_CASE("prefixes of the fixed point match the digit-sum definition") {
    CHECK(gtm::tm_prefix(2, 12).str() == "011010011001");
    CHECK(gtm::tm_prefix(3, 27).str() == "012120201120201012201012120");
    CHECK(gtm::tm_prefix(5, 0).str() == "");

    // Single letters agree with the incremental generator.
    const Word p = gtm::tm_prefix(4, 300);
    for (std::size_t j = 0; j < p.size(); ++j) CHECK(p[j] == gtm::tm_letter(4, j));
}

TEST_CASE("prefixes are fixed by the substitution") {
    for (int m : {2, 3, 4}) {
        const Word shorter = gtm::tm_prefix(m, 50);
        const Word longer = gtm::tm_prefix(m, 50 * static_cast<std::size_t>(m));
        CHECK(gtm::sigma_apply(shorter) == longer);
    }
}

TEST_CASE("substitution images") {
    CHECK(gtm::sigma_image(3, 0).str() == "012");
    CHECK(gtm::sigma_image(3, 2).str() == "201");
    CHECK(gtm::sigma_power(3, 2, Word::parse(3, "0")).str() == "012120201");
    CHECK(gtm::sigma_power(3, 0, Word::parse(3, "012")).str() == "012");
    CHECK(gtm::sigma_power(2, 3, Word::parse(2, "1")).size() == 8);
}

TEST_CASE("letter rotation") {
    const Word w = Word::parse(3, "0121");
    CHECK(gtm::tau_apply(3, 1, w).str() == "1202");
    CHECK(gtm::tau_apply(3, 2, w).str() == "2010");
    CHECK(gtm::tau_apply(3, 0, w) == w);
}

TEST_CASE("parsing accepts digit and comma forms") {
    CHECK(Word::parse(3, "0120") == Word::parse(3, "0,1,2,0"));
    CHECK(Word::parse(12, "10,11,0").size() == 3);
    CHECK(Word::parse(12, "10,11,0").str() == "10,11,0");
    CHECK_THROWS_AS(Word::parse(3, "013"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(3, "0,4"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(3, "ab"), std::invalid_argument);
}

TEST_CASE("slice and concat") {
    const Word w = Word::parse(3, "0121202");
    CHECK(w.slice(2, 3).str() == "212");
    CHECK(w.slice(0, 0).empty());
    CHECK(w.slice(0, 4).concat(w.slice(4, 3)) == w);
}

TEST_CASE("occurrence counts per letter") {
    const gtm::ParikhVector v = gtm::parikh(Word::parse(3, "0121202"));
    CHECK(v == gtm::ParikhVector{2, 2, 3});
    CHECK(gtm::parikh_shift_equal(gtm::ParikhVector{2, 2, 3}, gtm::ParikhVector{1, 1, 2}, 1));
    CHECK_FALSE(gtm::parikh_shift_equal(gtm::ParikhVector{2, 2, 3}, gtm::ParikhVector{1, 2, 2}, 1));
}
