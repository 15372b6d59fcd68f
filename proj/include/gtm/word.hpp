#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gtm {

using Letter = std::uint8_t;

// Parikh vector: per-letter occurrence counts, indexed by letter value.
using ParikhVector = std::vector<int>;

// A finite word over A_m = {0, ..., m-1}. Value semantics; letters are
// validated on construction and immutable afterwards.
class Word {
public:
    Word() = default;
    Word(int m, std::vector<Letter> letters);

    // Accepts the digit form ("0121") for m <= 10 and the comma-separated
    // form ("0,1,2,1") for any m; both are accepted everywhere.
    static Word parse(int m, std::string_view text);

    int alphabet() const { return m_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    // Contiguous sub-block [pos, pos + len).
    Word slice(std::size_t pos, std::size_t len) const;
    Word concat(const Word& other) const;

    // Digit string for m <= 10, comma-separated integers otherwise.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int m_ = 2;
    std::vector<Letter> letters_;
};

// The m-letter image a, a+1, ..., a+m-1 (mod m) of a single letter.
Word sigma_image(int m, int a);

// One application of the substitution to every letter of w.
Word sigma_apply(const Word& w);

// k-fold application; k = 0 is the identity. Result length m^k * |w|.
Word sigma_power(int m, int k, const Word& w);

// Adds j (mod m) to every letter.
Word tau_apply(int m, long long j, const Word& w);

// The j-th letter of t_m: base-m digit sum of j, reduced mod m.
Letter tm_letter(int m, unsigned long long j);

// First L letters of t_m, materialized in O(L) by incremental digit-sum
// updates.
Word tm_prefix(int m, std::size_t L);

ParikhVector parikh(const Word& w);

// True when the counts differ by the constant vector (d, d, ..., d).
bool parikh_shift_equal(const ParikhVector& a, const ParikhVector& b, int d);

}  // namespace gtm
