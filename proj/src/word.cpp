#include "gtm/word.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "gtm/errors.hpp"
#include "gtm/limits.hpp"

namespace gtm {

namespace {

void check_alphabet(int m) {
    if (m < 2 || m > 255) throw std::invalid_argument("alphabet size must be in [2, 255]");
}

}  // namespace

Word::Word(int m, std::vector<Letter> letters) : m_(m), letters_(std::move(letters)) {
    check_alphabet(m);
    for (Letter a : letters_) {
        if (a >= m_) throw std::invalid_argument("letter out of range for alphabet");
    }
}

Word Word::parse(int m, std::string_view text) {
    check_alphabet(m);
    std::vector<Letter> letters;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size())
                throw std::invalid_argument("unparsable letter: '" + std::string(item) + "'");
            letters.push_back(static_cast<Letter>(value));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument(std::string("unparsable digit: '") + c + "'");
            letters.push_back(static_cast<Letter>(c - '0'));
        }
    }
    return Word(m, std::move(letters));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) throw std::out_of_range("slice beyond word end");
    Word out;
    out.m_ = m_;
    out.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + len);
    return out;
}

Word Word::concat(const Word& other) const {
    if (m_ != other.m_) throw std::invalid_argument("alphabet mismatch in concatenation");
    Word out;
    out.m_ = m_;
    out.letters_ = letters_;
    out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
    return out;
}

std::string Word::str() const {
    std::string out;
    if (m_ <= 10) {
        out.reserve(letters_.size());
        for (Letter a : letters_) out.push_back(static_cast<char>('0' + a));
    } else {
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(int(letters_[i]));
        }
    }
    return out;
}

Word sigma_image(int m, int a) {
    check_alphabet(m);
    std::vector<Letter> letters(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) letters[static_cast<std::size_t>(i)] = static_cast<Letter>(((a % m + m) + i) % m);
    return Word(m, std::move(letters));
}

Word sigma_apply(const Word& w) {
    const int m = w.alphabet();
    std::vector<Letter> letters;
    letters.reserve(w.size() * static_cast<std::size_t>(m));
    for (Letter a : w)
        for (int i = 0; i < m; ++i) letters.push_back(static_cast<Letter>((a + i) % m));
    return Word(m, std::move(letters));
}

Word sigma_power(int m, int k, const Word& w) {
    check_alphabet(m);
    if (k < 0) throw std::invalid_argument("negative morphism exponent");
    if (w.alphabet() != m) throw std::invalid_argument("alphabet mismatch");
    double projected = static_cast<double>(w.size());
    for (int i = 0; i < k; ++i) projected *= m;
    if (projected > static_cast<double>(limits().max_prefix))
        throw ResourceCapError("sigma_power result exceeds max_prefix cap");
    Word out = w;
    for (int i = 0; i < k; ++i) out = sigma_apply(out);
    return out;
}

Word tau_apply(int m, long long j, const Word& w) {
    check_alphabet(m);
    if (w.alphabet() != m) throw std::invalid_argument("alphabet mismatch");
    const int shift = static_cast<int>(((j % m) + m) % m);
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (Letter a : w) letters.push_back(static_cast<Letter>((a + shift) % m));
    return Word(m, std::move(letters));
}

Letter tm_letter(int m, unsigned long long j) {
    check_alphabet(m);
    unsigned long long sum = 0;
    while (j > 0) {
        sum += j % static_cast<unsigned long long>(m);
        j /= static_cast<unsigned long long>(m);
    }
    return static_cast<Letter>(sum % static_cast<unsigned long long>(m));
}

Word tm_prefix(int m, std::size_t L) {
    check_alphabet(m);
    if (L > limits().max_prefix) throw ResourceCapError("tm_prefix length exceeds max_prefix cap");
    std::vector<Letter> letters;
    letters.reserve(L);
    // Maintain the base-m digits of the running index and its digit sum;
    // each increment touches amortized O(1) digits.
    std::vector<int> digits;
    int digit_sum = 0;
    for (std::size_t j = 0; j < L; ++j) {
        letters.push_back(static_cast<Letter>(digit_sum % m));
        std::size_t pos = 0;
        for (;;) {
            if (pos == digits.size()) digits.push_back(0);
            if (digits[pos] + 1 < m) {
                digits[pos] += 1;
                digit_sum += 1;
                break;
            }
            digit_sum -= digits[pos];
            digits[pos] = 0;
            ++pos;
        }
    }
    return Word(m, std::move(letters));
}

ParikhVector parikh(const Word& w) {
    ParikhVector counts(static_cast<std::size_t>(w.alphabet()), 0);
    for (Letter a : w) counts[a] += 1;
    return counts;
}

bool parikh_shift_equal(const ParikhVector& a, const ParikhVector& b, int d) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i] + d) return false;
    return true;
}

}  // namespace gtm
