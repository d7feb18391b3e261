#include "ncps/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncps {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int letter : letters_) {
        if (letter < 1) throw std::invalid_argument("word letters must be positive");
    }
}

Word Word::single(int letter) { return Word({letter}); }

int Word::max_letter() const {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::concat(const Word& other) const {
    std::vector<int> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

Word Word::prefix(int count) const {
    if (count < 0 || count > length()) throw std::invalid_argument("prefix length out of range");
    return Word(std::vector<int>(letters_.begin(), letters_.begin() + count));
}

Word Word::suffix_from(int start) const {
    if (start < 0 || start > length()) throw std::invalid_argument("suffix start out of range");
    return Word(std::vector<int>(letters_.begin() + start, letters_.end()));
}

Word Word::subword(const std::vector<int>& positions) const {
    std::vector<int> out;
    out.reserve(positions.size());
    int previous = 0;
    for (int pos : positions) {
        if (pos < 1 || pos > length()) throw std::invalid_argument("subword position out of range");
        if (pos <= previous) throw std::invalid_argument("subword positions must be strictly increasing");
        previous = pos;
        out.push_back(letters_[static_cast<size_t>(pos - 1)]);
    }
    return Word(std::move(out));
}

TensorWord::TensorWord(std::vector<Word> factors) : factors_(std::move(factors)) {
    for (const Word& factor : factors_) {
        if (factor.empty()) throw std::invalid_argument("tensor word factors must be non-empty");
    }
}

TensorWord TensorWord::from_word(const Word& w) {
    if (w.empty()) return TensorWord();
    return TensorWord({w});
}

int TensorWord::total_degree() const {
    return std::accumulate(factors_.begin(), factors_.end(), 0,
                           [](int acc, const Word& w) { return acc + w.length(); });
}

TensorWord TensorWord::bar_concat(const TensorWord& other) const {
    std::vector<Word> out = factors_;
    out.insert(out.end(), other.factors_.begin(), other.factors_.end());
    return TensorWord(std::move(out));
}

std::string to_string(const Word& w) {
    if (w.empty()) return "e";
    std::ostringstream out;
    for (int i = 0; i < w.length(); ++i) {
        if (i > 0) out << '.';
        out << w.letter(i);
    }
    return out.str();
}

std::string to_string(const TensorWord& tw) {
    if (tw.is_unit()) return "e";
    std::ostringstream out;
    for (int i = 0; i < tw.factor_count(); ++i) {
        if (i > 0) out << '|';
        out << to_string(tw.factors()[static_cast<size_t>(i)]);
    }
    return out.str();
}

} // namespace ncps
