#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ncps {

// Word over the alphabet of positive integers; the empty word is the unit.
// Ordered graded-lexicographically (length first, then letters).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    static Word single(int letter);

    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(int index) const { return letters_[static_cast<size_t>(index)]; }
    int max_letter() const;

    Word concat(const Word& other) const;
    Word prefix(int count) const;
    Word suffix_from(int start) const;
    // Extracts the letters at the given ascending 1-based positions.
    Word subword(const std::vector<int>& positions) const;

    std::strong_ordering operator<=>(const Word& other) const {
        if (auto c = letters_.size() <=> other.letters_.size(); c != std::strong_ordering::equal)
            return c;
        return letters_ <=> other.letters_;
    }
    bool operator==(const Word&) const = default;

private:
    std::vector<int> letters_;
};

// Bar-separated tensor of non-empty words; the empty tensor is the unit of
// the tensor algebra. Ordered by (total degree, factor count, factors).
class TensorWord {
public:
    TensorWord() = default;
    explicit TensorWord(std::vector<Word> factors);
    static TensorWord from_word(const Word& w);

    bool is_unit() const { return factors_.empty(); }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    const std::vector<Word>& factors() const { return factors_; }
    int total_degree() const;

    TensorWord bar_concat(const TensorWord& other) const;

    std::strong_ordering operator<=>(const TensorWord& other) const {
        if (auto c = total_degree() <=> other.total_degree(); c != std::strong_ordering::equal)
            return c;
        if (auto c = factors_.size() <=> other.factors_.size(); c != std::strong_ordering::equal)
            return c;
        return factors_ <=> other.factors_;
    }
    bool operator==(const TensorWord&) const = default;

private:
    std::vector<Word> factors_;
};

// "e" for the unit, letters joined by dots otherwise: "1.2.1".
std::string to_string(const Word& w);
// Factors joined by bars: "1.2|3"; the unit prints as "e".
std::string to_string(const TensorWord& tw);

} // namespace ncps
