#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncps/coefficient.hpp"
#include "ncps/combinatorics.hpp"
#include "ncps/series.hpp"
#include "ncps/word.hpp"

namespace ncps {

// One summand of a coproduct: left leg (tensor) x right leg (tensor).
struct CoproductTerm {
    TensorWord left;
    TensorWord right;
    std::int64_t multiplicity = 1;

    bool operator==(const CoproductTerm&) const = default;
};

// Subset/interval coproduct of a word: one term per subset S of the letter
// positions, left leg the extracted subword, right leg the maximal interval
// blocks of the complement. The empty word yields the unit term.
std::vector<CoproductTerm> coproduct(const Word& w);
// Multiplicative extension: the factor coproducts multiply bar-wise.
std::vector<CoproductTerm> coproduct(const TensorWord& tw);

// Splitting of the coproduct by membership of position 1; defined only on
// non-unit arguments.
std::vector<CoproductTerm> half_coproduct_left(const Word& w);
std::vector<CoproductTerm> half_coproduct_right(const Word& w);
std::vector<CoproductTerm> half_coproduct_left(const TensorWord& tw);
std::vector<CoproductTerm> half_coproduct_right(const TensorWord& tw);

// Aggregates equal (left, right) pairs and sorts, for multiset comparisons.
std::vector<CoproductTerm> merge_coproduct_terms(std::vector<CoproductTerm> terms);

// Scalar-valued functional on tensor words of bounded total degree.
class LinearForm {
public:
    LinearForm(int alphabet, int degree_cap);
    static LinearForm counit(int alphabet, int degree_cap);

    int alphabet() const { return alphabet_; }
    int degree_cap() const { return degree_cap_; }

    const Rational& unit_value() const { return unit_value_; }
    void set_unit_value(Rational value) { unit_value_ = std::move(value); }

    Rational value(const TensorWord& tw) const;
    void set_value(const TensorWord& tw, Rational value);
    const std::map<TensorWord, Rational>& values() const { return values_; }

    bool vanishes_on_unit() const { return unit_value_.is_zero(); }
    // True for nonzero scalar multiples of the counit.
    bool is_unit_multiple() const { return !unit_value_.is_zero() && values_.empty(); }

    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator-=(const LinearForm& other);
    LinearForm scaled(const Rational& factor) const;
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }

    bool operator==(const LinearForm&) const = default;

    void require_same_shape(int alphabet, int degree_cap, const std::string& context) const;

private:
    void check_tensor_word(const TensorWord& tw) const;

    int alphabet_;
    int degree_cap_;
    Rational unit_value_{};
    std::map<TensorWord, Rational> values_;
};

// Multiplicative unital functional, determined by its word values.
class Character {
public:
    Character(int alphabet, int degree_cap);

    int alphabet() const { return alphabet_; }
    int degree_cap() const { return degree_cap_; }

    Rational word_value(const Word& w) const;
    void set_word_value(const Word& w, Rational value);
    const std::map<Word, Rational>& word_values() const { return word_values_; }

    // Product of the factor values; 1 on the unit.
    Rational value(const TensorWord& tw) const;

    bool operator==(const Character&) const = default;

private:
    int alphabet_;
    int degree_cap_;
    std::map<Word, Rational> word_values_;
};

// Functional vanishing on the unit and on all multi-factor tensors.
class InfinitesimalCharacter {
public:
    InfinitesimalCharacter(int alphabet, int degree_cap);

    int alphabet() const { return alphabet_; }
    int degree_cap() const { return degree_cap_; }

    Rational word_value(const Word& w) const;
    void set_word_value(const Word& w, Rational value);
    const std::map<Word, Rational>& word_values() const { return word_values_; }

    Rational value(const TensorWord& tw) const;

    bool operator==(const InfinitesimalCharacter&) const = default;

private:
    int alphabet_;
    int degree_cap_;
    std::map<Word, Rational> word_values_;
};

namespace detail {

template <typename F, typename G>
void require_form_shapes(const F& lhs, const G& rhs, const std::string& context) {
    if (lhs.alphabet() != rhs.alphabet() || lhs.degree_cap() != rhs.degree_cap()) {
        throw std::invalid_argument(context + ": operands disagree on alphabet or truncation");
    }
}

template <typename F, typename G, typename Terms>
LinearForm pair_against_terms(const F& lhs, const G& rhs, Terms&& term_source) {
    LinearForm out(lhs.alphabet(), lhs.degree_cap());
    for (const TensorWord& tw : all_tensor_words(lhs.alphabet(), lhs.degree_cap())) {
        Rational acc(0);
        for (const CoproductTerm& term : term_source(tw)) {
            Rational contribution = lhs.value(term.left) * rhs.value(term.right);
            if (term.multiplicity != 1) contribution *= Rational(term.multiplicity);
            acc += contribution;
        }
        out.set_value(tw, std::move(acc));
    }
    return out;
}

} // namespace detail

// Convolution phi * psi = m_A (phi x psi) Delta, materialized on all tensor
// words up to the truncation degree.
template <typename F, typename G>
LinearForm convolve(const F& lhs, const G& rhs) {
    detail::require_form_shapes(lhs, rhs, "convolve");
    LinearForm out = detail::pair_against_terms(
        lhs, rhs, [](const TensorWord& tw) { return coproduct(tw); });
    out.set_unit_value(lhs.value(TensorWord()) * rhs.value(TensorWord()));
    return out;
}

// Half-shuffles phi < psi and phi > psi. The pairing of two counit multiples
// is undefined.
template <typename F, typename G>
LinearForm half_shuffle_left(const F& lhs, const G& rhs) {
    detail::require_form_shapes(lhs, rhs, "half_shuffle_left");
    if (!lhs.value(TensorWord()).is_zero() && !rhs.value(TensorWord()).is_zero()) {
        throw std::domain_error("half_shuffle_left: undefined on two unital forms");
    }
    return detail::pair_against_terms(
        lhs, rhs, [](const TensorWord& tw) { return half_coproduct_left(tw); });
}

template <typename F, typename G>
LinearForm half_shuffle_right(const F& lhs, const G& rhs) {
    detail::require_form_shapes(lhs, rhs, "half_shuffle_right");
    if (!lhs.value(TensorWord()).is_zero() && !rhs.value(TensorWord()).is_zero()) {
        throw std::domain_error("half_shuffle_right: undefined on two unital forms");
    }
    return detail::pair_against_terms(
        lhs, rhs, [](const TensorWord& tw) { return half_coproduct_right(tw); });
}

// Full form of a character / infinitesimal character on tensor words.
LinearForm materialize(const Character& character);
LinearForm materialize(const InfinitesimalCharacter& infinitesimal);

// Convolution exponential of an infinitesimal character; the n-th power
// vanishes below total degree n, so the series terminates at the truncation.
Character conv_exp(const InfinitesimalCharacter& rho);
LinearForm conv_exp_form(const InfinitesimalCharacter& rho);

// Convolution logarithm of a character; the result is checked to vanish on
// non-trivial products of words.
InfinitesimalCharacter conv_log(const Character& character);

// Convolution bracket of infinitesimal characters (again infinitesimal).
InfinitesimalCharacter conv_bracket(const InfinitesimalCharacter& lhs,
                                    const InfinitesimalCharacter& rhs);

// Generating series of a functional: coefficient of x_w is the value on the
// single-factor tensor word (w); multi-factor values are not consulted.
template <typename F>
QSeries lambda(const F& form) {
    QSeries out(form.alphabet(), form.degree_cap());
    out.set_constant_term(form.value(TensorWord()));
    for (const Word& w : all_words(form.alphabet(), form.degree_cap())) {
        out.set_coefficient(w, form.value(TensorWord::from_word(w)));
    }
    return out;
}

QSeries lambda_gr(const Character& character);
QSeries lambda_lie(const InfinitesimalCharacter& infinitesimal);

Character character_from_series(const QSeries& f);
InfinitesimalCharacter infchar_from_series(const QSeries& f);

} // namespace ncps
