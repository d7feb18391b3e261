#include "ncps/hopf.hpp"

#include <algorithm>

namespace ncps {

namespace {

std::vector<CoproductTerm> word_terms_filtered(const Word& w, int keep_position_one) {
    // keep_position_one: +1 -> subsets containing 1, -1 -> subsets avoiding 1,
    // 0 -> all subsets.
    const int n = w.length();
    std::vector<CoproductTerm> out;
    for (const auto& subset : enumerate_subsets(n)) {
        const bool has_one = !subset.empty() && subset.front() == 1;
        if (keep_position_one > 0 && !has_one) continue;
        if (keep_position_one < 0 && has_one) continue;
        SubsetSplit split = subset_split(w, subset);
        out.push_back({TensorWord::from_word(split.extracted), split.blocks, 1});
    }
    return out;
}

// Pairwise product of term lists, legs concatenated bar-wise.
std::vector<CoproductTerm> term_product(const std::vector<CoproductTerm>& lhs,
                                        const std::vector<CoproductTerm>& rhs) {
    std::vector<CoproductTerm> out;
    out.reserve(lhs.size() * rhs.size());
    for (const CoproductTerm& a : lhs) {
        for (const CoproductTerm& b : rhs) {
            out.push_back({a.left.bar_concat(b.left), a.right.bar_concat(b.right),
                           a.multiplicity * b.multiplicity});
        }
    }
    return out;
}

std::vector<CoproductTerm> coproduct_rest(const TensorWord& tw, size_t from) {
    std::vector<CoproductTerm> acc{{TensorWord(), TensorWord(), 1}};
    for (size_t i = from; i < tw.factors().size(); ++i) {
        acc = term_product(acc, coproduct(tw.factors()[i]));
    }
    return acc;
}

} // namespace

std::vector<CoproductTerm> coproduct(const Word& w) {
    if (w.empty()) return {{TensorWord(), TensorWord(), 1}};
    return word_terms_filtered(w, 0);
}

std::vector<CoproductTerm> coproduct(const TensorWord& tw) {
    return coproduct_rest(tw, 0);
}

std::vector<CoproductTerm> half_coproduct_left(const Word& w) {
    if (w.empty()) throw std::domain_error("half coproducts are undefined on the unit");
    return word_terms_filtered(w, +1);
}

std::vector<CoproductTerm> half_coproduct_right(const Word& w) {
    if (w.empty()) throw std::domain_error("half coproducts are undefined on the unit");
    return word_terms_filtered(w, -1);
}

std::vector<CoproductTerm> half_coproduct_left(const TensorWord& tw) {
    if (tw.is_unit()) throw std::domain_error("half coproducts are undefined on the unit");
    return term_product(half_coproduct_left(tw.factors().front()), coproduct_rest(tw, 1));
}

std::vector<CoproductTerm> half_coproduct_right(const TensorWord& tw) {
    if (tw.is_unit()) throw std::domain_error("half coproducts are undefined on the unit");
    return term_product(half_coproduct_right(tw.factors().front()), coproduct_rest(tw, 1));
}

std::vector<CoproductTerm> merge_coproduct_terms(std::vector<CoproductTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const CoproductTerm& a, const CoproductTerm& b) {
        if (a.left != b.left) return a.left < b.left;
        return a.right < b.right;
    });
    std::vector<CoproductTerm> merged;
    for (CoproductTerm& term : terms) {
        if (!merged.empty() && merged.back().left == term.left &&
            merged.back().right == term.right) {
            merged.back().multiplicity += term.multiplicity;
        } else {
            merged.push_back(std::move(term));
        }
    }
    std::erase_if(merged, [](const CoproductTerm& t) { return t.multiplicity == 0; });
    return merged;
}

LinearForm::LinearForm(int alphabet, int degree_cap)
    : alphabet_(alphabet), degree_cap_(degree_cap) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be positive");
    if (degree_cap < 1) throw std::invalid_argument("truncation degree must be positive");
}

LinearForm LinearForm::counit(int alphabet, int degree_cap) {
    LinearForm out(alphabet, degree_cap);
    out.unit_value_ = Rational(1);
    return out;
}

void LinearForm::check_tensor_word(const TensorWord& tw) const {
    if (tw.total_degree() > degree_cap_)
        throw std::invalid_argument("tensor word exceeds truncation degree");
    for (const Word& factor : tw.factors()) {
        if (factor.max_letter() > alphabet_)
            throw std::invalid_argument("tensor word letter exceeds alphabet size");
    }
}

Rational LinearForm::value(const TensorWord& tw) const {
    if (tw.is_unit()) return unit_value_;
    check_tensor_word(tw);
    auto it = values_.find(tw);
    return it == values_.end() ? Rational(0) : it->second;
}

void LinearForm::set_value(const TensorWord& tw, Rational value) {
    if (tw.is_unit()) {
        unit_value_ = std::move(value);
        return;
    }
    check_tensor_word(tw);
    if (value.is_zero()) {
        values_.erase(tw);
    } else {
        values_[tw] = std::move(value);
    }
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    require_same_shape(other.alphabet_, other.degree_cap_, "form addition");
    unit_value_ += other.unit_value_;
    for (const auto& [tw, v] : other.values_) {
        set_value(tw, value(tw) + v);
    }
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
    require_same_shape(other.alphabet_, other.degree_cap_, "form subtraction");
    unit_value_ -= other.unit_value_;
    for (const auto& [tw, v] : other.values_) {
        set_value(tw, value(tw) - v);
    }
    return *this;
}

LinearForm LinearForm::scaled(const Rational& factor) const {
    LinearForm out(alphabet_, degree_cap_);
    if (factor.is_zero()) return out;
    out.unit_value_ = unit_value_ * factor;
    for (const auto& [tw, v] : values_) out.values_.emplace(tw, v * factor);
    return out;
}

void LinearForm::require_same_shape(int alphabet, int degree_cap,
                                    const std::string& context) const {
    if (alphabet_ != alphabet || degree_cap_ != degree_cap) {
        throw std::invalid_argument(context + ": operands disagree on alphabet or truncation");
    }
}

Character::Character(int alphabet, int degree_cap)
    : alphabet_(alphabet), degree_cap_(degree_cap) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be positive");
    if (degree_cap < 1) throw std::invalid_argument("truncation degree must be positive");
}

Rational Character::word_value(const Word& w) const {
    if (w.empty()) return Rational(1);
    auto it = word_values_.find(w);
    return it == word_values_.end() ? Rational(0) : it->second;
}

void Character::set_word_value(const Word& w, Rational value) {
    if (w.empty()) throw std::invalid_argument("character unit value is fixed at 1");
    if (w.length() > degree_cap_) throw std::invalid_argument("word exceeds truncation degree");
    if (w.max_letter() > alphabet_) throw std::invalid_argument("word letter exceeds alphabet");
    if (value.is_zero()) {
        word_values_.erase(w);
    } else {
        word_values_[w] = std::move(value);
    }
}

Rational Character::value(const TensorWord& tw) const {
    Rational acc(1);
    for (const Word& factor : tw.factors()) acc *= word_value(factor);
    return acc;
}

InfinitesimalCharacter::InfinitesimalCharacter(int alphabet, int degree_cap)
    : alphabet_(alphabet), degree_cap_(degree_cap) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be positive");
    if (degree_cap < 1) throw std::invalid_argument("truncation degree must be positive");
}

Rational InfinitesimalCharacter::word_value(const Word& w) const {
    if (w.empty()) return Rational(0);
    auto it = word_values_.find(w);
    return it == word_values_.end() ? Rational(0) : it->second;
}

void InfinitesimalCharacter::set_word_value(const Word& w, Rational value) {
    if (w.empty()) throw std::invalid_argument("infinitesimal characters vanish on the unit");
    if (w.length() > degree_cap_) throw std::invalid_argument("word exceeds truncation degree");
    if (w.max_letter() > alphabet_) throw std::invalid_argument("word letter exceeds alphabet");
    if (value.is_zero()) {
        word_values_.erase(w);
    } else {
        word_values_[w] = std::move(value);
    }
}

Rational InfinitesimalCharacter::value(const TensorWord& tw) const {
    if (tw.factor_count() != 1) return Rational(0);
    return word_value(tw.factors().front());
}

LinearForm materialize(const Character& character) {
    LinearForm out(character.alphabet(), character.degree_cap());
    out.set_unit_value(Rational(1));
    for (const TensorWord& tw : all_tensor_words(character.alphabet(), character.degree_cap())) {
        out.set_value(tw, character.value(tw));
    }
    return out;
}

LinearForm materialize(const InfinitesimalCharacter& infinitesimal) {
    LinearForm out(infinitesimal.alphabet(), infinitesimal.degree_cap());
    for (const auto& [w, v] : infinitesimal.word_values()) {
        out.set_value(TensorWord::from_word(w), v);
    }
    return out;
}

LinearForm conv_exp_form(const InfinitesimalCharacter& rho) {
    const int d = rho.alphabet();
    const int cap = rho.degree_cap();
    LinearForm acc = LinearForm::counit(d, cap);
    LinearForm power = materialize(rho);
    for (int n = 1; n <= cap; ++n) {
        acc += power.scaled(Rational(1) / factorial(n));
        if (n < cap) power = convolve(power, rho);
    }
    return acc;
}

Character conv_exp(const InfinitesimalCharacter& rho) {
    const LinearForm form = conv_exp_form(rho);
    Character out(rho.alphabet(), rho.degree_cap());
    for (const Word& w : all_words(rho.alphabet(), rho.degree_cap())) {
        out.set_word_value(w, form.value(TensorWord::from_word(w)));
    }
    return out;
}

InfinitesimalCharacter conv_log(const Character& character) {
    const int d = character.alphabet();
    const int cap = character.degree_cap();
    LinearForm deviation = materialize(character) - LinearForm::counit(d, cap);
    LinearForm acc(d, cap);
    LinearForm power = deviation;
    for (int n = 1; n <= cap; ++n) {
        const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        acc += power.scaled(sign / Rational(n));
        if (n < cap) power = convolve(power, deviation);
    }
    if (!acc.value(TensorWord()).is_zero()) {
        throw std::logic_error("conv_log: result does not vanish on the unit");
    }
    for (const auto& [tw, v] : acc.values()) {
        if (tw.factor_count() > 1 && !v.is_zero()) {
            throw std::logic_error("conv_log: result does not vanish on products");
        }
    }
    InfinitesimalCharacter out(d, cap);
    for (const auto& [tw, v] : acc.values()) {
        if (tw.factor_count() == 1) out.set_word_value(tw.factors().front(), v);
    }
    return out;
}

InfinitesimalCharacter conv_bracket(const InfinitesimalCharacter& lhs,
                                    const InfinitesimalCharacter& rhs) {
    detail::require_form_shapes(lhs, rhs, "conv_bracket");
    LinearForm bracket = convolve(lhs, rhs) - convolve(rhs, lhs);
    for (const auto& [tw, v] : bracket.values()) {
        if (tw.factor_count() > 1 && !v.is_zero()) {
            throw std::logic_error("conv_bracket: result does not vanish on products");
        }
    }
    InfinitesimalCharacter out(lhs.alphabet(), lhs.degree_cap());
    for (const auto& [tw, v] : bracket.values()) {
        if (tw.factor_count() == 1) out.set_word_value(tw.factors().front(), v);
    }
    return out;
}

QSeries lambda_gr(const Character& character) { return lambda(character); }

QSeries lambda_lie(const InfinitesimalCharacter& infinitesimal) { return lambda(infinitesimal); }

Character character_from_series(const QSeries& f) {
    if (!f.in_g1()) throw std::domain_error("character_from_series: series must lie in G1");
    Character out(f.alphabet(), f.degree_cap());
    for (const auto& [w, c] : f.terms()) out.set_word_value(w, c);
    return out;
}

InfinitesimalCharacter infchar_from_series(const QSeries& f) {
    if (!f.in_g0()) throw std::domain_error("infchar_from_series: series must lie in G0");
    InfinitesimalCharacter out(f.alphabet(), f.degree_cap());
    for (const auto& [w, c] : f.terms()) out.set_word_value(w, c);
    return out;
}

} // namespace ncps
