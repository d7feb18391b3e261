#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncps/coefficient.hpp"
#include "ncps/word.hpp"

namespace ncps {

enum class SeriesClass { g1, g0, gc, general };

// Truncated non-commutative power series over a fixed finite alphabet:
// sparse map from words of length 1..degree_cap to exact coefficients plus
// the coefficient of the empty word. All operations discard words beyond
// the cap; the underlying identities are graded, so truncation is exact
// degree by degree.
template <typename R>
class TruncatedSeries {
public:
    TruncatedSeries(int alphabet, int degree_cap) : alphabet_(alphabet), degree_cap_(degree_cap) {
        if (alphabet < 1) throw std::invalid_argument("alphabet size must be positive");
        if (degree_cap < 1) throw std::invalid_argument("truncation degree must be positive");
    }

    static TruncatedSeries zero(int alphabet, int degree_cap) {
        return TruncatedSeries(alphabet, degree_cap);
    }

    static TruncatedSeries one(int alphabet, int degree_cap) {
        TruncatedSeries s(alphabet, degree_cap);
        s.constant_ = ring_one<R>();
        return s;
    }

    static TruncatedSeries monomial(int alphabet, int degree_cap, const Word& w, R coeff) {
        TruncatedSeries s(alphabet, degree_cap);
        s.set_coefficient(w, std::move(coeff));
        return s;
    }

    int alphabet() const { return alphabet_; }
    int degree_cap() const { return degree_cap_; }

    const R& constant_term() const { return constant_; }
    void set_constant_term(R value) { constant_ = std::move(value); }

    const std::map<Word, R>& terms() const { return terms_; }

    R coefficient(const Word& w) const {
        if (w.empty()) return constant_;
        auto it = terms_.find(w);
        return it == terms_.end() ? R{} : it->second;
    }

    void set_coefficient(const Word& w, R value) {
        if (w.empty()) {
            constant_ = std::move(value);
            return;
        }
        check_word(w);
        if (ring_is_zero(value)) {
            terms_.erase(w);
        } else {
            terms_[w] = std::move(value);
        }
    }

    void add_to_coefficient(const Word& w, const R& delta) {
        if (ring_is_zero(delta)) return;
        if (w.empty()) {
            constant_ += delta;
            return;
        }
        if (w.length() > degree_cap_) return; // truncated away
        check_word(w);
        auto [it, inserted] = terms_.try_emplace(w, delta);
        if (!inserted) {
            it->second += delta;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    bool in_g1() const { return constant_ == ring_one<R>(); }
    bool in_g0() const { return ring_is_zero(constant_); }

    bool in_gc() const {
        if (!in_g0()) return false;
        for (int letter = 1; letter <= alphabet_; ++letter) {
            if (coefficient(Word::single(letter)) != ring_one<R>()) return false;
        }
        return true;
    }

    SeriesClass classify() const {
        if (in_gc()) return SeriesClass::gc;
        if (in_g0()) return SeriesClass::g0;
        if (in_g1()) return SeriesClass::g1;
        return SeriesClass::general;
    }

    // Smallest degree with a nonzero term; degree_cap+1 when none, 0 when the
    // constant is nonzero.
    int min_degree() const {
        if (!ring_is_zero(constant_)) return 0;
        if (terms_.empty()) return degree_cap_ + 1;
        return terms_.begin()->first.length();
    }

    bool is_zero() const { return terms_.empty() && ring_is_zero(constant_); }

    TruncatedSeries truncated(int new_cap) const {
        TruncatedSeries out(alphabet_, new_cap);
        out.constant_ = constant_;
        for (const auto& [w, c] : terms_) {
            if (w.length() > new_cap) break;
            out.terms_.emplace(w, c);
        }
        return out;
    }

    TruncatedSeries graded_part(int degree) const {
        TruncatedSeries out(alphabet_, degree_cap_);
        if (degree == 0) {
            out.constant_ = constant_;
            return out;
        }
        for (const auto& [w, c] : terms_) {
            if (w.length() == degree) out.terms_.emplace(w, c);
        }
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        require_same_shape(other, "series addition");
        constant_ += other.constant_;
        for (const auto& [w, c] : other.terms_) add_to_coefficient(w, c);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& other) {
        require_same_shape(other, "series subtraction");
        constant_ -= other.constant_;
        for (const auto& [w, c] : other.terms_) add_to_coefficient(w, -c);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    TruncatedSeries operator-() const {
        TruncatedSeries out(alphabet_, degree_cap_);
        out.constant_ = -constant_;
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }

    TruncatedSeries scaled(const R& factor) const {
        TruncatedSeries out(alphabet_, degree_cap_);
        if (ring_is_zero(factor)) return out;
        out.constant_ = constant_ * factor;
        for (const auto& [w, c] : terms_) {
            R value = c * factor;
            if (!ring_is_zero(value)) out.terms_.emplace(w, std::move(value));
        }
        return out;
    }

    bool operator==(const TruncatedSeries&) const = default;

    void require_same_shape(const TruncatedSeries& other, const std::string& context) const {
        if (alphabet_ != other.alphabet_ || degree_cap_ != other.degree_cap_) {
            throw std::invalid_argument(context + ": operands disagree on alphabet or truncation");
        }
    }

private:
    void check_word(const Word& w) const {
        if (w.length() > degree_cap_)
            throw std::invalid_argument("word exceeds truncation degree");
        if (w.max_letter() > alphabet_)
            throw std::invalid_argument("word letter exceeds alphabet size");
    }

    int alphabet_;
    int degree_cap_;
    R constant_{};
    std::map<Word, R> terms_;
};

using QSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<PolyT>;

template <typename R>
void require_g1(const TruncatedSeries<R>& f, const std::string& context) {
    if (!f.in_g1()) throw std::domain_error(context + ": series must have constant term 1");
}

template <typename R>
void require_g0(const TruncatedSeries<R>& f, const std::string& context) {
    if (!f.in_g0()) throw std::domain_error(context + ": series must have constant term 0");
}

// Product dual to deconcatenation: (fg)_w = sum over w = u.v of f_u g_v.
template <typename R>
TruncatedSeries<R> cauchy_mul(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    f.require_same_shape(g, "cauchy_mul");
    const int cap = f.degree_cap();
    TruncatedSeries<R> out(f.alphabet(), cap);
    out.set_constant_term(f.constant_term() * g.constant_term());
    if (!ring_is_zero(g.constant_term())) {
        for (const auto& [w, c] : f.terms()) out.add_to_coefficient(w, c * g.constant_term());
    }
    if (!ring_is_zero(f.constant_term())) {
        for (const auto& [w, c] : g.terms()) out.add_to_coefficient(w, f.constant_term() * c);
    }
    for (const auto& [u, cu] : f.terms()) {
        if (u.length() >= cap) continue;
        for (const auto& [v, cv] : g.terms()) {
            if (u.length() + v.length() > cap) continue;
            out.add_to_coefficient(u.concat(v), cu * cv);
        }
    }
    return out;
}

// Two-sided Cauchy inverse of f in G1, via the contraction g -> 1 - f'g whose
// error gains one degree per pass.
template <typename R>
TruncatedSeries<R> cauchy_inv(const TruncatedSeries<R>& f) {
    require_g1(f, "cauchy_inv");
    auto f_prime = f;
    f_prime.set_constant_term(R{});
    auto one = TruncatedSeries<R>::one(f.alphabet(), f.degree_cap());
    auto g = one;
    for (int pass = 0; pass < f.degree_cap(); ++pass) {
        g = one - cauchy_mul(f_prime, g);
    }
    return g;
}

// x_i * g as a series.
template <typename R>
TruncatedSeries<R> shift_letter(int letter, const TruncatedSeries<R>& g) {
    TruncatedSeries<R> out(g.alphabet(), g.degree_cap());
    const Word head = Word::single(letter);
    out.add_to_coefficient(head, g.constant_term());
    for (const auto& [w, c] : g.terms()) {
        if (1 + w.length() > g.degree_cap()) break;
        out.add_to_coefficient(head.concat(w), c);
    }
    return out;
}

// f(x g(x)): replaces each variable x_i of f by x_i g(x). Requires g in G1 so
// the substituted variables stay tangent to the original grading.
template <typename R>
TruncatedSeries<R> shifted_substitute(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    f.require_same_shape(g, "shifted_substitute");
    require_g1(g, "shifted_substitute");
    TruncatedSeries<R> out(f.alphabet(), f.degree_cap());
    out.set_constant_term(f.constant_term());
    for (const auto& [v, cv] : f.terms()) {
        auto monomial = TruncatedSeries<R>::one(f.alphabet(), f.degree_cap());
        for (int j = 0; j < v.length() && !monomial.is_zero(); ++j) {
            monomial = cauchy_mul(monomial, shift_letter(v.letter(j), g));
        }
        for (const auto& [w, cw] : monomial.terms()) out.add_to_coefficient(w, cv * cw);
    }
    return out;
}

// Shifted composition f . g = g(x) f(x g(x)), the group law on G1.
template <typename R>
TruncatedSeries<R> shifted_compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    require_g1(f, "shifted_compose");
    require_g1(g, "shifted_compose");
    return cauchy_mul(g, shifted_substitute(f, g));
}

// Group inverse: solves r . f = f(x) r(x f(x)) = 1 degree by degree; the
// correction at degree n feeds through the composition unchanged at degree n.
template <typename R>
TruncatedSeries<R> shifted_inverse(const TruncatedSeries<R>& f) {
    require_g1(f, "shifted_inverse");
    auto one = TruncatedSeries<R>::one(f.alphabet(), f.degree_cap());
    auto inverse = one;
    for (int degree = 1; degree <= f.degree_cap(); ++degree) {
        auto defect = one - shifted_compose(inverse, f);
        for (const auto& [w, c] : defect.terms()) {
            if (w.length() == degree) inverse.add_to_coefficient(w, c);
        }
    }
    return inverse;
}

// Right pre-Lie insertion: every monomial of g is inserted into each of the
// n+1 gaps of every length-n monomial of f.
template <typename R>
TruncatedSeries<R> pre_lie(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    f.require_same_shape(g, "pre_lie");
    require_g0(f, "pre_lie");
    require_g0(g, "pre_lie");
    const int cap = f.degree_cap();
    TruncatedSeries<R> out(f.alphabet(), cap);
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : g.terms()) {
            if (u.length() + v.length() > cap) continue;
            const R value = cu * cv;
            for (int gap = 0; gap <= u.length(); ++gap) {
                out.add_to_coefficient(u.prefix(gap).concat(v).concat(u.suffix_from(gap)), value);
            }
        }
    }
    return out;
}

template <typename R>
TruncatedSeries<R> lie_bracket(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    return pre_lie(f, g) - pre_lie(g, f);
}

namespace detail {

// Iterates R^(0) = h, R^(n) = R^(n-1) <| h; the n-th iterate has minimum
// degree n+1, so the list is complete for the truncation.
template <typename R>
std::vector<TruncatedSeries<R>> pre_lie_iterates(const TruncatedSeries<R>& h) {
    std::vector<TruncatedSeries<R>> iterates{h};
    for (int n = 2; n <= h.degree_cap(); ++n) {
        if (iterates.back().is_zero()) break;
        iterates.push_back(pre_lie(iterates.back(), h));
    }
    return iterates;
}

} // namespace detail

// Pre-Lie exponential exp^G(h) = 1 + sum_n R^(n-1)(h)/n!.
template <typename R>
TruncatedSeries<R> group_exp(const TruncatedSeries<R>& h) {
    require_g0(h, "group_exp");
    auto out = TruncatedSeries<R>::one(h.alphabet(), h.degree_cap());
    int n = 1;
    for (const auto& iterate : detail::pre_lie_iterates(h)) {
        out += iterate.scaled(ring_from<R>(Rational(1) / factorial(n)));
        ++n;
    }
    return out;
}

// Inverse of group_exp: ascending-degree solve. Adding a degree-n term to h
// shifts group_exp(h) at degree n by exactly that term.
template <typename R>
TruncatedSeries<R> group_log(const TruncatedSeries<R>& f) {
    require_g1(f, "group_log");
    TruncatedSeries<R> h(f.alphabet(), f.degree_cap());
    for (int degree = 1; degree <= f.degree_cap(); ++degree) {
        auto defect = f - group_exp(h);
        for (const auto& [w, c] : defect.terms()) {
            if (w.length() == degree) h.add_to_coefficient(w, c);
        }
    }
    return h;
}

// BCH product on G0 transported from the group law.
template <typename R>
TruncatedSeries<R> group_bch(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    require_g0(f, "group_bch");
    require_g0(g, "group_bch");
    return group_log(shifted_compose(group_exp(f), group_exp(g)));
}

inline PolySeries embed_poly(const QSeries& f) {
    PolySeries out(f.alphabet(), f.degree_cap());
    out.set_constant_term(PolyT(f.constant_term()));
    for (const auto& [w, c] : f.terms()) out.set_coefficient(w, PolyT(c));
    return out;
}

inline QSeries specialize_t(const PolySeries& f, const Rational& t) {
    QSeries out(f.alphabet(), f.degree_cap());
    out.set_constant_term(f.constant_term().evaluate(t));
    for (const auto& [w, c] : f.terms()) out.set_coefficient(w, c.evaluate(t));
    return out;
}

inline PolySeries derivative_t(const PolySeries& f) {
    PolySeries out(f.alphabet(), f.degree_cap());
    out.set_constant_term(f.constant_term().derivative());
    for (const auto& [w, c] : f.terms()) out.set_coefficient(w, c.derivative());
    return out;
}

// One-parameter flow M_t = 1 + sum_n R^(n-1)(h) t^n/n!, the solution of
// dM_t/dt = h + (M_t - 1) <| h with M_0 = 1.
inline PolySeries flow(const QSeries& h) {
    require_g0(h, "flow");
    PolySeries out(h.alphabet(), h.degree_cap());
    out.set_constant_term(PolyT(Rational(1)));
    int n = 1;
    for (const auto& iterate : detail::pre_lie_iterates(h)) {
        const Rational inv_fact = Rational(1) / factorial(n);
        for (const auto& [w, c] : iterate.terms()) {
            PolyT updated = out.coefficient(w);
            updated += PolyT::monomial(c * inv_fact, n);
            out.set_coefficient(w, std::move(updated));
        }
        ++n;
    }
    return out;
}

// Univariate embedding mu(f) = x f(x) into tangent-to-identity series; the
// result lives one degree above f's truncation.
template <typename R>
TruncatedSeries<R> mu_embed(const TruncatedSeries<R>& f) {
    if (f.alphabet() != 1) throw std::domain_error("mu_embed: series must be univariate");
    TruncatedSeries<R> out(1, f.degree_cap() + 1);
    for (int degree = 0; degree <= f.degree_cap(); ++degree) {
        const Word source(std::vector<int>(static_cast<size_t>(degree), 1));
        const Word target(std::vector<int>(static_cast<size_t>(degree + 1), 1));
        out.set_coefficient(target, f.coefficient(source));
    }
    return out;
}

// Ordinary composition F(G(x)) of univariate series with zero constant term.
template <typename R>
TruncatedSeries<R> univariate_compose(const TruncatedSeries<R>& outer,
                                      const TruncatedSeries<R>& inner) {
    if (outer.alphabet() != 1 || inner.alphabet() != 1)
        throw std::domain_error("univariate_compose: series must be univariate");
    outer.require_same_shape(inner, "univariate_compose");
    require_g0(outer, "univariate_compose");
    require_g0(inner, "univariate_compose");
    const int cap = outer.degree_cap();
    TruncatedSeries<R> out(1, cap);
    auto power = TruncatedSeries<R>::one(1, cap);
    for (int k = 1; k <= cap; ++k) {
        power = cauchy_mul(power, inner);
        if (power.is_zero()) break;
        const Word xk(std::vector<int>(static_cast<size_t>(k), 1));
        out += power.scaled(outer.coefficient(xk));
    }
    return out;
}

// Checks mu(f . g) = mu(f) o mu(g), the tangent-to-identity isomorphism.
template <typename R>
bool mu_compose_check(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    const auto lhs = mu_embed(shifted_compose(f, g));
    const auto rhs = univariate_compose(mu_embed(f), mu_embed(g));
    return lhs == rhs;
}

} // namespace ncps
