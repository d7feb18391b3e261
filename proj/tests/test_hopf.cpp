#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "ncps/hopf.hpp"
#include "ncps/verify.hpp"

using namespace ncps;

namespace {

Word make_word(std::initializer_list<int> letters) { return Word(std::vector<int>(letters)); }

bool contains_term(const std::vector<CoproductTerm>& terms, const TensorWord& left,
                   const TensorWord& right) {
    return std::any_of(terms.begin(), terms.end(), [&](const CoproductTerm& term) {
        return term.left == left && term.right == right;
    });
}

} // namespace

TEST_CASE("coproduct of the unit and of single letters") {
    const auto unit_terms = coproduct(Word());
    REQUIRE(unit_terms.size() == 1);
    CHECK(unit_terms[0].left.is_unit());
    CHECK(unit_terms[0].right.is_unit());

    const auto letter_terms = coproduct(make_word({1}));
    REQUIRE(letter_terms.size() == 2);
    CHECK(contains_term(letter_terms, TensorWord::from_word(make_word({1})), TensorWord()));
    CHECK(contains_term(letter_terms, TensorWord(), TensorWord::from_word(make_word({1}))));
}

TEST_CASE("coproduct interval blocks") {
    // S = {2} inside abc produces b (x) a|c.
    const auto terms = coproduct(make_word({1, 2, 3}));
    CHECK(terms.size() == 8);
    CHECK(contains_term(terms, TensorWord::from_word(make_word({2})),
                        TensorWord({make_word({1}), make_word({3})})));
    long long total_degree = 0;
    for (const auto& term : terms) total_degree += term.left.total_degree() + term.right.total_degree();
    CHECK(total_degree == 3 * 8);
}

TEST_CASE("tensor coproduct is multiplicative") {
    CHECK(coproduct(TensorWord()).size() == 1);
    const TensorWord ab({make_word({1}), make_word({2})});
    CHECK(coproduct(ab).size() == 4);
    // Single-factor tensors agree with the word coproduct.
    const Word w = make_word({1, 2});
    const auto lifted = coproduct(TensorWord::from_word(w));
    CHECK(merge_coproduct_terms(lifted) == merge_coproduct_terms(coproduct(w)));
}

TEST_CASE("half coproducts split the coproduct by membership of 1") {
    const Word a = make_word({1});
    const auto left_a = half_coproduct_left(a);
    REQUIRE(left_a.size() == 1);
    CHECK(left_a[0].left == TensorWord::from_word(a));
    CHECK(left_a[0].right.is_unit());
    const auto right_a = half_coproduct_right(a);
    REQUIRE(right_a.size() == 1);
    CHECK(right_a[0].left.is_unit());
    CHECK(right_a[0].right == TensorWord::from_word(a));

    const Word ab = make_word({1, 2});
    const auto left_ab = half_coproduct_left(ab);
    REQUIRE(left_ab.size() == 2);
    CHECK(contains_term(left_ab, TensorWord::from_word(ab), TensorWord()));
    CHECK(contains_term(left_ab, TensorWord::from_word(make_word({1})),
                        TensorWord::from_word(make_word({2}))));
    const auto right_ab = half_coproduct_right(ab);
    REQUIRE(right_ab.size() == 2);
    CHECK(contains_term(right_ab, TensorWord(), TensorWord::from_word(ab)));
    CHECK(contains_term(right_ab, TensorWord::from_word(make_word({2})),
                        TensorWord::from_word(make_word({1}))));

    CHECK_THROWS_AS(half_coproduct_left(Word()), std::domain_error);
    CHECK_THROWS_AS(half_coproduct_right(TensorWord()), std::domain_error);
}

TEST_CASE("half coproducts sum to the coproduct") {
    for (const Word& w : all_words(2, 5)) {
        auto combined = half_coproduct_left(w);
        const auto right = half_coproduct_right(w);
        combined.insert(combined.end(), right.begin(), right.end());
        CHECK(merge_coproduct_terms(std::move(combined)) ==
              merge_coproduct_terms(coproduct(w)));
    }
}

TEST_CASE("convolution unit and the infinitesimal square example") {
    const auto eps = LinearForm::counit(2, 3);
    Rng rng(71);
    const auto phi = rng.form(2, 3, 5, false);
    CHECK(convolve(phi, eps) == phi);
    CHECK(convolve(eps, phi) == phi);

    // rho with rho(a) = 1 only: (rho * rho)(aa) = 2.
    InfinitesimalCharacter rho(1, 2);
    rho.set_word_value(make_word({1}), Rational(1));
    const auto square = convolve(rho, rho);
    CHECK(square.value(TensorWord::from_word(make_word({1, 1}))) == Rational(2));
    CHECK(square.value(TensorWord::from_word(make_word({1}))) == Rational(0));
}

TEST_CASE("group isomorphism on a quadratic univariate witness") {
    // Phi(a)=p1, Phi(aa)=p2; Psi(a)=q1, Psi(aa)=q2: (Phi*Psi)(aa) = p2 + 2 p1 q1 + q2.
    Character phi(1, 2), psi(1, 2);
    const Rational p1(2), p2(7), q1(3), q2(5);
    phi.set_word_value(make_word({1}), p1);
    phi.set_word_value(make_word({1, 1}), p2);
    psi.set_word_value(make_word({1}), q1);
    psi.set_word_value(make_word({1, 1}), q2);
    const auto convolution = convolve(phi, psi);
    CHECK(convolution.value(TensorWord::from_word(make_word({1, 1}))) ==
          p2 + Rational(2) * p1 * q1 + q2);
    CHECK(lambda(convolution) == shifted_compose(lambda_gr(phi), lambda_gr(psi)));
}

TEST_CASE("isomorphism theorems on random instances") {
    Rng rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        const auto phi = rng.character(2, 4, 8);
        const auto psi = rng.character(2, 4, 8);
        CHECK(lambda(convolve(phi, psi)) ==
              shifted_compose(lambda_gr(phi), lambda_gr(psi)));

        const auto rho = rng.infinitesimal(2, 4, 8);
        const auto tau = rng.infinitesimal(2, 4, 8);
        CHECK(lambda_lie(conv_bracket(rho, tau)) ==
              lie_bracket(lambda_lie(rho), lambda_lie(tau)));
    }
}

TEST_CASE("half-shuffle unit rules and the undefined pairing") {
    const auto eps = LinearForm::counit(2, 3);
    Rng rng(79);
    const auto phi = rng.form(2, 3, 6, true);
    CHECK(half_shuffle_left(phi, eps) == phi);
    CHECK(half_shuffle_right(eps, phi) == phi);

    LinearForm zero(2, 3);
    CHECK(half_shuffle_right(phi, eps) == zero);
    CHECK(half_shuffle_left(eps, phi) == zero);

    CHECK_THROWS_AS(half_shuffle_left(eps, eps), std::domain_error);
    CHECK_THROWS_AS(half_shuffle_right(eps, eps), std::domain_error);
}

TEST_CASE("convolution splits into half-shuffles") {
    Rng rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        const auto phi = rng.form(2, 4, 8, true);
        const auto psi = rng.form(2, 4, 8, true);
        CHECK(half_shuffle_left(phi, psi) + half_shuffle_right(phi, psi) ==
              convolve(phi, psi));
    }
}

TEST_CASE("shuffle identities") {
    Rng rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        const auto phi = rng.form(2, 4, 8, true);
        const auto psi = rng.form(2, 4, 8, true);
        const auto rho = rng.form(2, 4, 8, true);
        CHECK(half_shuffle_left(half_shuffle_left(phi, psi), rho) ==
              half_shuffle_left(phi, convolve(psi, rho)));
        CHECK(half_shuffle_left(half_shuffle_right(phi, psi), rho) ==
              half_shuffle_right(phi, half_shuffle_left(psi, rho)));
        CHECK(half_shuffle_right(phi, half_shuffle_right(psi, rho)) ==
              half_shuffle_right(convolve(phi, psi), rho));
    }
}

TEST_CASE("character action: substitution and shifted product") {
    Rng rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        const auto phi = rng.form(2, 4, 8, true);
        const auto gamma = rng.character(2, 4, 8);
        const auto f = lambda(phi);
        const auto g = lambda_gr(gamma);
        CHECK(lambda(half_shuffle_left(phi, gamma)) == shifted_substitute(f, g));
        CHECK(lambda(half_shuffle_right(phi, gamma)) ==
              cauchy_mul(g - QSeries::one(2, 4), shifted_substitute(f, g)));
    }
}

TEST_CASE("infinitesimal action: products and the pre-Lie linearization") {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const auto phi = rng.form(2, 4, 8, false);
        const auto gamma = rng.infinitesimal(2, 4, 8);
        const auto f = lambda(phi);
        const auto g = lambda_lie(gamma);
        CHECK(lambda(half_shuffle_right(phi, gamma)) == cauchy_mul(g, f));

        const auto phi0 = rng.form(2, 4, 8, true);
        const auto f0 = lambda(phi0);
        CHECK(lambda(convolve(phi0, gamma)) == pre_lie(f0, g));
    }
}

TEST_CASE("convolution exponential and logarithm") {
    const InfinitesimalCharacter zero(2, 3);
    const auto identity = conv_exp(zero);
    CHECK(identity.word_values().empty());

    // Univariate rho(x) = 1: geometric word values.
    InfinitesimalCharacter rho(1, 4);
    rho.set_word_value(make_word({1}), Rational(1));
    const auto character = conv_exp(rho);
    for (int k = 1; k <= 4; ++k) {
        CHECK(character.word_value(Word(std::vector<int>(static_cast<size_t>(k), 1))) ==
              Rational(1));
    }

    Rng rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r = rng.infinitesimal(2, 4, 8);
        const auto exp_r = conv_exp(r);
        CHECK(conv_log(exp_r) == r);
        CHECK(lambda_gr(exp_r) == group_exp(lambda_lie(r)));
        // The exponential form is multiplicative on tensor words.
        const auto form = conv_exp_form(r);
        for (const TensorWord& tw : all_tensor_words(2, 4)) {
            CHECK(form.value(tw) == exp_r.value(tw));
        }
    }

    CHECK(conv_log(Character(2, 3)) == InfinitesimalCharacter(2, 3));
}

TEST_CASE("coassociativity via triple legs") {
    using Triple = std::tuple<TensorWord, TensorWord, TensorWord>;
    for (const Word& w : all_words(2, 5)) {
        std::vector<Triple> via_left;
        std::vector<Triple> via_right;
        for (const CoproductTerm& outer : coproduct(w)) {
            for (const CoproductTerm& inner : coproduct(outer.left)) {
                via_left.emplace_back(inner.left, inner.right, outer.right);
            }
            for (const CoproductTerm& inner : coproduct(outer.right)) {
                via_right.emplace_back(outer.left, inner.left, inner.right);
            }
        }
        std::sort(via_left.begin(), via_left.end());
        std::sort(via_right.begin(), via_right.end());
        CHECK(via_left == via_right);
    }
}

TEST_CASE("lambda bijections") {
    CHECK(lambda(LinearForm::counit(2, 3)) == QSeries::one(2, 3));

    Rng rng(107);
    const auto f = rng.series_g1(2, 4, 8);
    CHECK(lambda_gr(character_from_series(f)) == f);
    const auto h = rng.series_g0(2, 4, 8);
    CHECK(lambda_lie(infchar_from_series(h)) == h);

    CHECK_THROWS_AS(character_from_series(h), std::domain_error);
    CHECK_THROWS_AS(infchar_from_series(f), std::domain_error);

    // Values on multi-factor tensors are invisible to lambda.
    auto phi = rng.form(2, 4, 6, false);
    auto psi = phi;
    psi.set_value(TensorWord({make_word({1}), make_word({2})}), Rational(9));
    CHECK(lambda(phi) == lambda(psi));
}

TEST_CASE("form shape mismatches are input errors") {
    const auto phi = LinearForm::counit(2, 3);
    const auto psi = LinearForm::counit(2, 4);
    CHECK_THROWS_AS(convolve(phi, psi), std::invalid_argument);
    LinearForm f(2, 3);
    CHECK_THROWS_AS(f.set_value(TensorWord::from_word(make_word({1, 1, 1, 1})), Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(f.set_value(TensorWord::from_word(make_word({3})), Rational(1)),
                    std::invalid_argument);
}
