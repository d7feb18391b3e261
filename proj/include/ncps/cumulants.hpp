#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncps/coefficient.hpp"
#include "ncps/combinatorics.hpp"
#include "ncps/series.hpp"
#include "ncps/word.hpp"

namespace ncps {

enum class CumulantKind { free, boolean, monotone };

std::string to_string(CumulantKind kind);

// Generating series of moments: a series in G1.
class MomentSeries {
public:
    explicit MomentSeries(QSeries series);
    const QSeries& series() const { return series_; }
    bool operator==(const MomentSeries&) const = default;

private:
    QSeries series_;
};

// Generating series of cumulants of one of the three kinds: a series in G0.
class CumulantSeries {
public:
    CumulantSeries(QSeries series, CumulantKind kind);
    const QSeries& series() const { return series_; }
    CumulantKind kind() const { return kind_; }
    bool operator==(const CumulantSeries&) const = default;

private:
    QSeries series_;
    CumulantKind kind_;
};

// Free transform: the moment series is the unique fixed point of
// M = 1 + K(x M(x)); the inverse is the ascending-degree solve.
MomentSeries moments_from_free(const CumulantSeries& cumulants);
CumulantSeries free_from_moments(const MomentSeries& moments);

// Brute-force non-crossing-partition sum for the moment of one word,
// independent of the fixed-point solver.
Rational free_oracle_nc(const CumulantSeries& cumulants, const Word& w,
                        int cap = kNonCrossingCap);

// Boolean transform: 1 - B = 1/M in the Cauchy ring.
CumulantSeries boolean_from_moments(const MomentSeries& moments);
MomentSeries moments_from_boolean(const CumulantSeries& cumulants);

// Independent prefix recursion m(w) = sum over w = u.v, v non-empty, of
// m(u) b(v), evaluated densely on all words up to the truncation.
MomentSeries boolean_recursion_oracle(const CumulantSeries& cumulants);

// Monotone transform: cumulants are the pre-Lie logarithm of the moments.
CumulantSeries monotone_from_moments(const MomentSeries& moments);
MomentSeries moments_from_monotone(const CumulantSeries& cumulants);

// Explicit univariate composition formula for m_n(t); h[i] holds the
// coefficient of x^(i+1). Independent of the pre-Lie iteration.
PolyT monotone_formula(const std::vector<Rational>& h, int n);

// Symbolic expansion of m_n(t): coefficient of t^k times a monomial in the
// h_i, with h_powers mapping the index i to its exponent.
struct MonotoneFormulaTerm {
    int t_power = 0;
    std::map<int, int> h_powers;
    Rational coefficient;

    bool operator==(const MonotoneFormulaTerm&) const = default;
};

std::vector<MonotoneFormulaTerm> monotone_formula_symbolic(int n);

// Image of a rooted tree under the unique pre-Lie morphism sending the
// single node to h.
QSeries prelie_tree_image(const RootedTree& tree, const QSeries& h);

// Tree expansion of the pre-Lie exponential at t = 1:
// 1 + sum over trees of P_h(tau) / (tau! sigma(tau)).
MomentSeries monotone_tree_expansion(const QSeries& h);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::optional<Word> first_difference;
};

struct DictionaryReport {
    IdentityCheck group_inverse_vs_free;   // M^(.-1) = 1/(1 + K)
    IdentityCheck boolean_vs_group_inverse; // B = 1 - M^(.-1)(x M(x))
    IdentityCheck substituted_inverse;     // M^(.-1)(x M(x)) = 1/M
    bool all_passed() const;
};

DictionaryReport dictionary_check(const MomentSeries& moments);

} // namespace ncps
