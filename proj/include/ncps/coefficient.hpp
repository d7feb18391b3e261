#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ncps {

// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with an optional leading sign; q must be positive.
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Canonical rendering: "p" or "p/q" in lowest terms, sign on the numerator.
std::string to_string(const Rational& value);

Rational factorial(int n);

inline bool ring_is_zero(const Rational& r) { return r.is_zero(); }

// Polynomial in the formal parameter t over the rationals, stored sparsely
// by ascending exponent with no zero terms.
class PolyT {
public:
    using Term = std::pair<int, Rational>;

    PolyT() = default;
    explicit PolyT(const Rational& constant);
    static PolyT monomial(const Rational& coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.back().first; }
    const std::vector<Term>& terms() const { return terms_; }
    Rational coefficient(int exponent) const;

    PolyT& operator+=(const PolyT& other);
    PolyT& operator-=(const PolyT& other);
    PolyT& operator*=(const PolyT& other);
    PolyT operator-() const;

    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
    friend PolyT operator*(const PolyT& a, const PolyT& b);

    bool operator==(const PolyT&) const = default;

    // Formal d/dt.
    PolyT derivative() const;
    Rational evaluate(const Rational& t) const;

private:
    void prune();

    std::vector<Term> terms_;
};

inline bool ring_is_zero(const PolyT& p) { return p.is_zero(); }

template <typename R>
R ring_one();

template <>
inline Rational ring_one<Rational>() {
    return Rational(1);
}

template <>
inline PolyT ring_one<PolyT>() {
    return PolyT(Rational(1));
}

template <typename R>
R ring_from(const Rational& q) {
    return R(q);
}

std::string to_string(const PolyT& p);

} // namespace ncps
