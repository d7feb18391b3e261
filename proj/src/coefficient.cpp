#include "ncps/coefficient.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ncps {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.erase(body.begin());
    }
    const auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    boost::multiprecision::cpp_int p(num);
    boost::multiprecision::cpp_int q(den);
    if (q.is_zero()) {
        throw std::invalid_argument("zero denominator in rational '" + text + "'");
    }
    if (negative) p = -p;
    return Rational(p, q);
}

std::string to_string(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

Rational factorial(int n) {
    boost::multiprecision::cpp_int acc = 1;
    for (int k = 2; k <= n; ++k) acc *= k;
    return Rational(acc);
}

PolyT::PolyT(const Rational& constant) {
    if (!constant.is_zero()) terms_.push_back({0, constant});
}

PolyT PolyT::monomial(const Rational& coeff, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative t-exponent");
    PolyT p;
    if (!coeff.is_zero()) p.terms_.push_back({exponent, coeff});
    return p;
}

Rational PolyT::coefficient(int exponent) const {
    for (const auto& [e, c] : terms_) {
        if (e == exponent) return c;
        if (e > exponent) break;
    }
    return Rational(0);
}

void PolyT::prune() {
    std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
}

PolyT& PolyT::operator+=(const PolyT& other) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rational sum = a->second + b->second;
            if (!sum.is_zero()) merged.push_back({a->first, sum});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

PolyT& PolyT::operator-=(const PolyT& other) { return *this += -other; }

PolyT PolyT::operator-() const {
    PolyT out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
    PolyT out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out += PolyT::monomial(ca * cb, ea + eb);
        }
    }
    out.prune();
    return out;
}

PolyT& PolyT::operator*=(const PolyT& other) {
    *this = *this * other;
    return *this;
}

PolyT PolyT::derivative() const {
    PolyT out;
    for (const auto& [e, c] : terms_) {
        if (e > 0) out.terms_.push_back({e - 1, c * e});
    }
    return out;
}

Rational PolyT::evaluate(const Rational& t) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational power(1);
        for (int k = 0; k < e; ++k) power *= t;
        acc += c * power;
    }
    return acc;
}

std::string to_string(const PolyT& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit_coeff = mag == 1 && e > 0;
        if (!unit_coeff) out << to_string(mag);
        if (e > 0) {
            if (!unit_coeff) out << "*";
            out << "t";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace ncps
