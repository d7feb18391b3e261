#include "ncps/cumulants.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncps {

std::string to_string(CumulantKind kind) {
    switch (kind) {
        case CumulantKind::free: return "free";
        case CumulantKind::boolean: return "boolean";
        case CumulantKind::monotone: return "monotone";
    }
    return "?";
}

MomentSeries::MomentSeries(QSeries series) : series_(std::move(series)) {
    require_g1(series_, "MomentSeries");
}

CumulantSeries::CumulantSeries(QSeries series, CumulantKind kind)
    : series_(std::move(series)), kind_(kind) {
    require_g0(series_, "CumulantSeries");
}

namespace {

void require_kind(const CumulantSeries& cumulants, CumulantKind kind, const std::string& context) {
    if (cumulants.kind() != kind) {
        throw std::invalid_argument(context + ": expected " + to_string(kind) +
                                    " cumulants, got " + to_string(cumulants.kind()));
    }
}

} // namespace

MomentSeries moments_from_free(const CumulantSeries& cumulants) {
    require_kind(cumulants, CumulantKind::free, "moments_from_free");
    const QSeries& k = cumulants.series();
    auto m = QSeries::one(k.alphabet(), k.degree_cap());
    // Degree-n coefficients stabilize after n passes.
    for (int pass = 0; pass < k.degree_cap(); ++pass) {
        auto next = QSeries::one(k.alphabet(), k.degree_cap());
        next += shifted_substitute(k, m);
        if (next == m) break;
        m = std::move(next);
    }
    return MomentSeries(std::move(m));
}

CumulantSeries free_from_moments(const MomentSeries& moments) {
    const QSeries& m = moments.series();
    QSeries k(m.alphabet(), m.degree_cap());
    // m(w) = k(w) + lower-degree contributions of K(x M(x)), so the solve is
    // unitriangular in the word length.
    for (int degree = 1; degree <= m.degree_cap(); ++degree) {
        auto image = shifted_substitute(k, m);
        for (const auto& [w, c] : m.terms()) {
            if (w.length() == degree) k.add_to_coefficient(w, c - image.coefficient(w));
        }
        // Words where m vanishes but the substitution does not still need
        // a correction.
        for (const auto& [w, c] : image.terms()) {
            if (w.length() == degree && m.coefficient(w).is_zero()) {
                k.add_to_coefficient(w, -c);
            }
        }
    }
    return CumulantSeries(std::move(k), CumulantKind::free);
}

Rational free_oracle_nc(const CumulantSeries& cumulants, const Word& w, int cap) {
    require_kind(cumulants, CumulantKind::free, "free_oracle_nc");
    if (w.empty()) return Rational(1);
    const QSeries& k = cumulants.series();
    Rational acc(0);
    for (const NonCrossingPartition& partition : non_crossing_partitions(w.length(), cap)) {
        Rational product(1);
        for (const auto& block : partition.blocks()) {
            product *= k.coefficient(w.subword(block));
            if (product.is_zero()) break;
        }
        acc += product;
    }
    return acc;
}

CumulantSeries boolean_from_moments(const MomentSeries& moments) {
    const QSeries& m = moments.series();
    auto b = QSeries::one(m.alphabet(), m.degree_cap()) - cauchy_inv(m);
    return CumulantSeries(std::move(b), CumulantKind::boolean);
}

MomentSeries moments_from_boolean(const CumulantSeries& cumulants) {
    require_kind(cumulants, CumulantKind::boolean, "moments_from_boolean");
    const QSeries& b = cumulants.series();
    auto m = cauchy_inv(QSeries::one(b.alphabet(), b.degree_cap()) - b);
    return MomentSeries(std::move(m));
}

MomentSeries boolean_recursion_oracle(const CumulantSeries& cumulants) {
    require_kind(cumulants, CumulantKind::boolean, "boolean_recursion_oracle");
    const QSeries& b = cumulants.series();
    auto m = QSeries::one(b.alphabet(), b.degree_cap());
    for (const Word& w : all_words(b.alphabet(), b.degree_cap())) {
        Rational acc(0);
        for (const auto& [u, v] : prefix_splits(w)) {
            acc += m.coefficient(u) * b.coefficient(v);
        }
        m.set_coefficient(w, acc);
    }
    return MomentSeries(std::move(m));
}

CumulantSeries monotone_from_moments(const MomentSeries& moments) {
    return CumulantSeries(group_log(moments.series()), CumulantKind::monotone);
}

MomentSeries moments_from_monotone(const CumulantSeries& cumulants) {
    require_kind(cumulants, CumulantKind::monotone, "moments_from_monotone");
    return MomentSeries(group_exp(cumulants.series()));
}

namespace {

// Enumerates the compositions i_1 + ... + i_k = n and hands each one to the
// sink together with the prefix-product weight (i_1+1)(i_1+i_2+1)...
template <typename Sink>
void for_each_weighted_composition(int n, Sink&& sink) {
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining, const Rational& weight, int prefix) -> void {
        if (remaining == 0) {
            sink(parts, weight);
            return;
        }
        for (int next = 1; next <= remaining; ++next) {
            parts.push_back(next);
            const bool last = next == remaining;
            // The factor for part j < k is (i_1 + ... + i_j + 1).
            Rational next_weight = last ? weight : weight * Rational(prefix + next + 1);
            self(self, remaining - next, next_weight, prefix + next);
            parts.pop_back();
        }
    };
    recurse(recurse, n, Rational(1), 0);
}

} // namespace

PolyT monotone_formula(const std::vector<Rational>& h, int n) {
    if (n < 1) throw std::invalid_argument("monotone_formula requires n >= 1");
    PolyT out;
    for_each_weighted_composition(n, [&](const std::vector<int>& parts, const Rational& weight) {
        Rational value = weight;
        for (int part : parts) {
            const size_t index = static_cast<size_t>(part - 1);
            value *= index < h.size() ? h[index] : Rational(0);
            if (value.is_zero()) break;
        }
        if (value.is_zero()) return;
        const int k = static_cast<int>(parts.size());
        out += PolyT::monomial(value / factorial(k), k);
    });
    return out;
}

std::vector<MonotoneFormulaTerm> monotone_formula_symbolic(int n) {
    if (n < 1) throw std::invalid_argument("monotone_formula_symbolic requires n >= 1");
    std::map<std::pair<int, std::map<int, int>>, Rational> grouped;
    for_each_weighted_composition(n, [&](const std::vector<int>& parts, const Rational& weight) {
        std::map<int, int> powers;
        for (int part : parts) ++powers[part];
        const int k = static_cast<int>(parts.size());
        grouped[{k, std::move(powers)}] += weight / factorial(k);
    });
    std::vector<MonotoneFormulaTerm> out;
    for (auto& [key, coeff] : grouped) {
        if (coeff.is_zero()) continue;
        out.push_back({key.first, key.second, coeff});
    }
    return out;
}

namespace {

QSeries prelie_tree_image_memo(const RootedTree& tree, const QSeries& h,
                               std::map<RootedTree, QSeries>& memo) {
    if (auto it = memo.find(tree); it != memo.end()) return it->second;
    QSeries result(h.alphabet(), h.degree_cap());
    const auto& children = tree.children();
    if (children.empty()) {
        result = h;
    } else if (children.size() == 1) {
        result = pre_lie(h, prelie_tree_image_memo(children.front(), h, memo));
    } else {
        // Split off the last branch b: host <| b grafts b at every node of the
        // host, so the image of the original tree is the pre-Lie product minus
        // the images of the below-root grafts (each of which has one root
        // branch fewer).
        RootedTree branch = children.back();
        std::vector<RootedTree> rest(children.begin(), children.end() - 1);
        RootedTree host(std::move(rest));
        result = pre_lie(prelie_tree_image_memo(host, h, memo),
                         prelie_tree_image_memo(branch, h, memo));
        for (const RootedTree& grafted : graft_below_root(host, branch)) {
            result -= prelie_tree_image_memo(grafted, h, memo);
        }
    }
    memo.emplace(tree, result);
    return result;
}

} // namespace

QSeries prelie_tree_image(const RootedTree& tree, const QSeries& h) {
    require_g0(h, "prelie_tree_image");
    std::map<RootedTree, QSeries> memo;
    return prelie_tree_image_memo(tree, h, memo);
}

MomentSeries monotone_tree_expansion(const QSeries& h) {
    require_g0(h, "monotone_tree_expansion");
    auto acc = QSeries::one(h.alphabet(), h.degree_cap());
    std::map<RootedTree, QSeries> memo;
    for (const RootedTree& tree : trees_up_to(h.degree_cap())) {
        const Rational weight =
            Rational(1) / (Rational(tree_factorial(tree)) * Rational(symmetry_factor(tree)));
        acc += prelie_tree_image_memo(tree, h, memo).scaled(weight);
    }
    return MomentSeries(std::move(acc));
}

bool DictionaryReport::all_passed() const {
    return group_inverse_vs_free.passed && boolean_vs_group_inverse.passed &&
           substituted_inverse.passed;
}

namespace {

IdentityCheck compare_series(std::string name, const QSeries& lhs, const QSeries& rhs) {
    IdentityCheck check{std::move(name), true, std::nullopt};
    if (lhs.constant_term() != rhs.constant_term()) {
        check.passed = false;
        check.first_difference = Word();
        return check;
    }
    auto difference = lhs - rhs;
    if (!difference.terms().empty()) {
        check.passed = false;
        check.first_difference = difference.terms().begin()->first;
    }
    return check;
}

} // namespace

DictionaryReport dictionary_check(const MomentSeries& moments) {
    const QSeries& m = moments.series();
    const auto one = QSeries::one(m.alphabet(), m.degree_cap());

    const QSeries inverse = shifted_inverse(m);
    const QSeries kappa = free_from_moments(moments).series();
    const QSeries beta = boolean_from_moments(moments).series();
    const QSeries substituted = shifted_substitute(inverse, m);

    DictionaryReport report;
    report.group_inverse_vs_free =
        compare_series("group inverse equals 1/(1+K)", inverse, cauchy_inv(one + kappa));
    report.boolean_vs_group_inverse =
        compare_series("boolean cumulants equal 1 - Minv(xM)", beta, one - substituted);
    report.substituted_inverse =
        compare_series("Minv(xM) equals 1/M", substituted, cauchy_inv(m));
    return report;
}

} // namespace ncps
