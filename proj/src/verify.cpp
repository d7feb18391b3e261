#include "ncps/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "ncps/combinatorics.hpp"
#include "ncps/cumulants.hpp"
#include "ncps/json_io.hpp"

namespace ncps {

int Rng::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Rational Rng::rational() { return Rational(uniform(-3, 3), uniform(1, 3)); }

Rational Rng::nonzero_rational() {
    while (true) {
        Rational r = rational();
        if (!r.is_zero()) return r;
    }
}

Word Rng::word(int alphabet, int max_length) {
    const int length = uniform(1, max_length);
    std::vector<int> letters(static_cast<size_t>(length));
    for (int& letter : letters) letter = uniform(1, alphabet);
    return Word(std::move(letters));
}

QSeries Rng::series_g0(int alphabet, int degree_cap, int term_count) {
    QSeries out(alphabet, degree_cap);
    for (int i = 0; i < term_count; ++i) {
        out.set_coefficient(word(alphabet, degree_cap), nonzero_rational());
    }
    return out;
}

QSeries Rng::series_g1(int alphabet, int degree_cap, int term_count) {
    QSeries out = series_g0(alphabet, degree_cap, term_count);
    out.set_constant_term(Rational(1));
    return out;
}

QSeries Rng::dense_series_g0(int alphabet, int degree_cap) {
    QSeries out(alphabet, degree_cap);
    for (const Word& w : all_words(alphabet, degree_cap)) {
        out.set_coefficient(w, rational());
    }
    return out;
}

QSeries Rng::dense_series_g1(int alphabet, int degree_cap) {
    QSeries out = dense_series_g0(alphabet, degree_cap);
    out.set_constant_term(Rational(1));
    return out;
}

LinearForm Rng::form(int alphabet, int degree_cap, int entry_count, bool unit_vanishing) {
    LinearForm out(alphabet, degree_cap);
    if (!unit_vanishing) out.set_unit_value(rational());
    const auto universe = all_tensor_words(alphabet, degree_cap);
    for (int i = 0; i < entry_count; ++i) {
        const auto& tw = universe[static_cast<size_t>(
            uniform(0, static_cast<int>(universe.size()) - 1))];
        out.set_value(tw, nonzero_rational());
    }
    return out;
}

Character Rng::character(int alphabet, int degree_cap, int term_count) {
    Character out(alphabet, degree_cap);
    for (int i = 0; i < term_count; ++i) {
        out.set_word_value(word(alphabet, degree_cap), nonzero_rational());
    }
    return out;
}

InfinitesimalCharacter Rng::infinitesimal(int alphabet, int degree_cap, int term_count) {
    InfinitesimalCharacter out(alphabet, degree_cap);
    for (int i = 0; i < term_count; ++i) {
        out.set_word_value(word(alphabet, degree_cap), nonzero_rational());
    }
    return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t hash = 1469598103934665603ull;
    for (char c : name) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return seed ^ hash;
}

struct Suite {
    VerifyOptions options;
    std::vector<PropertyResult> results;

    // Runs `body` options.trials times; body returns an empty string on
    // success, a counterexample description otherwise.
    void run(const std::string& name,
             const std::function<std::string(Rng&, int)>& body,
             int trial_override = 0) {
        const int trials = trial_override > 0 ? trial_override : options.trials;
        Rng rng(mix_seed(options.seed, name));
        PropertyResult result{name, trials, true, ""};
        for (int trial = 0; trial < trials; ++trial) {
            std::string failure = body(rng, trial);
            if (!failure.empty()) {
                result.passed = false;
                result.counterexample = "trial " + std::to_string(trial) + ": " + failure;
                break;
            }
        }
        results.push_back(std::move(result));
    }

    int draw_alphabet(Rng& rng) const { return rng.uniform(1, options.alphabet); }
    int draw_degree(Rng& rng, int at_least = 1) const {
        return rng.uniform(std::min(at_least, options.degree), options.degree);
    }
};

std::string describe(const QSeries& s) { return pretty_series(s); }

std::string diff_or_empty(const std::string& what, const QSeries& lhs, const QSeries& rhs) {
    if (lhs == rhs) return "";
    auto delta = lhs - rhs;
    Word where;
    if (!delta.terms().empty()) where = delta.terms().begin()->first;
    return what + " differs at word " + to_string(where) + " (lhs=" + describe(lhs) +
           ", rhs=" + describe(rhs) + ")";
}

std::string diff_or_empty_poly(const std::string& what, const PolySeries& lhs,
                               const PolySeries& rhs) {
    if (lhs == rhs) return "";
    auto delta = lhs - rhs;
    Word where;
    if (!delta.terms().empty()) where = delta.terms().begin()->first;
    return what + " differs at word " + to_string(where);
}

// --- combinatorics oracles -------------------------------------------------

std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
    // Restricted growth strings.
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> assignment(static_cast<size_t>(n), 0);
    auto recurse = [&](auto&& self, int index, int max_block) -> void {
        if (index == n) {
            std::vector<std::vector<int>> blocks(static_cast<size_t>(max_block));
            for (int i = 0; i < n; ++i) {
                blocks[static_cast<size_t>(assignment[static_cast<size_t>(i)])].push_back(i + 1);
            }
            out.push_back(std::move(blocks));
            return;
        }
        for (int block = 0; block <= max_block; ++block) {
            assignment[static_cast<size_t>(index)] = block;
            self(self, index + 1, std::max(max_block, block + 1));
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

long long catalan(int n) {
    long long value = 1;
    for (int k = 0; k < n; ++k) {
        value = value * 2 * (2 * k + 1) / (k + 2);
    }
    return value;
}

// --- suites ------------------------------------------------------------ ---

void suite_combinatorics(Suite& suite) {
    suite.run("combinatorics.subset-splits", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const Word w = rng.word(d, std::min(suite.options.degree, 6));
        const int n = w.length();
        long long degree_total = 0;
        for (const auto& subset : enumerate_subsets(n)) {
            const SubsetSplit split = subset_split(w, subset);
            degree_total += split.extracted.length() + split.blocks.total_degree();
            for (const Word& block : split.blocks.factors()) {
                if (block.empty()) return "empty block for word " + to_string(w);
            }
        }
        const long long expected = static_cast<long long>(n) << n;
        if (degree_total != expected) {
            return "degree sum " + std::to_string(degree_total) + " != " +
                   std::to_string(expected) + " for word " + to_string(w);
        }
        return "";
    });

    suite.run(
        "combinatorics.noncrossing-catalan",
        [&](Rng&, int trial) -> std::string {
            const int n = trial + 1;
            const auto produced = non_crossing_partitions(n);
            if (static_cast<long long>(produced.size()) != catalan(n)) {
                return "count " + std::to_string(produced.size()) + " != catalan(" +
                       std::to_string(n) + ")";
            }
            if (n > 8) return "";
            std::vector<NonCrossingPartition> filtered;
            for (auto& blocks : all_set_partitions(n)) {
                if (!is_crossing(blocks)) filtered.emplace_back(n, std::move(blocks));
            }
            std::sort(filtered.begin(), filtered.end(),
                      [](const auto& a, const auto& b) { return a < b; });
            if (filtered != produced) return "mismatch against filter oracle at n=" + std::to_string(n);
            return "";
        },
        8);

    suite.run(
        "combinatorics.trees",
        [&](Rng&, int) -> std::string {
            const std::vector<long long> expected{1, 1, 2, 4, 9, 20, 48};
            const int max_size = static_cast<int>(expected.size());
            const auto trees = trees_up_to(max_size);
            std::vector<long long> counts(static_cast<size_t>(max_size), 0);
            for (const RootedTree& tree : trees) {
                ++counts[static_cast<size_t>(tree.size() - 1)];
                // Rebuilding from children must reproduce the canonical form.
                RootedTree rebuilt(tree.children());
                if (!(rebuilt == tree)) return "non-canonical tree " + tree.encoding();
                const Rational identity = cm_coefficient(tree) * Rational(tree_factorial(tree)) *
                                          Rational(symmetry_factor(tree));
                if (identity != factorial(tree.size())) {
                    return "cm * tau! * sigma != |tau|! for " + tree.encoding();
                }
            }
            for (int size = 1; size <= max_size; ++size) {
                if (counts[static_cast<size_t>(size - 1)] != expected[static_cast<size_t>(size - 1)]) {
                    return "tree count at size " + std::to_string(size) + " is " +
                           std::to_string(counts[static_cast<size_t>(size - 1)]);
                }
            }
            return "";
        },
        1);
}

void suite_group(Suite& suite) {
    suite.run("group.unit", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto f = rng.series_g1(d, n, 2 * n);
        const auto one = QSeries::one(d, n);
        if (auto msg = diff_or_empty("1 . f", shifted_compose(one, f), f); !msg.empty()) return msg;
        return diff_or_empty("f . 1", shifted_compose(f, one), f);
    });

    suite.run("group.associativity", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng, 2);
        const auto f = rng.series_g1(d, n, 2 * n);
        const auto g = rng.series_g1(d, n, 2 * n);
        const auto h = rng.series_g1(d, n, 2 * n);
        auto msg = diff_or_empty("associativity", shifted_compose(shifted_compose(f, g), h),
                                 shifted_compose(f, shifted_compose(g, h)));
        if (!msg.empty()) {
            msg += " with f=" + describe(f) + ", g=" + describe(g) + ", h=" + describe(h);
        }
        return msg;
    });

    suite.run("group.inverse", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto f = rng.series_g1(d, n, 2 * n);
        const auto inverse = shifted_inverse(f);
        const auto one = QSeries::one(d, n);
        auto msg = diff_or_empty("left inverse", shifted_compose(inverse, f), one);
        if (msg.empty()) msg = diff_or_empty("right inverse", shifted_compose(f, inverse), one);
        if (!msg.empty()) msg += " with f=" + describe(f);
        return msg;
    });

    suite.run("group.left-linearity", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto u = rng.series_g0(d, n, n + 2);
        const auto v = rng.series_g0(d, n, n + 2);
        const auto g = rng.series_g1(d, n, 2 * n);
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        const auto one = QSeries::one(d, n);
        const auto lhs = shifted_compose(one + u.scaled(a) + v.scaled(b), g) - g;
        const auto rhs = (shifted_compose(one + u, g) - g).scaled(a) +
                         (shifted_compose(one + v, g) - g).scaled(b);
        return diff_or_empty("left linearity", lhs, rhs);
    });

    suite.run("bch.group-law", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 4);
        const auto f = rng.series_g0(d, n, n + 1);
        const auto zero = QSeries::zero(d, n);
        if (auto msg = diff_or_empty("bch(f,0)", group_bch(f, zero), f); !msg.empty()) return msg;
        if (auto msg = diff_or_empty("bch(0,f)", group_bch(zero, f), f); !msg.empty()) return msg;
        // One-parameter subgroup: bch(a h, b h) = (a+b) h.
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        return diff_or_empty("bch one-parameter", group_bch(f.scaled(a), f.scaled(b)),
                             f.scaled(a + b));
    });
}

void suite_pre_lie(Suite& suite) {
    suite.run("prelie.right-identity", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto f = rng.series_g0(d, n, n + 2);
        const auto g = rng.series_g0(d, n, n + 2);
        const auto h = rng.series_g0(d, n, n + 2);
        const auto lhs = pre_lie(pre_lie(f, g), h) - pre_lie(f, pre_lie(g, h));
        const auto rhs = pre_lie(pre_lie(f, h), g) - pre_lie(f, pre_lie(h, g));
        auto msg = diff_or_empty("pre-Lie identity", lhs, rhs);
        if (!msg.empty()) {
            msg += " with f=" + describe(f) + ", g=" + describe(g) + ", h=" + describe(h);
        }
        return msg;
    });

    suite.run("lie.antisymmetry-jacobi", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto f = rng.series_g0(d, n, n + 2);
        const auto g = rng.series_g0(d, n, n + 2);
        const auto h = rng.series_g0(d, n, n + 2);
        const auto zero = QSeries::zero(d, n);
        if (auto msg = diff_or_empty("[f,f]", lie_bracket(f, f), zero); !msg.empty()) return msg;
        if (auto msg =
                diff_or_empty("antisymmetry", lie_bracket(f, g) + lie_bracket(g, f), zero);
            !msg.empty())
            return msg;
        const auto jacobi = lie_bracket(f, lie_bracket(g, h)) +
                            lie_bracket(g, lie_bracket(h, f)) +
                            lie_bracket(h, lie_bracket(f, g));
        return diff_or_empty("jacobi", jacobi, zero);
    });

    suite.run(
        "prelie.univariate-powers",
        [&](Rng&, int) -> std::string {
            const int cap = 8;
            for (int n = 1; n <= 4; ++n) {
                for (int m = 1; m <= 4; ++m) {
                    const Word xn(std::vector<int>(static_cast<size_t>(n), 1));
                    const Word xm(std::vector<int>(static_cast<size_t>(m), 1));
                    const Word xnm(std::vector<int>(static_cast<size_t>(n + m), 1));
                    const auto lhs = pre_lie(QSeries::monomial(1, cap, xn, Rational(1)),
                                             QSeries::monomial(1, cap, xm, Rational(1)));
                    if (lhs != QSeries::monomial(1, cap, xnm, Rational(n + 1))) {
                        return "x^n <| x^m failed at n=" + std::to_string(n) +
                               ", m=" + std::to_string(m);
                    }
                    const auto bracket = lie_bracket(QSeries::monomial(1, cap, xn, Rational(1)),
                                                     QSeries::monomial(1, cap, xm, Rational(1)));
                    if (bracket != QSeries::monomial(1, cap, xnm, Rational(n - m))) {
                        return "[x^n, x^m] failed at n=" + std::to_string(n) +
                               ", m=" + std::to_string(m);
                    }
                }
            }
            return "";
        },
        1);
}

void suite_exp_log(Suite& suite) {
    suite.run("explog.roundtrip", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto h = rng.series_g0(d, n, 2 * n);
        if (auto msg = diff_or_empty("log(exp h)", group_log(group_exp(h)), h); !msg.empty())
            return msg;
        const auto f = rng.series_g1(d, n, 2 * n);
        return diff_or_empty("exp(log f)", group_exp(group_log(f)), f);
    });

    suite.run(
        "explog.geometric",
        [&](Rng&, int) -> std::string {
            const int cap = 6;
            auto h = QSeries::monomial(1, cap, Word::single(1), Rational(1));
            auto expected = QSeries::one(1, cap);
            for (int k = 1; k <= cap; ++k) {
                expected.set_coefficient(Word(std::vector<int>(static_cast<size_t>(k), 1)),
                                         Rational(1));
            }
            return diff_or_empty("exp(x)", group_exp(h), expected);
        },
        1);

    suite.run("series.truncation-coherence", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng, 2);
        const int m = rng.uniform(1, n);
        const auto f = rng.series_g1(d, n, 2 * n);
        const auto g = rng.series_g1(d, n, 2 * n);
        switch (rng.uniform(0, 2)) {
            case 0: {
                auto full = cauchy_mul(f, g).truncated(m);
                auto cut = cauchy_mul(f.truncated(m), g.truncated(m));
                return diff_or_empty("cauchy_mul truncation", full, cut);
            }
            case 1: {
                auto full = shifted_compose(f, g).truncated(m);
                auto cut = shifted_compose(f.truncated(m), g.truncated(m));
                return diff_or_empty("compose truncation", full, cut);
            }
            default: {
                auto u = f;
                u.set_constant_term(Rational(0));
                auto v = g;
                v.set_constant_term(Rational(0));
                auto full = pre_lie(u, v).truncated(m);
                auto cut = pre_lie(u.truncated(m), v.truncated(m));
                return diff_or_empty("pre_lie truncation", full, cut);
            }
        }
    });

    suite.run("flow.ode", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto h = rng.series_g0(d, n, 2 * n);
        const auto m_t = flow(h);
        // t-degree never exceeds the word degree.
        for (const auto& [w, c] : m_t.terms()) {
            if (c.degree() > w.length()) return "t-degree exceeds word degree at " + to_string(w);
        }
        const auto h_poly = embed_poly(h);
        const auto rhs = h_poly + pre_lie(m_t - PolySeries::one(d, n), h_poly);
        if (auto msg = diff_or_empty_poly("flow ODE", derivative_t(m_t), rhs); !msg.empty())
            return msg;
        if (auto msg = diff_or_empty("flow at t=1", specialize_t(m_t, Rational(1)), group_exp(h));
            !msg.empty())
            return msg;
        return diff_or_empty("flow at t=0", specialize_t(m_t, Rational(0)), QSeries::one(d, n));
    });

    suite.run("mu.faa-di-bruno", [&](Rng& rng, int) -> std::string {
        const int n = suite.draw_degree(rng);
        const auto f = rng.series_g1(1, n, n + 2);
        const auto g = rng.series_g1(1, n, n + 2);
        if (!mu_compose_check(f, g)) {
            return "mu(f.g) != mu(f) o mu(g) for f=" + describe(f) + ", g=" + describe(g);
        }
        return "";
    });
}

using TripleLeg = std::tuple<TensorWord, TensorWord, TensorWord>;

std::vector<TripleLeg> expand_left(const Word& w) {
    std::vector<TripleLeg> out;
    for (const CoproductTerm& outer : coproduct(w)) {
        for (const CoproductTerm& inner : coproduct(outer.left)) {
            for (std::int64_t i = 0; i < outer.multiplicity * inner.multiplicity; ++i) {
                out.emplace_back(inner.left, inner.right, outer.right);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TripleLeg> expand_right(const Word& w) {
    std::vector<TripleLeg> out;
    for (const CoproductTerm& outer : coproduct(w)) {
        for (const CoproductTerm& inner : coproduct(outer.right)) {
            for (std::int64_t i = 0; i < outer.multiplicity * inner.multiplicity; ++i) {
                out.emplace_back(outer.left, inner.left, inner.right);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void suite_hopf(Suite& suite) {
    suite.run("hopf.coassociativity", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const Word w = rng.word(d, std::min(suite.options.degree, 5));
        if (expand_left(w) != expand_right(w)) {
            return "coassociativity fails on " + to_string(w);
        }
        return "";
    });

    suite.run("hopf.half-coproduct-sum", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const Word w = rng.word(d, std::min(suite.options.degree, 5));
        auto combined = half_coproduct_left(w);
        const auto right = half_coproduct_right(w);
        combined.insert(combined.end(), right.begin(), right.end());
        if (merge_coproduct_terms(std::move(combined)) != merge_coproduct_terms(coproduct(w))) {
            return "half coproducts do not sum to the coproduct on " + to_string(w);
        }
        return "";
    });

    suite.run("hopf.convolution-unit-assoc", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 4);
        const auto phi = rng.form(d, n, 2 * n, false);
        const auto eps = LinearForm::counit(d, n);
        if (convolve(phi, eps) != phi) return "phi * counit != phi";
        if (convolve(eps, phi) != phi) return "counit * phi != phi";
        const auto psi = rng.form(d, n, 2 * n, false);
        const auto rho = rng.form(d, n, 2 * n, false);
        if (convolve(convolve(phi, psi), rho) != convolve(phi, convolve(psi, rho))) {
            return "convolution is not associative";
        }
        return "";
    });

    suite.run("shuffle.axioms", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 4);
        const auto phi = rng.form(d, n, 2 * n, true);
        const auto psi = rng.form(d, n, 2 * n, true);
        const auto rho = rng.form(d, n, 2 * n, true);
        if (convolve(phi, psi) != half_shuffle_left(phi, psi) + half_shuffle_right(phi, psi)) {
            return "convolution does not split into half-shuffles";
        }
        if (half_shuffle_left(half_shuffle_left(phi, psi), rho) !=
            half_shuffle_left(phi, convolve(psi, rho))) {
            return "(phi < psi) < rho != phi < (psi * rho)";
        }
        if (half_shuffle_left(half_shuffle_right(phi, psi), rho) !=
            half_shuffle_right(phi, half_shuffle_left(psi, rho))) {
            return "(phi > psi) < rho != phi > (psi < rho)";
        }
        if (half_shuffle_right(phi, half_shuffle_right(psi, rho)) !=
            half_shuffle_right(convolve(phi, psi), rho)) {
            return "phi > (psi > rho) != (phi * psi) > rho";
        }
        return "";
    });

    suite.run("iso.group", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto phi = rng.character(d, n, 2 * n);
        const auto psi = rng.character(d, n, 2 * n);
        const auto convolution = convolve(phi, psi);
        return diff_or_empty("Lambda_gr(phi * psi)", lambda(convolution),
                             shifted_compose(lambda_gr(phi), lambda_gr(psi)));
    });

    suite.run("iso.lie", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const auto phi = rng.infinitesimal(d, n, 2 * n);
        const auto psi = rng.infinitesimal(d, n, 2 * n);
        return diff_or_empty("Lambda_Lie[phi, psi]", lambda_lie(conv_bracket(phi, psi)),
                             lie_bracket(lambda_lie(phi), lambda_lie(psi)));
    });

    suite.run("shuffle.character-action", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 4);
        const auto phi = rng.form(d, n, 2 * n, true);
        const auto gamma = rng.character(d, n, 2 * n);
        const auto f = lambda(phi);
        const auto g = lambda_gr(gamma);
        if (auto msg = diff_or_empty("Lambda(phi < gamma)", lambda(half_shuffle_left(phi, gamma)),
                                     shifted_substitute(f, g));
            !msg.empty())
            return msg;
        const auto expected =
            cauchy_mul(g - QSeries::one(d, n), shifted_substitute(f, g));
        return diff_or_empty("Lambda(phi > gamma)", lambda(half_shuffle_right(phi, gamma)),
                             expected);
    });

    suite.run("shuffle.infinitesimal-action", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 4);
        const auto phi = rng.form(d, n, 2 * n, false);
        const auto gamma = rng.infinitesimal(d, n, 2 * n);
        const auto f = lambda(phi);
        const auto g = lambda_lie(gamma);
        if (auto msg = diff_or_empty("Lambda(phi > gamma)",
                                     lambda(half_shuffle_right(phi, gamma)), cauchy_mul(g, f));
            !msg.empty())
            return msg;
        // With a unit-vanishing phi the sum of both half-shuffles is the
        // pre-Lie insertion.
        const auto phi0 = rng.form(d, n, 2 * n, true);
        const auto f0 = lambda(phi0);
        return diff_or_empty("Lambda(phi * gamma)", lambda(convolve(phi0, gamma)),
                             pre_lie(f0, g));
    });

    suite.run("convexp.roundtrip", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 4);
        const auto rho = rng.infinitesimal(d, n, 2 * n);
        const auto character = conv_exp(rho);
        if (conv_log(character) != rho) return "conv_log(conv_exp rho) != rho";
        if (auto msg = diff_or_empty("exp agreement", lambda_gr(character),
                                     group_exp(lambda_lie(rho)));
            !msg.empty())
            return msg;
        return "";
    });

    suite.run("lambda.projection", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng, 2);
        auto phi = rng.form(d, n, 2 * n, false);
        auto psi = phi;
        // Perturb psi on multi-factor tensor words only.
        for (const TensorWord& tw : all_tensor_words(d, n)) {
            if (tw.factor_count() >= 2) {
                psi.set_value(tw, psi.value(tw) + rng.rational());
            }
        }
        if (lambda(phi) != lambda(psi)) return "lambda consulted a multi-factor value";
        return "";
    });
}

void suite_cumulants(Suite& suite) {
    suite.run("free.roundtrip", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const CumulantSeries k(rng.series_g0(d, n, 2 * n), CumulantKind::free);
        const auto m = moments_from_free(k);
        if (!(free_from_moments(m).series() == k.series())) {
            return "free_from_moments(moments_from_free(K)) != K";
        }
        const MomentSeries m2(rng.series_g1(d, n, 2 * n));
        const auto k2 = free_from_moments(m2);
        return diff_or_empty("moments roundtrip", moments_from_free(k2).series(), m2.series());
    });

    suite.run("free.nc-oracle", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.options.degree, d <= 2 ? 6 : 5);
        const CumulantSeries k(rng.dense_series_g0(d, n), CumulantKind::free);
        const auto m = moments_from_free(k).series();
        for (const Word& w : all_words(d, n)) {
            if (m.coefficient(w) != free_oracle_nc(k, w)) {
                return "NC oracle disagrees at word " + to_string(w);
            }
        }
        return "";
    });

    suite.run("boolean.routes", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const CumulantSeries b(rng.series_g0(d, n, 2 * n), CumulantKind::boolean);
        const auto direct = moments_from_boolean(b);
        if (auto msg = diff_or_empty("boolean recursion oracle", direct.series(),
                                     boolean_recursion_oracle(b).series());
            !msg.empty())
            return msg;
        return diff_or_empty("boolean roundtrip", boolean_from_moments(direct).series(),
                             b.series());
    });

    suite.run("monotone.three-way", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 5);
        const auto h = rng.series_g0(d, n, 2 * n);
        const auto by_iteration = group_exp(h);
        const auto by_convolution = lambda_gr(conv_exp(infchar_from_series(h)));
        if (auto msg = diff_or_empty("conv_exp route", by_iteration, by_convolution);
            !msg.empty())
            return msg;
        return diff_or_empty("tree route", by_iteration, monotone_tree_expansion(h).series());
    });

    suite.run("monotone.univariate-formula", [&](Rng& rng, int) -> std::string {
        const int n = suite.options.degree;
        std::vector<Rational> coeffs;
        auto h = QSeries::zero(1, n);
        for (int k = 1; k <= n; ++k) {
            coeffs.push_back(rng.rational());
            h.set_coefficient(Word(std::vector<int>(static_cast<size_t>(k), 1)), coeffs.back());
        }
        const auto m_t = flow(h);
        for (int degree = 1; degree <= n; ++degree) {
            const Word w(std::vector<int>(static_cast<size_t>(degree), 1));
            if (m_t.coefficient(w) != monotone_formula(coeffs, degree)) {
                return "flow disagrees with the composition formula at degree " +
                       std::to_string(degree);
            }
        }
        return "";
    });

    suite.run("dictionary.prop62", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = suite.draw_degree(rng);
        const MomentSeries m(rng.series_g1(d, n, 2 * n));
        const auto report = dictionary_check(m);
        for (const IdentityCheck* check :
             {&report.group_inverse_vs_free, &report.boolean_vs_group_inverse,
              &report.substituted_inverse}) {
            if (!check->passed) {
                return check->name + " fails at word " +
                       (check->first_difference ? to_string(*check->first_difference) : "?");
            }
        }
        return "";
    });

    suite.run("fixedpoint.forms", [&](Rng& rng, int) -> std::string {
        const int d = suite.draw_alphabet(rng);
        const int n = std::min(suite.draw_degree(rng), 5);
        const MomentSeries m(rng.series_g1(d, n, 2 * n));
        const auto character = character_from_series(m.series());
        const auto kappa = infchar_from_series(free_from_moments(m).series());
        const auto beta = infchar_from_series(boolean_from_moments(m).series());
        const auto free_side = half_shuffle_left(kappa, character);
        const auto boolean_side = half_shuffle_right(character, beta);
        for (const Word& w : all_words(d, n)) {
            const auto tw = TensorWord::from_word(w);
            if (character.value(tw) != free_side.value(tw)) {
                return "Phi != eps + kappa < Phi at word " + to_string(w);
            }
            if (character.value(tw) != boolean_side.value(tw)) {
                return "Phi != eps + Phi > beta at word " + to_string(w);
            }
        }
        return "";
    });
}

} // namespace

std::vector<PropertyResult> run_verification(const VerifyOptions& options) {
    Suite suite{options, {}};
    suite_combinatorics(suite);
    suite_group(suite);
    suite_pre_lie(suite);
    suite_exp_log(suite);
    suite_hopf(suite);
    suite_cumulants(suite);
    return std::move(suite.results);
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

std::string format_report(const std::vector<PropertyResult>& results,
                          const VerifyOptions& options) {
    std::ostringstream out;
    out << "verify: alphabet=" << options.alphabet << " degree=" << options.degree
        << " trials=" << options.trials << " seed=" << options.seed << "\n";
    for (const PropertyResult& result : results) {
        out << (result.passed ? "[PASS] " : "[FAIL] ") << result.name
            << " (trials=" << result.trials << ")";
        if (!result.passed) out << "\n       " << result.counterexample;
        out << "\n";
    }
    return out.str();
}

} // namespace ncps
