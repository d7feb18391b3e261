#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncps/hopf.hpp"
#include "ncps/series.hpp"

namespace ncps {

// Deterministic generator for test instances: coefficients are small exact
// rationals, words are uniform over the requested alphabet and length range.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi);
    Rational rational();         // may be zero
    Rational nonzero_rational();
    Word word(int alphabet, int max_length);

    QSeries series_g0(int alphabet, int degree_cap, int term_count);
    QSeries series_g1(int alphabet, int degree_cap, int term_count);
    // Every word up to the cap receives a small coefficient (possibly zero).
    QSeries dense_series_g0(int alphabet, int degree_cap);
    QSeries dense_series_g1(int alphabet, int degree_cap);

    LinearForm form(int alphabet, int degree_cap, int entry_count, bool unit_vanishing);
    Character character(int alphabet, int degree_cap, int term_count);
    InfinitesimalCharacter infinitesimal(int alphabet, int degree_cap, int term_count);

private:
    std::mt19937_64 engine_;
};

struct VerifyOptions {
    int alphabet = 2;
    int degree = 4;
    int trials = 50;
    std::uint64_t seed = 42;
};

struct PropertyResult {
    std::string name;
    int trials = 0;
    bool passed = false;
    std::string counterexample; // empty when passed
};

// Runs every property suite with per-suite seeds derived from options.seed.
std::vector<PropertyResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);
std::string format_report(const std::vector<PropertyResult>& results,
                          const VerifyOptions& options);

} // namespace ncps
