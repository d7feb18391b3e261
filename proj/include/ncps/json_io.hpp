#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "ncps/series.hpp"

namespace ncps {

// On-disk series document. The ring tag selects the coefficient encoding:
// "rational" stores coefficients as strings "p" or "p/q" in lowest terms,
// "rational_poly_t" stores them structurally as arrays of [rational, exponent]
// pairs sorted by ascending exponent. Terms are sorted by (length, lex) and
// never carry zero coefficients, so printing is canonical and parse/print
// round-trips are byte-identical.
using SeriesDocument = std::variant<QSeries, PolySeries>;

SeriesDocument parse_series_document(const std::string& text);
SeriesDocument load_series_document(const std::string& path);

std::string print_series_document(const QSeries& series);
std::string print_series_document(const PolySeries& series);
std::string print_series_document(const SeriesDocument& document);

void save_series_document(const SeriesDocument& document, const std::string& path);

// Human-readable rendering: "1 + 1/2*x1.2 - x2" with poly coefficients in
// parentheses.
std::string pretty_series(const QSeries& series);
std::string pretty_series(const PolySeries& series);
std::string pretty_series(const SeriesDocument& document);

} // namespace ncps
