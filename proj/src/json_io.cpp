#include "ncps/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ncps {

namespace {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& node) {
    if (!node.is_string()) throw std::invalid_argument("expected a rational string");
    return parse_rational(node.get<std::string>());
}

Json poly_to_json(const PolyT& value) {
    Json out = Json::array();
    for (const auto& [e, c] : value.terms()) {
        out.push_back(Json::array({to_string(c), e}));
    }
    return out;
}

PolyT poly_from_json(const Json& node) {
    if (node.is_string()) {
        // Plain rationals are accepted as degree-zero polynomials.
        return PolyT(parse_rational(node.get<std::string>()));
    }
    if (!node.is_array()) throw std::invalid_argument("expected a polynomial coefficient array");
    PolyT out;
    int previous = -1;
    for (const auto& pair : node) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_number_integer()) {
            throw std::invalid_argument("polynomial terms must be [rational, exponent] pairs");
        }
        const Rational coeff = parse_rational(pair[0].get<std::string>());
        const int exponent = pair[1].get<int>();
        if (exponent < 0) throw std::invalid_argument("negative t-exponent");
        if (exponent <= previous) {
            throw std::invalid_argument("polynomial exponents must be strictly ascending");
        }
        if (coeff.is_zero()) throw std::invalid_argument("zero polynomial coefficient");
        previous = exponent;
        out += PolyT::monomial(coeff, exponent);
    }
    return out;
}

Word word_from_json(const Json& node) {
    if (!node.is_array()) throw std::invalid_argument("term word must be an integer array");
    std::vector<int> letters;
    letters.reserve(node.size());
    for (const auto& letter : node) {
        if (!letter.is_number_integer()) throw std::invalid_argument("word letters must be integers");
        letters.push_back(letter.get<int>());
    }
    return Word(std::move(letters));
}

template <typename R, typename CoeffParse>
TruncatedSeries<R> series_from_json(const Json& doc, CoeffParse&& parse_coeff) {
    const int alphabet = doc.at("alphabet").get<int>();
    const int truncation = doc.at("truncation").get<int>();
    TruncatedSeries<R> out(alphabet, truncation);
    out.set_constant_term(parse_coeff(doc.at("constant")));
    const auto& terms = doc.at("terms");
    if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
    for (const auto& term : terms) {
        const Word w = word_from_json(term.at("word"));
        if (w.empty()) throw std::invalid_argument("terms must not use the empty word");
        R coeff = parse_coeff(term.at("coeff"));
        if (ring_is_zero(coeff)) throw std::invalid_argument("zero coefficient in terms");
        if (!ring_is_zero(out.coefficient(w))) throw std::invalid_argument("duplicate word in terms");
        out.set_coefficient(w, std::move(coeff));
    }
    return out;
}

template <typename R, typename CoeffPrint>
std::string series_to_json(const TruncatedSeries<R>& series, const char* ring,
                           CoeffPrint&& print_coeff) {
    Json doc;
    doc["alphabet"] = series.alphabet();
    doc["truncation"] = series.degree_cap();
    doc["ring"] = ring;
    doc["constant"] = print_coeff(series.constant_term());
    Json terms = Json::array();
    for (const auto& [w, c] : series.terms()) {
        Json term;
        term["word"] = w.letters();
        term["coeff"] = print_coeff(c);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

} // namespace

SeriesDocument parse_series_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& error) {
        throw std::invalid_argument(std::string("malformed JSON: ") + error.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("series document must be a JSON object");
    const std::string ring = doc.at("ring").get<std::string>();
    if (ring == "rational") {
        return series_from_json<Rational>(doc, rational_from_json);
    }
    if (ring == "rational_poly_t") {
        return series_from_json<PolyT>(doc, poly_from_json);
    }
    throw std::invalid_argument("unknown ring '" + ring + "'");
}

SeriesDocument load_series_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_series_document(buffer.str());
    } catch (const std::exception& error) {
        throw std::invalid_argument(path + ": " + error.what());
    }
}

std::string print_series_document(const QSeries& series) {
    return series_to_json(series, "rational", rational_to_json);
}

std::string print_series_document(const PolySeries& series) {
    return series_to_json(series, "rational_poly_t", poly_to_json);
}

std::string print_series_document(const SeriesDocument& document) {
    return std::visit([](const auto& series) { return print_series_document(series); }, document);
}

void save_series_document(const SeriesDocument& document, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << print_series_document(document);
}

namespace {

std::string pretty_monomial(const Word& w) {
    std::string out;
    for (int i = 0; i < w.length(); ++i) {
        if (i > 0) out += "*";
        out += "x" + std::to_string(w.letter(i));
    }
    return out;
}

} // namespace

std::string pretty_series(const QSeries& series) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& coeff, const Word& w) {
        Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
            if (coeff < 0) out << "-";
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        if (w.empty()) {
            out << to_string(mag);
            return;
        }
        if (mag != 1) out << to_string(mag) << "*";
        out << pretty_monomial(w);
    };
    if (!series.constant_term().is_zero()) emit(series.constant_term(), Word());
    for (const auto& [w, c] : series.terms()) emit(c, w);
    if (first) out << "0";
    return out.str();
}

std::string pretty_series(const PolySeries& series) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const PolyT& coeff, const Word& w) {
        if (!first) out << " + ";
        first = false;
        if (w.empty()) {
            out << "(" << to_string(coeff) << ")";
            return;
        }
        out << "(" << to_string(coeff) << ")*" << pretty_monomial(w);
    };
    if (!series.constant_term().is_zero()) emit(series.constant_term(), Word());
    for (const auto& [w, c] : series.terms()) emit(c, w);
    if (first) out << "0";
    return out.str();
}

std::string pretty_series(const SeriesDocument& document) {
    return std::visit([](const auto& series) { return pretty_series(series); }, document);
}

} // namespace ncps
