#include "dopk/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "dopk/errors.hpp"

namespace dopk {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// signless decimal "123", "1.5", possibly with exponent already split off
Rational parse_unsigned_decimal(const std::string& s) {
    const auto dot = s.find('.');
    std::string int_part = dot == std::string::npos ? s : s.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw parse_error("empty numeric literal");
    if (!int_part.empty() && !all_digits(int_part)) throw parse_error("bad digits in '" + s + "'");
    if (!frac_part.empty() && !all_digits(frac_part)) throw parse_error("bad digits in '" + s + "'");

    mpz_class num(int_part.empty() ? std::string("0") : int_part);
    mpz_class den(1);
    for (char c : frac_part) {
        num *= 10;
        num += c - '0';
        den *= 10;
    }
    return Rational(std::move(num), std::move(den));
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw parse_error("empty rational literal");

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num_s = s.substr(0, slash);
        const std::string den_s = s.substr(slash + 1);
        const Rational num = parse_rational(num_s);
        const Rational den = parse_rational(den_s);
        if (!num.is_integer() || !den.is_integer())
            throw parse_error("fraction parts must be integers in '" + text + "'");
        if (den.is_zero()) throw std::domain_error("zero denominator in '" + text + "'");
        return num / den;
    }

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.erase(s.begin());
        if (s.empty()) throw parse_error("sign without digits in '" + text + "'");
    }

    long exponent = 0;
    const auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        const std::string exp_s = s.substr(epos + 1);
        s = s.substr(0, epos);
        if (exp_s.empty()) throw parse_error("empty exponent in '" + text + "'");
        std::size_t idx = 0;
        try {
            exponent = std::stol(exp_s, &idx);
        } catch (const std::exception&) {
            throw parse_error("bad exponent in '" + text + "'");
        }
        if (idx != exp_s.size()) throw parse_error("bad exponent in '" + text + "'");
    }

    Rational r = parse_unsigned_decimal(s);
    if (exponent != 0) r = r * pow_int(Rational(10), exponent);
    return negative ? -r : r;
}

namespace {

std::vector<Rational> parse_rational_array(const nlohmann::json& arr, const std::string& field) {
    if (!arr.is_array()) throw parse_error("field '" + field + "' must be an array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (v.is_string())
            out.push_back(parse_rational(v.get<std::string>()));
        else if (v.is_number_integer())
            out.push_back(Rational(v.get<long long>()));
        else
            throw parse_error("entries of '" + field + "' must be strings or integers");
    }
    return out;
}

} // namespace

GridWeightInput read_grid_weights(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("input must be a JSON object");
    if (!j.contains("points")) throw parse_error("missing field 'points'");
    if (!j.contains("weights")) throw parse_error("missing field 'weights'");
    GridWeightInput in;
    in.points = parse_rational_array(j.at("points"), "points");
    in.weights = parse_rational_array(j.at("weights"), "weights");
    if (in.points.size() != in.weights.size())
        throw parse_error("'points' and 'weights' must have the same length");
    if (in.points.empty()) throw parse_error("'points' must be non-empty");
    return in;
}

GridWeightInput read_grid_weights(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return read_grid_weights(j);
}

GridWeightInput read_grid_weights_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open input file '" + path + "'");
    return read_grid_weights(f);
}

std::pair<Grid<Rational>, WeightTable<Rational>> to_grid_weights(const GridWeightInput& in) {
    std::vector<std::pair<Rational, Rational>> paired;
    paired.reserve(in.points.size());
    for (std::size_t k = 0; k < in.points.size(); ++k)
        paired.emplace_back(in.points[k], in.weights[k]);
    std::sort(paired.begin(), paired.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Rational> points, weights;
    for (auto& [p, w] : paired) {
        points.push_back(std::move(p));
        weights.push_back(std::move(w));
    }
    Grid<Rational> g(std::move(points));
    WeightTable<Rational> table(g, std::move(weights));
    return {std::move(g), std::move(table)};
}

nlohmann::json rationals_to_json(const std::vector<Rational>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& x : xs) arr.push_back(x.to_string());
    return arr;
}

} // namespace dopk
