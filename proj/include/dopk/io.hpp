#ifndef DOPK_IO_HPP
#define DOPK_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "dopk/grid.hpp"
#include "dopk/rational.hpp"

namespace dopk {

/// Exact parse of "p/q", integer, or decimal literals ("-3", "1/3", "0.25",
/// "2.5e-3"). Throws parse_error on malformed input, domain_error on a zero
/// denominator.
Rational parse_rational(const std::string& text);

struct GridWeightInput {
    std::vector<Rational> points;
    std::vector<Rational> weights;
};

/// Pairs points with their weights, sorts by point, and builds the grid and
/// weight table (weights follow their points through the sort).
std::pair<Grid<Rational>, WeightTable<Rational>> to_grid_weights(const GridWeightInput& in);

/// Reads {"points": [...], "weights": [...]} with entries given as exact
/// rational or decimal strings (plain JSON numbers are accepted when they
/// are integers).
GridWeightInput read_grid_weights(std::istream& in);
GridWeightInput read_grid_weights(const nlohmann::json& j);
GridWeightInput read_grid_weights_file(const std::string& path);

nlohmann::json rationals_to_json(const std::vector<Rational>& xs);

} // namespace dopk

#endif // DOPK_IO_HPP
