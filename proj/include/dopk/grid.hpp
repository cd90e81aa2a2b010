#ifndef DOPK_GRID_HPP
#define DOPK_GRID_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dopk/errors.hpp"
#include "dopk/scalar.hpp"

namespace dopk {

/// A finite set x_0 < x_1 < ... < x_M with cached node products
/// pi_k = prod_{j != k} (x_k - x_j) and their signs eps_k.
///
/// For an ascending grid the signs are forced: eps_k = (-1)^(M-k).
template <ScalarField T>
class Grid {
public:
    explicit Grid(std::vector<T> points) : points_(std::move(points)) {
        if (points_.empty()) throw std::invalid_argument("Grid: empty point list");
        std::sort(points_.begin(), points_.end());
        for (std::size_t k = 1; k < points_.size(); ++k) {
            if (points_[k - 1] == points_[k])
                throw duplicate_point_error("Grid: duplicate point " +
                                            scalar_traits<T>::to_string(points_[k]));
        }
        const std::size_t n = points_.size();
        node_products_.assign(n, T{1});
        epsilons_.assign(n, 1);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                node_products_[k] *= points_[k] - points_[j];
            }
            epsilons_[k] = node_products_[k].sign();
        }
    }

    std::size_t size() const { return points_.size(); }
    // Polynomial degree bound: points are x_0..x_M.
    std::size_t max_degree() const { return points_.size() - 1; }

    const std::vector<T>& points() const { return points_; }
    const T& point(std::size_t k) const { return points_.at(k); }
    const std::vector<T>& node_products() const { return node_products_; }
    const T& node_product(std::size_t k) const { return node_products_.at(k); }
    const std::vector<int>& epsilons() const { return epsilons_; }
    int epsilon(std::size_t k) const { return epsilons_.at(k); }

    friend bool operator==(const Grid& a, const Grid& b) { return a.points_ == b.points_; }

private:
    std::vector<T> points_;
    std::vector<T> node_products_;
    std::vector<int> epsilons_;
};

template <ScalarField T>
Grid<T> make_grid(std::vector<T> points) {
    return Grid<T>(std::move(points));
}

/// A strictly positive function on a grid.
template <ScalarField T>
class WeightTable {
public:
    WeightTable(Grid<T> grid, std::vector<T> values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        if (values_.size() != grid_.size())
            throw std::invalid_argument("WeightTable: size mismatch with grid");
        for (const T& w : values_)
            if (!(w.sign() > 0))
                throw std::invalid_argument("WeightTable: weights must be positive");
    }

    const Grid<T>& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<T>& values() const { return values_; }
    const T& value(std::size_t k) const { return values_.at(k); }

    friend bool operator==(const WeightTable& a, const WeightTable& b) {
        return a.grid_ == b.grid_ && a.values_ == b.values_;
    }

private:
    Grid<T> grid_;
    std::vector<T> values_;
};

/// Rebuilds a grid in another scalar backend (node products are recomputed
/// there, so a float grid is an honest float computation).
template <ScalarField To>
Grid<To> convert_grid(const Grid<Rational>& g) {
    std::vector<To> pts;
    pts.reserve(g.size());
    for (const Rational& p : g.points()) pts.push_back(scalar_traits<To>::from_rational(p));
    return Grid<To>(std::move(pts));
}

template <ScalarField To>
WeightTable<To> convert_weight(const WeightTable<Rational>& w) {
    std::vector<To> vals;
    vals.reserve(w.size());
    for (const Rational& v : w.values()) vals.push_back(scalar_traits<To>::from_rational(v));
    return WeightTable<To>(convert_grid<To>(w.grid()), std::move(vals));
}

/// Dual weight: v_k = 1 / (u_k pi_k^2), so that u_k v_k pi_k^2 = 1 at every
/// node. Applying it twice returns the original weight.
template <ScalarField T>
WeightTable<T> dual_weight(const Grid<T>& g, const WeightTable<T>& u) {
    if (!(u.grid() == g)) throw std::invalid_argument("dual_weight: weight is on a different grid");
    std::vector<T> v;
    v.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        const T pk = g.node_product(k);
        v.push_back(T{1} / (u.value(k) * pk * pk));
    }
    return WeightTable<T>(g, std::move(v));
}

} // namespace dopk

#endif // DOPK_GRID_HPP
