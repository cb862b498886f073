#include "fracrelax/time_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracrelax {

TimeGrid::TimeGrid(std::vector<double> pts, GridKind kind, double exponent)
    : points_(std::move(pts)), kind_(kind), grading_exponent_(exponent) {
    if (points_.size() < 2) {
        throw std::invalid_argument("TimeGrid: needs at least 2 points");
    }
    if (!(points_.front() >= 0.0)) {
        throw std::invalid_argument("TimeGrid: t_start must be >= 0");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i] > points_[i - 1])) {
            throw std::invalid_argument("TimeGrid: points must be strictly increasing");
        }
    }
}

TimeGrid TimeGrid::uniform(double t_start, double t_end, std::size_t n_points) {
    if (n_points < 2) {
        throw std::invalid_argument("TimeGrid::uniform: needs at least 2 points");
    }
    if (!(t_end > t_start)) {
        throw std::invalid_argument("TimeGrid::uniform: requires t_end > t_start");
    }
    std::vector<double> pts(n_points);
    const double h = (t_end - t_start) / static_cast<double>(n_points - 1);
    for (std::size_t j = 0; j < n_points; ++j) {
        pts[j] = t_start + h * static_cast<double>(j);
    }
    pts.back() = t_end; // guard the endpoint against accumulation drift
    return TimeGrid(std::move(pts), GridKind::Uniform, 1.0);
}

TimeGrid TimeGrid::graded(double t_end, std::size_t n_points, double exponent) {
    if (n_points < 2) {
        throw std::invalid_argument("TimeGrid::graded: needs at least 2 points");
    }
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("TimeGrid::graded: requires t_end > 0");
    }
    if (!(exponent >= 1.0)) {
        throw std::invalid_argument("TimeGrid::graded: exponent must be >= 1");
    }
    const std::size_t n = n_points - 1;
    std::vector<double> pts(n_points);
    for (std::size_t j = 0; j <= n; ++j) {
        pts[j] = t_end * std::pow(static_cast<double>(j) / static_cast<double>(n), exponent);
    }
    return TimeGrid(std::move(pts), GridKind::Graded, exponent);
}

double suggested_grading(double alpha) {
    return std::min(2.0 / alpha - 1.0, 4.0);
}

} // namespace fracrelax
