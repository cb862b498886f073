#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fracrelax {

enum class GridKind { Uniform, Graded };

/// Strictly increasing sampling of [t_start, t_end]. Graded grids cluster
/// points near zero as t_j = t_end (j/N)^gamma to resolve t^alpha behaviour.
class TimeGrid {
  public:
    static TimeGrid uniform(double t_start, double t_end, std::size_t n_points);
    static TimeGrid graded(double t_end, std::size_t n_points, double exponent);

    const std::vector<double>& points() const { return points_; }
    double operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }
    GridKind kind() const { return kind_; }
    double grading_exponent() const { return grading_exponent_; }

  private:
    TimeGrid(std::vector<double> pts, GridKind kind, double exponent);
    std::vector<double> points_;
    GridKind kind_;
    double grading_exponent_;
};

/// Grading exponent that compensates the t^alpha solution kink, capped at 4.
double suggested_grading(double alpha);

/// Which route produced a trajectory.
enum class Provenance { ClosedForm, FractionalAdams, OdeEquivalent };

/// Grid-aligned samples of the relaxation quantities for one alpha.
struct RelaxationTrajectory {
    double alpha = 1.0;
    TimeGrid grid = TimeGrid::uniform(0.0, 1.0, 2);
    std::vector<double> psi_vals;
    std::optional<std::vector<double>> phi_vals;
    std::optional<std::vector<double>> r_vals;
    std::optional<std::vector<double>> R_vals;
    Provenance provenance = Provenance::ClosedForm;
};

} // namespace fracrelax
