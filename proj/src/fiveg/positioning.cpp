#include "mmnav/fiveg/positioning.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mmnav/constants.hpp"
#include "mmnav/errors.hpp"

namespace mmnav {

namespace {

PositionFix make_fix(const Eigen::Vector3d& enu, const Eigen::Matrix3d& cov,
                     FixSource source, const SceneFrame& frame) {
  PositionFix fix;
  fix.enu = enu;
  fix.covariance_enu = cov;
  fix.source = source;
  fix.position = enu_to_geodetic(enu, frame.origin, frame.earth);
  return fix;
}

// Unit normal and offset of a line in implicit form n . p = c.
struct ImplicitLine {
  Eigen::Vector2d n;
  double c;
  double direction;  // [rad) mod pi, for parallelism checks
};

ImplicitLine to_implicit(const SbrLine& line) {
  ImplicitLine out;
  const double s = std::sqrt(1.0 + line.k * line.k);
  if (!line.axes_swapped) {
    // y = k x + b  ->  (-k, 1) . p = b
    out.n = Eigen::Vector2d(-line.k, 1.0) / s;
    out.c = line.b / s;
    out.direction = std::atan2(line.k, 1.0);
  } else {
    // x = k y + b  ->  (1, -k) . p = b
    out.n = Eigen::Vector2d(1.0, -line.k) / s;
    out.c = line.b / s;
    out.direction = std::atan2(1.0, line.k);
  }
  if (out.direction < 0.0) out.direction += M_PI;
  return out;
}

}  // namespace

double rtt_to_distance(double rtt) { return kSpeedOfLight * rtt / 2.0; }

PositionFix los_fix_3d(const BaseStation& bs, double distance_3d, double aod_azimuth,
                       double aod_elevation, const SceneFrame& frame) {
  const double ce = std::cos(aod_elevation);
  const Eigen::Vector3d direction(std::sin(aod_azimuth) * ce,
                                  std::cos(aod_azimuth) * ce,
                                  std::sin(aod_elevation));
  PositionFix fix = make_fix(bs.enu + distance_3d * direction,
                             Eigen::Matrix3d::Zero(), FixSource::Los, frame);
  fix.path_count = 1;
  return fix;
}

PositionFix los_fix_2d(const BaseStation& bs, double distance_2d, double aod_azimuth,
                       double height, const SceneFrame& frame) {
  Eigen::Vector3d enu = bs.enu;
  enu(0) += distance_2d * std::sin(aod_azimuth);
  enu(1) += distance_2d * std::cos(aod_azimuth);
  enu(2) = height;
  PositionFix fix = make_fix(enu, Eigen::Matrix3d::Zero(), FixSource::Los, frame);
  fix.path_count = 1;
  return fix;
}

SbrLine sbr_line(const BaseStation& bs, double ue_side_azimuth, double bs_side_azimuth,
                 double distance_2d) {
  const double sin_sum = std::sin(ue_side_azimuth) + std::sin(bs_side_azimuth);
  const double cos_sum = std::cos(ue_side_azimuth) + std::cos(bs_side_azimuth);

  // Anchor point: the UE position for r -> 0 (scatterer at the BS).
  const double x0 = bs.enu(0) - distance_2d * std::sin(ue_side_azimuth);
  const double y0 = bs.enu(1) - distance_2d * std::cos(ue_side_azimuth);

  SbrLine line;
  if (std::abs(sin_sum) > 1e-9) {
    line.k = cos_sum / sin_sum;
    line.b = -line.k * x0 + y0;
    return line;
  }
  if (std::abs(cos_sum) <= 1e-9) {
    throw DegenerateGeometry("sbr_line: anti-parallel departure/arrival geometry");
  }
  // Near-vertical locus: swapped-axes representation x = k y + b.
  line.axes_swapped = true;
  line.k = sin_sum / cos_sum;
  line.b = x0 - line.k * y0;
  return line;
}

std::pair<Eigen::Vector2d, Eigen::Vector2d> sbr_point_for_r(const BaseStation& bs,
                                                            double ue_side_azimuth,
                                                            double bs_side_azimuth,
                                                            double distance_2d, double r) {
  const Eigen::Vector2d scatterer =
      bs.enu.head<2>() +
      r * Eigen::Vector2d(std::sin(bs_side_azimuth), std::cos(bs_side_azimuth));
  const Eigen::Vector2d ue =
      scatterer - (distance_2d - r) * Eigen::Vector2d(std::sin(ue_side_azimuth),
                                                      std::cos(ue_side_azimuth));
  return {scatterer, ue};
}

double sbr_line_distance(const SbrLine& line, const Eigen::Vector2d& point) {
  const ImplicitLine impl = to_implicit(line);
  return std::abs(impl.n.dot(point) - impl.c);
}

PositionFix sbr_fix(const std::vector<SbrLine>& lines, double height,
                    const SceneFrame& frame, const SbrFixOptions& options) {
  if (lines.size() < 2) {
    throw InsufficientPaths("sbr_fix: fewer than two usable single-bounce lines");
  }

  std::vector<ImplicitLine> impl;
  impl.reserve(lines.size());
  for (const auto& line : lines) impl.push_back(to_implicit(line));

  double max_separation = 0.0;
  for (size_t i = 0; i < impl.size(); ++i) {
    for (size_t j = i + 1; j < impl.size(); ++j) {
      double d = std::abs(impl[i].direction - impl[j].direction);
      d = std::min(d, M_PI - d);
      max_separation = std::max(max_separation, d);
    }
  }
  if (max_separation < options.parallel_threshold_rad) {
    throw IllConditioned("sbr_fix: lines within the parallelism threshold");
  }

  // Least-squares point minimizing the sum of squared perpendicular
  // distances; reduces to the exact intersection for two lines.
  Eigen::Matrix2d normal_eq = Eigen::Matrix2d::Zero();
  Eigen::Vector2d rhs = Eigen::Vector2d::Zero();
  for (const auto& l : impl) {
    normal_eq += l.n * l.n.transpose();
    rhs += l.n * l.c;
  }
  const Eigen::Vector2d point = normal_eq.ldlt().solve(rhs);

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  cov.topLeftCorner<2, 2>() =
      options.line_sigma_m * options.line_sigma_m * normal_eq.inverse();
  cov(2, 2) = options.altitude_variance;

  PositionFix fix = make_fix(Eigen::Vector3d(point(0), point(1), height), cov,
                             FixSource::Sbr, frame);
  fix.path_count = static_cast<int>(lines.size());
  return fix;
}

}  // namespace mmnav
