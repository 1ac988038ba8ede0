#ifndef DYNTRACK_SPATIAL_GRID_HPP_
#define DYNTRACK_SPATIAL_GRID_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dyntrack/geometry.hpp"

namespace dyntrack {

/// Uniform hash grid over a 3D point set. Built once, queried read-only.
/// Radius queries visit only the cells overlapping the query ball; nearest
/// queries expand cell rings outward until no closer point can exist, so
/// results are exact (equal to a linear scan) for any cell size.
class UniformGrid3 {
 public:
  /// The referenced cloud must outlive the grid. cell > 0.
  UniformGrid3(const Cloud& points, double cell);

  /// Number of points q != skip_index with ||p_q - center|| <= radius.
  int count_within(const Point3& center, double radius, int skip_index = -1) const;

  /// Indices of points within `radius` of `center` (inclusive boundary),
  /// ascending index order. skip_index is omitted from the result.
  std::vector<int> neighbors_within(const Point3& center, double radius,
                                    int skip_index = -1) const;

  struct Nearest {
    int index = -1;
    double dist = 0.0;
  };

  /// Exact nearest neighbor, or nullopt for an empty cloud.
  std::optional<Nearest> nearest(const Point3& query) const;

  std::size_t size() const { return points_->size(); }

 private:
  struct CellCoord {
    int64_t x, y, z;
  };
  CellCoord coord_of(const Point3& p) const;
  static uint64_t pack(const CellCoord& c);

  const Cloud* points_;
  double cell_;
  std::unordered_map<uint64_t, std::vector<int>> cells_;
  CellCoord min_coord_{0, 0, 0};
  CellCoord max_coord_{0, 0, 0};
};

/// 2D version over pixel samples, used for image-plane nearest lookups.
class PixelGrid2 {
 public:
  PixelGrid2(const std::vector<Pixel2>& pixels, double cell);

  struct Nearest {
    int index = -1;
    double dist = 0.0;
  };

  /// Nearest sample within `radius` pixels of (u, v), or nullopt.
  std::optional<Nearest> nearest_within(double u, double v, double radius) const;

 private:
  const std::vector<Pixel2>* pixels_;
  double cell_;
  std::unordered_map<uint64_t, std::vector<int>> cells_;
};

}  // namespace dyntrack

#endif  // DYNTRACK_SPATIAL_GRID_HPP_
