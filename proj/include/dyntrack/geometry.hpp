#ifndef DYNTRACK_GEOMETRY_HPP_
#define DYNTRACK_GEOMETRY_HPP_

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <optional>
#include <vector>

namespace dyntrack {

/// A 3D point in meters. Whether coordinates are camera-frame or world-frame
/// is documented at each use site.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Eigen::Vector3d vec() const { return {x, y, z}; }
  static Point3 from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

using Cloud = std::vector<Point3>;

inline double squared_distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Point3& a, const Point3& b) {
  return std::sqrt(squared_distance(a, b));
}

/// Continuous image coordinates in pixels.
struct Pixel2 {
  double u = 0.0;
  double v = 0.0;
};

/// Rigid transform. Quaternion convention: (w, x, y, z), Hamilton,
/// camera-to-world when used as a camera pose.
class Pose {
 public:
  Pose() : rotation_(Eigen::Quaterniond::Identity()), translation_(Eigen::Vector3d::Zero()) {}

  /// Throws std::invalid_argument if the quaternion norm deviates from 1 by
  /// more than 1e-6; smaller drift is renormalized.
  Pose(const Eigen::Quaterniond& rotation, const Eigen::Vector3d& translation);

  static Pose identity() { return Pose(); }
  static Pose from_matrix(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation) {
    return Pose(Eigen::Quaterniond(rotation), translation);
  }

  const Eigen::Quaterniond& rotation() const { return rotation_; }
  const Eigen::Vector3d& translation() const { return translation_; }

  Point3 apply(const Point3& p) const {
    return Point3::from(rotation_ * p.vec() + translation_);
  }

  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const { return rotation_ * v; }

  Pose inverse() const {
    const Eigen::Quaterniond qi = rotation_.conjugate();
    return Pose(qi, qi * (-translation_));
  }

  /// Composition: (a * b).apply(p) == a.apply(b.apply(p)).
  Pose operator*(const Pose& other) const {
    return Pose(rotation_ * other.rotation_, rotation_ * other.translation_ + translation_);
  }

 private:
  Eigen::Quaterniond rotation_;
  Eigen::Vector3d translation_;
};

/// Pinhole intrinsics. Image frame: x right, y down, z forward;
/// u = fx * x / z + cx, v = fy * y / z + cy.
struct CameraModel {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
};

/// Axis-aligned image-plane bounding box, top-left anchored, pixels.
struct BBox2D {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
  double confidence = 1.0;

  double area() const { return w > 0.0 && h > 0.0 ? w * h : 0.0; }

  bool contains(const Pixel2& p) const {
    return p.u >= x && p.u < x + w && p.v >= y && p.v < y + h;
  }

  /// Intersect with the image rectangle. Degenerate results keep w/h at 0.
  BBox2D clamped(const CameraModel& cam) const;
};

/// Projects a camera-frame point. Returns nullopt when the point is behind
/// the camera (z <= 0) or lands outside [0,width) x [0,height).
std::optional<Pixel2> project_to_image(const Point3& p_cam, const CameraModel& cam);

/// Applies `pose` to every point. Length-preserving, invertible.
Cloud transform_cloud(const Cloud& cloud, const Pose& pose);

}  // namespace dyntrack

#endif  // DYNTRACK_GEOMETRY_HPP_
