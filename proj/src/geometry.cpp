#include "dyntrack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyntrack {

Pose::Pose(const Eigen::Quaterniond& rotation, const Eigen::Vector3d& translation)
    : rotation_(rotation), translation_(translation) {
  const double norm = rotation_.norm();
  if (std::abs(norm - 1.0) > 1e-6 || !std::isfinite(norm)) {
    throw std::invalid_argument("Pose: quaternion norm " + std::to_string(norm) +
                                " too far from 1");
  }
  rotation_.normalize();
}

void CameraModel::validate() const {
  if (!(fx > 0.0) || !(fy > 0.0)) {
    throw std::invalid_argument("CameraModel: focal lengths must be positive");
  }
  if (!(cx > 0.0 && cx < width) || !(cy > 0.0 && cy < height)) {
    throw std::invalid_argument("CameraModel: principal point outside image");
  }
}

BBox2D BBox2D::clamped(const CameraModel& cam) const {
  const double x0 = std::clamp(x, 0.0, static_cast<double>(cam.width));
  const double y0 = std::clamp(y, 0.0, static_cast<double>(cam.height));
  const double x1 = std::clamp(x + w, 0.0, static_cast<double>(cam.width));
  const double y1 = std::clamp(y + h, 0.0, static_cast<double>(cam.height));
  BBox2D out;
  out.x = x0;
  out.y = y0;
  out.w = std::max(0.0, x1 - x0);
  out.h = std::max(0.0, y1 - y0);
  out.confidence = confidence;
  return out;
}

std::optional<Pixel2> project_to_image(const Point3& p_cam, const CameraModel& cam) {
  if (p_cam.z <= 0.0) {
    return std::nullopt;
  }
  const double u = cam.fx * p_cam.x / p_cam.z + cam.cx;
  const double v = cam.fy * p_cam.y / p_cam.z + cam.cy;
  if (u < 0.0 || u >= cam.width || v < 0.0 || v >= cam.height) {
    return std::nullopt;
  }
  return Pixel2{u, v};
}

Cloud transform_cloud(const Cloud& cloud, const Pose& pose) {
  Cloud out;
  out.reserve(cloud.size());
  for (const Point3& p : cloud) {
    out.push_back(pose.apply(p));
  }
  return out;
}

}  // namespace dyntrack
