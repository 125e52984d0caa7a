#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <stdexcept>
#include <string>

namespace meshshell {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Configuration or input-file problem detected before any computation.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The reparameterization map g = (z + eta_z, theta + eta_theta) stopped
/// being injective, or the radial boundary touched the axis.  The run must
/// halt; the last valid state is what the caller has.
class SubgraphViolation : public std::runtime_error {
public:
  explicit SubgraphViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Structure displacement history exceeded the configured W^{1,inf} cap.
class LipschitzViolation : public std::runtime_error {
public:
  explicit LipschitzViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Previous-step state handed to a substep builder is internally inconsistent.
class StateError : public std::runtime_error {
public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

}  // namespace meshshell
