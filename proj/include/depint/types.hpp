#pragma once

#include <Eigen/Core>

namespace depint {

/// Element of SO(3): a 3x3 rotation matrix (R^T R = I, det R = +1).
using GroupElement = Eigen::Matrix3d;

/// Element of so(3) in R^3 coordinates via the hat map (e.g. body angular velocity).
using AlgebraVector = Eigen::Vector3d;

/// Element of so(3)* in R^3 coordinates (body momentum Pi or spatial momentum pi0/mu).
using MomentumVector = Eigen::Vector3d;

} // namespace depint
