#pragma once

#include <Eigen/Core>

namespace vulnrank {

template <class S>
using RowMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using RowMatF = RowMat<float>;

} // namespace vulnrank
