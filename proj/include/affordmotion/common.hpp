#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace am {

// Data-plane matrices are float32 and row-major so that dataset blobs
// round-trip bit-exactly; numerical kernels promote to double.
using MatXf = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VecXf = Eigen::VectorXf;
using VecXd = Eigen::VectorXd;
using VecXi = Eigen::VectorXi;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.allFinite();
}

}  // namespace am
