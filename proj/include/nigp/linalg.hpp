#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace nigp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct CholeskyResult {
    Eigen::LLT<Matrix> llt;
    double jitter;  // diagonal ridge that made the factorization succeed
};

// Cholesky of a nominally-PSD kernel matrix. Starts from `jitter`,
// doubles on failure until `max_jitter`, then gives up.
inline CholeskyResult safe_cholesky(const Matrix& K, double jitter, double max_jitter) {
    if (K.rows() != K.cols()) throw std::invalid_argument("safe_cholesky: matrix not square");
    const Matrix sym = 0.5 * (K + K.transpose());
    double j = jitter;
    while (true) {
        Eigen::LLT<Matrix> llt(sym + j * Matrix::Identity(K.rows(), K.cols()));
        if (llt.info() == Eigen::Success) return {std::move(llt), j};
        if (j >= max_jitter) break;
        j = std::min(2.0 * j, max_jitter);
    }
    throw std::runtime_error("ill-conditioned kernel matrix: Cholesky failed at jitter " +
                             std::to_string(max_jitter));
}

inline double logdet_from_llt(const Eigen::LLT<Matrix>& llt) {
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace nigp
