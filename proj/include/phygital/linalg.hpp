#pragma once

// Dense linear algebra aliases and the Kronecker block lift used to apply
// per-dimension 3x3 operators to block-structured 3k-vectors.

#include <Eigen/Dense>

#include "phygital/common.hpp"

namespace phygital {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline bool all_finite(const Vec& v) { return v.allFinite(); }
inline bool all_finite(const Mat& m) { return m.allFinite(); }

// M (3x3) acting block-wise on a [p|d|s] vector of length 3k:
// out[i*k+j] = sum_m M(i,m) * v[m*k+j].  Equals (M ⊗ I_k) * v without
// materializing the 3k x 3k matrix.
inline Vec block_lift_apply(const Mat3& m, const Vec& v, int k) {
    if (v.size() != 3 * k) throw StructuralError("block_lift_apply: vector length != 3k");
    Vec out(3 * k);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < k; ++j) {
            double acc = 0.0;
            for (int c = 0; c < 3; ++c) acc += m(i, c) * v[c * k + j];
            out[i * k + j] = acc;
        }
    return out;
}

// Materialized M ⊗ I_k with [p|d|s] block ordering.
inline Mat block_lift(const Mat3& m, int k) {
    Mat out = Mat::Zero(3 * k, 3 * k);
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c)
            for (int j = 0; j < k; ++j) out(i * k + j, c * k + j) = m(i, c);
    return out;
}

// Per-dimension 3-vector replicated across each block's k coordinates.
inline Vec block_replicate(const Vec3& f, int k) {
    Vec out(3 * k);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < k; ++j) out[i * k + j] = f[i];
    return out;
}

}  // namespace phygital
