#pragma once

// Ontological mass tensor: 3x3 symmetric PSD matrix over the (physical,
// digital, social) axes. Rank classification, Moore-Penrose pseudoinverse
// response, and kernel transparency.

#include <array>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "phygital/linalg.hpp"

namespace phygital {

enum class Dim : int { physical = 0, digital = 1, social = 2 };

inline const char* dim_name(Dim d) {
    switch (d) {
        case Dim::physical: return "p";
        case Dim::digital: return "d";
        case Dim::social: return "s";
    }
    return "?";
}

struct MassClassification {
    int rank = 0;
    std::array<bool, 3> present = {false, false, false};  // indexed by Dim
};

class MassTensor {
public:
    MassTensor() : mu_(Mat3::Identity()) { rank_tol_ = default_rank_tol(mu_); }

    // Input is symmetrized as (M + M^T)/2; asymmetry beyond 1e-12 is flagged,
    // not rejected (floating-point inputs drift).
    explicit MassTensor(const Mat3& m, double rank_tol = -1.0) {
        if (!m.allFinite()) throw NumericError("MassTensor: non-finite entries");
        asymmetry_ = (m - m.transpose()).cwiseAbs().maxCoeff();
        mu_ = 0.5 * (m + m.transpose());
        rank_tol_ = rank_tol >= 0.0 ? rank_tol : default_rank_tol(mu_);
    }

    static double default_rank_tol(const Mat3& m) {
        return 1e-9 * std::max(1.0, m.trace());
    }

    const Mat3& matrix() const { return mu_; }
    double rank_tol() const { return rank_tol_; }
    double trace() const { return mu_.trace(); }
    double asymmetry() const { return asymmetry_; }
    bool symmetrize_warning() const { return asymmetry_ > 1e-12; }

    Vec3 eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Mat3> es(mu_, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

    void validate_psd() const {
        const Vec3 ev = eigenvalues();
        if (ev.minCoeff() < -rank_tol_)
            throw NumericError("MassTensor: negative eigenvalue " + format_double(ev.minCoeff()) +
                               " below -rank_tol " + format_double(-rank_tol_));
        if (mu_.trace() < 0.0) throw NumericError("MassTensor: negative trace");
    }

    MassClassification classify() const {
        validate_psd();
        MassClassification c;
        const Vec3 ev = eigenvalues();
        for (int i = 0; i < 3; ++i)
            if (ev[i] > rank_tol_) ++c.rank;
        for (int i = 0; i < 3; ++i) c.present[i] = mu_.row(i).norm() > rank_tol_;
        return c;
    }

    // Eigendecompose, invert eigenvalues above rank_tol, zero the rest.
    // Rows/columns that are stored as exact zeros stay exact zeros, so a
    // degenerate block never leaks response through eigensolver roundoff.
    Mat3 pseudoinverse() const {
        validate_psd();
        Eigen::SelfAdjointEigenSolver<Mat3> es(mu_);
        Vec3 inv = Vec3::Zero();
        for (int i = 0; i < 3; ++i)
            if (es.eigenvalues()[i] > rank_tol_) inv[i] = 1.0 / es.eigenvalues()[i];
        Mat3 p = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
        for (int i = 0; i < 3; ++i) {
            if (mu_.row(i).isZero(0.0)) {
                p.row(i).setZero();
                p.col(i).setZero();
            }
        }
        return p;
    }

    // Law of tensorial response: a = mu^+ . Phi on per-dimension forces.
    Vec3 respond(const Vec3& force) const {
        if (!force.allFinite()) throw NumericError("respond: non-finite force");
        return pseudoinverse() * force;
    }

    // Block force of length 3k routed through mu^+ ⊗ I_k.
    Vec respond_blocks(const Vec& force, int k) const {
        if (!force.allFinite()) throw NumericError("respond_blocks: non-finite force");
        return block_lift_apply(pseudoinverse(), force, k);
    }

    // True iff the force lies in the kernel within tolerance; a zero force is
    // vacuously transparent.
    bool is_transparent_to(const Vec3& force) const {
        const double fn = force.norm();
        if (fn == 0.0) return true;
        return (pseudoinverse() * force).norm() <= rank_tol_ * fn;
    }

private:
    Mat3 mu_;
    double rank_tol_ = 0.0;
    double asymmetry_ = 0.0;
};

// Degenerate-physical-block tensor of a synthetic agent.
inline MassTensor synthetic_mass(double mu_dd, double mu_ss, double mu_ds) {
    Mat3 m = Mat3::Zero();
    m(1, 1) = mu_dd;
    m(2, 2) = mu_ss;
    m(1, 2) = m(2, 1) = mu_ds;
    return MassTensor(m);
}

}  // namespace phygital
