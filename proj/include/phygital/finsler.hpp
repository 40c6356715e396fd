#pragma once

// Randers-type asymmetric cost geometry: F(x,v) = phi(x) (sqrt(v^T A v) + b^T v)
// with SPD quadratic part A, drift one-form b (admissible when b^T A^-1 b < 1)
// and a positive conformal field phi. Path costs use the midpoint rule;
// geodesics are solved variationally by waypoint descent; distances are the
// asymmetric pair of geodesic costs.

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "phygital/linalg.hpp"

namespace phygital {

using ConformalField = std::function<double(const Vec&)>;

inline ConformalField constant_field(double value = 1.0) {
    return [value](const Vec&) { return value; };
}

// base + amp * exp(-|x - center|^2 / (2 sigma^2)) on the given coordinates.
inline ConformalField bump_field(double base, double amp, Vec center, double sigma) {
    return [base, amp, c = std::move(center), s2 = 2.0 * sigma * sigma](const Vec& x) {
        return base + amp * std::exp(-(x - c).squaredNorm() / s2);
    };
}

struct RandersMetric {
    Mat A;               // 3k x 3k symmetric positive definite
    Vec b;               // length 3k
    ConformalField phi;  // positive; defaults to 1

    RandersMetric() = default;
    RandersMetric(Mat a, Vec drift, ConformalField field = constant_field())
        : A(std::move(a)), b(std::move(drift)), phi(std::move(field)) {}

    int dim() const { return int(A.rows()); }
};

struct RandersDiagnostics {
    double min_eigenvalue_A = 0.0;
    double drift_norm = 0.0;  // b^T A^-1 b
    bool pass = false;
};

inline RandersDiagnostics validate_randers(const RandersMetric& m) {
    if (m.A.rows() != m.A.cols() || m.A.rows() == 0)
        throw StructuralError("RandersMetric: A must be square and nonempty");
    if (m.b.size() != m.A.rows()) throw StructuralError("RandersMetric: b length != dim(A)");
    if (!m.A.allFinite() || !m.b.allFinite())
        throw NumericError("RandersMetric: non-finite coefficients");
    const double scale = std::max(1.0, m.A.cwiseAbs().maxCoeff());
    if ((m.A - m.A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw StructuralError("RandersMetric: A is not symmetric");

    RandersDiagnostics d;
    Eigen::SelfAdjointEigenSolver<Mat> es(m.A, Eigen::EigenvaluesOnly);
    d.min_eigenvalue_A = es.eigenvalues().minCoeff();
    if (d.min_eigenvalue_A > 0.0)
        d.drift_norm = m.b.dot(m.A.ldlt().solve(m.b));
    else
        d.drift_norm = std::numeric_limits<double>::infinity();
    d.pass = d.min_eigenvalue_A > 0.0 && d.drift_norm < 1.0;
    return d;
}

// F(x, v); zero at v = 0, strictly positive for v != 0 under the Randers
// condition.
inline double eval_F(const RandersMetric& m, const Vec& x, const Vec& v) {
    const double phi = m.phi ? m.phi(x) : 1.0;
    if (!(phi > 0.0)) throw NumericError("RandersMetric: phi(x) must be positive");
    return phi * (std::sqrt(v.dot(m.A * v)) + m.b.dot(v));
}

// Fundamental tensor g_ij(x,v) = 1/2 d^2 F^2 / dv_i dv_j by central finite
// differences of F^2 with step 1e-4 * max(1, |v|). Undefined at v = 0.
inline Mat metric_hessian(const RandersMetric& m, const Vec& x, const Vec& v) {
    if (v.size() != m.dim()) throw StructuralError("metric_hessian: v dimension mismatch");
    if (v.norm() == 0.0) throw DomainError("metric_hessian: undefined at v = 0");
    const double h = 1e-4 * std::max(1.0, v.norm());
    const int n = m.dim();
    auto f2 = [&](const Vec& w) {
        const double f = eval_F(m, x, w);
        return f * f;
    };
    Mat g(n, n);
    const double f0 = f2(v);
    for (int i = 0; i < n; ++i) {
        Vec vp = v, vm = v;
        vp[i] += h;
        vm[i] -= h;
        g(i, i) = 0.5 * (f2(vp) - 2.0 * f0 + f2(vm)) / (h * h);
        for (int j = i + 1; j < n; ++j) {
            Vec vpp = v, vpm = v, vmp = v, vmm = v;
            vpp[i] += h; vpp[j] += h;
            vpm[i] += h; vpm[j] -= h;
            vmp[i] -= h; vmp[j] += h;
            vmm[i] -= h; vmm[j] -= h;
            g(i, j) = g(j, i) = 0.5 * (f2(vpp) - f2(vpm) - f2(vmp) + f2(vmm)) / (4.0 * h * h);
        }
    }
    return g;
}

struct PathPolyline {
    std::vector<Vec> waypoints;

    void validate() const {
        if (waypoints.size() < 2) throw StructuralError("PathPolyline: needs at least 2 waypoints");
        for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
            if ((waypoints[i + 1] - waypoints[i]).norm() == 0.0)
                throw StructuralError("PathPolyline: consecutive waypoints must be distinct");
    }
};

// Midpoint-rule cost: sum of F(segment midpoint, segment vector). Positive
// 1-homogeneity of F makes this parameterization-free and additive under
// collinear subdivision.
inline double path_cost(const RandersMetric& m, const std::vector<Vec>& waypoints) {
    if (waypoints.size() < 2) throw StructuralError("path_cost: needs at least 2 waypoints");
    double cost = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
        cost += eval_F(m, 0.5 * (waypoints[i] + waypoints[i + 1]), waypoints[i + 1] - waypoints[i]);
    return cost;
}

inline double path_cost(const RandersMetric& m, const PathPolyline& path) {
    path.validate();
    return path_cost(m, path.waypoints);
}

struct DescentSettings {
    int max_iters = 800;
    double fd_step = 1e-5;     // waypoint-gradient step
    double grad_tol = 1e-9;    // stop when the gradient inf-norm drops below
    double step0 = 0.25;       // initial line-search step
    double step_max = 1.0;
    double armijo = 1e-4;
    double shrink = 0.5;
    double grow = 1.5;
};

struct GeodesicResult {
    PathPolyline path;
    double cost = 0.0;
    bool converged = false;
    int iterations = 0;
};

namespace detail {

// Cost of the (up to two) segments adjacent to waypoint i; the only part of
// the path cost that moves with it.
inline double local_cost(const RandersMetric& m, const std::vector<Vec>& w, std::size_t i) {
    double c = 0.0;
    if (i > 0) c += eval_F(m, 0.5 * (w[i - 1] + w[i]), w[i] - w[i - 1]);
    if (i + 1 < w.size()) c += eval_F(m, 0.5 * (w[i] + w[i + 1]), w[i + 1] - w[i]);
    return c;
}

// Armijo-backtracked gradient descent on the interior waypoints. Monotone in
// the path cost; stops at the gradient tolerance, at fd resolution, or at the
// iteration cap. Returns iterations spent; sets converged.
inline int descend(const RandersMetric& m, std::vector<Vec>& w, double& cost,
                   const DescentSettings& opt, bool& converged) {
    const int interior = int(w.size()) - 2;
    const int dim = m.dim();
    converged = interior == 0;
    if (interior == 0) return 0;

    std::vector<Vec> grad(interior, Vec::Zero(dim));
    double step = opt.step0;
    int it = 0;
    for (; it < opt.max_iters; ++it) {
        double gmax = 0.0;
        for (int i = 1; i <= interior; ++i) {
            for (int c = 0; c < dim; ++c) {
                const double saved = w[i][c];
                w[i][c] = saved + opt.fd_step;
                const double cp = local_cost(m, w, i);
                w[i][c] = saved - opt.fd_step;
                const double cm = local_cost(m, w, i);
                w[i][c] = saved;
                grad[i - 1][c] = (cp - cm) / (2.0 * opt.fd_step);
                gmax = std::max(gmax, std::abs(grad[i - 1][c]));
            }
        }
        if (gmax < opt.grad_tol) {
            converged = true;
            break;
        }

        double g2 = 0.0;
        for (const auto& g : grad) g2 += g.squaredNorm();

        bool accepted = false;
        while (step > 1e-14) {
            std::vector<Vec> trial = w;
            for (int i = 1; i <= interior; ++i) trial[i] -= step * grad[i - 1];
            const double trial_cost = path_cost(m, trial);
            if (trial_cost <= cost - opt.armijo * step * g2) {
                w = std::move(trial);
                cost = trial_cost;
                accepted = true;
                break;
            }
            step *= opt.shrink;
        }
        if (!accepted) {
            converged = true;  // no descent direction left at fd resolution
            break;
        }
        step = std::min(step * opt.grow, opt.step_max);
    }
    return it;
}

// Piecewise-linear resample to n waypoints, uniform in waypoint parameter.
inline std::vector<Vec> resample_polyline(const std::vector<Vec>& w, int n) {
    std::vector<Vec> out(n);
    const double scale = double(w.size() - 1) / (n - 1);
    for (int j = 0; j < n; ++j) {
        const double t = j * scale;
        const int seg = std::min(int(t), int(w.size()) - 2);
        const double frac = t - seg;
        out[j] = (1.0 - frac) * w[seg] + frac * w[seg + 1];
    }
    out.front() = w.front();
    out.back() = w.back();
    return out;
}

}  // namespace detail

// Variational boundary-value geodesic. Interior waypoints descend the path
// cost by finite-difference gradients with Armijo backtracking, starting from
// the straight chord. The descent runs coarse-to-fine: long-wavelength bending
// is resolved on a few waypoints before refinement, which first-order descent
// alone recovers only slowly on a fine chain. The result never exceeds the
// straight-line cost at the requested resolution. Ties between equal-cost
// geodesics resolve to the first local optimum reached from this
// initialization.
inline GeodesicResult geodesic(const RandersMetric& m, const Vec& x, const Vec& y,
                               int n_waypoints, const DescentSettings& opt = {}) {
    if ((x - y).norm() == 0.0) throw StructuralError("geodesic: endpoints must differ");
    if (n_waypoints < 2) throw StructuralError("geodesic: n_waypoints must be >= 2");

    std::vector<int> levels{n_waypoints};
    while (levels.back() > 7) levels.push_back(levels.back() / 2 + 1);
    std::reverse(levels.begin(), levels.end());

    std::vector<Vec> w(levels[0]);
    for (int i = 0; i < levels[0]; ++i)
        w[i] = x + (double(i) / (levels[0] - 1)) * (y - x);

    GeodesicResult res;
    res.cost = path_cost(m, w);
    for (std::size_t l = 0; l < levels.size(); ++l) {
        if (l > 0) {
            w = detail::resample_polyline(w, levels[l]);
            res.cost = path_cost(m, w);
        }
        res.iterations += detail::descend(m, w, res.cost, opt, res.converged);
    }

    // the chord is always admissible; never return anything costlier
    std::vector<Vec> chord(n_waypoints);
    for (int i = 0; i < n_waypoints; ++i)
        chord[i] = x + (double(i) / (n_waypoints - 1)) * (y - x);
    const double chord_cost = path_cost(m, chord);
    if (res.cost > chord_cost) {
        w = std::move(chord);
        res.cost = chord_cost;
    }
    res.path.waypoints = std::move(w);
    return res;
}

struct DistanceResult {
    double forward = 0.0;   // delta(x, y)
    double reverse = 0.0;   // delta(y, x)
    double gap = 0.0;       // forward - reverse
    bool forward_converged = false;
    bool reverse_converged = false;
};

// Asymmetric quasimetric distance: geodesic cost in each direction.
inline DistanceResult distance(const RandersMetric& m, const Vec& x, const Vec& y,
                               int n_waypoints = 33, const DescentSettings& opt = {}) {
    const GeodesicResult fwd = geodesic(m, x, y, n_waypoints, opt);
    const GeodesicResult rev = geodesic(m, y, x, n_waypoints, opt);
    return DistanceResult{fwd.cost, rev.cost, fwd.cost - rev.cost, fwd.converged, rev.converged};
}

}  // namespace phygital
