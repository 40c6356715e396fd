#pragma once

// Fiber transport along base paths, holonomy around loops, and sheaf-gluing
// with obstruction localization.
//
// A Connection is a generator-valued one-form sampled on demand: G(x, dx) is
// the 2k x 2k generator for a base step dx taken at base point x. Transport
// across a substep applies exp(-G(x_left, dx_sub)); sampling at the left node
// makes the discretized path-ordered product first-order in 1/steps for
// x-dependent connections, and exact for constant one-forms.

#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "phygital/linalg.hpp"

namespace phygital {

struct Connection {
    int k = 1;  // base dimension; fiber dimension is 2k
    std::function<Mat(const Vec& x, const Vec& dx)> generator;

    int fiber_dim() const { return 2 * k; }

    Mat sample(const Vec& x, const Vec& dx) const {
        Mat g = generator(x, dx);
        if (g.rows() != fiber_dim() || g.cols() != fiber_dim())
            throw StructuralError("Connection: generator is not 2k x 2k");
        if (!g.allFinite()) throw NumericError("Connection: non-finite generator");
        return g;
    }
};

// Block-diagonal rotation generator on the 2k fiber (k copies of [[0,-1],[1,0]]).
inline Mat fiber_rotation_generator(int k) {
    Mat j = Mat::Zero(2 * k, 2 * k);
    for (int b = 0; b < k; ++b) {
        j(2 * b, 2 * b + 1) = -1.0;
        j(2 * b + 1, 2 * b) = 1.0;
    }
    return j;
}

inline Connection zero_connection(int k) {
    return Connection{k, [k](const Vec&, const Vec&) { return Mat::Zero(2 * k, 2 * k); }};
}

// Constant exact one-form theta * dx_0 * J; zero curvature.
inline Connection constant_rotation_connection(int k, double theta) {
    Mat j = fiber_rotation_generator(k);
    return Connection{k, [j, theta](const Vec&, const Vec& dx) -> Mat { return (theta * dx[0]) * j; }};
}

// Symmetric-gauge abelian connection (c/2)(x0 dx1 - x1 dx0) J with constant
// curvature c over the (x0, x1) base plane. Requires k >= 2.
inline Connection curvature_connection(int k, double c) {
    if (k < 2) throw StructuralError("curvature connection requires k >= 2");
    Mat j = fiber_rotation_generator(k);
    return Connection{k, [j, c](const Vec& x, const Vec& dx) -> Mat {
                          return (0.5 * c * (x[0] * dx[1] - x[1] * dx[0])) * j;
                      }};
}

namespace detail {

template <typename Apply>
void walk_path(const std::vector<Vec>& path, const Connection& conn, int steps_per_segment,
               Apply&& apply) {
    if (path.size() < 2) throw StructuralError("transport: path needs at least 2 points");
    if (steps_per_segment < 1) throw StructuralError("transport: steps_per_segment must be >= 1");
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        if (path[s].size() != conn.k || path[s + 1].size() != conn.k)
            throw StructuralError("transport: path point dimension != k");
        const Vec dx = (path[s + 1] - path[s]) / double(steps_per_segment);
        for (int i = 0; i < steps_per_segment; ++i) {
            const Vec x = path[s] + (double(i) / steps_per_segment) * (path[s + 1] - path[s]);
            Mat g = conn.sample(x, dx);
            if (g.isZero(0.0)) continue;  // identity substep, keep bits intact
            apply((-g).exp().eval());
        }
    }
}

}  // namespace detail

inline Vec transport(const Vec& fiber, const std::vector<Vec>& path, const Connection& conn,
                     int steps_per_segment) {
    if (fiber.size() != conn.fiber_dim()) throw StructuralError("transport: fiber length != 2k");
    Vec f = fiber;
    detail::walk_path(path, conn, steps_per_segment, [&f](const Mat& step) { f = step * f; });
    return f;
}

inline Mat holonomy(const std::vector<Vec>& loop, const Connection& conn, int steps_per_segment) {
    if (loop.size() < 2) throw StructuralError("holonomy: loop needs at least 2 points");
    if (loop.front() != loop.back())
        throw StructuralError("holonomy: loop start must equal loop end exactly");
    Mat h = Mat::Identity(conn.fiber_dim(), conn.fiber_dim());
    detail::walk_path(loop, conn, steps_per_segment, [&h](const Mat& step) { h = step * h; });
    return h;
}

// --- sheaf gluing over a finite base-point set -----------------------------

using BasePoint = std::vector<double>;  // exact-equality key

struct BaseCover {
    std::vector<std::vector<BasePoint>> regions;
};

struct LocalSection {
    int region = 0;
    std::map<BasePoint, Vec> assignment;
};

struct GlueConflict {
    int region_a = 0, region_b = 0;
    BasePoint point;
    Vec fiber_a, fiber_b;
    double discrepancy = 0.0;
};

struct ObstructionReport {
    std::vector<GlueConflict> conflicts;
    bool failed() const { return !conflicts.empty(); }
};

struct GlueResult {
    std::map<BasePoint, Vec> global;  // filled iff ok
    ObstructionReport obstruction;
    bool ok() const { return !obstruction.failed(); }
};

// Merge one section per region; report every overlap point whose fibers
// disagree beyond tol.
inline GlueResult glue(const BaseCover& cover, const std::vector<LocalSection>& sections,
                       double tol) {
    if (sections.size() != cover.regions.size())
        throw StructuralError("glue: need exactly one section per region");
    std::vector<const LocalSection*> by_region(cover.regions.size(), nullptr);
    for (const auto& s : sections) {
        if (s.region < 0 || std::size_t(s.region) >= cover.regions.size())
            throw StructuralError("glue: section references unknown region");
        if (by_region[s.region]) throw StructuralError("glue: duplicate section for region");
        by_region[s.region] = &s;
    }
    for (std::size_t r = 0; r < cover.regions.size(); ++r)
        for (const auto& p : cover.regions[r])
            if (!by_region[r]->assignment.count(p))
                throw StructuralError("glue: section misses a point of its region");

    GlueResult out;
    for (std::size_t a = 0; a < cover.regions.size(); ++a) {
        for (std::size_t b = a + 1; b < cover.regions.size(); ++b) {
            for (const auto& p : cover.regions[a]) {
                const auto itb = by_region[b]->assignment.find(p);
                if (itb == by_region[b]->assignment.end()) continue;
                const bool in_b = [&] {
                    for (const auto& q : cover.regions[b])
                        if (q == p) return true;
                    return false;
                }();
                if (!in_b) continue;
                const Vec& fa = by_region[a]->assignment.at(p);
                const Vec& fb = itb->second;
                const double d = (fa - fb).norm();
                if (d > tol)
                    out.obstruction.conflicts.push_back(
                        GlueConflict{int(a), int(b), p, fa, fb, d});
            }
        }
    }
    if (out.ok()) {
        for (std::size_t r = 0; r < cover.regions.size(); ++r)
            for (const auto& p : cover.regions[r])
                out.global.emplace(p, by_region[r]->assignment.at(p));
    }
    return out;
}

}  // namespace phygital
