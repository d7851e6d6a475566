// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/criteria.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "qcorr/error.h"

namespace qcorr {

namespace {

constexpr double kFrameTol = 1e-10;
constexpr int kEulerGrid = 24;
constexpr int kIcosphereLevels = 5;  // 10242 vertices
constexpr size_t kRefineStarts = 8;
constexpr double kMinStep = 1e-10;

Mat3 gram(const Mat3 &t) {
    return mat_mul(transpose(t), t);
}

/// ZYZ Euler rotation; columns are the rotated axes.
Mat3 euler_rotation(double alpha, double beta, double gamma) {
    double ca = std::cos(alpha), sa = std::sin(alpha);
    double cb = std::cos(beta), sb = std::sin(beta);
    double cg = std::cos(gamma), sg = std::sin(gamma);
    return {{
        {ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb},
        {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb},
        {-sb * cg, sb * sg, cb},
    }};
}

double frame_objective(const Mat3 &t, const std::array<double, 3> &angles) {
    Mat3 rot = euler_rotation(angles[0], angles[1], angles[2]);
    double total = 0;
    for (size_t i = 0; i < 3; i++) {
        Vec3 column{rot[0][i], rot[1][i], rot[2][i]};
        total += norm(mat_vec(t, column));
    }
    return total / std::sqrt(3.0);
}

/// Coordinate compass search for a local maximum. Step halves whenever no
/// axis move improves the objective.
template <size_t N, typename F>
double compass_maximize(F &&objective, std::array<double, N> x, double step) {
    double best = objective(x);
    while (step > kMinStep) {
        bool improved = false;
        for (size_t k = 0; k < N; k++) {
            for (double sign : {1.0, -1.0}) {
                auto trial = x;
                trial[k] += sign * step;
                double v = objective(trial);
                if (v > best) {
                    best = v;
                    x = trial;
                    improved = true;
                }
            }
        }
        if (!improved) {
            step /= 2;
        }
    }
    return best;
}

Vec3 normalized(const Vec3 &v) {
    double n = norm(v);
    return {v[0] / n, v[1] / n, v[2] / n};
}

std::vector<Vec3> build_icosphere(int levels) {
    const double phi = std::numbers::phi;
    std::vector<Vec3> vertices = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0}, {0, -1, phi}, {0, 1, phi},
        {0, -1, -phi}, {0, 1, -phi}, {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
    };
    for (auto &v : vertices) {
        v = normalized(v);
    }
    std::vector<std::array<size_t, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
        {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
        {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1},
    };
    for (int level = 0; level < levels; level++) {
        std::map<std::pair<size_t, size_t>, size_t> midpoints;
        auto midpoint = [&](size_t a, size_t b) {
            auto key = std::minmax(a, b);
            auto it = midpoints.find(key);
            if (it != midpoints.end()) {
                return it->second;
            }
            const Vec3 &va = vertices[a];
            const Vec3 &vb = vertices[b];
            vertices.push_back(normalized({va[0] + vb[0], va[1] + vb[1], va[2] + vb[2]}));
            midpoints.emplace(key, vertices.size() - 1);
            return vertices.size() - 1;
        };
        std::vector<std::array<size_t, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto &f : faces) {
            size_t ab = midpoint(f[0], f[1]);
            size_t bc = midpoint(f[1], f[2]);
            size_t ca = midpoint(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }
    return vertices;
}

const std::vector<Vec3> &icosphere() {
    static const std::vector<Vec3> points = build_icosphere(kIcosphereLevels);
    return points;
}

/// Any two unit vectors completing `x` to an orthonormal basis.
std::pair<Vec3, Vec3> tangent_basis(const Vec3 &x) {
    Vec3 helper = std::abs(x[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = normalized({
        x[1] * helper[2] - x[2] * helper[1],
        x[2] * helper[0] - x[0] * helper[2],
        x[0] * helper[1] - x[1] * helper[0],
    });
    Vec3 e2 = {
        x[1] * e1[2] - x[2] * e1[1],
        x[2] * e1[0] - x[0] * e1[2],
        x[0] * e1[1] - x[1] * e1[0],
    };
    return {e1, e2};
}

/// Compass search on the sphere in the tangent plane of the current point.
template <typename F>
double sphere_maximize(F &&objective, Vec3 x, double step) {
    double best = objective(x);
    while (step > kMinStep) {
        auto [e1, e2] = tangent_basis(x);
        bool improved = false;
        for (const Vec3 &dir : {e1, e2}) {
            for (double sign : {1.0, -1.0}) {
                Vec3 trial = normalized(
                    {x[0] + sign * step * dir[0], x[1] + sign * step * dir[1], x[2] + sign * step * dir[2]});
                double v = objective(trial);
                if (v > best) {
                    best = v;
                    x = trial;
                    improved = true;
                }
            }
        }
        if (!improved) {
            step /= 2;
        }
    }
    return best;
}

template <typename Point>
std::vector<Point> top_candidates(std::vector<std::pair<double, Point>> scored, size_t count) {
    count = std::min(count, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + count, scored.end(), [](const auto &a, const auto &b) {
        return a.first > b.first;
    });
    std::vector<Point> out;
    for (size_t k = 0; k < count; k++) {
        out.push_back(scored[k].second);
    }
    return out;
}

}  // namespace

bool at_most_one(double value) {
    return std::round(value * 1e12) / 1e12 <= 1.0;
}

double chsh_M(const Mat3 &correlations) {
    Spectrum s = symmetric_eigenvalues(gram(correlations));
    return s[0] + s[1];
}

double chsh_M(const DensityMatrix &rho) {
    return chsh_M(bloch_decompose(rho).t);
}

double absolute_chsh_A(const Spectrum &spectrum) {
    double a1 = spectrum[0], a2 = spectrum[1], a3 = spectrum[2];
    double first = 2 * a1 + 2 * a2 - 1;
    double second = 2 * a1 + 2 * a3 - 1;
    return first * first + second * second;
}

double absolute_chsh_A(const DensityMatrix &rho) {
    return absolute_chsh_A(hermitian_eigenvalues(rho.matrix()));
}

double absolute_unsteer_B(const Spectrum &spectrum, double purity) {
    double pairs = 0;
    for (size_t i = 0; i < spectrum.size(); i++) {
        for (size_t j = i + 1; j < spectrum.size(); j++) {
            pairs += spectrum[i] * spectrum[j];
        }
    }
    return 3 * purity - 2 * pairs;
}

double absolute_unsteer_B(const DensityMatrix &rho) {
    return absolute_unsteer_B(hermitian_eigenvalues(rho.matrix()), purity(rho));
}

void check_frame(const MeasurementFrame &frame) {
    for (size_t i = 0; i < 3; i++) {
        double nu = norm(frame.u[i]);
        if (std::abs(nu - 1) > kFrameTol) {
            std::ostringstream msg;
            msg << "frame direction u_" << i + 1 << " has norm " << nu;
            throw QcorrError(ErrorKind::kInvalidArgument, msg.str());
        }
        for (size_t j = 0; j < 3; j++) {
            double expected = i == j ? 1.0 : 0.0;
            double d = dot(frame.v[i], frame.v[j]);
            if (std::abs(d - expected) > kFrameTol) {
                std::ostringstream msg;
                msg << "frame directions v are not orthonormal: v_" << i + 1 << ".v_" << j + 1 << " = " << d;
                throw QcorrError(ErrorKind::kInvalidArgument, msg.str());
            }
        }
    }
}

double f3_value(const DensityMatrix &rho, const MeasurementFrame &frame) {
    check_frame(frame);
    Mat3 t = bloch_decompose(rho).t;
    double total = 0;
    for (size_t i = 0; i < 3; i++) {
        total += dot(frame.u[i], mat_vec(t, frame.v[i]));
    }
    return std::abs(total) / std::sqrt(3.0);
}

double f3_max(const Mat3 &correlations) {
    using Angles = std::array<double, 3>;
    const double two_pi = 2 * std::numbers::pi;
    std::vector<std::pair<double, Angles>> scored;
    scored.reserve(kEulerGrid * kEulerGrid * kEulerGrid);
    for (int a = 0; a < kEulerGrid; a++) {
        for (int b = 0; b < kEulerGrid; b++) {
            for (int g = 0; g < kEulerGrid; g++) {
                Angles angles{
                    two_pi * a / kEulerGrid,
                    std::numbers::pi * b / (kEulerGrid - 1),
                    two_pi * g / kEulerGrid,
                };
                scored.emplace_back(frame_objective(correlations, angles), angles);
            }
        }
    }
    double best = 0;
    for (const auto &entry : scored) {
        best = std::max(best, entry.first);
    }
    auto objective = [&](const Angles &angles) { return frame_objective(correlations, angles); };
    for (const Angles &start : top_candidates(std::move(scored), kRefineStarts)) {
        best = std::max(best, compass_maximize(objective, start, two_pi / kEulerGrid));
    }
    return best;
}

double f3_max(const DensityMatrix &rho) {
    return f3_max(bloch_decompose(rho).t);
}

UnsteerabilityBound unsteerable_sufficient(const ChiForm &chi) {
    const Vec3 &a = chi.a;
    const Vec3 &t = chi.t_diag;
    auto objective = [&](const Vec3 &x) {
        double ax = dot(a, x);
        return ax * ax + 2 * norm({t[0] * x[0], t[1] * x[1], t[2] * x[2]});
    };

    std::vector<std::pair<double, Vec3>> scored;
    scored.reserve(icosphere().size());
    double best = 0;
    for (const Vec3 &x : icosphere()) {
        double v = objective(x);
        best = std::max(best, v);
        scored.emplace_back(v, x);
    }
    for (const Vec3 &start : top_candidates(std::move(scored), kRefineStarts)) {
        best = std::max(best, sphere_maximize(objective, start, 0.05));
    }

    double lambda_max = std::max({t[0] * t[0], t[1] * t[1], t[2] * t[2]});
    UnsteerabilityBound out;
    out.exact_lhs_max = best;
    out.relaxed_bound = dot(a, a) + 2 * std::sqrt(lambda_max);
    out.verdict_exact = at_most_one(out.exact_lhs_max);
    out.verdict_relaxed = at_most_one(out.relaxed_bound);
    return out;
}

CriteriaReport evaluate_all(const DensityMatrix &rho) {
    BlochForm bloch = bloch_decompose(rho);
    Spectrum spectrum = hermitian_eigenvalues(rho.matrix());
    CriteriaReport report;
    report.m_value = chsh_M(bloch.t);
    report.a_value = absolute_chsh_A(spectrum);
    report.b_value = absolute_unsteer_B(spectrum, purity(rho));
    report.chsh_local = at_most_one(report.m_value);
    report.absolutely_chsh_local = at_most_one(report.a_value);
    report.absolutely_3settings_unsteerable = at_most_one(report.b_value);
    return report;
}

}  // namespace qcorr
