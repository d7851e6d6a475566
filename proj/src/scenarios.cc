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

#include "qcorr/scenarios.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

#include "qcorr/error.h"

namespace qcorr {

namespace {

constexpr double kInitialTheta = 0.6;
constexpr std::array<double, 2> kInitialLambdas = {0.95, 0.8};
constexpr std::array<ChannelKind, 4> kTableChannels = {
    ChannelKind::kPhaseFlip,
    ChannelKind::kBitFlip,
    ChannelKind::kDepolarizing,
    ChannelKind::kDephasingEffective,
};

IntervalSet closed(double lo, double hi) {
    return IntervalSet::canonical({{lo, hi}});
}

const char *table_label(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::kPhaseFlip:
            return "phase-flip";
        case ChannelKind::kBitFlip:
            return "bit-flip";
        case ChannelKind::kDepolarizing:
            return "depolarizing";
        case ChannelKind::kDephasingEffective:
            return "phase-damping";
        case ChannelKind::kPhaseDamping:
            return "phase-damping-stated";
        default:
            return channel_kind_name(kind);
    }
}

struct Grid {
    std::vector<double> points;
    std::vector<bool> inside;
};

/// One pass of grid + bisection. Returns the raw intervals.
std::vector<Interval> scan_pass(const std::function<bool(double)> &holds, size_t n, double tol) {
    Grid grid;
    grid.points.resize(n);
    grid.inside.resize(n);
    for (size_t k = 0; k < n; k++) {
        grid.points[k] = k == n - 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(n - 1);
        grid.inside[k] = holds(grid.points[k]);
    }

    // Returns the point on the `inside` side of the bracket once it is narrower than tol.
    auto refine = [&](double out, double in) {
        while (std::abs(in - out) > tol) {
            double mid = 0.5 * (in + out);
            if (holds(mid)) {
                in = mid;
            } else {
                out = mid;
            }
        }
        return in;
    };

    std::vector<Interval> intervals;
    double open_lo = 0;
    for (size_t k = 0; k + 1 < n; k++) {
        bool a = grid.inside[k];
        bool b = grid.inside[k + 1];
        if (!a && b) {
            open_lo = refine(grid.points[k], grid.points[k + 1]);
        } else if (a && !b) {
            intervals.push_back({open_lo, refine(grid.points[k + 1], grid.points[k])});
        }
    }
    if (grid.inside[n - 1]) {
        intervals.push_back({open_lo, 1.0});
    }
    return intervals;
}

bool needs_rescan(const std::vector<Interval> &intervals, double step) {
    for (size_t k = 0; k < intervals.size(); k++) {
        if (intervals[k].hi - intervals[k].lo < 2 * step) {
            return true;
        }
        if (k > 0 && intervals[k].lo - intervals[k - 1].hi < 2 * step) {
            return true;
        }
    }
    return false;
}

template <typename F>
double golden_section_minimize(F &&f, double lo, double hi, double tol) {
    const double inv_phi = 1 / std::numbers::phi;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

IntervalSet IntervalSet::canonical(std::vector<Interval> intervals, double merge_gap) {
    for (const auto &iv : intervals) {
        if (!(iv.lo <= iv.hi) || iv.lo < 0 || iv.hi > 1) {
            std::ostringstream msg;
            msg << "interval [" << iv.lo << ", " << iv.hi << "] is not a subinterval of [0, 1]";
            throw QcorrError(ErrorKind::kInvalidArgument, msg.str());
        }
    }
    std::sort(intervals.begin(), intervals.end(), [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
    IntervalSet out;
    for (const auto &iv : intervals) {
        if (!out.intervals_.empty() && iv.lo - out.intervals_.back().hi <= merge_gap) {
            out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
        } else {
            out.intervals_.push_back(iv);
        }
    }
    return out;
}

bool IntervalSet::contains(double p, double slack) const {
    for (const auto &iv : intervals_) {
        if (p >= iv.lo - slack && p <= iv.hi + slack) {
            return true;
        }
    }
    return false;
}

bool IntervalSet::covers(const IntervalSet &other, double slack) const {
    for (const auto &inner : other.intervals_) {
        bool found = false;
        for (const auto &outer : intervals_) {
            if (inner.lo >= outer.lo - slack && inner.hi <= outer.hi + slack) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

std::string IntervalSet::to_string() const {
    if (intervals_.empty()) {
        return "--";
    }
    std::ostringstream out;
    out.precision(6);
    out << std::fixed;
    for (size_t k = 0; k < intervals_.size(); k++) {
        if (k > 0) {
            out << " U ";
        }
        out << "[" << intervals_[k].lo << ", " << intervals_[k].hi << "]";
    }
    return out.str();
}

double interval_deviation(const IntervalSet &a, const IntervalSet &b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0;
    for (size_t k = 0; k < a.size(); k++) {
        worst = std::max({worst, std::abs(a[k].lo - b[k].lo), std::abs(a[k].hi - b[k].hi)});
    }
    return worst;
}

Criterion parse_criterion(std::string_view name) {
    if (name == "M" || name == "m") {
        return Criterion::kM;
    }
    if (name == "A" || name == "a") {
        return Criterion::kA;
    }
    if (name == "B" || name == "b") {
        return Criterion::kB;
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown criterion '" + std::string(name) + "'");
}

const char *criterion_name(Criterion c) {
    switch (c) {
        case Criterion::kM:
            return "M";
        case Criterion::kA:
            return "A";
        case Criterion::kB:
            return "B";
    }
    return "?";
}

double criterion_value(const DensityMatrix &rho, Criterion c) {
    switch (c) {
        case Criterion::kM:
            return chsh_M(rho);
        case Criterion::kA:
            return absolute_chsh_A(rho);
        case Criterion::kB:
            return absolute_unsteer_B(rho);
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown criterion");
}

IntervalSet predicate_scan(
    const DensityMatrix &initial,
    const ChannelBuilder &builder,
    InteractionMode mode,
    Criterion criterion,
    const ScanOptions &options) {
    if (options.grid_n < 3) {
        throw QcorrError(ErrorKind::kInvalidArgument, "grid must have at least 3 points");
    }
    if (!(options.tol > 0)) {
        throw QcorrError(ErrorKind::kInvalidArgument, "tol must be positive");
    }
    auto holds = [&](double p) { return at_most_one(criterion_value(interact(initial, builder, p, mode), criterion)); };

    size_t n = options.grid_n;
    std::vector<Interval> raw = scan_pass(holds, n, options.tol);
    if (needs_rescan(raw, 1.0 / static_cast<double>(n - 1))) {
        n = 4 * (n - 1) + 1;
        raw = scan_pass(holds, n, options.tol);
    }
    return IntervalSet::canonical(std::move(raw), 2 * options.tol);
}

IntervalSet predicate_scan(
    const DensityMatrix &initial,
    ChannelKind kind,
    InteractionMode mode,
    Criterion criterion,
    const ScanOptions &options) {
    return predicate_scan(initial, channel_builder(kind), mode, criterion, options);
}

std::optional<std::array<IntervalSet, 3>> published_ranges(int table, ChannelKind kind, double lambda) {
    const IntervalSet none;
    bool high = std::abs(lambda - 0.95) < 1e-12;
    bool low = std::abs(lambda - 0.8) < 1e-12;
    if (!high && !low) {
        return std::nullopt;
    }
    using Ranges = std::array<IntervalSet, 3>;
    if (table == 1) {
        switch (kind) {
            case ChannelKind::kPhaseFlip:
                return high ? Ranges{closed(0.1492, 0.8508), closed(0.2252, 0.7747), none}
                            : Ranges{closed(0.0258, 0.9742), closed(0.0675, 0.9325), closed(0.1743, 0.8257)};
            case ChannelKind::kBitFlip:
                return high ? Ranges{closed(0.2445, 0.7342), closed(0.3532, 0.6443), closed(0.3807, 0.6193)}
                            : Ranges{closed(0.0531, 0.9468), closed(0.1250, 0.8750), closed(0.2, 0.8)};
            case ChannelKind::kDepolarizing:
                return high ? Ranges{closed(0.0685, 1), closed(0.1928, 1), closed(0.2893, 1)}
                            : Ranges{closed(0.0692, 1), closed(0.1928, 1), closed(0.2893, 1)};
            case ChannelKind::kPhaseDamping:
            case ChannelKind::kDephasingEffective:
                return high ? Ranges{closed(0.3723, 1), closed(0.7846, 1), none}
                            : Ranges{closed(0.0516, 1), closed(0.1350, 1), closed(0.3485, 1)};
            default:
                return std::nullopt;
        }
    }
    if (table == 2) {
        switch (kind) {
            case ChannelKind::kPhaseFlip:
                return high ? Ranges{closed(0.1492, 0.8508), closed(0.2252, 0.7747), none}
                            : Ranges{closed(0.0131, 0.9869), closed(0.3050, 0.9650), closed(0.0964, 0.9036)};
            case ChannelKind::kBitFlip:
                return high ? Ranges{closed(0.1378, 0.8622), closed(0.1856, 0.8144), closed(0.2256, 0.7744)}
                            : Ranges{closed(0.0273, 0.9727), closed(0.0654, 0.9345), closed(0.1093, 0.8907)};
            case ChannelKind::kDepolarizing:
                return high ? Ranges{closed(0.0354, 1), closed(0.0727, 1), closed(0.1560, 1)}
                            : Ranges{closed(0.0196, 1), closed(0.0481, 1), closed(0.0922, 1)};
            case ChannelKind::kPhaseDamping:
            case ChannelKind::kDephasingEffective:
                return high ? Ranges{closed(0.2077, 1), closed(0.5359, 1), none}
                            : Ranges{closed(0.0261, 1), closed(0.0699, 1), closed(0.1928, 1)};
            default:
                return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

TableRow compute_row(int table, ChannelKind kind, double lambda, const ScanOptions &options) {
    TableRow row;
    row.table = table;
    row.channel = table_label(kind);
    row.lambda = lambda;
    row.theta = kInitialTheta;
    row.mode = table == 1 ? InteractionMode::kSingleBob : InteractionMode::kDouble;
    DensityMatrix initial = gisin_state(lambda, kInitialTheta);
    constexpr std::array<Criterion, 3> criteria = {Criterion::kM, Criterion::kA, Criterion::kB};
    for (size_t c = 0; c < 3; c++) {
        row.computed[c] = predicate_scan(initial, kind, row.mode, criteria[c], options);
    }
    row.reference = published_ranges(table, kind, lambda);
    if (row.reference) {
        for (size_t c = 0; c < 3; c++) {
            row.deviation[c] = interval_deviation(row.computed[c], (*row.reference)[c]);
            row.discrepant[c] = row.deviation[c] > kDiscrepancyThreshold;
        }
    }
    return row;
}

}  // namespace

TableReproduction reproduce_tables(const ScanOptions &options) {
    struct Job {
        int table;
        ChannelKind kind;
        double lambda;
    };
    std::vector<Job> jobs;
    std::vector<Job> stated_jobs;
    for (int table : {1, 2}) {
        for (ChannelKind kind : kTableChannels) {
            for (double lambda : kInitialLambdas) {
                jobs.push_back({table, kind, lambda});
            }
        }
        for (double lambda : kInitialLambdas) {
            stated_jobs.push_back({table, ChannelKind::kPhaseDamping, lambda});
        }
    }

    // Rows are independent; results are collected in job order.
    auto launch = [&](const std::vector<Job> &list) {
        std::vector<std::future<TableRow>> futures;
        for (const Job &job : list) {
            futures.push_back(std::async(std::launch::async, compute_row, job.table, job.kind, job.lambda, options));
        }
        std::vector<TableRow> rows;
        for (auto &f : futures) {
            rows.push_back(f.get());
        }
        return rows;
    };

    TableReproduction out;
    out.rows = launch(jobs);
    out.stated_phase_damping_rows = launch(stated_jobs);
    for (const TableRow &row : out.rows) {
        if (!row.reference) {
            continue;
        }
        constexpr std::array<Criterion, 3> criteria = {Criterion::kM, Criterion::kA, Criterion::kB};
        for (size_t c = 0; c < 3; c++) {
            if (row.discrepant[c]) {
                out.discrepancies.push_back(
                    {row.table, row.channel, row.lambda, criteria[c], row.computed[c], (*row.reference)[c],
                     row.deviation[c]});
            }
        }
    }
    return out;
}

std::vector<RegionPoint> nonlocal_region(const std::vector<double> &lambda_grid, const std::vector<double> &theta_grid) {
    for (double lambda : lambda_grid) {
        if (!(lambda >= 0 && lambda <= 1)) {
            throw QcorrError(ErrorKind::kInvalidArgument, "lambda grid must lie in [0, 1]");
        }
    }
    for (double theta : theta_grid) {
        if (!(theta >= 0 && theta <= std::numbers::pi / 2 + 1e-12)) {
            throw QcorrError(ErrorKind::kInvalidArgument, "theta grid must lie in [0, pi/2]");
        }
    }
    std::vector<RegionPoint> out;
    out.reserve(lambda_grid.size() * theta_grid.size());
    for (double lambda : lambda_grid) {
        for (double theta : theta_grid) {
            double m = chsh_M(gisin_state(lambda, theta));
            out.push_back({lambda, theta, m, !at_most_one(m)});
        }
    }
    return out;
}

LhsScenarioResult lhs_scenario(double q, double s, ChannelKind kind, InteractionMode mode) {
    constexpr size_t kCoarse = 201;
    constexpr double kTol = 1e-6;
    DensityMatrix initial = mixture_state(q, s);
    DensityMatrix target = rho_f();
    ChannelBuilder builder = channel_builder(kind);
    auto distance = [&](double p) {
        return max_abs_diff(interact(initial, builder, p, mode).matrix(), target.matrix());
    };

    size_t best_k = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < kCoarse; k++) {
        double d = distance(static_cast<double>(k) / (kCoarse - 1));
        if (d < best_d) {
            best_d = d;
            best_k = k;
        }
    }
    double lo = static_cast<double>(best_k == 0 ? 0 : best_k - 1) / (kCoarse - 1);
    double hi = static_cast<double>(std::min(best_k + 1, kCoarse - 1)) / (kCoarse - 1);
    double p_star = golden_section_minimize(distance, lo, hi, kTol);

    LhsScenarioResult out;
    out.p_star = p_star;
    out.distance = distance(p_star);
    if (best_d < out.distance) {
        out.p_star = static_cast<double>(best_k) / (kCoarse - 1);
        out.distance = best_d;
    }
    out.report = evaluate_all(interact(initial, builder, out.p_star, mode));
    return out;
}

double breaking_epsilon(const ChiForm &chi) {
    double a_sq = dot(chi.a, chi.a);
    double m = std::max({std::abs(chi.t_diag[0]), std::abs(chi.t_diag[1]), std::abs(chi.t_diag[2])});
    if (a_sq > 0) {
        // Positive root of a_sq eps^2 + 2 m eps - 1, written to avoid cancellation.
        double root = 1 / (m + std::sqrt(m * m + a_sq));
        return std::min(1.0, root);
    }
    if (m > 0) {
        return std::min(1.0, 1 / (2 * m));
    }
    return 1.0;
}

double epsilon_to_p(double epsilon) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw QcorrError(ErrorKind::kInvalidArgument, "epsilon outside [0, 1]");
    }
    return 3 * (1 - epsilon) / 4;
}

double p_to_epsilon(double p) {
    if (!(p >= 0 && p <= 0.75)) {
        throw QcorrError(ErrorKind::kInvalidArgument, "depolarizing p outside [0, 3/4] has no shrink form");
    }
    return 1 - 4 * p / 3;
}

}  // namespace qcorr
