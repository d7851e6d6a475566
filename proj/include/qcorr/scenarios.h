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

#ifndef QCORR_SCENARIOS_H
#define QCORR_SCENARIOS_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/channels.h"
#include "qcorr/criteria.h"
#include "qcorr/states.h"

namespace qcorr {

struct Interval {
    double lo = 0;
    double hi = 0;
    bool operator==(const Interval &) const = default;
};

/// Sorted, disjoint union of closed subintervals of [0, 1].
class IntervalSet {
   public:
    IntervalSet() = default;
    /// Sorts and merges intervals whose gap is at most `merge_gap`.
    static IntervalSet canonical(std::vector<Interval> intervals, double merge_gap = 0);

    const std::vector<Interval> &intervals() const noexcept {
        return intervals_;
    }
    bool empty() const noexcept {
        return intervals_.empty();
    }
    size_t size() const noexcept {
        return intervals_.size();
    }
    const Interval &operator[](size_t k) const {
        return intervals_[k];
    }
    bool contains(double p, double slack = 0) const;
    /// True if every interval of `other` lies inside one of ours, up to `slack`.
    bool covers(const IntervalSet &other, double slack = 0) const;
    std::string to_string() const;

   private:
    std::vector<Interval> intervals_;
};

/// Largest endpoint difference between two interval sets. Infinite when
/// their interval counts differ (including exactly one of them being empty).
double interval_deviation(const IntervalSet &a, const IntervalSet &b);

enum class Criterion { kM, kA, kB };
Criterion parse_criterion(std::string_view name);
const char *criterion_name(Criterion c);
double criterion_value(const DensityMatrix &rho, Criterion c);

struct ScanOptions {
    size_t grid_n = 2001;
    double tol = 1e-9;
};

/// The closed set of channel strengths p in [0, 1] at which criterion(p) <= 1.
/// Sign changes of criterion - 1 on a uniform grid are bisected down to `tol`.
IntervalSet predicate_scan(
    const DensityMatrix &initial,
    const ChannelBuilder &builder,
    InteractionMode mode,
    Criterion criterion,
    const ScanOptions &options = {});
IntervalSet predicate_scan(
    const DensityMatrix &initial,
    ChannelKind kind,
    InteractionMode mode,
    Criterion criterion,
    const ScanOptions &options = {});

/// Flag threshold for comparing computed endpoints with printed ones.
constexpr double kDiscrepancyThreshold = 0.01;

struct TableRow {
    int table = 1;  // 1: single interaction, 2: double interaction
    std::string channel;
    double lambda = 0;
    double theta = 0;
    InteractionMode mode = InteractionMode::kSingleBob;
    std::array<IntervalSet, 3> computed;  // R1 (M), R2 (A), R3 (B)
    std::optional<std::array<IntervalSet, 3>> reference;
    std::array<double, 3> deviation{};
    std::array<bool, 3> discrepant{};
};

struct Discrepancy {
    int table = 1;
    std::string channel;
    double lambda = 0;
    Criterion criterion = Criterion::kM;
    IntervalSet computed;
    IntervalSet reference;
    double deviation = 0;
};

struct TableReproduction {
    /// Phase damping rows use the coherence x (1-p) convention.
    std::vector<TableRow> rows;
    /// The same phase damping rows under the literal Kraus pair, for comparison.
    std::vector<TableRow> stated_phase_damping_rows;
    /// Flagged entries of `rows`.
    std::vector<Discrepancy> discrepancies;
};

/// Published ranges for (table, channel, lambda); nullopt if there is none.
std::optional<std::array<IntervalSet, 3>> published_ranges(int table, ChannelKind kind, double lambda);

TableReproduction reproduce_tables(const ScanOptions &options = {});

struct RegionPoint {
    double lambda = 0;
    double theta = 0;
    double m_value = 0;
    bool nonlocal = false;
};

/// Horodecki M over the gisin_state family; nonlocal means M > 1 strictly.
std::vector<RegionPoint> nonlocal_region(const std::vector<double> &lambda_grid, const std::vector<double> &theta_grid);

struct LhsScenarioResult {
    double p_star = 0;
    /// max-entry distance to rho_f at p_star
    double distance = 0;
    CriteriaReport report;
};

/// Finds the channel strength that brings mixture_state(q, s) closest to rho_f.
LhsScenarioResult lhs_scenario(double q, double s, ChannelKind kind, InteractionMode mode);

/// Largest eps in [0, 1] with eps^2 |a|^2 + 2 eps max_i |t_ii| <= 1, i.e. the
/// depolarizing strength below which Alice-side noise breaks steerability of
/// the given state by the sufficient criterion.
double breaking_epsilon(const ChiForm &chi);

/// p = 3(1 - eps)/4.
double epsilon_to_p(double epsilon);
/// eps = 1 - 4p/3; p must lie in [0, 3/4].
double p_to_epsilon(double p);

}  // namespace qcorr

#endif
