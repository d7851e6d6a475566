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

#include "qcorr/cli.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcorr/channels.h"
#include "qcorr/criteria.h"
#include "qcorr/error.h"
#include "qcorr/scenarios.h"

namespace qcorr {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_field(const std::string &field, const std::string &problem) {
    throw QcorrError(ErrorKind::kInvalidArgument, "state." + field + ": " + problem);
}

double number_field(const nlohmann::json &spec, const std::string &field) {
    auto it = spec.find(field);
    if (it == spec.end()) {
        bad_field(field, "missing");
    }
    if (!it->is_number()) {
        bad_field(field, "must be a number");
    }
    return it->get<double>();
}

void allow_only(const nlohmann::json &spec, std::initializer_list<const char *> keys) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    allowed.insert("kind");
    for (const auto &item : spec.items()) {
        if (!allowed.contains(item.key())) {
            bad_field(item.key(), "unknown key");
        }
    }
}

std::vector<Complex> matrix_part(const nlohmann::json &spec, const std::string &field) {
    std::vector<Complex> out(16);
    auto it = spec.find(field);
    if (it == spec.end()) {
        return out;
    }
    if (!it->is_array() || it->size() != 4) {
        bad_field(field, "must be a 4x4 array");
    }
    for (size_t r = 0; r < 4; r++) {
        const auto &row = (*it)[r];
        if (!row.is_array() || row.size() != 4) {
            bad_field(field + "[" + std::to_string(r) + "]", "must be an array of 4 numbers");
        }
        for (size_t c = 0; c < 4; c++) {
            if (!row[c].is_number()) {
                bad_field(field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]", "must be a number");
            }
            out[4 * r + c] = row[c].get<double>();
        }
    }
    return out;
}

// Run-time configuration shared by all subcommands.
struct Options {
    std::string state_json;
    std::string state_file;
    std::string channel;
    std::optional<double> p;
    std::optional<double> epsilon;
    std::string mode = "single-bob";
    std::string criterion = "M";
    size_t grid = 0;
    double tol = 1e-9;
    std::string format = "json";
    std::string out_path;
    std::optional<std::string> convention;
};

DensityMatrix load_state(const Options &opt) {
    bool inline_given = !opt.state_json.empty();
    bool file_given = !opt.state_file.empty();
    if (inline_given == file_given) {
        throw QcorrError(ErrorKind::kInvalidArgument, "exactly one of --state or --state-file is required");
    }
    if (inline_given) {
        return parse_state_spec(opt.state_json);
    }
    std::ifstream in(opt.state_file);
    if (!in) {
        throw QcorrError(ErrorKind::kInvalidArgument, "--state-file: cannot read '" + opt.state_file + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state_spec(buffer.str());
}

ChannelKind resolve_channel(const Options &opt) {
    if (opt.channel.empty()) {
        throw QcorrError(ErrorKind::kInvalidArgument, "--channel is required");
    }
    ChannelKind kind = parse_channel_kind(opt.channel);
    if (opt.convention) {
        if (kind != ChannelKind::kPhaseDamping) {
            throw QcorrError(ErrorKind::kInvalidArgument, "--convention only applies to phase-damping");
        }
        if (*opt.convention == "effective") {
            kind = ChannelKind::kDephasingEffective;
        } else if (*opt.convention != "stated") {
            throw QcorrError(ErrorKind::kInvalidArgument, "--convention must be 'stated' or 'effective'");
        }
    }
    return kind;
}

double resolve_strength(const Options &opt, ChannelKind kind) {
    if (kind == ChannelKind::kDepolarizingShrink) {
        if (!opt.epsilon) {
            throw QcorrError(ErrorKind::kInvalidArgument, "--epsilon is required for depolarizing-shrink");
        }
        return *opt.epsilon;
    }
    if (!opt.p) {
        throw QcorrError(ErrorKind::kInvalidArgument, "--p is required");
    }
    return *opt.p;
}

std::string csv_number(double v) {
    if (!std::isfinite(v)) {
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    }
    std::ostringstream out;
    out.precision(9);
    out << v;
    return out.str();
}

Json json_number(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

Json matrix_json(const ComplexMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return Json{{"kind", "matrix"}, {"re", re}, {"im", im}};
}

Json report_json(const CriteriaReport &r) {
    return Json{
        {"m", r.m_value},
        {"a", r.a_value},
        {"b", r.b_value},
        {"chsh_local", r.chsh_local},
        {"absolutely_chsh_local", r.absolutely_chsh_local},
        {"absolutely_3settings_unsteerable", r.absolutely_3settings_unsteerable},
    };
}

Json intervals_json(const IntervalSet &set) {
    Json out = Json::array();
    for (const auto &iv : set.intervals()) {
        out.push_back(Json::array({iv.lo, iv.hi}));
    }
    return out;
}

/// A finished command: a JSON result and an equivalent CSV table.
struct Document {
    Json result;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

std::string render(const std::string &command, const Document &doc, const std::string &format) {
    std::ostringstream out;
    if (format == "json") {
        Json full{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"result", doc.result}};
        out << full.dump(2) << "\n";
    } else {
        out << "# " << kToolName << " " << kToolVersion << " " << command << "\n";
        auto emit = [&](const std::vector<std::string> &cells) {
            for (size_t k = 0; k < cells.size(); k++) {
                out << (k ? "," : "") << cells[k];
            }
            out << "\n";
        };
        emit(doc.csv_header);
        for (const auto &row : doc.csv_rows) {
            emit(row);
        }
    }
    return out.str();
}

std::string bool_text(bool b) {
    return b ? "true" : "false";
}

Document cmd_criteria(const Options &opt) {
    CriteriaReport r = evaluate_all(load_state(opt));
    Document doc;
    doc.result = report_json(r);
    doc.csv_header = {"m", "a", "b", "chsh_local", "absolutely_chsh_local", "absolutely_3settings_unsteerable"};
    doc.csv_rows.push_back(
        {csv_number(r.m_value), csv_number(r.a_value), csv_number(r.b_value), bool_text(r.chsh_local),
         bool_text(r.absolutely_chsh_local), bool_text(r.absolutely_3settings_unsteerable)});
    return doc;
}

Document cmd_apply(const Options &opt) {
    DensityMatrix rho = load_state(opt);
    ChannelKind kind = resolve_channel(opt);
    double strength = resolve_strength(opt, kind);
    DensityMatrix out = interact(rho, channel_builder(kind), strength, parse_interaction_mode(opt.mode));
    Document doc;
    doc.result = Json{
        {"channel", channel_kind_name(kind)},
        {"strength", strength},
        {"mode", interaction_mode_name(parse_interaction_mode(opt.mode))},
        {"state", matrix_json(out.matrix())},
    };
    doc.csv_header = {"row", "col", "re", "im"};
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            doc.csv_rows.push_back(
                {std::to_string(r), std::to_string(c), csv_number(out(r, c).real()), csv_number(out(r, c).imag())});
        }
    }
    return doc;
}

Document cmd_scan(const Options &opt) {
    DensityMatrix rho = load_state(opt);
    ChannelKind kind = resolve_channel(opt);
    InteractionMode mode = parse_interaction_mode(opt.mode);
    Criterion criterion = parse_criterion(opt.criterion);
    ScanOptions scan;
    if (opt.grid != 0) {
        scan.grid_n = opt.grid;
    }
    scan.tol = opt.tol;
    IntervalSet set = predicate_scan(rho, kind, mode, criterion, scan);
    Document doc;
    doc.result = Json{
        {"channel", channel_kind_name(kind)},
        {"mode", interaction_mode_name(mode)},
        {"criterion", criterion_name(criterion)},
        {"intervals", intervals_json(set)},
    };
    doc.csv_header = {"lo", "hi"};
    for (const auto &iv : set.intervals()) {
        doc.csv_rows.push_back({csv_number(iv.lo), csv_number(iv.hi)});
    }
    return doc;
}

void append_table_rows(Document &doc, Json &json_rows, const TableRow &row) {
    constexpr std::array<Criterion, 3> criteria = {Criterion::kM, Criterion::kA, Criterion::kB};
    const char *mode = row.mode == InteractionMode::kDouble ? "double" : "single";
    for (size_t c = 0; c < 3; c++) {
        const IntervalSet &computed = row.computed[c];
        IntervalSet reference = row.reference ? (*row.reference)[c] : IntervalSet();
        std::string paper_lo = reference.empty() ? "" : csv_number(reference[0].lo);
        std::string paper_hi = reference.empty() ? "" : csv_number(reference[0].hi);
        std::string flag = row.discrepant[c] ? "discrepant" : "ok";
        if (computed.empty()) {
            doc.csv_rows.push_back(
                {row.channel, csv_number(row.lambda), csv_number(row.theta), mode, criterion_name(criteria[c]), "", "",
                 paper_lo, paper_hi, flag});
        }
        for (const auto &iv : computed.intervals()) {
            doc.csv_rows.push_back(
                {row.channel, csv_number(row.lambda), csv_number(row.theta), mode, criterion_name(criteria[c]),
                 csv_number(iv.lo), csv_number(iv.hi), paper_lo, paper_hi, flag});
        }
        json_rows.push_back(Json{
            {"channel", row.channel},
            {"lambda", row.lambda},
            {"theta", row.theta},
            {"mode", mode},
            {"criterion", criterion_name(criteria[c])},
            {"intervals", intervals_json(computed)},
            {"paper", intervals_json(reference)},
            {"deviation", json_number(row.deviation[c])},
            {"flag", flag},
        });
    }
}

Document cmd_tables(const Options &opt) {
    ScanOptions scan;
    if (opt.grid != 0) {
        scan.grid_n = opt.grid;
    }
    scan.tol = opt.tol;
    TableReproduction tables = reproduce_tables(scan);
    Document doc;
    doc.csv_header = {"channel", "lambda", "theta", "mode", "criterion", "lo", "hi", "paper_lo", "paper_hi", "flag"};
    Json rows = Json::array();
    for (const auto &row : tables.rows) {
        append_table_rows(doc, rows, row);
    }
    Json stated = Json::array();
    for (const auto &row : tables.stated_phase_damping_rows) {
        append_table_rows(doc, stated, row);
    }
    Json discrepancies = Json::array();
    for (const auto &d : tables.discrepancies) {
        discrepancies.push_back(Json{
            {"table", d.table},
            {"channel", d.channel},
            {"lambda", d.lambda},
            {"criterion", criterion_name(d.criterion)},
            {"computed", intervals_json(d.computed)},
            {"paper", intervals_json(d.reference)},
            {"deviation", json_number(d.deviation)},
        });
    }
    doc.result = Json{{"rows", rows}, {"stated_phase_damping_rows", stated}, {"discrepancies", discrepancies}};
    return doc;
}

Document cmd_region(const Options &opt) {
    size_t n = opt.grid == 0 ? 101 : opt.grid;
    if (n < 2) {
        throw QcorrError(ErrorKind::kInvalidArgument, "--grid must be at least 2 for region");
    }
    std::vector<double> lambdas(n);
    std::vector<double> thetas(n);
    for (size_t k = 0; k < n; k++) {
        lambdas[k] = static_cast<double>(k) / static_cast<double>(n - 1);
        thetas[k] = std::numbers::pi / 2 * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    Document doc;
    doc.csv_header = {"lambda", "theta", "m_value", "nonlocal"};
    Json rows = Json::array();
    for (const RegionPoint &pt : nonlocal_region(lambdas, thetas)) {
        doc.csv_rows.push_back({csv_number(pt.lambda), csv_number(pt.theta), csv_number(pt.m_value), bool_text(pt.nonlocal)});
        rows.push_back(Json{{"lambda", pt.lambda}, {"theta", pt.theta}, {"m_value", pt.m_value}, {"nonlocal", pt.nonlocal}});
    }
    doc.result = Json{{"rows", rows}};
    return doc;
}

Document cmd_lhs(const Options &opt) {
    nlohmann::json spec;
    if (opt.state_json.empty()) {
        throw QcorrError(ErrorKind::kInvalidArgument, "--state with kind 'mixture' is required for lhs");
    }
    spec = nlohmann::json::parse(opt.state_json);
    if (!spec.is_object() || spec.value("kind", "") != "mixture") {
        throw QcorrError(ErrorKind::kInvalidArgument, "state.kind: lhs requires 'mixture'");
    }
    parse_state_spec(opt.state_json);  // full validation of the spec
    double q = number_field(spec, "q");
    double s = number_field(spec, "s");
    ChannelKind kind = resolve_channel(opt);
    InteractionMode mode = parse_interaction_mode(opt.mode);
    LhsScenarioResult r = lhs_scenario(q, s, kind, mode);
    Document doc;
    doc.result = Json{
        {"channel", channel_kind_name(kind)},
        {"mode", interaction_mode_name(mode)},
        {"p_star", r.p_star},
        {"distance", r.distance},
        {"report", report_json(r.report)},
    };
    doc.csv_header = {"p_star", "distance", "m", "a", "b", "chsh_local", "absolutely_chsh_local",
                      "absolutely_3settings_unsteerable"};
    doc.csv_rows.push_back(
        {csv_number(r.p_star), csv_number(r.distance), csv_number(r.report.m_value), csv_number(r.report.a_value),
         csv_number(r.report.b_value), bool_text(r.report.chsh_local), bool_text(r.report.absolutely_chsh_local),
         bool_text(r.report.absolutely_3settings_unsteerable)});
    return doc;
}

Document cmd_bound(const Options &opt) {
    DensityMatrix rho = load_state(opt);
    ChiForm chi = chi_form(rho);
    double eps_max = breaking_epsilon(chi);
    UnsteerabilityBound before = unsteerable_sufficient(chi);
    Document doc;
    doc.result = Json{
        {"a", Json::array({chi.a[0], chi.a[1], chi.a[2]})},
        {"t_diag", Json::array({chi.t_diag[0], chi.t_diag[1], chi.t_diag[2]})},
        {"epsilon_max", eps_max},
        {"depolarizing_p_min", epsilon_to_p(eps_max)},
        {"exact_lhs_max", before.exact_lhs_max},
        {"relaxed_bound", before.relaxed_bound},
        {"unsteerable_exact", before.verdict_exact},
        {"unsteerable_relaxed", before.verdict_relaxed},
    };
    doc.csv_header = {"epsilon_max", "depolarizing_p_min", "exact_lhs_max", "relaxed_bound", "unsteerable_exact",
                      "unsteerable_relaxed"};
    doc.csv_rows.push_back(
        {csv_number(eps_max), csv_number(epsilon_to_p(eps_max)), csv_number(before.exact_lhs_max),
         csv_number(before.relaxed_bound), bool_text(before.verdict_exact), bool_text(before.verdict_relaxed)});
    if (opt.epsilon) {
        DensityMatrix shrunk = apply(depolarizing_shrink(*opt.epsilon), rho, Side::kAlice);
        UnsteerabilityBound after = unsteerable_sufficient(chi_form(shrunk));
        doc.result["epsilon"] = *opt.epsilon;
        doc.result["after"] = Json{
            {"exact_lhs_max", after.exact_lhs_max},
            {"relaxed_bound", after.relaxed_bound},
            {"unsteerable_exact", after.verdict_exact},
            {"unsteerable_relaxed", after.verdict_relaxed},
        };
    }
    return doc;
}

}  // namespace

DensityMatrix parse_state_spec(const std::string &json_text) {
    nlohmann::json spec;
    try {
        spec = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw QcorrError(ErrorKind::kInvalidArgument, std::string("state: malformed JSON: ") + e.what());
    }
    if (!spec.is_object()) {
        throw QcorrError(ErrorKind::kInvalidArgument, "state: must be a JSON object");
    }
    auto kind_it = spec.find("kind");
    if (kind_it == spec.end() || !kind_it->is_string()) {
        bad_field("kind", "missing or not a string");
    }
    std::string kind = kind_it->get<std::string>();
    if (kind == "matrix") {
        allow_only(spec, {"re", "im"});
        if (!spec.contains("re")) {
            bad_field("re", "missing");
        }
        std::vector<Complex> re = matrix_part(spec, "re");
        std::vector<Complex> im = matrix_part(spec, "im");
        std::vector<Complex> entries(16);
        for (size_t k = 0; k < 16; k++) {
            entries[k] = Complex(re[k].real(), im[k].real());
        }
        return validate(ComplexMatrix(4, 4, std::move(entries)));
    }
    if (kind == "gisin") {
        allow_only(spec, {"lambda", "theta"});
        return gisin_state(number_field(spec, "lambda"), number_field(spec, "theta"));
    }
    if (kind == "mixture") {
        allow_only(spec, {"q", "s"});
        return mixture_state(number_field(spec, "q"), number_field(spec, "s"));
    }
    if (kind == "werner") {
        allow_only(spec, {"w"});
        return werner_state(number_field(spec, "w"));
    }
    if (kind == "isotropic") {
        allow_only(spec, {"alpha"});
        return isotropic_state(number_field(spec, "alpha"));
    }
    if (kind == "rho_f") {
        allow_only(spec, {});
        return rho_f();
    }
    bad_field("kind", "unknown kind '" + kind + "'");
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-qubit correlation analysis under local noise channels", kToolName};
    app.require_subcommand(1);
    Options opt;

    auto add_state = [&](CLI::App *sub) {
        sub->add_option("--state", opt.state_json, "inline JSON state specification");
        sub->add_option("--state-file", opt.state_file, "path to a JSON state specification");
    };
    auto add_channel = [&](CLI::App *sub) {
        sub->add_option("--channel", opt.channel, "phase-flip|bit-flip|depolarizing|phase-damping|dephasing-effective|depolarizing-shrink");
        sub->add_option("--mode", opt.mode, "single-bob|single-alice|double")->capture_default_str();
        sub->add_option("--convention", opt.convention, "phase damping coherence law: stated|effective");
    };
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--format", opt.format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--out", opt.out_path, "write the document to PATH instead of stdout");
    };

    auto *criteria = app.add_subcommand("criteria", "evaluate M, A, B and their verdicts on a state");
    add_state(criteria);
    add_output(criteria);

    auto *apply_cmd = app.add_subcommand("apply", "apply a channel and print the resulting density matrix");
    add_state(apply_cmd);
    add_channel(apply_cmd);
    apply_cmd->add_option("--p", opt.p, "channel strength");
    apply_cmd->add_option("--epsilon", opt.epsilon, "shrink factor for depolarizing-shrink");
    add_output(apply_cmd);

    auto *scan = app.add_subcommand("scan", "channel strengths at which a criterion holds");
    add_state(scan);
    add_channel(scan);
    scan->add_option("--criterion", opt.criterion, "M|A|B")->capture_default_str();
    scan->add_option("--grid", opt.grid, "uniform grid points (default 2001)");
    scan->add_option("--tol", opt.tol, "bisection width")->capture_default_str();
    add_output(scan);

    auto *tables = app.add_subcommand("tables", "reproduce the single/double interaction range tables");
    tables->add_option("--grid", opt.grid, "uniform grid points (default 2001)");
    tables->add_option("--tol", opt.tol, "bisection width")->capture_default_str();
    add_output(tables);

    auto *region = app.add_subcommand("region", "CHSH-nonlocal region of the (lambda, theta) family");
    region->add_option("--grid", opt.grid, "points per axis (default 101)");
    add_output(region);

    auto *lhs = app.add_subcommand("lhs", "strength bringing a mixture state closest to rho_f");
    lhs->add_option("--state", opt.state_json, "mixture state specification");
    add_channel(lhs);
    add_output(lhs);

    auto *bound = app.add_subcommand("bound", "depolarizing steerability-breaking bound for a chi-form state");
    add_state(bound);
    bound->add_option("--epsilon", opt.epsilon, "also test the state after this shrink on Alice");
    add_output(bound);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    CLI::App *selected = app.get_subcommands().front();
    const std::string command = selected->get_name();
    try {
        if (!opt.state_json.empty() && !opt.state_file.empty()) {
            throw QcorrError(ErrorKind::kInvalidArgument, "exactly one of --state or --state-file is required");
        }
        Document doc;
        if (command == "criteria") {
            doc = cmd_criteria(opt);
        } else if (command == "apply") {
            doc = cmd_apply(opt);
        } else if (command == "scan") {
            doc = cmd_scan(opt);
        } else if (command == "tables") {
            doc = cmd_tables(opt);
        } else if (command == "region") {
            doc = cmd_region(opt);
        } else if (command == "lhs") {
            doc = cmd_lhs(opt);
        } else {
            doc = cmd_bound(opt);
        }
        std::string text = render(command, doc, opt.format);
        if (opt.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(opt.out_path);
            if (!file) {
                throw QcorrError(ErrorKind::kInvalidArgument, "--out: cannot write '" + opt.out_path + "'");
            }
            file << text;
        }
        return kExitOk;
    } catch (const QcorrError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: state: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InvariantViolation &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

}  // namespace qcorr
