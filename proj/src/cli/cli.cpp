// Copyright 2026 The Teleportrix Authors
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

#include "teleportrix/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "format.hpp"
#include "json.hpp"
#include "teleportrix/complex_text.hpp"
#include "teleportrix/errors.hpp"
#include "teleportrix/swap.hpp"
#include "teleportrix/teleport.hpp"

namespace teleportrix::cli {

using json = nlohmann::ordered_json;

std::vector<double> expand_grid(std::string_view spec) {
    const std::string text(spec);
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos) {
        throw ParseError("grid '" + text + "' must look like start:stop:step");
    }
    auto real = [&](std::string_view token) {
        const Complex z = parse_complex(token);
        if (z.imag() != 0.0) {
            throw ParseError("grid bound '" + std::string(token) + "' must be real");
        }
        return z.real();
    };
    const std::string_view view(text);
    const double start = real(view.substr(0, first));
    const double stop = real(view.substr(first + 1, second - first - 1));
    const double step = real(view.substr(second + 1));
    if (!(step > 0.0)) {
        throw ParseError("grid step must be positive");
    }
    if (stop < start) {
        throw ParseError("grid stop must not be below start");
    }
    const double span = (stop - start) / step;
    if (span > 1e6) {
        throw ParseError("grid has too many points");
    }
    const auto count = static_cast<std::size_t>(std::floor(span + 0.5)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
}

std::optional<std::uint64_t> seed_from_environment() {
    const char* raw = std::getenv("TELEPORTRIX_SEED");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    const std::string_view text(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("TELEPORTRIX_SEED='" + std::string(text) + "' is not an unsigned integer");
    }
    return value;
}

namespace {

struct CommonOptions {
    std::string output = "json";
    int precision = 12;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

struct TeleportOptions {
    std::string n = "1";
    std::string ell = "1";
    std::string p = "1";
    std::string alpha = "1";
    std::string beta = "0";
    std::size_t random_inputs = 0;
    std::string mode = "exhaustive";
    std::size_t shots = 10000;
};

struct SwapOptions {
    std::string m = "1";
    std::string n = "1";
    std::string ell = "1";
    std::string p = "1";
    std::string ell_prime = "1";
    std::string p_prime = "1";
    std::string preset = "none";
};

struct SweepOptions {
    std::string n_grid = "0.1:1.0:0.1";
    std::string regime = "probabilistic2";
    std::string ell = "1";
    std::string p = "1";
};

constexpr std::uint64_t kDefaultSeed = 0;

std::uint64_t resolve_seed(const CommonOptions& common) {
    if (common.seed) {
        return *common.seed;
    }
    return seed_from_environment().value_or(kDefaultSeed);
}

json labels_json(const std::vector<BasisLabel>& labels) {
    json out = json::array();
    for (BasisLabel l : labels) {
        out.push_back(std::string(to_string(l)));
    }
    return out;
}

json repetitions_json(Complex n, const NumberFormat& f) {
    const RepetitionReport reps = repetition_report(n);
    return {{"formula", f.json(reps.formula)},
            {"inverse_two_outcome_success", f.json(reps.inverse_success)},
            {"note",
             "formula is (1+|n|^2)^2/|n|^2; inverse_two_outcome_success is 1/(2|n|^2/(1+|n|^2)^2); "
             "they differ by a factor of two (4 vs 2 at |n|=1)"}};
}

// Analytic values for the teleportation protocol at resource parameter n.
json teleport_analytic(Complex n, std::size_t k, const NumberFormat& f) {
    return {{"success_probability", f.json(success_probability_analytic(n, static_cast<int>(k)))},
            {"two_outcome_probability", f.json(success_probability_analytic(n, 2))},
            {"one_outcome_probability", f.json(success_probability_analytic(n, 1))},
            {"resource_entropy", f.json(basis_entropy(n))},
            {"repetitions", repetitions_json(n, f)},
            {"classical_bits_per_attempt", 2}};
}

struct Report {
    json doc;
    std::string csv;
};

// ---- teleport ----

Report teleport_command(const TeleportOptions& o, const NumberFormat& f, std::uint64_t seed) {
    const ProtocolParams params{parse_complex(o.n), parse_complex(o.ell), parse_complex(o.p)};
    std::vector<std::array<Complex, 2>> inputs;
    if (o.random_inputs > 0) {
        inputs = haar_inputs(o.random_inputs, seed);
    } else {
        inputs.push_back({parse_complex(o.alpha), parse_complex(o.beta)});
    }

    const RegimeReport regime = classify(params);
    std::array<double, 4> mean_prob{};
    std::array<double, 4> min_fid{1.0, 1.0, 1.0, 1.0};
    std::array<double, 4> mean_fid{};
    std::array<bool, 4> faithful{};
    std::array<Matrix2, 4> correction{};
    double average_fidelity = 0.0;
    for (const auto& in : inputs) {
        const RunResult r = run(in[0], in[1], params, Exhaustive{});
        for (std::size_t j = 0; j < 4; ++j) {
            const OutcomeRecord& rec = r.records[j];
            mean_prob[j] += rec.probability / static_cast<double>(inputs.size());
            faithful[j] = rec.faithful;
            correction[j] = rec.correction;
            if (rec.bob_state) {
                min_fid[j] = std::min(min_fid[j], rec.fidelity);
            }
            mean_fid[j] += rec.fidelity / static_cast<double>(inputs.size());
            average_fidelity += rec.probability * rec.fidelity / static_cast<double>(inputs.size());
        }
    }

    std::optional<SampleSummary> sampled;
    if (o.mode == "sampled") {
        sampled = sample_shots(inputs, params, o.shots, seed);
    }

    Report rep;
    json outcomes = json::array();
    rep.csv = "label,probability,faithful,fidelity,mean_fidelity,count,frequency\n";
    for (std::size_t j = 0; j < 4; ++j) {
        const std::string label(to_string(kBasisLabels[j]));
        outcomes.push_back({{"label", label},
                            {"probability", f.json(mean_prob[j])},
                            {"faithful", faithful[j]},
                            {"fidelity", f.json(min_fid[j])},
                            {"mean_fidelity", f.json(mean_fid[j])},
                            {"correction", f.json(correction[j])}});
        rep.csv += label + "," + f.csv(mean_prob[j]) + "," + (faithful[j] ? "true" : "false") + "," +
                   f.csv(min_fid[j]) + "," + f.csv(mean_fid[j]) + ",";
        if (sampled) {
            rep.csv += std::to_string(sampled->counts[j]) + "," + f.csv(sampled->frequencies[j]);
        } else {
            rep.csv += ",";
        }
        rep.csv += "\n";
    }

    json empirical = json::object();
    if (sampled) {
        const double expected = regime.success_probability;
        const double stderr_ = std::sqrt(expected * (1.0 - expected) / static_cast<double>(sampled->shots));
        json counts = json::object();
        json freqs = json::object();
        for (std::size_t j = 0; j < 4; ++j) {
            const std::string label(to_string(kBasisLabels[j]));
            counts[label] = sampled->counts[j];
            freqs[label] = f.json(sampled->frequencies[j]);
        }
        const double deviation = std::abs(sampled->faithful_frequency - expected);
        empirical = {{"shots", sampled->shots},
                     {"counts", counts},
                     {"frequencies", freqs},
                     {"faithful_frequency", f.json(sampled->faithful_frequency)},
                     {"expected_faithful_probability", f.json(expected)},
                     {"standard_error", f.json(stderr_)},
                     {"deviation", f.json(deviation)},
                     {"within_3_sigma", deviation <= 3.0 * stderr_},
                     {"mean_fidelity", f.json(sampled->mean_fidelity)}};
    }

    rep.doc = {{"command", "teleport"},
               {"params",
                {{"n", f.json(params.n)}, {"ell", f.json(params.ell)}, {"p", f.json(params.p)}}},
               {"seed", seed},
               {"mode", o.mode},
               {"inputs", inputs.size()},
               {"regime", regime.name()},
               {"faithful_count", regime.k()},
               {"faithful_outcomes", labels_json(regime.faithful_outcomes)},
               {"success_probability", f.json(regime.success_probability)},
               {"expected_repetitions", f.json(regime.expected_repetitions)},
               {"average_fidelity", f.json(average_fidelity)},
               {"outcomes", outcomes},
               {"analytic", teleport_analytic(params.n, regime.k(), f)},
               {"empirical", empirical}};
    return rep;
}

// ---- classify ----

Report classify_command(const TeleportOptions& o, const NumberFormat& f, std::uint64_t seed) {
    const ProtocolParams params{parse_complex(o.n), parse_complex(o.ell), parse_complex(o.p)};
    const RegimeReport regime = classify(params);
    const auto mats = transfer_matrices(params);

    Report rep;
    json outcomes = json::array();
    rep.csv = "label,faithful,probability,entropy\n";
    const std::array<Complex, 4> basis_param{params.ell, params.ell, params.p, params.p};
    for (std::size_t j = 0; j < 4; ++j) {
        const std::string label(to_string(kBasisLabels[j]));
        const bool ok = is_faithful(mats[j].m);
        const double e = basis_entropy(basis_param[j]);
        json prob = ok ? f.json(regime.probabilities[j]) : json(nullptr);
        outcomes.push_back({{"label", label},
                            {"faithful", ok},
                            {"probability", prob},
                            {"entropy", f.json(e)},
                            {"transfer_matrix", f.json(mats[j].m)}});
        rep.csv += label + "," + (ok ? "true" : "false") + "," +
                   (ok ? f.csv(regime.probabilities[j]) : std::string()) + "," + f.csv(e) + "\n";
    }
    rep.doc = {{"command", "classify"},
               {"params",
                {{"n", f.json(params.n)}, {"ell", f.json(params.ell)}, {"p", f.json(params.p)}}},
               {"seed", seed},
               {"regime", regime.name()},
               {"faithful_count", regime.k()},
               {"faithful_outcomes", labels_json(regime.faithful_outcomes)},
               {"success_probability", f.json(regime.success_probability)},
               {"expected_repetitions", f.json(regime.expected_repetitions)},
               {"outcomes", outcomes},
               {"analytic", teleport_analytic(params.n, regime.k(), f)},
               {"empirical", json::object()}};
    return rep;
}

// ---- swap ----

SwapParams swap_params(const SwapOptions& o) {
    SwapParams s{parse_complex(o.m),   parse_complex(o.n),         parse_complex(o.ell),
                 parse_complex(o.p),   parse_complex(o.ell_prime), parse_complex(o.p_prime)};
    if (o.preset == "probabilistic") {
        if (s.m == 0.0 || s.n == 0.0) {
            throw BadInput("the probabilistic preset needs nonzero m and n");
        }
        s.ell = 1.0 / std::conj(s.n);
        s.p_prime = s.m;
        s.p = 1.0 / std::conj(s.m);
        s.ell_prime = 1.0 / s.n;
    } else if (o.preset == "single") {
        if (s.n == 0.0) {
            throw BadInput("the single preset needs nonzero n");
        }
        s.ell = 1.0 / std::conj(s.n);
        s.p_prime = s.m;
    }
    return s;
}

Report swap_command(const SwapOptions& o, const NumberFormat& f, std::uint64_t seed) {
    const SwapParams params = swap_params(o);
    const SwapReport report = classify_swap(params);

    Report rep;
    json outcomes = json::array();
    rep.csv = "label,probability,reliable,target,entropy\n";
    for (const auto& out : report.outcomes) {
        const std::string label(to_string(out.label));
        const std::string target = out.target ? std::string(to_string(*out.target)) : std::string();
        outcomes.push_back({{"label", label},
                            {"probability", f.json(out.probability)},
                            {"reliable", out.reliable},
                            {"target", out.target ? json(target) : json(nullptr)},
                            {"entropy", f.json(out.b2_entropy)}});
        rep.csv += label + "," + f.csv(out.probability) + "," + (out.reliable ? "true" : "false") +
                   "," + target + "," + f.csv(out.b2_entropy) + "\n";
    }
    const double n2 = std::norm(params.n);
    rep.doc = {
        {"command", "swap"},
        {"params",
         {{"m", f.json(params.m)},
          {"n", f.json(params.n)},
          {"ell", f.json(params.ell)},
          {"p", f.json(params.p)},
          {"ell_prime", f.json(params.ell_prime)},
          {"p_prime", f.json(params.p_prime)},
          {"preset", o.preset}}},
        {"seed", seed},
        {"regime", report.name()},
        {"reliable_count", report.k()},
        {"reliable_outcomes", labels_json(report.reliable_outcomes)},
        {"reliable_probability", f.json(report.reliable_probability)},
        {"conditions", {{"set1", report.condition1}, {"set2", report.condition2}}},
        {"outcomes", outcomes},
        {"analytic",
         {{"two_outcome_probability", f.json(swap_probability_two_outcome(params.m, params.n))},
          {"three_outcome_probability", f.json(swap_probability_three_outcome(params.n))},
          {"three_outcome_simplified", f.json(3.0 * n2 / ((1.0 + n2) * (1.0 + n2)))}}},
        {"empirical", json::object()}};
    return rep;
}

// ---- sweep ----

Report sweep_command(const SweepOptions& o, const NumberFormat& f, std::uint64_t seed) {
    if (o.regime != "probabilistic2" && o.regime != "probabilistic1" && o.regime != "fixed") {
        throw BadInput("unknown sweep regime '" + o.regime + "'");
    }
    const std::vector<double> grid = expand_grid(o.n_grid);
    const Complex fixed_ell = parse_complex(o.ell);
    const Complex fixed_p = parse_complex(o.p);

    Report rep;
    rep.csv =
        "n,regime,faithful_count,success_probability,choice_probability,analytic_probability,"
        "repetitions_formula,repetitions_inverse_success\n";
    json rows = json::array();
    for (double value : grid) {
        const Complex n{value};
        ProtocolParams params{n, fixed_ell, fixed_p};
        std::vector<BasisLabel> designated;
        double analytic = 0.0;
        if (o.regime == "probabilistic2") {
            params.ell = n;
            params.p = std::conj(n);
            designated = {BasisLabel::PhiMinus, BasisLabel::PsiPlus};
            analytic = success_probability_analytic(n, 2);
        } else if (o.regime == "probabilistic1") {
            params.ell = n;
            params.p = 0.0;
            designated = {BasisLabel::PhiMinus};
            analytic = success_probability_analytic(n, 1);
        }
        const RegimeReport regime = classify(params);
        if (o.regime == "fixed") {
            designated = regime.faithful_outcomes;
            analytic = success_probability_analytic(n, static_cast<int>(regime.k()));
        }
        double choice = 0.0;
        for (BasisLabel l : designated) {
            choice += regime.probabilities[index_of(l)];
        }
        const RepetitionReport reps = repetition_report(n);
        rows.push_back({{"n", f.json(value)},
                        {"regime", regime.name()},
                        {"faithful_count", regime.k()},
                        {"success_probability", f.json(regime.success_probability)},
                        {"choice_probability", f.json(choice)},
                        {"analytic_probability", f.json(analytic)},
                        {"repetitions_formula", f.json(reps.formula)},
                        {"repetitions_inverse_success", f.json(reps.inverse_success)}});
        rep.csv += f.csv(value) + "," + regime.name() + "," + std::to_string(regime.k()) + "," +
                   f.csv(regime.success_probability) + "," + f.csv(choice) + "," + f.csv(analytic) +
                   "," + f.csv(reps.formula) + "," + f.csv(reps.inverse_success) + "\n";
    }
    rep.doc = {{"command", "sweep"},
               {"params", {{"n_grid", o.n_grid}, {"regime", o.regime}}},
               {"seed", seed},
               {"rows", rows}};
    return rep;
}

void add_common(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--output", common.output, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--precision", common.precision, "Significant digits in the report")
        ->check(CLI::Range(6, 17))
        ->capture_default_str();
    sub->add_option("--out", common.out_path, "Write the report to this file");
    sub->add_option("--seed", common.seed, "Seed (default: TELEPORTRIX_SEED or 0)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact simulator for probabilistic teleportation and entanglement swapping",
                 "teleportrix"};
    app.require_subcommand(1);

    CommonOptions common;
    TeleportOptions tel;
    SwapOptions swp;
    SweepOptions swe;

    auto* teleport = app.add_subcommand("teleport", "Run the teleportation protocol");
    teleport->add_option("--n", tel.n, "Resource parameter n")->capture_default_str();
    teleport->add_option("--l", tel.ell, "Basis parameter ell")->capture_default_str();
    teleport->add_option("--p", tel.p, "Basis parameter p")->capture_default_str();
    teleport->add_option("--alpha", tel.alpha, "Input amplitude of |0>")->capture_default_str();
    teleport->add_option("--beta", tel.beta, "Input amplitude of |1>")->capture_default_str();
    teleport->add_option("--random-input", tel.random_inputs, "Use this many Haar-random inputs")
        ->check(CLI::PositiveNumber);
    teleport->add_option("--mode", tel.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}))
        ->capture_default_str();
    teleport->add_option("--shots", tel.shots, "Shots in sampled mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(teleport, common);

    auto* classify_cmd = app.add_subcommand("classify", "Classify teleportation parameters");
    classify_cmd->add_option("--n", tel.n, "Resource parameter n")->capture_default_str();
    classify_cmd->add_option("--l", tel.ell, "Basis parameter ell")->capture_default_str();
    classify_cmd->add_option("--p", tel.p, "Basis parameter p")->capture_default_str();
    add_common(classify_cmd, common);

    auto* swap = app.add_subcommand("swap", "Run entanglement swapping");
    swap->add_option("--m", swp.m, "Pair ab parameter m")->capture_default_str();
    swap->add_option("--n", swp.n, "Pair 12 parameter n")->capture_default_str();
    swap->add_option("--l", swp.ell, "Measurement basis ell on (a,1)")->capture_default_str();
    swap->add_option("--p", swp.p, "Measurement basis p on (a,1)")->capture_default_str();
    swap->add_option("--l-prime", swp.ell_prime, "Analysis basis ell' on (b,2)")
        ->capture_default_str();
    swap->add_option("--p-prime", swp.p_prime, "Analysis basis p' on (b,2)")->capture_default_str();
    swap->add_option("--preset", swp.preset,
                     "none; probabilistic (ell=1/n*, p'=m, p=1/m*, ell'=1/n); single (ell=1/n*, p'=m)")
        ->check(CLI::IsMember({"none", "probabilistic", "single"}))
        ->capture_default_str();
    add_common(swap, common);

    auto* sweep = app.add_subcommand("sweep", "Tabulate success probability over a grid of n");
    sweep->add_option("--n-grid", swe.n_grid, "start:stop:step")->capture_default_str();
    sweep->add_option("--regime", swe.regime, "probabilistic2, probabilistic1 or fixed")
        ->check(CLI::IsMember({"probabilistic2", "probabilistic1", "fixed"}))
        ->capture_default_str();
    sweep->add_option("--l", swe.ell, "Basis parameter ell for the fixed regime")
        ->capture_default_str();
    sweep->add_option("--p", swe.p, "Basis parameter p for the fixed regime")->capture_default_str();
    add_common(sweep, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    Report rep;
    try {
        const NumberFormat fmt(common.precision);
        const std::uint64_t seed = resolve_seed(common);
        if (teleport->parsed()) {
            rep = teleport_command(tel, fmt, seed);
        } else if (classify_cmd->parsed()) {
            rep = classify_command(tel, fmt, seed);
        } else if (swap->parsed()) {
            rep = swap_command(swp, fmt, seed);
        } else {
            rep = sweep_command(swe, fmt, seed);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    const std::string text = common.output == "csv" ? rep.csv : rep.doc.dump(2) + "\n";
    if (common.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << common.out_path << "' for writing\n";
            return kInvalid;
        }
        file << text;
    }
    return kOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"teleportrix"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace teleportrix::cli
