#include "toric/cli.hpp"

#include "toric/approx_designs.hpp"
#include "toric/difference_sets.hpp"
#include "toric/errors.hpp"
#include "toric/numtheory.hpp"
#include "toric/quantum_designs.hpp"
#include "toric/repro.hpp"
#include "toric/serialization.hpp"
#include "toric/threading.hpp"
#include "toric/toric_designs.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace toric::cli {

namespace {

using io::json;

constexpr std::size_t kInlineDesignCap = 10'000;  // larger artifacts go to --json-out only

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoull(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": expected comma-separated integers, got '" +
                             item + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + ": empty list");
    return out;
}

std::vector<std::uint32_t> parse_u32_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> out;
    for (auto v : parse_u64_list(text, what)) out.push_back(static_cast<std::uint32_t>(v));
    return out;
}

json big_to_json(const comb::BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Emit {
    std::ostream& out;
    bool deterministic = false;

    /// Print the stdout envelope; every run embeds its full config.
    void envelope(const std::string& command, json config, json result) const {
        json j{{"schema_version", io::kSchemaVersion},
               {"command", command},
               {"config", std::move(config)},
               {"result", std::move(result)}};
        if (!deterministic) j["timestamp"] = utc_timestamp();
        out << j.dump(2) << '\n';
    }
};

ds::BtSet bt_set_from_options(const std::string& file, int t, std::uint64_t m,
                              const std::string& elements) {
    if (!file.empty()) return io::bt_set_from_json(io::load_json_file(file));
    if (elements.empty()) {
        throw UsageError("provide either --file or --t/--m/--elements");
    }
    ds::BtSet z;
    z.t = t;
    z.m = m;
    z.elements = parse_u64_list(elements, "--elements");
    return z;
}

json witness_json(const ds::BtVerifyResult& res, std::uint64_t m) {
    json w{{"first", res.witness->first}, {"second", res.witness->second}};
    const auto& a = res.witness->first;
    const auto& b = res.witness->second;
    if (a.size() == 2 && b.size() == 2) {
        // Classic Sidon collision form z_a - z_c = z_d - z_b (mod m).
        std::ostringstream os;
        os << a[0] << " - " << b[0] << " = " << b[1] << " - " << a[1] << " (mod " << m << ")";
        w["difference_form"] = os.str();
    }
    return w;
}

json design_summary(const designs::WeightedPhaseSet& X) {
    return json{{"n", X.n},
                {"size", X.size()},
                {"construction", X.construction},
                {"phase_encoding", X.rational() ? "rational" : "real"}};
}

int emit_design(const Emit& emit, const std::string& command, const json& config,
                const designs::WeightedPhaseSet& X, const json& extra,
                const std::string& json_out) {
    json artifact = io::phase_set_to_json(X);
    artifact["provenance"]["config"] = config;
    if (!json_out.empty()) io::save_json_file(json_out, artifact);
    json result = design_summary(X);
    for (const auto& [k, v] : extra.items()) result[k] = v;
    if (X.size() <= kInlineDesignCap) result["design"] = artifact;
    emit.envelope(command, config, result);
    return kExitOk;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"projective toric designs, difference sets, and state-design toolkit"};
    app.name("tdf");

    int threads = 0;
    bool deterministic = false;
    app.add_option("--threads", threads,
                   "worker thread budget (default: TDF_THREADS or hardware)");
    app.add_flag("--deterministic", deterministic, "suppress timestamps in output");

    // field -------------------------------------------------------------
    auto* field = app.add_subcommand("field", "finite field GF(p^m) utilities");
    auto* field_build = field->add_subcommand("build", "construct and print a field spec");
    std::uint64_t f_p = 2;
    int f_m = 1;
    std::string f_modulus, f_generator, f_out;
    field_build->add_option("--p", f_p, "characteristic (prime)")->required();
    field_build->add_option("--m", f_m, "extension degree")->required();
    field_build->add_option("--modulus", f_modulus, "modulus coefficients, constant term first");
    field_build->add_option("--generator", f_generator, "generator coefficients");
    field_build->add_option("--json-out", f_out, "write the field spec to a file");
    auto* field_irred = field->add_subcommand("irreducible", "test a polynomial over Z_p");
    std::uint64_t fi_p = 2;
    std::string fi_coeffs;
    field_irred->add_option("--p", fi_p, "characteristic (prime)")->required();
    field_irred->add_option("--coeffs", fi_coeffs, "coefficients, constant term first")
        ->required();

    // singer ------------------------------------------------------------
    auto* singer = app.add_subcommand("singer", "Singer B_t set construction");
    std::uint64_t s_q = 2;
    int s_t = 2;
    std::string s_modulus, s_generator, s_out;
    singer->add_option("--q", s_q, "prime power")->required();
    singer->add_option("--t", s_t, "degree t");
    singer->add_option("--modulus", s_modulus, "field modulus override, constant term first");
    singer->add_option("--generator", s_generator, "field generator override");
    singer->add_option("--json-out", s_out, "write the B_t set to a file");

    // sidon -------------------------------------------------------------
    auto* sidon = app.add_subcommand("sidon", "modular Sidon set search");
    auto* sidon_search = sidon->add_subcommand("search", "exhaustive canonical search");
    int ss_n = 2;
    std::uint64_t ss_m = 3;
    std::string ss_mode = "all", ss_out;
    bool ss_progress = false;
    sidon_search->add_option("--n", ss_n, "set size")->required();
    sidon_search->add_option("--m", ss_m, "modulus")->required();
    sidon_search->add_option("--mode", ss_mode, "first | all | exists")
        ->check(CLI::IsMember({"first", "all", "exists"}));
    sidon_search->add_flag("--progress", ss_progress, "report branch progress on stderr");
    sidon_search->add_option("--json-out", ss_out, "write found sets to a file");

    // bt ----------------------------------------------------------------
    auto* bt = app.add_subcommand("bt", "B_t set verification and bounds");
    auto* bt_verify = bt->add_subcommand("verify", "verify the distinct-sum criterion");
    std::string bv_file, bv_elements;
    int bv_t = 2;
    std::uint64_t bv_m = 1;
    bt_verify->add_option("--file", bv_file, "B_t set JSON file");
    bt_verify->add_option("--t", bv_t, "degree t");
    bt_verify->add_option("--m", bv_m, "modulus");
    bt_verify->add_option("--elements", bv_elements, "comma-separated residues");
    auto* bt_bound = bt->add_subcommand("bound", "modulus lower bound check");
    std::string bb_file, bb_elements;
    int bb_t = 2;
    std::uint64_t bb_m = 1;
    bt_bound->add_option("--file", bb_file, "B_t set JSON file");
    bt_bound->add_option("--t", bb_t, "degree t");
    bt_bound->add_option("--m", bb_m, "modulus");
    bt_bound->add_option("--elements", bb_elements, "comma-separated residues");

    // bound ---------------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "combinatorial bounds");
    auto* bound_crystal = bound->add_subcommand("crystal", "crystal ball number G_{n-1}(t)");
    int bc_n = 2, bc_t = 1;
    bound_crystal->add_option("--n", bc_n, "dimension")->required();
    bound_crystal->add_option("--t", bc_t, "radius")->required();
    auto* bound_min = bound->add_subcommand("min-design", "minimal design size bound");
    int bm_n = 2, bm_t = 1;
    bound_min->add_option("--n", bm_n, "dimension")->required();
    bound_min->add_option("--t", bm_t, "degree")->required();

    // design --------------------------------------------------------------
    auto* design = app.add_subcommand("design", "projective toric designs");
    auto* design_grid = design->add_subcommand("grid", "lattice grid t-design");
    int dg_n = 2, dg_t = 1;
    std::string dg_out;
    design_grid->add_option("--n", dg_n, "dimension")->required();
    design_grid->add_option("--t", dg_t, "degree")->required();
    design_grid->add_option("--json-out", dg_out, "write the design to a file");
    auto* design_quad = design->add_subcommand("quadratic", "quadratic prime 2-design");
    int dq_n = 2;
    std::string dq_out;
    design_quad->add_option("--n", dq_n, "dimension")->required();
    design_quad->add_option("--json-out", dq_out, "write the design to a file");
    auto* design_group = design->add_subcommand("group", "cyclic design of a B_t set");
    std::string dgr_file, dgr_elements, dgr_out;
    int dgr_t = 2;
    std::uint64_t dgr_m = 1;
    design_group->add_option("--file", dgr_file, "B_t set JSON file");
    design_group->add_option("--t", dgr_t, "degree t");
    design_group->add_option("--m", dgr_m, "modulus");
    design_group->add_option("--elements", dgr_elements, "comma-separated residues");
    design_group->add_option("--json-out", dgr_out, "write the design to a file");
    auto* design_verify = design->add_subcommand("verify", "verify the t-design condition");
    std::string dv_file;
    int dv_t = 1;
    double dv_tol = designs::kDefaultTolerance;
    design_verify->add_option("--file", dv_file, "design JSON file")->required();
    design_verify->add_option("--t", dv_t, "degree")->required();
    design_verify->add_option("--tolerance", dv_tol, "max allowed monomial deviation");
    auto* design_minimal = design->add_subcommand("minimal", "check size against the bound");
    std::string dm_file;
    int dm_t = 1;
    design_minimal->add_option("--file", dm_file, "design JSON file")->required();
    design_minimal->add_option("--t", dm_t, "degree")->required();

    // quantum -------------------------------------------------------------
    auto* quantum = app.add_subcommand("quantum", "state designs on CP^(d-1)");
    auto* quantum_build = quantum->add_subcommand("build", "almost-minimal 2-design, size d^2+1");
    int qb_d = 3;
    std::string qb_out;
    quantum_build->add_option("--d", qb_d, "state dimension (d-1 must be a prime power)")
        ->required();
    quantum_build->add_option("--json-out", qb_out, "write the state design to a file");
    auto* quantum_simplex = quantum->add_subcommand("simplex", "vertices+centroid 2-design");
    int qs_d = 3;
    std::string qs_out;
    quantum_simplex->add_option("--d", qs_d, "simplex dimension")->required();
    quantum_simplex->add_option("--json-out", qs_out, "write the simplex design to a file");
    auto* quantum_verify = quantum->add_subcommand("verify", "moment-tensor verification");
    std::string qv_file;
    int qv_t = 2;
    double qv_tol = 1e-10;
    quantum_verify->add_option("--file", qv_file, "state design JSON file")->required();
    quantum_verify->add_option("--t", qv_t, "degree");
    quantum_verify->add_option("--tolerance", qv_tol, "max allowed entry deviation");

    // approx ----------------------------------------------------------------
    auto* approx_cmd = app.add_subcommand("approx", "approximate designs from random points");
    auto* approx_bound = approx_cmd->add_subcommand("bound", "sample-count bound M");
    int ab_n = 2, ab_t = 1;
    double ab_eps = 0.5, ab_delta = 0.1;
    approx_bound->add_option("--n", ab_n, "dimension")->required();
    approx_bound->add_option("--t", ab_t, "degree")->required();
    approx_bound->add_option("--eps", ab_eps, "deviation threshold")->required();
    approx_bound->add_option("--delta", ab_delta, "failure probability")->required();
    auto* approx_run = approx_cmd->add_subcommand("run", "Monte Carlo experiment");
    std::string ar_config, ar_out;
    approx_run->add_option("--config", ar_config, "experiment config JSON file")->required();
    approx_run->add_option("--out", ar_out, "per-trial CSV output file");

    auto* repro_cmd = app.add_subcommand("repro", "run the bundled reference checks");

    // Let global options (--threads, --deterministic) appear after the
    // subcommand as well as before it.
    auto enable_fallthrough = [](auto&& self, CLI::App* cmd) -> void {
        for (auto* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            self(self, sub);
        }
    };
    enable_fallthrough(enable_fallthrough, &app);

    // ------------------------------------------------------------------
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tdf");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (threads > 0) {
        parallel::set_worker_budget(threads);
    } else {
        parallel::reset_worker_budget();
    }
    Emit emit{out, deterministic};

    if (field_build->parsed()) {
        json config{{"p", f_p}, {"m", f_m}};
        std::optional<std::vector<std::uint32_t>> modulus;
        std::optional<ff::FieldElement> generator;
        if (!f_modulus.empty()) {
            modulus = parse_u32_list(f_modulus, "--modulus");
            config["modulus"] = *modulus;
        }
        if (!f_generator.empty()) {
            generator = ff::FieldElement{parse_u32_list(f_generator, "--generator")};
            config["generator"] = generator->coeffs;
        }
        auto spec = ff::make_field(f_p, f_m, modulus, generator);
        json artifact = io::field_spec_to_json(spec);
        artifact["schema_version"] = io::kSchemaVersion;
        if (!f_out.empty()) io::save_json_file(f_out, artifact);
        emit.envelope("field build", config, json{{"field", artifact}});
        return kExitOk;
    }
    if (field_irred->parsed()) {
        auto coeffs = parse_u32_list(fi_coeffs, "--coeffs");
        json config{{"p", fi_p}, {"coeffs", coeffs}};
        bool irred = ff::is_irreducible(fi_p, coeffs);
        emit.envelope("field irreducible", config, json{{"irreducible", irred}});
        return irred ? kExitOk : kExitVerifyFailed;
    }

    if (singer->parsed()) {
        json config{{"q", s_q}, {"t", s_t}};
        std::optional<ff::FieldSpec> field_override;
        if (!s_modulus.empty() || !s_generator.empty()) {
            auto pp = prime_power(s_q);
            if (!pp) throw UsageError("q must be a prime power");
            int mext = pp->second * (s_t + 1);
            std::optional<std::vector<std::uint32_t>> modulus;
            std::optional<ff::FieldElement> generator;
            if (!s_modulus.empty()) {
                modulus = parse_u32_list(s_modulus, "--modulus");
                config["modulus"] = *modulus;
            }
            if (!s_generator.empty()) {
                generator = ff::FieldElement{parse_u32_list(s_generator, "--generator")};
                // pad to the extension degree
                generator->coeffs.resize(static_cast<std::size_t>(mext), 0);
                config["generator"] = generator->coeffs;
            }
            field_override = ff::make_field(pp->first, mext, modulus, generator);
        }
        auto result = ds::singer_bt_set(s_q, s_t, field_override);
        json set_json = io::bt_set_to_json(result.set);
        if (!s_out.empty()) io::save_json_file(s_out, set_json);
        emit.envelope("singer", config,
                      json{{"t_set", result.exponents},
                           {"m", result.set.m},
                           {"elements", result.set.elements},
                           {"set", set_json}});
        return kExitOk;
    }

    if (sidon_search->parsed()) {
        json config{{"n", ss_n}, {"m", ss_m}, {"mode", ss_mode}};
        ds::SearchMode mode = ss_mode == "first"  ? ds::SearchMode::First
                              : ss_mode == "exists" ? ds::SearchMode::Exists
                                                    : ds::SearchMode::All;
        ds::SearchProgress progress;
        if (ss_progress) {
            progress = [&err](std::uint64_t done, std::uint64_t total) {
                err << "\rbranches " << done << "/" << total << std::flush;
                if (done == total) err << '\n';
            };
        }
        auto result = ds::search_sidon(ss_n, ss_m, mode, progress);
        json res{{"exists", result.found}, {"count", result.sets.size()}};
        if (mode != ds::SearchMode::Exists) res["sets"] = result.sets;
        if (!ss_out.empty()) {
            io::save_json_file(ss_out, json{{"schema_version", io::kSchemaVersion},
                                            {"config", config},
                                            {"sets", result.sets}});
        }
        emit.envelope("sidon search", config, res);
        return result.found ? kExitOk : kExitVerifyFailed;
    }

    if (bt_verify->parsed()) {
        auto z = bt_set_from_options(bv_file, bv_t, bv_m, bv_elements);
        json config{{"t", z.t}, {"m", z.m}, {"elements", z.elements}};
        if (!bv_file.empty()) config["file"] = bv_file;
        auto res = ds::verify_bt(z);
        json result{{"valid", res.valid},
                    {"distinct_sums", res.distinct_sums},
                    {"expected_sums", res.expected_sums}};
        if (!res.sums.empty() && res.sums.size() <= 1000) result["sums"] = res.sums;
        if (res.witness) result["witness"] = witness_json(res, z.m);
        emit.envelope("bt verify", config, result);
        return res.valid ? kExitOk : kExitVerifyFailed;
    }
    if (bt_bound->parsed()) {
        auto z = bt_set_from_options(bb_file, bb_t, bb_m, bb_elements);
        json config{{"t", z.t}, {"m", z.m}, {"elements", z.elements}};
        auto res = ds::bt_size_bound_check(z);
        emit.envelope("bt bound", config,
                      json{{"bound", big_to_json(res.bound)},
                           {"satisfied", res.satisfied},
                           {"saturated", res.saturated}});
        return res.satisfied ? kExitOk : kExitVerifyFailed;
    }

    if (bound_crystal->parsed()) {
        json config{{"n", bc_n}, {"t", bc_t}};
        emit.envelope("bound crystal", config,
                      json{{"value", big_to_json(comb::crystal_ball(bc_n, bc_t))}});
        return kExitOk;
    }
    if (bound_min->parsed()) {
        json config{{"n", bm_n}, {"t", bm_t}};
        emit.envelope("bound min-design", config,
                      json{{"value", big_to_json(comb::min_design_size(bm_n, bm_t))}});
        return kExitOk;
    }

    if (design_grid->parsed()) {
        json config{{"n", dg_n}, {"t", dg_t}};
        return emit_design(emit, "design grid", config, designs::grid_design(dg_n, dg_t),
                           json::object(), dg_out);
    }
    if (design_quad->parsed()) {
        json config{{"n", dq_n}};
        return emit_design(emit, "design quadratic", config,
                           designs::quadratic_prime_design(dq_n), json::object(), dq_out);
    }
    if (design_group->parsed()) {
        auto z = bt_set_from_options(dgr_file, dgr_t, dgr_m, dgr_elements);
        json config{{"t", z.t}, {"m", z.m}, {"elements", z.elements}};
        return emit_design(emit, "design group", config, designs::group_design_from_bt(z),
                           json::object(), dgr_out);
    }
    if (design_verify->parsed()) {
        json config{{"file", dv_file}, {"t", dv_t}, {"tolerance", dv_tol}};
        auto X = io::phase_set_from_json(io::load_json_file(dv_file));
        auto report = designs::verify_design(X, dv_t, dv_tol);
        emit.envelope("design verify", config, io::verification_report_to_json(report));
        return report.pass ? kExitOk : kExitVerifyFailed;
    }
    if (design_minimal->parsed()) {
        json config{{"file", dm_file}, {"t", dm_t}};
        auto X = io::phase_set_from_json(io::load_json_file(dm_file));
        auto report = designs::verify_design(X, dm_t);
        if (!report.pass) {
            emit.envelope("design minimal", config,
                          json{{"verified", false},
                               {"report", io::verification_report_to_json(report)}});
            return kExitVerifyFailed;
        }
        bool minimal = designs::is_minimal(X, dm_t);
        emit.envelope("design minimal", config,
                      json{{"verified", true},
                           {"minimal", minimal},
                           {"size", X.size()},
                           {"bound", big_to_json(comb::min_design_size(X.n, dm_t))}});
        return kExitOk;
    }

    if (quantum_build->parsed()) {
        json config{{"d", qb_d}};
        auto D = quantum::almost_minimal_2design(qb_d);
        json artifact = io::state_design_to_json(D);
        artifact["provenance"]["config"] = config;
        if (!qb_out.empty()) io::save_json_file(qb_out, artifact);
        double fp = quantum::frame_potential(D, 2);
        json result{{"d", D.d},
                    {"size", D.size()},
                    {"frame_potential_2", fp},
                    {"frame_target_2", 2.0 / (static_cast<double>(qb_d) * (qb_d + 1))},
                    {"design", artifact}};
        emit.envelope("quantum build", config, result);
        return kExitOk;
    }
    if (quantum_simplex->parsed()) {
        json config{{"d", qs_d}};
        auto S = quantum::simplex_two_design(qs_d);
        json artifact = io::simplex_to_json(S);
        if (!qs_out.empty()) io::save_json_file(qs_out, artifact);
        emit.envelope("quantum simplex", config, json{{"simplex", artifact}});
        return kExitOk;
    }
    if (quantum_verify->parsed()) {
        json config{{"file", qv_file}, {"t", qv_t}, {"tolerance", qv_tol}};
        auto D = io::state_design_from_json(io::load_json_file(qv_file));
        auto report = quantum::moment_tensor_check(D, qv_t, qv_tol);
        double fp = quantum::frame_potential(D, qv_t);
        double target = 1.0 / comb::binomial(D.d + qv_t - 1, qv_t).convert_to<double>();
        emit.envelope("quantum verify", config,
                      json{{"moment", io::moment_report_to_json(report)},
                           {"frame_potential", fp},
                           {"frame_target", target}});
        return report.pass ? kExitOk : kExitVerifyFailed;
    }

    if (approx_bound->parsed()) {
        json config{{"n", ab_n}, {"t", ab_t}, {"eps", ab_eps}, {"delta", ab_delta}};
        emit.envelope("approx bound", config,
                      json{{"M", approx::required_M(ab_n, ab_t, ab_eps, ab_delta)}});
        return kExitOk;
    }
    if (approx_run->parsed()) {
        auto cfg = io::experiment_from_json(io::load_json_file(ar_config));
        json config = io::experiment_to_json(cfg);
        auto result = approx::run_experiment(cfg);
        if (!ar_out.empty()) {
            std::ofstream csv(ar_out);
            if (!csv) throw UsageError("cannot write file: " + ar_out);
            csv << "# config: " << config.dump() << '\n';
            csv << "trial,max_deviation,pass\n";
            csv.precision(17);
            for (const auto& rec : result.per_trial) {
                csv << rec.trial << ',' << rec.max_deviation << ',' << (rec.pass ? 1 : 0)
                    << '\n';
            }
        }
        emit.envelope("approx run", config,
                      json{{"success_rate", result.success_rate},
                           {"mean_deviation", result.mean_deviation},
                           {"trials", result.per_trial.size()}});
        return kExitOk;
    }

    if (repro_cmd->parsed()) {
        auto items = repro::run_suite();
        return repro::print_table(items, out) ? kExitOk : kExitVerifyFailed;
    }

    err << app.help();
    return kExitUsage;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace toric::cli
