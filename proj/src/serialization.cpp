#include "toric/serialization.hpp"

#include "toric/errors.hpp"

#include <fstream>
#include <set>
#include <string>

namespace toric::io {

namespace {

void require_keys(const json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const char* what) {
    if (!j.is_object()) throw UsageError(std::string(what) + ": expected a JSON object");
    for (const auto& key : required) {
        if (!j.contains(key)) {
            throw UsageError(std::string(what) + ": missing required field '" + key + "'");
        }
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key)) {
            throw UsageError(std::string(what) + ": unknown field '" + key + "'");
        }
    }
}

std::vector<std::uint32_t> u32_list(const json& j, const char* what) {
    if (!j.is_array()) throw UsageError(std::string(what) + ": expected an integer array");
    std::vector<std::uint32_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) {
            throw UsageError(std::string(what) + ": entries must be nonnegative integers");
        }
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

json provenance_json(const std::string& construction) {
    return json{{"construction", construction}};
}

std::string construction_of(const json& j) {
    if (j.contains("provenance") && j["provenance"].is_object() &&
        j["provenance"].contains("construction") && j["provenance"]["construction"].is_string()) {
        return j["provenance"]["construction"].get<std::string>();
    }
    return "explicit";
}

}  // namespace

json rat_to_json(const Rat& r) {
    return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Rat rat_from_json(const json& j) {
    require_keys(j, {"num", "den"}, {}, "rational");
    if (!j["num"].is_number_integer() || !j["den"].is_number_integer()) {
        throw UsageError("rational: num and den must be integers");
    }
    auto den = j["den"].get<std::int64_t>();
    if (den <= 0) throw UsageError("rational: den must be positive");
    return Rat(j["num"].get<std::int64_t>(), den);
}

json field_spec_to_json(const ff::FieldSpec& spec) {
    return json{{"p", spec.p},
                {"m", spec.m},
                {"modulus", spec.modulus},
                {"generator", spec.generator.coeffs}};
}

ff::FieldSpec field_spec_from_json(const json& j) {
    require_keys(j, {"p", "m", "modulus", "generator"}, {"schema_version"}, "field spec");
    auto p = j["p"].get<std::uint64_t>();
    auto m = j["m"].get<int>();
    auto modulus = u32_list(j["modulus"], "field modulus");
    ff::FieldElement gen{u32_list(j["generator"], "field generator")};
    return ff::make_field(p, m, std::move(modulus), std::move(gen));
}

json bt_set_to_json(const ds::BtSet& z) {
    json prov = provenance_json(z.provenance.construction);
    if (z.provenance.q) prov["q"] = *z.provenance.q;
    if (z.provenance.field) prov["field"] = field_spec_to_json(*z.provenance.field);
    return json{{"schema_version", kSchemaVersion}, {"t", z.t},        {"m", z.m},
                {"elements", z.elements},           {"verified", z.verified},
                {"provenance", prov}};
}

ds::BtSet bt_set_from_json(const json& j) {
    require_keys(j, {"t", "m", "elements"}, {"schema_version", "verified", "provenance"},
                 "bt set");
    ds::BtSet z;
    z.t = j["t"].get<int>();
    z.m = j["m"].get<std::uint64_t>();
    for (const auto& e : j["elements"]) z.elements.push_back(e.get<std::uint64_t>());
    if (j.contains("provenance") && j["provenance"].is_object()) {
        const auto& p = j["provenance"];
        if (p.contains("construction")) {
            z.provenance.construction = p["construction"].get<std::string>();
        }
        if (p.contains("q")) z.provenance.q = p["q"].get<std::uint64_t>();
        if (p.contains("field")) z.provenance.field = field_spec_from_json(p["field"]);
    }
    // A claimed verification flag is not trusted; recheck on load.
    if (j.value("verified", false)) {
        auto check = ds::verify_bt(z);
        if (!check.valid) {
            throw UsageError("bt set file claims verified but verification fails");
        }
        z.verified = true;
    }
    return z;
}

json phase_set_to_json(const designs::WeightedPhaseSet& X) {
    json j{{"schema_version", kSchemaVersion},
           {"n", X.n},
           {"provenance", provenance_json(X.construction)}};
    if (X.rational()) {
        const auto& d = X.rat();
        j["phase_encoding"] = "rational";
        json points = json::array();
        for (const auto& pt : d.points) {
            json row = json::array();
            for (const auto& c : pt) row.push_back(rat_to_json(c));
            points.push_back(std::move(row));
        }
        json weights = json::array();
        for (const auto& w : d.weights) weights.push_back(rat_to_json(w));
        j["points"] = std::move(points);
        j["weights"] = std::move(weights);
    } else {
        const auto& d = X.real();
        j["phase_encoding"] = "real";
        j["points"] = d.points;
        j["weights"] = d.weights;
    }
    return j;
}

designs::WeightedPhaseSet phase_set_from_json(const json& j) {
    require_keys(j, {"n", "phase_encoding", "points", "weights"},
                 {"schema_version", "provenance"}, "phase set");
    designs::WeightedPhaseSet X;
    X.n = j["n"].get<int>();
    X.construction = construction_of(j);
    const auto encoding = j["phase_encoding"].get<std::string>();
    if (encoding == "rational") {
        designs::RationalData d;
        for (const auto& row : j["points"]) {
            std::vector<Rat> pt;
            for (const auto& c : row) pt.push_back(rat_from_json(c));
            d.points.push_back(std::move(pt));
        }
        for (const auto& w : j["weights"]) d.weights.push_back(rat_from_json(w));
        X.data = std::move(d);
    } else if (encoding == "real") {
        designs::RealData d;
        for (const auto& row : j["points"]) {
            d.points.push_back(row.get<std::vector<double>>());
        }
        d.weights = j["weights"].get<std::vector<double>>();
        X.data = std::move(d);
    } else {
        throw UsageError("phase_encoding must be 'rational' or 'real'");
    }
    designs::validate(X);
    return X;
}

json simplex_to_json(const quantum::SimplexDesign& S) {
    json points = json::array();
    for (const auto& pt : S.points) {
        json row = json::array();
        for (const auto& c : pt) row.push_back(rat_to_json(c));
        points.push_back(std::move(row));
    }
    json weights = json::array();
    for (const auto& w : S.weights) weights.push_back(rat_to_json(w));
    return json{{"schema_version", kSchemaVersion},
                {"d", S.d},
                {"degree", S.degree},
                {"points", std::move(points)},
                {"weights", std::move(weights)}};
}

quantum::SimplexDesign simplex_from_json(const json& j) {
    require_keys(j, {"d", "degree", "points", "weights"}, {"schema_version"}, "simplex design");
    quantum::SimplexDesign S;
    S.d = j["d"].get<int>();
    S.degree = j["degree"].get<int>();
    for (const auto& row : j["points"]) {
        std::vector<Rat> pt;
        for (const auto& c : row) pt.push_back(rat_from_json(c));
        S.points.push_back(std::move(pt));
    }
    for (const auto& w : j["weights"]) S.weights.push_back(rat_from_json(w));
    return S;
}

json state_design_to_json(const quantum::StateDesign& D) {
    json j{{"schema_version", kSchemaVersion},
           {"d", D.d},
           {"provenance", provenance_json(D.construction)}};
    if (D.exact) {
        j["state_encoding"] = "exact";
        json states = json::array();
        for (const auto& st : D.exact->states) {
            json row = json::array();
            for (const auto& amp : st) {
                row.push_back(json{{"mag2", rat_to_json(amp.mag2)},
                                   {"phase", rat_to_json(amp.phase)}});
            }
            states.push_back(std::move(row));
        }
        json weights = json::array();
        for (const auto& w : D.exact->weights) weights.push_back(rat_to_json(w));
        j["states"] = std::move(states);
        j["weights"] = std::move(weights);
    } else {
        j["state_encoding"] = "complex";
        json states = json::array();
        for (const auto& st : D.states) {
            json row = json::array();
            for (const auto& a : st) row.push_back(json{{"re", a.real()}, {"im", a.imag()}});
            states.push_back(std::move(row));
        }
        j["states"] = std::move(states);
        j["weights"] = D.weights;
    }
    return j;
}

quantum::StateDesign state_design_from_json(const json& j) {
    require_keys(j, {"d", "state_encoding", "states", "weights"},
                 {"schema_version", "provenance"}, "state design");
    const int d = j["d"].get<int>();
    const auto encoding = j["state_encoding"].get<std::string>();
    const auto construction = construction_of(j);
    if (encoding == "exact") {
        quantum::ExactStateData data;
        for (const auto& row : j["states"]) {
            std::vector<quantum::ExactAmp> st;
            for (const auto& amp : row) {
                require_keys(amp, {"mag2", "phase"}, {}, "amplitude");
                st.push_back(quantum::ExactAmp{rat_from_json(amp["mag2"]),
                                               rat_from_json(amp["phase"])});
            }
            data.states.push_back(std::move(st));
        }
        for (const auto& w : j["weights"]) data.weights.push_back(rat_from_json(w));
        return quantum::make_exact_state_design(d, std::move(data), construction);
    }
    if (encoding == "complex") {
        std::vector<std::vector<std::complex<double>>> states;
        for (const auto& row : j["states"]) {
            std::vector<std::complex<double>> st;
            for (const auto& a : row) {
                require_keys(a, {"re", "im"}, {}, "amplitude");
                st.emplace_back(a["re"].get<double>(), a["im"].get<double>());
            }
            states.push_back(std::move(st));
        }
        auto weights = j["weights"].get<std::vector<double>>();
        return quantum::make_complex_state_design(d, std::move(states), std::move(weights),
                                                  construction);
    }
    throw UsageError("state_encoding must be 'exact' or 'complex'");
}

json verification_report_to_json(const designs::VerificationReport& r) {
    return json{{"t", r.t},
                {"max_deviation", r.max_deviation},
                {"worst_exponent", r.worst_exponent},
                {"pass", r.pass},
                {"tolerance", r.tolerance}};
}

json moment_report_to_json(const quantum::MomentReport& r) {
    return json{{"t", r.t},
                {"max_deviation", r.max_deviation},
                {"worst_row", r.worst_row},
                {"worst_col", r.worst_col},
                {"pass", r.pass},
                {"tolerance", r.tolerance}};
}

json experiment_to_json(const approx::ApproxExperiment& cfg) {
    return json{{"schema_version", kSchemaVersion},
                {"n", cfg.n},
                {"t", cfg.t},
                {"epsilon", cfg.epsilon},
                {"delta", cfg.delta},
                {"M", cfg.M},
                {"trials", cfg.trials},
                {"seed", cfg.seed}};
}

approx::ApproxExperiment experiment_from_json(const json& j) {
    require_keys(j, {"n", "t", "epsilon", "delta", "M", "trials"}, {"schema_version", "seed"},
                 "experiment config");
    approx::ApproxExperiment cfg;
    cfg.n = j["n"].get<int>();
    cfg.t = j["t"].get<int>();
    cfg.epsilon = j["epsilon"].get<double>();
    cfg.delta = j["delta"].get<double>();
    cfg.M = j["M"].get<std::uint64_t>();
    cfg.trials = j["trials"].get<int>();
    cfg.seed = j.value("seed", std::uint64_t{0});
    return cfg;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("invalid JSON in " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace toric::io
