#include "wmi/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wmi/bounds.hpp"
#include "wmi/invariants.hpp"
#include "wmi/saito.hpp"
#include "wmi/snc_ideal.hpp"

namespace wmi {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json profile_to_json(const std::vector<HodgeProfileEntry>& profile) {
    json arr = json::array();
    for (const HodgeProfileEntry& e : profile)
        arr.push_back({{"q", e.q}, {"dim", e.dim ? json(*e.dim) : json(nullptr)}});
    return arr;
}

std::vector<SingularPoint> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open points file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    if (!j.is_array()) throw InvalidInput("points file must be a JSON array");
    std::vector<SingularPoint> pts;
    for (const auto& p : j) {
        if (!p.is_object() || !p.contains("p_g"))
            throw InvalidInput("each point needs at least \"p_g\"");
        SingularPoint sp;
        sp.p_g = p["p_g"].get<long long>();
        if (p.contains("type")) sp.type_q = p["type"].get<int>();
        pts.push_back(sp);
    }
    return pts;
}

struct SncIdealCmd {
    int r = 0, l = 0, vars = 0;
    bool as_json = false;
};
struct SaitoCmd {
    std::string weights;
    bool strict = false, colength = false, as_json = false;
};
struct MhsCmd {
    std::string config;
    int degree = 0;
    std::optional<int> weight;
    bool as_json = false;
};
struct DualCmd {
    std::string config, dot_path;
    bool betti = false, euler = false, as_json = false;
};
struct CDimsCmd {
    std::string config;
    int ambient = 0;
    std::optional<int> slice_codim;
    bool assume_lc = false, as_json = false;
};
struct BoundsCmd {
    long long degree = 0, dim = 0;
    std::string points_path;
    bool as_json = false;
};

int run_snc_ideal(const SncIdealCmd& c, std::ostream& out) {
    const MonomialIdeal ideal = local_wmi_generators(c.r, c.l, c.vars);
    if (c.as_json)
        emit(out, ideal.toJson());
    else
        out << ideal.render() << "\n";
    return 0;
}

int run_saito(const SaitoCmd& c, std::ostream& out) {
    const WeightVector w = WeightVector::parse(c.weights);
    const MonomialIdeal ideal = weighted_ideal(w, c.strict);
    if (c.as_json) {
        json j;
        json ws = json::array();
        for (const Rational& x : w.weights()) {
            std::ostringstream os;
            os << x;
            ws.push_back(os.str());
        }
        j["weights"] = ws;
        j["strict"] = c.strict;
        j["ideal"] = ideal.toJson();
        j["log_canonical"] = is_log_canonical(w);
        if (c.colength) j["colength"] = *ideal.colength();
        emit(out, j);
    } else {
        out << (c.strict ? "adj" : "I0") << " = " << ideal.render() << "\n";
        if (c.colength) out << "colength = " << *ideal.colength() << "\n";
    }
    return 0;
}

int run_mhs(const MhsCmd& c, std::ostream& out) {
    const SncConfiguration cfg = SncConfiguration::loadFile(c.config);
    if (c.weight) {
        const long long dim = graded_piece_dim(cfg, *c.weight, c.degree);
        if (c.as_json)
            emit(out, json{{"weight", *c.weight}, {"degree", c.degree}, {"dim", dim}});
        else
            out << "dim = " << dim << "\n";
        return 0;
    }
    const auto profile = hodge_0q_profile(cfg, c.degree);
    if (c.as_json) {
        emit(out, json{{"degree", c.degree}, {"profile", profile_to_json(profile)}});
    } else {
        for (const HodgeProfileEntry& e : profile) {
            out << "q=" << e.q << ": ";
            if (e.dim)
                out << *e.dim << "\n";
            else
                out << "unavailable\n";
        }
    }
    return 0;
}

int run_dual(const DualCmd& c, std::ostream& out) {
    const SncConfiguration cfg = SncConfiguration::loadFile(c.config);
    const DualComplex dc = DualComplex::build(cfg);
    if (!c.dot_path.empty()) {
        std::ofstream dot(c.dot_path);
        if (!dot) throw InvalidInput("cannot write DOT file: " + c.dot_path);
        dot << dc.toDot();
    }
    std::vector<long long> cell_counts;
    for (int k = 0; k <= dc.dimension(); ++k)
        cell_counts.push_back(static_cast<long long>(dc.cells(k).size()));
    if (c.as_json) {
        json j;
        j["cells"] = cell_counts;
        j["betti"] = dc.bettiNumbers();
        j["euler"] = dc.eulerCharacteristic();
        emit(out, j);
        return 0;
    }
    const bool all = !c.betti && !c.euler;
    if (c.betti || all) {
        out << "betti =";
        for (long long b : dc.bettiNumbers()) out << " " << b;
        out << "\n";
    }
    if (c.euler || all) out << "euler = " << dc.eulerCharacteristic() << "\n";
    return 0;
}

int run_cdims(const CDimsCmd& c, std::ostream& out) {
    const SncConfiguration cfg = SncConfiguration::loadFile(c.config);
    if (c.slice_codim) {
        json ranks = json::object();
        for (int l = 2; l <= c.ambient; ++l)
            ranks[std::to_string(l)] = transversal_rank(cfg, c.ambient, *c.slice_codim, l);
        if (c.as_json) {
            emit(out, json{{"ambient", c.ambient},
                           {"slice_codim", *c.slice_codim},
                           {"ranks", ranks}});
        } else {
            for (int l = 2; l <= c.ambient; ++l)
                out << "rank C_" << l << "|Z = " << ranks[std::to_string(l)].get<long long>()
                    << "\n";
        }
        return 0;
    }

    const CDimensionReport report = c_dimensions(cfg, c.ambient);
    std::optional<LcClassification> cls;
    if (c.assume_lc) cls = classify_lc_type(report, true);
    if (c.as_json) {
        json j = report.toJson();
        if (cls) j["classification"] = cls->describe();
        emit(out, j);
    } else {
        for (const auto& [l, d] : report.dims) {
            out << "dim C_" << l << " = ";
            if (d)
                out << *d << "\n";
            else
                out << "unavailable\n";
        }
        out << "total = ";
        if (report.total)
            out << *report.total << "\n";
        else
            out << "unavailable\n";
        if (cls) out << "classification: " << cls->describe() << "\n";
    }
    return 0;
}

int run_bounds(const BoundsCmd& c, std::ostream& out) {
    const long long d = c.degree, n = c.dim;
    const LowDegreeReport low = low_degree_deductions(d, n);
    std::optional<BudgetVerdict> budget;
    if (!c.points_path.empty()) budget = budget_check(d, n, load_points(c.points_path));

    if (c.as_json) {
        json j;
        j["d"] = d;
        j["n"] = n;
        j["lc_special_point_bound"] = lc_special_point_bound(d, n);
        j["nonrational_point_bound"] = nonrational_point_bound(d, n);
        j["surjectivity_threshold_l1"] = surjectivity_threshold(1, d, n);
        j["surjectivity_threshold_l2"] = surjectivity_threshold(2, d, n);
        j["low_degree"] = low.toJson();
        if (budget) j["budget"] = budget->toJson();
        emit(out, j);
        return 0;
    }
    out << "lc_special_point_bound = " << lc_special_point_bound(d, n) << "\n";
    out << "nonrational_point_bound = " << nonrational_point_bound(d, n) << "\n";
    out << "surjectivity_threshold(l=1) = " << surjectivity_threshold(1, d, n) << "\n";
    out << "surjectivity_threshold(l>=2) = " << surjectivity_threshold(2, d, n) << "\n";
    out << "low degree:";
    for (const std::string& s : low.statements) out << " " << s << ";";
    out << "\n";
    if (budget) {
        if (!budget->applicable)
            out << "budget: rule not applicable (requires degree = dim + 1)\n";
        else if (budget->consistent)
            out << "budget: consistent\n";
        else {
            out << "budget: inconsistent\n";
            for (const std::string& v : budget->violations) out << "  - " << v << "\n";
        }
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of hypersurface singularities from resolution data"};
    app.require_subcommand(1);

    SncIdealCmd snc;
    CLI::App* snc_cmd = app.add_subcommand(
        "snc-ideal", "weight-l ideal of the local model x_1...x_r = 0");
    snc_cmd->add_option("--r", snc.r, "number of components through the point")->required();
    snc_cmd->add_option("--l", snc.l, "weight index")->required();
    snc_cmd->add_option("--vars", snc.vars, "ambient variable count")->required();
    snc_cmd->add_flag("--json", snc.as_json, "JSON output");

    SaitoCmd saito;
    CLI::App* saito_cmd = app.add_subcommand(
        "saito", "monomial multiplier/adjoint ideal from weights");
    saito_cmd->add_option("--weights", saito.weights, "comma-separated positive rationals")
        ->required();
    saito_cmd->add_flag("--strict", saito.strict, "strict inequality (adjoint ideal)");
    saito_cmd->add_flag("--colength", saito.colength, "also print the colength");
    saito_cmd->add_flag("--json", saito.as_json, "JSON output");

    MhsCmd mhs;
    CLI::App* mhs_cmd = app.add_subcommand(
        "mhs", "Hodge pieces of the weight-graded cohomology of an SNC variety");
    mhs_cmd->add_option("--config", mhs.config, "SNC configuration file")->required();
    mhs_cmd->add_option("--degree", mhs.degree, "total cohomological degree")->required();
    int weight_value = 0;
    CLI::Option* weight_opt =
        mhs_cmd->add_option("--weight", weight_value, "weight k (default: full profile)");
    mhs_cmd->add_flag("--json", mhs.as_json, "JSON output");

    DualCmd dual;
    CLI::App* dual_cmd = app.add_subcommand("dual-complex", "dual complex and Betti numbers");
    dual_cmd->add_option("--config", dual.config, "SNC configuration file")->required();
    dual_cmd->add_flag("--betti", dual.betti, "print Betti numbers");
    dual_cmd->add_flag("--euler", dual.euler, "print the Euler characteristic");
    dual_cmd->add_option("--dot", dual.dot_path, "write the 1-skeleton in DOT format");
    dual_cmd->add_flag("--json", dual.as_json, "JSON output");

    CDimsCmd cdims;
    CLI::App* cdims_cmd =
        app.add_subcommand("c-dims", "dimensions of the graded quotients C_l at the point");
    cdims_cmd->add_option("--config", cdims.config, "exceptional fiber configuration")->required();
    cdims_cmd->add_option("--ambient", cdims.ambient, "ambient dimension n")->required();
    CLI::Option* lc_opt =
        cdims_cmd->add_flag("--assume-lc", cdims.assume_lc, "classify assuming log-canonical");
    int slice_value = 0;
    CLI::Option* slice_opt = cdims_cmd->add_option(
        "--slice-codim", slice_value, "treat the configuration as a transversal slice fiber");
    slice_opt->excludes(lc_opt);
    cdims_cmd->add_flag("--json", cdims.as_json, "JSON output");

    BoundsCmd bounds;
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "projective-space bounds for isolated singularities");
    bounds_cmd->add_option("--degree", bounds.degree, "hypersurface degree d")->required();
    bounds_cmd->add_option("--dim", bounds.dim, "projective dimension n")->required();
    bounds_cmd->add_option("--points", bounds.points_path, "declared singular points (JSON)");
    bounds_cmd->add_flag("--json", bounds.as_json, "JSON output");

    std::string fixtures_dir;
    CLI::App* verify_cmd =
        app.add_subcommand("verify-fixtures", "run the committed fixture corpus");
    verify_cmd->add_option("--dir", fixtures_dir, "fixture directory (default: $WMI_FIXTURES)");

    std::vector<const char*> argv;
    argv.push_back("wmi");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (snc_cmd->parsed()) return run_snc_ideal(snc, out);
        if (saito_cmd->parsed()) return run_saito(saito, out);
        if (mhs_cmd->parsed()) {
            if (weight_opt->count() > 0) mhs.weight = weight_value;
            return run_mhs(mhs, out);
        }
        if (dual_cmd->parsed()) return run_dual(dual, out);
        if (cdims_cmd->parsed()) {
            if (slice_opt->count() > 0) cdims.slice_codim = slice_value;
            return run_cdims(cdims, out);
        }
        if (bounds_cmd->parsed()) return run_bounds(bounds, out);
        if (verify_cmd->parsed()) {
            std::string dir = fixtures_dir;
            if (dir.empty()) {
                const char* env = std::getenv("WMI_FIXTURES");
                dir = env != nullptr ? env : "fixtures";
            }
            return verify_fixtures(dir, out, err);
        }
    } catch (const InsufficientHodgeData& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int verify_fixtures(const std::string& dir, std::ostream& out, std::ostream& err) {
    const std::string manifest_path = dir + "/manifest.json";
    std::ifstream in(manifest_path);
    if (!in) {
        err << "no fixtures: cannot open " << manifest_path << "\n";
        return 1;
    }
    json manifest;
    try {
        in >> manifest;
    } catch (const json::parse_error& e) {
        err << "error: " << manifest_path << ": " << e.what() << "\n";
        return 1;
    }
    if (!manifest.is_object() || !manifest.contains("cases") || !manifest["cases"].is_array() ||
        manifest["cases"].empty()) {
        err << "no fixtures: " << manifest_path << " lists no cases\n";
        return 1;
    }

    int passed = 0, failed = 0;
    for (const auto& c : manifest["cases"]) {
        const std::string name = c.value("name", "(unnamed)");
        if (!c.contains("args") || !c["args"].is_array() || !c.contains("expect")) {
            err << "FAIL " << name << ": case needs \"args\" and \"expect\"\n";
            ++failed;
            continue;
        }
        std::vector<std::string> case_args;
        for (const auto& a : c["args"]) case_args.push_back(a.get<std::string>());
        if (!case_args.empty() && case_args[0] == "verify-fixtures") {
            err << "FAIL " << name << ": fixtures may not recurse\n";
            ++failed;
            continue;
        }
        // File arguments in the manifest are relative to the fixture dir.
        for (std::size_t i = 0; i + 1 < case_args.size(); ++i)
            if (case_args[i] == "--config" || case_args[i] == "--points")
                case_args[i + 1] = dir + "/" + case_args[i + 1];

        std::ostringstream case_out, case_err;
        const int rc = run_cli(case_args, case_out, case_err);
        if (rc != 0) {
            err << "FAIL " << name << ": exit " << rc << " (" << case_err.str() << ")\n";
            ++failed;
            continue;
        }
        json got;
        try {
            got = json::parse(case_out.str());
        } catch (const json::parse_error&) {
            err << "FAIL " << name << ": output is not JSON\n";
            ++failed;
            continue;
        }
        if (got != c["expect"]) {
            err << "FAIL " << name << ":\n  expected " << c["expect"].dump() << "\n  got      "
                << got.dump() << "\n";
            ++failed;
            continue;
        }
        out << "ok " << name << "\n";
        ++passed;
    }
    out << passed << "/" << (passed + failed) << " fixtures passed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace wmi
