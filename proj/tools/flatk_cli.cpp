// Command-line front end: exact fixed-point index pairings, marked-point
// pairing tables with quasi-polynomial fits, and the oracle verification
// suites. Exit codes: 0 success, 2 malformed request, 3 computation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flatk/engine.hpp"
#include "flatk/errors.hpp"
#include "flatk/jobspec.hpp"
#include "flatk/json_io.hpp"
#include "flatk/oracle.hpp"
#include "flatk/quotient.hpp"
#include "flatk/verify.hpp"

namespace {

using flatk::ordered_json;

struct CommonFlags {
    std::string out;
    std::string backend = "exact";
    int threads = 1;
    int order = -1; // -1 = keep the spec's order
    bool breakdown = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_backend = true) {
    cmd->add_option("--out", flags.out, "Output file (default: stdout)");
    cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--order", flags.order, "Override the spec's truncation order")
        ->check(CLI::NonNegativeNumber);
    if (with_backend)
        cmd->add_option("--backend", flags.backend, "exact, float, or both")
            ->check(CLI::IsMember({"exact", "float", "both"}));
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw flatk::ComputeError("cannot open output file: " + path);
    f << content;
    if (!f)
        throw flatk::ComputeError("failed writing output file: " + path);
}

int emit_error(const std::string& kind, const std::string& message,
               const std::vector<std::string>& violations = {}) {
    ordered_json body{{"error", ordered_json{{"kind", kind}, {"message", message}}}};
    if (!violations.empty())
        body["error"]["violations"] = violations;
    std::cout << flatk::json_dump(body);
    return kind == "spec" ? 2 : 3;
}

ordered_json load_spec(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw flatk::SpecError("cannot read spec file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        return ordered_json::parse(buf.str());
    } catch (const ordered_json::parse_error& e) {
        throw flatk::SpecError(std::string("spec file is not valid JSON: ") + e.what());
    }
}

std::string float_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

int run_index(const std::string& spec_path, const CommonFlags& flags) {
    const ordered_json spec = load_spec(spec_path);
    flatk::IndexJob job = flatk::index_job_from_json(spec);
    const flatk::OutputOptions opts = flatk::output_options_from_json(spec);
    if (flags.order >= 0)
        job.order = flags.order;
    const bool breakdown = flags.breakdown || opts.breakdown;

    ordered_json out{{"command", "index"}, {"spec", spec}, {"backend", flags.backend}};
    // The exact value is always computed; float output supplements it.
    {
        const auto value = flatk::index_pairing<flatk::Cyclo>(job, flags.threads);
        out["value"] = flatk::series_json(value.total);
        if (breakdown) {
            ordered_json arr = ordered_json::array();
            for (std::size_t i = 0; i < value.points.size(); ++i)
                arr.push_back(ordered_json{{"point", value.points[i].lambda},
                                           {"series", flatk::series_json(value.summands[i])}});
            out["breakdown"] = std::move(arr);
        }
    }
    if (flags.backend == "float" || flags.backend == "both") {
        const auto value = flatk::index_pairing<std::complex<double>>(job, flags.threads);
        out["float_value"] = flatk::float_series_json(value.total);
    }
    write_output(flags.out, flatk::json_dump(out));
    return 0;
}

int run_pairing(const std::string& spec_path, const CommonFlags& flags) {
    const ordered_json spec = load_spec(spec_path);
    flatk::PairingRequest req = flatk::pairing_request_from_json(spec);
    const flatk::OutputOptions opts = flatk::output_options_from_json(spec);
    if (flags.order >= 0)
        req.order = flags.order;
    if (opts.mode == "derivative" && req.order < 1)
        throw flatk::SpecError("derivative extraction needs series order at least 1");

    const long period = opts.period > 0 ? opts.period : flatk::default_period(req);
    const bool with_float_backend = flags.backend != "exact";

    std::ostringstream csv;
    csv << "k,t_order,value_rational,value_float_re,value_float_im\n";
    // samples[j] collects (k, coefficient of t^j) across the schedule
    std::vector<std::vector<std::pair<long, flatk::Rational>>> samples(
        static_cast<std::size_t>(req.order) + 1);
    for (long k : req.schedule) {
        const flatk::TSeries<flatk::Cyclo> series = flatk::multiplicity_series(req, k, flags.threads);
        const std::vector<flatk::Rational> exact = flatk::rationalized_coeffs(series);
        std::vector<std::complex<double>> shadow(exact.size());
        if (with_float_backend) {
            // same job, float scalar backend
            flatk::IndexJob job;
            job.datum = req.datum;
            job.genus = static_cast<int>(req.genus);
            job.level = k;
            job.deformation = req.deformation;
            job.order = req.order;
            const auto highest = flatk::scaled_marked_weights(req, k);
            if (highest.empty()) {
                job.boundary.push_back(flatk::trivial_character(req.datum->rank));
            } else {
                for (const auto& w : highest)
                    job.boundary.push_back(
                        flatk::cached_character(*req.datum, req.datum->dual_highest_weight(w)));
            }
            const auto value = flatk::index_pairing<std::complex<double>>(job, flags.threads);
            for (std::size_t j = 0; j < shadow.size(); ++j)
                shadow[j] = value.total[static_cast<int>(j)];
        } else {
            for (std::size_t j = 0; j < shadow.size(); ++j)
                shadow[j] = series[static_cast<int>(j)].to_complex();
        }
        for (std::size_t j = 0; j < exact.size(); ++j) {
            const bool keep = opts.mode == "multiplicity" || j == 1;
            if (!keep)
                continue;
            samples[j].emplace_back(k, exact[j]);
            csv << k << "," << j << "," << exact[j].str() << "," << float_str(shadow[j].real())
                << "," << float_str(shadow[j].imag()) << "\n";
        }
    }

    ordered_json quasi = ordered_json::array();
    for (std::size_t j = 0; j < samples.size(); ++j) {
        if (samples[j].empty())
            continue;
        ordered_json entry{{"t_order", j}};
        try {
            const flatk::QuasiPoly fit = flatk::quasi_poly_fit_auto(samples[j], period,
                                                                    opts.max_degree);
            const ordered_json qj = flatk::quasi_poly_json(fit);
            for (auto it = qj.begin(); it != qj.end(); ++it)
                entry[it.key()] = it.value();
        } catch (const flatk::ComputeError& e) {
            entry["error"] = e.what();
        }
        quasi.push_back(std::move(entry));
    }

    std::ostringstream full;
    full << csv.str() << "\n" << flatk::json_dump(quasi);
    write_output(flags.out, full.str());
    return 0;
}

int run_verify(const std::string& suite, const CommonFlags& flags) {
    const flatk::VerifyReport report = flatk::run_verify_suite(suite, flags.threads);
    ordered_json cases = ordered_json::array();
    for (const auto& c : report.cases)
        cases.push_back(ordered_json{{"inputs", c.inputs},
                                     {"engine", c.engine},
                                     {"oracle", c.oracle},
                                     {"equal", c.equal}});
    const ordered_json body{{"command", "verify"},
                            {"suite", report.suite},
                            {"pass", report.pass},
                            {"cases", std::move(cases)}};
    write_output(flags.out, flatk::json_dump(body));
    return report.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fixed-point index pairings and quotient intersection tables"};
    app.require_subcommand(1);

    CommonFlags index_flags, pairing_flags, verify_flags;
    std::string index_spec, pairing_spec, verify_suite;

    CLI::App* cmd_index = app.add_subcommand("index", "Evaluate one index pairing job");
    cmd_index->add_option("spec", index_spec, "JSON job spec path")->required();
    add_common_flags(cmd_index, index_flags);
    cmd_index->add_flag("--breakdown", index_flags.breakdown, "Emit per-orbit summands");

    CLI::App* cmd_pairing =
        app.add_subcommand("pairing", "Tabulate pairings over a level schedule");
    cmd_pairing->add_option("spec", pairing_spec, "JSON pairing spec path")->required();
    add_common_flags(cmd_pairing, pairing_flags);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run an oracle verification suite");
    cmd_verify->add_option("suite", verify_suite, "fusion, disk, shift, lambda, or quasi")
        ->required();
    add_common_flags(cmd_verify, verify_flags, /*with_backend=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_index->parsed())
            return run_index(index_spec, index_flags);
        if (cmd_pairing->parsed())
            return run_pairing(pairing_spec, pairing_flags);
        return run_verify(verify_suite, verify_flags);
    } catch (const flatk::SpecValidationError& e) {
        return emit_error("spec", "job spec failed validation", e.violations());
    } catch (const flatk::SpecError& e) {
        return emit_error("spec", e.what());
    } catch (const flatk::ComputeError& e) {
        return emit_error("compute", e.what());
    } catch (const std::exception& e) {
        return emit_error("compute", std::string("unexpected failure: ") + e.what());
    }
}
