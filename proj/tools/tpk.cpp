// Command-line front end: verify / gauge / axioms / example subcommands over
// the JSON wire formats, with deterministic seeded reports.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "tpk/json_io.hpp"
#include "tpk/suites.hpp"

namespace {

using nlohmann::json;

tpk::Graded load_graded(const std::string& path, const char* key) {
    json j = tpk::load_json_file(path);
    if (j.is_object() && j.contains(key))
        return tpk::graded_from_json(j[key]);
    return tpk::graded_from_json(j);
}

tpk::Graded load_phi_or_zero(const std::string& path, int dim) {
    if (path.empty())
        return tpk::Graded(tpk::Kind::form, dim, 3);
    return load_graded(path, "phi");
}

int emit(const tpk::VerificationReport& rep, const std::string& format,
         const std::string& out_path) {
    if (!out_path.empty())
        tpk::write_json_file(out_path, rep.to_json());
    if (format == "text")
        std::cout << rep.to_text();
    else
        std::cout << rep.to_json().dump(2) << "\n";
    return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Poisson kit: exact checks for 3-form twisted brackets"};
    app.require_subcommand(1);

    if (const char* cap = std::getenv("TPK_DEGREE_CAP")) {
        try {
            tpk::set_degree_cap(std::stoi(cap));
        } catch (const std::exception&) {
            std::cerr << "error: TPK_DEGREE_CAP must be a positive integer\n";
            return 2;
        }
    }

    std::string spec_path, phi_path, b_path, out_path;
    std::string format = "json";
    std::string lambda_str = "1";
    std::string algebra = "so3";
    uint64_t seed = 42;
    int trials = 20;
    int samples = 100;
    int dim = 3;
    double tol = 1e-9;
    double fd_step = 1e-5;

    CLI::App* verify = app.add_subcommand("verify", "check a bivector against a 3-form");
    verify->add_option("--spec", spec_path, "JSON file with pi (and optionally phi)")
        ->required();
    verify->add_option("--phi", phi_path, "JSON file overriding the background 3-form");
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "also write the report to this file");

    CLI::App* gauge = app.add_subcommand("gauge", "apply a gauge 2-form to a bivector");
    gauge->add_option("--spec", spec_path)->required();
    gauge->add_option("--b", b_path, "JSON file with the gauge 2-form")->required();
    gauge->add_option("--out", out_path, "where to write the gauge result")->required();
    gauge->add_option("--phi", phi_path);
    gauge->add_option("--seed", seed);
    gauge->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* axioms = app.add_subcommand("axioms", "verify the five bracket axioms");
    axioms->add_option("--dim", dim)->required();
    axioms->add_option("--phi", phi_path, "JSON file with the twist 3-form")->required();
    axioms->add_option("--trials", trials);
    axioms->add_option("--seed", seed);
    axioms->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    axioms->add_option("--out", out_path);

    CLI::App* example = app.add_subcommand("example", "run a worked example suite");
    std::string which;
    example->add_option("name", which, "lie-poisson or group")->required();
    example->add_option("--lambda", lambda_str, "rational scale of the primitive");
    example->add_option("--algebra", algebra)->check(CLI::IsMember({"so3", "su2", "sl2r"}));
    example->add_option("--samples", samples);
    example->add_option("--seed", seed);
    example->add_option("--tol", tol);
    example->add_option("--fd-step", fd_step);
    example->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    example->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            json spec = tpk::load_json_file(spec_path);
            tpk::Graded pi = tpk::graded_from_json(spec.at("pi"));
            tpk::Graded phi = phi_path.empty()
                                  ? (spec.contains("phi")
                                         ? tpk::graded_from_json(spec["phi"])
                                         : tpk::Graded(tpk::Kind::form, pi.dim(), 3))
                                  : load_phi_or_zero(phi_path, pi.dim());
            return emit(tpk::run_verify_suite(pi, phi, trials, seed), format, out_path);
        }
        if (gauge->parsed()) {
            json spec = tpk::load_json_file(spec_path);
            tpk::Graded pi = tpk::graded_from_json(spec.at("pi"));
            tpk::Graded B = load_graded(b_path, "B");
            tpk::Graded phi = phi_path.empty()
                                  ? (spec.contains("phi")
                                         ? tpk::graded_from_json(spec["phi"])
                                         : tpk::Graded(tpk::Kind::form, pi.dim(), 3))
                                  : load_phi_or_zero(phi_path, pi.dim());
            tpk::GaugeOutcome out = tpk::run_gauge(pi, B, phi, seed);
            tpk::write_json_file(out_path, tpk::to_json(out.result));
            if (format == "text")
                std::cout << out.report.to_text();
            else
                std::cout << out.report.to_json().dump(2) << "\n";
            return out.report.passed() ? 0 : 1;
        }
        if (axioms->parsed()) {
            tpk::Graded phi = load_phi_or_zero(phi_path, dim);
            return emit(tpk::run_axioms_suite(dim, phi, trials, seed), format, out_path);
        }
        if (example->parsed()) {
            if (which == "lie-poisson")
                return emit(tpk::run_example_lie_poisson(tpk::Rational::parse(lambda_str),
                                                         samples, seed),
                            format, out_path);
            if (which == "group")
                return emit(tpk::run_example_group(algebra, samples, seed, tol, fd_step),
                            format, out_path);
            std::cerr << "error: unknown example '" << which
                      << "' (expected lie-poisson or group)\n";
            return 2;
        }
    } catch (const tpk::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tpk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
