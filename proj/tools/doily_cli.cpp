#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "doily/export.hpp"
#include "doily/protocols.hpp"
#include "doily/report.hpp"

namespace {

int write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-geometry and secret-sharing checks for the five- and seven-qubit codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", doily::kToolVersion);

    bool json = false;
    std::string out;
    std::uint64_t seed = 42;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", fault;
    verify->add_option("name", suite, "suite name")->check(CLI::IsMember(doily::suites()));
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(doily::suites()));
    verify->add_flag("--json", json, "print the JSON report");
    verify->add_option("--out", out, "write the JSON report to a file");
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_option("--inject-fault", fault, "deliberately corrupt data to exercise failure paths")
        ->check(CLI::IsMember({"sign"}))
        ->group("");

    auto* exp = app.add_subcommand("export", "export an incidence structure");
    std::string object, format = "dot";
    exp->add_option("object", object, "object to export")->required()->check(CLI::IsMember(doily::export_objects()));
    exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--out", out, "output file");

    auto* proto = app.add_subcommand("protocol", "run one secret-breaking protocol");
    std::string spec_id, secret_text;
    bool random = false;
    proto->add_option("spec", spec_id, "protocol id")->required();
    auto* secret_opt = proto->add_option("--secret", secret_text, "secret amplitudes \"alpha,beta\"");
    proto->add_flag("--random", random, "draw an exact random secret from the seed")->excludes(secret_opt);
    proto->add_option("--seed", seed, "sampling seed");
    proto->add_option("--out", out, "write the transcript to a file");

    auto* list = app.add_subcommand("list-protocols", "list builtin protocol ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            doily::SuiteOptions opt;
            opt.seed = seed;
            opt.inject_fault = fault;
            const doily::VerificationReport r = doily::run_suite(suite, opt);
            const std::string j = doily::report_json(r);
            if (!out.empty() && write_out(j, out) != 0) return 2;
            if (json || !isatty(STDOUT_FILENO))
                std::cout << j;
            else
                std::cout << doily::report_table(r);
            if (const auto* f = r.first_failure()) std::cerr << "first failing claim: " << f->id << ": " << f->detail << "\n";
            return r.pass ? 0 : 1;
        }
        if (*exp) {
            const doily::IncidenceExport e = doily::build_export(object);
            return write_out(format == "dot" ? doily::to_dot(e) : doily::to_json(e), out);
        }
        if (*proto) {
            const doily::ProtocolSpec* spec = nullptr;
            try {
                spec = &doily::find_protocol(spec_id);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            if (random == !secret_text.empty()) {
                std::cerr << "give exactly one of --secret or --random\n";
                return 2;
            }
            doily::SecretParam s;
            try {
                s = random ? doily::random_secret(seed) : doily::parse_secret(secret_text);
            } catch (const std::exception& e) {
                std::cerr << "bad secret: " << e.what() << "\n";
                return 2;
            }
            if (!s.normalized()) {
                std::cerr << "secret is not normalized: |alpha|^2 + |beta|^2 = " << (s.alpha.abs2() + s.beta.abs2()).to_string()
                          << "\n";
                return 2;
            }
            const doily::ProtocolTranscript t = doily::run(*spec, s, seed);
            if (write_out(doily::transcript_json(t), out) != 0) return 2;
            return t.success ? 0 : 1;
        }
        if (*list) {
            for (const auto& s : doily::builtin_protocols()) std::cout << s.id << "\t" << s.description << "\n";
            return 0;
        }
    } catch (const doily::UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
