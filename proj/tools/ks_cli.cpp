// Command-line front end: every subcommand builds a job and runs it through the shared job runner.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ks/report.hpp"

using ks::json;

namespace {

void print_summary(const json& report, std::ostream& os) {
    for (const auto& [name, ok] : report["checks"].items()) os << (ok.get<bool>() ? "ok    " : "FAIL  ") << name << "\n";
    if (report.contains("attributes")) {
        os << "T =";
        for (const auto& row : report["attributes"]["T"]) {
            os << "\n   ";
            for (const auto& e : row) os << " " << e["text"].get<std::string>();
        }
        os << "\n";
    }
    if (report.contains("period")) {
        const json& p = report["period"]["omega"];
        if (p.contains("a")) os << "a = " << p["a"]["text"].get<std::string>() << "\nb = " << p["b"]["text"].get<std::string>() << "\n";
    }
    if (report.contains("reference_comparison")) os << "reference comparison: " << report["reference_comparison"].dump() << "\n";
    os << (report["all_checks_pass"].get<bool>() ? "all checks pass" : "some checks fail") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kuga-Satake computations for U + U(2) + D4(-1)"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    bool summary = false, compact = false;
    app.add_option("-o,--output", output, "write the JSON report to this file");
    app.add_flag("--summary", summary, "print a human-readable summary instead of JSON");
    app.add_flag("--compact", compact, "single-line JSON");

    json job;
    auto with = [&](std::initializer_list<std::string> cmds) { job["commands"] = std::vector<std::string>(cmds); };

    std::string lattice = "U+U(2)+D4minus";
    auto* info = app.add_subcommand("clifford-info", "dimensions and Gram of a Clifford algebra");
    info->add_option("--lattice", lattice, "summands such as U+U(2)+D4minus");

    std::string left = "U", right = "U(2)";
    auto* gl = app.add_subcommand("glue", "glue two Clifford algebras and their representations");
    gl->add_option("--left", left);
    gl->add_option("--right", right);

    std::vector<std::string> elements;
    auto* rep = app.add_subcommand("rep", "evaluate phi on elements of Cl(T)");
    rep->add_option("-e,--element", elements, "element text, e.g. f1*f2 + 3*h1*h2")->required();

    long lambda = 1;
    auto* dec = app.add_subcommand("decompose", "pseudo-idempotents, Lambda lattices and the N matrices");
    dec->add_option("--lambda", lambda, "which Lambda_i to detail (1..8)");

    std::string alpha = "(f1+f2)*(f3+f4)", domain = "matrix_rep";
    auto* att = app.add_subcommand("attributes", "modules, M_E and T");
    att->add_option("--alpha", alpha);
    att->add_option("--trace-domain", domain, "matrix_rep, cl_even or cl_full");
    att->add_option("--lambda", lambda);

    std::string omega = "reference", frame = "rational";
    bool both = false, no_auto = false;
    auto* per = app.add_subcommand("period", "period matrix Z for a period point");
    per->add_option("--omega", omega, "'reference' or 'e1 entries;e2 entries' in Q(sqrt2)");
    per->add_option("--frame", frame, "rational or sqrt");
    per->add_flag("--both", both, "also run the complex conjugate point");
    per->add_flag("--no-auto-sign", no_auto, "use J = e1 e2 without the positivity sign choice");

    std::string points;
    auto* scan = app.add_subcommand("rank18-scan", "period matrices at points of U + U(2)");
    scan->add_option("--points", points, "JSON file with a list of {e1, e2} points");
    scan->add_option("--frame", frame);

    app.add_subcommand("rank-check", "ranks of Cl+-(T') x_i");

    std::string jobfile;
    auto* run = app.add_subcommand("run", "run a job file");
    run->add_option("job", jobfile, "JSON job file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            job["lattice"] = lattice;
            with({"clifford-info"});
        } else if (gl->parsed()) {
            job["glue"] = {{"left", left}, {"right", right}};
            with({"glue"});
        } else if (rep->parsed()) {
            job["rep_elements"] = elements;
            with({"rep"});
        } else if (dec->parsed()) {
            job["lambda"] = lambda;
            with({"decompose"});
        } else if (att->parsed()) {
            job["alpha"] = alpha, job["trace_domain"] = domain, job["lambda"] = lambda;
            with({"attributes"});
        } else if (per->parsed()) {
            job["omega"] = omega, job["frame"] = frame, job["both_conjugates"] = both, job["auto_sign"] = !no_auto;
            with({"period"});
        } else if (scan->parsed()) {
            job["frame"] = frame;
            if (!points.empty()) {
                std::ifstream in(points);
                if (!in) throw std::runtime_error("cannot open " + points);
                json pts = json::parse(in);
                job["scan_points"] = pts.is_object() ? pts.at("points") : pts;
            }
            with({"rank18-scan"});
        } else if (run->parsed()) {
            std::ifstream in(jobfile);
            if (!in) throw std::runtime_error("cannot open " + jobfile);
            job = json::parse(in);
        } else {
            with({"rank-check"});
        }

        json report = ks::run_job(job);
        std::string text = report.dump(compact ? -1 : 2) + "\n";
        if (!output.empty()) {
            std::ofstream out(output);
            out << text;
        }
        if (summary)
            print_summary(report, std::cout);
        else if (output.empty())
            std::cout << text;
        return report["all_checks_pass"].get<bool>() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
