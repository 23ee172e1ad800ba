#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "classtower/errors.hpp"
#include "classtower/verifier.hpp"

namespace {

int run(int argc, char** argv) {
    using namespace classtower;

    CLI::App app{"verifier for the 2-class tower data of Q(sqrt(2p), i), p = 1 (mod 8)"};
    app.set_config("--config", "", "read options from an ini file (command line wins)");

    u64 min = 0, max = 0;
    std::string case_s = "all";
    std::string checks_s = "all";
    std::string format = "csv";
    std::string out_path;
    std::string golden;
    int jobs = 1;

    app.add_option("--min", min, "lower end of the prime range (>= 17)")->required();
    app.add_option("--max", max, "upper end of the prime range")->required();
    app.add_option("--case", case_s, "restrict output to one symbol pattern")
        ->check(CLI::IsMember({"both-1", "both+1", "mixed", "all"}));
    app.add_option("--checks", checks_s, "which check family to run")
        ->check(CLI::IsMember({"all", "symbols", "classgroups", "group", "units"}));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write the table to PATH instead of stdout");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--golden", golden, "compare the CSV rendering against a stored fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    SweepOptions opt;
    opt.min = min;
    opt.max = max;
    opt.jobs = jobs;
    if (case_s == "both-1")
        opt.case_filter = CaseLabel::both_minus;
    else if (case_s == "both+1")
        opt.case_filter = CaseLabel::both_plus;
    else if (case_s == "mixed")
        opt.case_filter = CaseLabel::mixed;

    if (checks_s != "all") {
        opt.checks = AnalyzeOptions{false, false, false, false};
        if (checks_s == "symbols") opt.checks.symbols = true;
        if (checks_s == "classgroups") opt.checks.classgroups = true;
        if (checks_s == "group") opt.checks.group = true;
        if (checks_s == "units") opt.checks.units = true;
    }

    SweepResult res;
    try {
        res = sweep(opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string payload = format == "json" ? to_json(res) : to_csv(res);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << payload)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
    }

    int code = exit_code(res);
    if (!golden.empty()) {
        std::ifstream in(golden, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read golden fixture " << golden << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        if (buf.str() != to_csv(res)) {
            std::cerr << "golden mismatch against " << golden << "\n";
            code = 1;
        }
    }

    std::cerr << "primes=" << res.cases.size() << " passed=" << res.passed
              << " failed=" << res.failed << " skipped=" << res.skipped << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
