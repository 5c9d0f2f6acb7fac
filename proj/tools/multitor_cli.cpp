#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multitor/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"multitor: exact Koszul cohomology, multitors and Serre multiplicities"};

    std::string job_path;
    std::string out_path;
    app.add_option("--job", job_path, "job script to run")->required();
    app.add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(job_path);
    if (!in) {
        std::cerr << "error: cannot open job file " << job_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    multitor::JobResult result = multitor::run_job_text(buf.str());
    if (result.exit_code == 2) {
        std::cerr << result.output;
        return 2;
    }
    if (out_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        out << result.output;
    }
    return result.exit_code;
}
