#pragma once

#include <map>
#include <string>
#include <vector>

#include "multitor/tor.hpp"

namespace multitor {

// A parsed computation script: one ring, named inputs, exactly one command.
struct Job {
    enum class Command { Serre, Tor, Multitor, Resolve, Koszul, Verify };
    enum class Output { Text, Structured };

    RingPtr ring;
    Command command = Command::Serre;
    Output output = Output::Text;

    std::vector<Poly> ideal_a; // serre/tor I, torind I, resolve I
    std::vector<Poly> ideal_b; // serre/tor J
    std::vector<Poly> seq;     // multitor/koszul/verify f
    Poly xpoly;                // verify x
    int q = -1;                // q / qmax / maxlen, -1 = command default
    std::string verify_sub;    // prop31 | cor32 | pullback | torind | main
};

Job parse_job(const std::string& source);

struct JobResult {
    int exit_code = 0; // 0 computed/Verified, 1 Refuted/PreconditionFailed, 2 error
    std::string output;
};

JobResult run_job(const Job& job);

// Parse + run, catching engine errors into exit code 2.
JobResult run_job_text(const std::string& source);

} // namespace multitor
