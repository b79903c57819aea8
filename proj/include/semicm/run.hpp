#pragma once

#include "semicm/report.hpp"

#include <optional>
#include <string>

namespace semicm {

enum class Command { Decompose, CmCheck, CmClosure, Saturate, Verify, ProbeMinimality };
enum class OutputFormat { Text, Machine };

struct Options {
    Command command = Command::Decompose;
    OutputFormat format = OutputFormat::Text;
    std::optional<long> bound;                     // verification box cap
    std::optional<std::vector<int>> basis_override; // overrides the spec's basis
    bool verify = false;                           // decompose --verify
    long samples = 100;                            // probe-minimality
    unsigned long seed = 12345;
};

struct RunResult {
    Report report;
    int exit_code = 0; // 0 ok, 1 parse/validation, 2 not simplicial, 3 verification failed
};

// Exit code implied by the verification and probe sections of a finished
// report: 3 when any check failed, 0 otherwise.
int exit_code_for(const Report& report);

// Executes the requested stages on a parsed spec. NotSimplicial and
// validation failures are reported through the exit code rather than thrown.
RunResult run(const SemigroupSpec& spec, const Options& options);

// Convenience wrapper: parse, run, render. Returns the rendered output (or
// an error line) plus the exit code.
std::pair<std::string, int> run_text(const std::string& input, const Options& options);

} // namespace semicm
