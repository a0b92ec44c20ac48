#pragma once

#include <iosfwd>
#include <string>

#include "qsl/suites.hpp"

namespace qsl {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct FamilyCmdArgs {
    std::string name;
    int k = 0;
    bool print_q = false;
    bool print_graph6 = false;  // graph6 is printed regardless; flag kept for explicit requests
    bool print_dot = false;
};

struct VerifyCmdArgs {
    std::string suite;
    SuiteOptions options;
    std::string out_path;  // empty: print the certificate JSON array to `out`
};

struct SearchCmdArgs {
    int m = 0;
    std::string filter = "all";
    int max_n = -1;  // -1: default vertex cap for m
    std::string out_path;
};

// Each command writes human-readable output to `out` and diagnostics to
// `err`, returning a process exit code from the table above.  They never
// throw: error conditions are mapped to kExitUsage (bad names, parameters
// below a family's minimum, caps exceeded) or kExitIo (output files).
int cmd_family(const FamilyCmdArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyCmdArgs& args, std::ostream& out, std::ostream& err);
int cmd_search(const SearchCmdArgs& args, std::ostream& out, std::ostream& err);

// argv-level entry point: subcommand dispatch, flag parsing, help/version.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsl
