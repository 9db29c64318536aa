#pragma once

namespace iquant {

// Command-line entry point. Subcommands: quantify, sweep, simulate, verify,
// make-state, errata. Exit codes: 0 success, 1 input/usage error,
// 2 verification failure. The IQUANT_GEOMETRY environment variable
// ("L=...,theta=...,k=...") overrides the default geometry; explicit flags
// take precedence over it.
int run_cli(int argc, char** argv);

}  // namespace iquant
