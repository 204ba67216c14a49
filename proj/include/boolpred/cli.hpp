#pragma once

#include <optional>
#include <string>

#include "boolpred/boolfn.hpp"

namespace boolpred {

// Parsed --fn spec: dictator[:i] | majority | maj_q:<q> | parity |
// constant0 | constant1, instantiated at arity n.  Symmetric constructors
// keep the profile so engines can use the weight-collapsed path.
struct FunctionSpec {
    std::optional<TruthTable> table;
    std::optional<SymmetricProfile> profile;

    TruthTable as_table() const;
    int arity() const;
};

FunctionSpec parse_function_spec(const std::string& spec, int n);
FunctionSpec load_function_file(const std::string& path);

// Entry point shared by the binary and the CLI tests.
// Exit codes: 0 success, 1 verification failure, 2 usage/parse, 3 domain.
int run_cli(int argc, const char* const* argv);

}  // namespace boolpred
