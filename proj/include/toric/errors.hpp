#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Computation faults: the input was well-formed but a resource cap or a
// mathematical hypothesis failed mid-run.  CLI maps these to exit code 1.
struct Fault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepCapExceeded : Fault {
    long reductions = 0;
    long pairs_processed = 0;
    long basis_size = 0;
    StepCapExceeded(long red, long pairs, long size)
        : Fault("Groebner step cap exceeded after " + std::to_string(red) +
                " reductions (" + std::to_string(pairs) + " pairs processed, basis size " +
                std::to_string(size) + ")"),
          reductions(red), pairs_processed(pairs), basis_size(size) {}
};

struct NotFiniteFault : Fault {
    using Fault::Fault;
};

struct EigenFault : Fault {
    using Fault::Fault;
};

// Input errors: malformed files, grammar violations, bad preconditions on
// user-supplied data.  CLI maps these to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
    int line = 0;
    int column = 0;
    std::string expected;
    ParseError(int l, int c, const std::string& msg, std::string exp = {})
        : InputError("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg +
                     (exp.empty() ? "" : " (expected " + exp + ")")),
          line(l), column(c), expected(std::move(exp)) {}
};

}  // namespace toric
