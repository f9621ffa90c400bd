#pragma once

#include <stdexcept>
#include <string>

namespace linsys {

// Error taxonomy shared by the library and the CLI exit codes:
//   parse_error        -> exit 1 (bad input file / literal)
//   precondition_error -> exit 2 (mathematical precondition violated)
//   internal_error     -> exit 3 (cross-method disagreement or broken invariant;
//                         indicates a bug, never valid-input behavior)

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
    parse_error(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")") {}
};

struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace linsys
