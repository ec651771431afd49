#pragma once

/**
 * @file cli.hpp
 * @brief The meanprop command line, callable in-process.
 *
 * Exit codes: 0 success, 1 a verification failed, 2 usage or domain error.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace meanprop::cli {

// Defaults read from MEANPROP_DIGITS and MEANPROP_GUARD; flags win.
struct Environment {
    std::optional<std::string> digits;
    std::optional<std::string> guard;

    static Environment from_process();
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace meanprop::cli
