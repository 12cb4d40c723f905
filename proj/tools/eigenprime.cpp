#include <iostream>

#include "eigenprime/cli.hpp"

int main(int argc, char** argv) {
    using namespace eigenprime::cli;
    const ParseOutcome parsed = parse_args(argc, argv, threads_from_env());
    if (!parsed.config) {
        (parsed.exit_code == kExitOk ? std::cout : std::cerr) << parsed.message << '\n';
        return parsed.exit_code;
    }
    return run(*parsed.config, std::cout, std::cerr);
}
