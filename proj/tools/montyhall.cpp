#include "montyhall/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    montyhall::CliEnvironment env;
    if (const char* seed = std::getenv("MONTY_SEED")) env.default_seed = seed;
    return montyhall::run_cli(args, std::cout, std::cerr, env);
}
