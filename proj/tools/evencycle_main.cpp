#include <iostream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "evencycle/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    evencycle::CliHooks hooks;
    hooks.accept = [](const std::string& tier, std::ostream& out) { return evencycle::acceptance::run(tier, out); };
    return evencycle::run_cli(args, std::cout, std::cerr, hooks);
}
