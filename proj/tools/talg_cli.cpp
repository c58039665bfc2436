#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "talg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto start = std::chrono::steady_clock::now();
    const int code = talg::run_cli(args, std::cout, std::cerr);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed " << elapsed.count() << " ms\n";
    return code;
}
