// Acceptance criteria A1..A11, one line each.
#include "primechain/verify.hpp"

#include <iostream>
#include <thread>

int main()
{
    primechain::verify::Options opt;
    opt.threads = std::max(1u, std::thread::hardware_concurrency());
    opt.seed = 1;
    opt.on_check = [](const primechain::verify::Check& c) {
        std::cout << primechain::verify::format_line(c) << std::endl;
    };
    const auto checks = primechain::verify::run("acceptance", opt);
    std::size_t passed = 0;
    for (const auto& c : checks)
        passed += c.passed;
    std::cout << passed << "/" << checks.size() << " acceptance criteria passed" << std::endl;
    return passed == checks.size() ? 0 : 1;
}
