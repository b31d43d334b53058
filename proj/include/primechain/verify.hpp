#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Property and acceptance checks, grouped into suites. Every module has a
// suite; "acceptance" holds the numbered criteria A1..A11 and "all" runs
// everything.
namespace primechain::verify {

struct Check {
    std::string id;    // e.g. "A3" or "pratt.fermat"
    std::string suite;
    std::string title;
    bool passed = false;
    bool report_only = false; // monitored quantity; never fails
    std::string detail;
    double seconds = 0;
};

struct Options {
    unsigned threads = 1;
    std::uint64_t seed = 1;
    std::function<void(const Check&)> on_check; // called as each check finishes
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite.
std::vector<Check> run(const std::string& suite, const Options& opt = {});

bool all_passed(const std::vector<Check>& checks);

/// One line: "PASS id  title  (detail, 1.23 s)".
std::string format_line(const Check& c);

} // namespace primechain::verify
