#pragma once

#include "nalg/variety.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace nalg {

enum class CheckKind { dimension, consequence, basis, kernel, generates, leading_words };
const char* to_string(CheckKind k);

struct CheckResult {
    enum class Status { pass, fail, error };
    Status status = Status::error;
    std::string expected;
    std::string actual;
    std::string details;
};

// One named reproducible check with an explicit expected outcome.
struct CheckSpec {
    std::string name; // unique within a suite
    CheckKind kind = CheckKind::dimension;
    int criterion = 0; // acceptance criterion this check belongs to
    std::string description;
    std::function<CheckResult(Engine&)> run;
};

struct Suite {
    std::string name;
    std::vector<CheckSpec> checks;
};

// Built-in suites: paper-sec2, paper-sec3, paper-sec4 (the reproduction
// checks, grouped by the section of the source material they reproduce) and
// smoke (a fast subset for CI-style runs).
const std::vector<Suite>& builtin_suites();
const Suite& builtin_suite(const std::string& name);
std::vector<std::string> suite_names();

struct CheckRecord {
    std::string suite;
    std::string name;
    CheckKind kind = CheckKind::dimension;
    int criterion = 0;
    std::string description;
    CheckResult result;
    std::int64_t millis = 0;
};

struct RunReport {
    std::vector<CheckRecord> records;

    int passed() const;
    int failed() const;
    int errored() const;
    bool all_passed() const { return failed() == 0 && errored() == 0; }
};

// Executes the suite in order, optionally streaming one human-readable line
// per check (with timings). Timings never enter the machine records.
RunReport run_suite(Engine& eng, const Suite& suite, std::ostream* human);

// One-line machine record; deliberately timing-free so reports are
// byte-identical across worker counts.
std::string record_json(const CheckRecord& r);

} // namespace nalg
