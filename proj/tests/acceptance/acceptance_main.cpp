// Acceptance gate: runs the three reproduction suites through the CLI at
// worker counts 1, 4 and 8, aggregates the per-check verdicts into the
// numbered acceptance criteria, enforces the stated runtime budgets, and
// checks that the machine reports are byte-identical across worker counts.
// Prints one PASS/FAIL line per criterion. Run as:
//   acceptance <path-to-nalg-binary>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CheckLine {
    std::string name;
    int criterion = 0;
    bool pass = false;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// minimal field scraping; the records are single-line flat json objects
std::string json_str(const std::string& line, const std::string& key)
{
    std::string pat = "\"" + key + "\":\"";
    auto p = line.find(pat);
    if (p == std::string::npos)
        return "";
    p += pat.size();
    auto e = line.find('"', p);
    return line.substr(p, e - p);
}

long json_int(const std::string& line, const std::string& key)
{
    std::string pat = "\"" + key + "\":";
    auto p = line.find(pat);
    if (p == std::string::npos)
        return -1;
    p += pat.size();
    return std::strtol(line.c_str() + p, nullptr, 10);
}

int run(const std::string& cmd)
{
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const char* criterion_title(int n)
{
    switch (n) {
    case 1: return "dimension table of the binary-perm components";
    case 2: return "dimension sandwich between perm and binary-perm at degrees 5 and 6";
    case 3: return "derived product-splitting and transposition identities are consequences";
    case 4: return "pattern bases verify at degrees 3 through 6";
    case 5: return "two-letter components of binary-perm match perm up to degree 6";
    case 6: return "rule rewriter agrees with the echelon normal form";
    case 7: return "commutator/anti-commutator identities hold in the derived algebras";
    case 8: return "generation and independence of the derived identity set";
    case 9: return "bracket-word tail-form resolution";
    case 10: return "good words, leading words and the nap derived algebras";
    case 11: return "metabelian regression for perm under the commutator";
    case 12: return "byte-identical machine reports across 1, 4 and 8 worker threads";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <nalg binary>\n";
        return 2;
    }
    const std::string nalg = argv[1];
    fs::path tmp = fs::temp_directory_path() / "nalg_acceptance";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    fs::path r1 = tmp / "r1.jsonl", r4 = tmp / "r4.jsonl", r8 = tmp / "r8.jsonl";
    fs::path t1 = tmp / "t1.txt";
    fs::path log1 = tmp / "run1.log";

    std::cout << "running suites with 1 worker thread..." << std::endl;
    int rc1 = run(nalg + " --threads 1 repro --all --json " + r1.string() + " --timings " +
                  t1.string() + " > " + log1.string() + " 2>&1");
    std::cout << slurp(log1);
    std::cout << "running suites with 4 worker threads..." << std::endl;
    int rc4 = run(nalg + " --threads 4 repro --all --json " + r4.string() + " > /dev/null 2>&1");
    std::cout << "running suites with 8 worker threads..." << std::endl;
    int rc8 = run(nalg + " --threads 8 repro --all --json " + r8.string() + " > /dev/null 2>&1");

    // Documented discrepancies: two literal claims of the reproduced
    // material are falsified by the engine; the corresponding repaired
    // statements are checked alongside and must pass. The literal checks
    // stay in the suites and report fail; acceptance treats exactly these
    // two failures (with their pinned diagnoses) as documented.
    struct Documented {
        std::string check;        // suite/name
        std::string detail_pin;   // substring the failure details must carry
        std::string repair_check; // informational check that must pass instead
        std::string note;
    };
    const std::vector<Documented> documented = {
        {"paper-sec3/generates-c1c2-deg4", "gap 3", "paper-sec3/generates-c1c2-metab-deg4",
         "the minus algebra is metabelian; {anticom, metabelian law, c1, c2} generate exactly"},
        {"paper-sec4/leading-words-deg-le-5", "good word", "paper-sec4/leading-words-right-order",
         "the leading-word property needs goodness in the same right-first order"},
    };

    // collect verdicts per criterion from the threads-1 run
    std::map<int, bool> criterion_pass;
    std::map<int, int> criterion_checks;
    std::map<std::string, std::string> status_of, details_of;
    std::map<int, std::vector<std::string>> documented_notes;
    for (int n = 1; n <= 11; ++n)
        criterion_pass[n] = true;
    {
        std::istringstream in(slurp(r1));
        std::string line;
        while (std::getline(in, line)) {
            if (line.find("\"check\"") == std::string::npos)
                continue;
            std::string key = json_str(line, "suite") + "/" + json_str(line, "check");
            status_of[key] = json_str(line, "status");
            details_of[key] = json_str(line, "details");
            int crit = static_cast<int>(json_int(line, "criterion"));
            if (crit < 1 || crit > 11)
                continue;
            bool is_documented = false;
            for (const auto& d : documented)
                if (d.check == key && status_of[key] == "fail" &&
                    details_of[key].find(d.detail_pin) != std::string::npos) {
                    is_documented = true;
                    documented_notes[crit].push_back(d.note);
                }
            ++criterion_checks[crit];
            if (status_of[key] != "pass" && !is_documented)
                criterion_pass[crit] = false;
        }
    }
    // every criterion must actually have been exercised
    for (int n = 1; n <= 11; ++n)
        if (criterion_checks[n] == 0)
            criterion_pass[n] = false;
    // a documented failure only stands if its repaired variant passes
    for (const auto& d : documented) {
        if (status_of.count(d.check) && status_of[d.check] == "fail" &&
            (!status_of.count(d.repair_check) || status_of[d.repair_check] != "pass")) {
            std::cout << "documented discrepancy " << d.check
                      << " lacks a passing repaired check (" << d.repair_check << ")\n";
            criterion_pass[1] = criterion_pass[1] && false; // surface as a hard failure
        }
    }

    // runtime budgets from the stated criteria, measured on the 1-thread run
    std::map<std::string, long> millis;
    {
        std::istringstream in(slurp(t1));
        std::string name;
        long ms;
        while (in >> name >> ms)
            millis[name] = ms;
    }
    auto budget_group = [&](std::vector<std::string> names, long limit, int crit,
                            const std::string& label) {
        long total = 0;
        for (const auto& n : names) {
            auto it = millis.find(n);
            if (it == millis.end()) {
                criterion_pass[crit] = false;
                std::cout << "missing timing for " << n << "\n";
                return;
            }
            total += it->second;
        }
        if (total > limit) {
            criterion_pass[crit] = false;
            std::cout << "budget exceeded: " << label << " took " << total << " ms (limit "
                      << limit << " ms)\n";
        }
    };
    budget_group({"paper-sec2/dim-binary-perm-111", "paper-sec2/dim-binary-perm-21",
                  "paper-sec2/dim-binary-perm-3", "paper-sec2/dim-binary-perm-1111",
                  "paper-sec2/dim-binary-perm-deg4-sweep"},
                 1000, 1, "degree <= 4 dimension table");
    budget_group({"paper-sec2/dim-binary-perm-multilinear-5"}, 30000, 1,
                 "multilinear degree-5 dimension");
    budget_group({"paper-sec2/dim-binary-perm-multilinear-6"}, 900000, 1,
                 "multilinear degree-6 dimension");
    budget_group({"paper-sec2/lemma-v1", "paper-sec2/lemma-v2a", "paper-sec2/lemma-v2b",
                  "paper-sec2/lemma-v3", "paper-sec2/lemma-v4", "paper-sec2/lemma-v5"},
                 10000, 3, "lemma identity checks");
    budget_group({"paper-sec3/generates-c1c2-deg5"}, 1200000, 8,
                 "multilinear degree-5 generation");

    // criterion 12: byte-identical reports across worker counts
    bool det = rc1 == rc4 && rc4 == rc8;
    std::string b1 = slurp(r1), b4 = slurp(r4), b8 = slurp(r8);
    det = det && !b1.empty() && b1 == b4 && b1 == b8;

    int failures = 0;
    for (int n = 1; n <= 11; ++n) {
        bool ok = criterion_pass[n];
        failures += !ok;
        bool doc = documented_notes.count(n) > 0;
        std::printf("[%s] criterion %2d: %s (%d checks)\n",
                    ok ? (doc ? "PASS*" : "PASS") : "FAIL", n, criterion_title(n),
                    criterion_checks[n]);
        if (doc)
            for (const auto& note : documented_notes[n])
                std::printf("        * literal claim fails as stated; %s (see README, "
                            "Known discrepancies)\n",
                            note.c_str());
    }
    failures += !det;
    std::printf("[%s] criterion 12: %s\n", det ? "PASS" : "FAIL", criterion_title(12));

    if (failures) {
        std::cout << failures << " acceptance criteria failed\n";
        return 1;
    }
    std::cout << "acceptance: all 12 criteria passed (starred ones via the documented "
                 "repaired variants)\n";
    return 0;
}
