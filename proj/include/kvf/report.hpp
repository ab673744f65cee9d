#pragma once

#include <string>
#include <vector>

namespace kvf {

inline constexpr const char* kToolVersion = "0.1.0";

// One verification record. Exact quantities are printed as rationals, numeric
// ones as decimals; `anchor` names the identity or bound being exercised.
struct CheckRecord {
    std::string suite;
    std::string check;
    std::string family;
    std::string n;
    std::string t;
    std::string s;
    std::string lhs;
    std::string rhs;
    bool verdict = false;
    std::string anchor;
    std::string detail;
};

struct RunReport {
    std::string version = kToolVersion;
    std::string mode = "numeric";
    unsigned long long seed = 0;
    std::vector<CheckRecord> records;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void append(const std::vector<CheckRecord>& rs) {
        records.insert(records.end(), rs.begin(), rs.end());
    }
};

std::string render_table(const RunReport& report);
std::string render_json(const RunReport& report);

}  // namespace kvf
