#include "kvf/report.hpp"

#include <json.hpp>
#include <sstream>

namespace kvf {

int RunReport::passed() const {
    int k = 0;
    for (const auto& r : records) k += r.verdict ? 1 : 0;
    return k;
}

int RunReport::failed() const { return int(records.size()) - passed(); }

std::string render_table(const RunReport& report) {
    std::ostringstream out;
    out << "kvf " << report.version << "  mode=" << report.mode << "  seed=" << report.seed
        << "\n";
    size_t wcheck = 5, wfam = 6, wlhs = 3, wrhs = 3;
    for (const auto& r : report.records) {
        wcheck = std::max(wcheck, r.check.size());
        wfam = std::max(wfam, r.family.size());
        wlhs = std::max(wlhs, r.lhs.size());
        wrhs = std::max(wrhs, r.rhs.size());
    }
    auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };
    for (const auto& r : report.records) {
        std::string params;
        if (!r.n.empty()) params += "n=" + r.n + " ";
        if (!r.t.empty()) params += "t=" + r.t + " ";
        if (!r.s.empty()) params += "s=" + r.s + " ";
        out << (r.verdict ? "[pass] " : "[FAIL] ") << pad(r.suite, 9) << pad(r.check, wcheck + 2)
            << pad(r.family, wfam + 2) << pad(params, 18) << "lhs=" << pad(r.lhs, wlhs + 2)
            << "rhs=" << pad(r.rhs, wrhs + 2) << r.anchor;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
    }
    out << report.passed() << " passed, " << report.failed() << " failed, "
        << report.records.size() << " total\n";
    return out.str();
}

std::string render_json(const RunReport& report) {
    nlohmann::json j;
    j["version"] = report.version;
    j["mode"] = report.mode;
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    j["records"] = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json rec;
        rec["suite"] = r.suite;
        rec["check"] = r.check;
        rec["family"] = r.family;
        rec["n"] = r.n;
        rec["t"] = r.t;
        rec["s"] = r.s;
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["verdict"] = r.verdict;
        rec["anchor"] = r.anchor;
        rec["detail"] = r.detail;
        j["records"].push_back(rec);
    }
    return j.dump(2);
}

}  // namespace kvf
