#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irratio/irrationality.hpp"

namespace irratio {

inline constexpr const char* kSchemaVersion = "1";

struct WitnessInfo {
    std::string x;
    uint64_t k = 0;
    std::string g;
};

inline WitnessInfo witness_info(const Witness& w) {
    return {w.x.str(), w.k, w.g.str()};
}

struct SuiteItem {
    std::string desc;
    std::string spec;
    std::string expected;
    std::string observed;
    bool pass = false;
    bool skipped = false;
    bool optional_item = false;
    std::optional<WitnessInfo> witness;
    int64_t millis = 0;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteItem> items;
    bool pass = true;
    int64_t millis = 0;

    void recompute() {
        pass = true;
        for (const SuiteItem& it : items)
            if (!it.pass && !(it.skipped && it.optional_item)) pass = false;
    }
};

inline nlohmann::ordered_json to_json(const SuiteItem& it) {
    nlohmann::ordered_json j;
    j["desc"] = it.desc;
    j["spec"] = it.spec;
    j["expected"] = it.expected;
    j["observed"] = it.observed;
    j["pass"] = it.pass;
    if (it.skipped) {
        j["skipped"] = true;
        j["optional"] = it.optional_item;
    }
    if (it.witness) {
        j["witness"] = {{"x", it.witness->x}, {"k", it.witness->k}, {"g", it.witness->g}};
    }
    j["millis"] = it.millis;
    return j;
}

inline nlohmann::ordered_json to_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.name;
    j["items"] = nlohmann::ordered_json::array();
    for (const SuiteItem& it : r.items) j["items"].push_back(to_json(it));
    j["pass"] = r.pass;
    j["millis"] = r.millis;
    j["version"] = kSchemaVersion;
    return j;
}

inline std::string to_text(const SuiteResult& r) {
    std::string out = "suite " + r.name + "\n";
    for (const SuiteItem& it : r.items) {
        out += it.skipped ? (it.optional_item ? "  [skip]" : "  [SKIP]")
                          : (it.pass ? "  [ ok ]" : "  [FAIL]");
        out += " " + it.desc;
        if (!it.spec.empty()) out += "  {" + it.spec + "}";
        if (!it.pass && !it.skipped)
            out += "\n          expected " + it.expected + ", observed " + it.observed;
        if (it.skipped) out += "\n          skipped: " + it.observed;
        if (it.witness)
            out += "\n          witness: x=" + it.witness->x + " k=" + std::to_string(it.witness->k) +
                   " g=" + it.witness->g;
        out += "\n";
    }
    out += r.pass ? "PASS" : "FAIL";
    out += " (" + std::to_string(r.millis) + " ms)\n";
    return out;
}

inline nlohmann::ordered_json to_json(const IrrationalityReport& rep, const std::string& spec,
                                      uint64_t order) {
    nlohmann::ordered_json j;
    j["spec"] = spec;
    j["order"] = order;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& row : rep.rows) {
        nlohmann::ordered_json r;
        r["rep"] = row.rep.str();
        r["order"] = row.order;
        r["class_size"] = row.class_size;
        r["B"] = row.B;
        r["field_degree"] = row.field_degree;
        r["real"] = row.real;
        j["rows"].push_back(std::move(r));
    }
    j["prime_verdicts"] = nlohmann::ordered_json::object();
    for (auto [p, v] : rep.prime_verdicts) j["prime_verdicts"][std::to_string(p)] = v;
    j["irrational"] = rep.irrational;
    if (rep.witness) {
        WitnessInfo w = witness_info(*rep.witness);
        j["witness"] = {{"x", w.x}, {"k", w.k}, {"g", w.g}};
    }
    j["version"] = kSchemaVersion;
    return j;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    int64_t millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace irratio
