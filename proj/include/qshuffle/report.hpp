#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qshuffle {

struct RunConfig {
    std::uint64_t seed = 20240815;
    int trials = 5;
    long bound = 1000;
    int resample_budget = 20;
    int parallelism = 1;

    nlohmann::json to_json() const {
        return {{"seed", seed},
                {"trials", trials},
                {"bound", bound},
                {"resample_budget", resample_budget},
                {"parallelism", parallelism}};
    }
};

struct CheckRecord {
    std::string name;
    std::string anchor;  // which identity/claim this record verifies
    nlohmann::json params;
    int trials = 0;
    bool passed = false;
    bool skipped = false;
    std::string witness;  // failure details or skip note

    nlohmann::json to_json() const {
        nlohmann::json j{{"name", name},       {"anchor", anchor}, {"params", params},
                         {"trials", trials},   {"passed", passed}, {"skipped", skipped}};
        if (!witness.empty()) j["witness"] = witness;
        return j;
    }
};

struct Report {
    std::string command;
    RunConfig config;
    std::vector<CheckRecord> checks;
    double wall_ms = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed && !c.skipped) return false;
        return true;
    }

    nlohmann::json to_json() const {
        int pass = 0, fail = 0, skip = 0;
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : checks) {
            cs.push_back(c.to_json());
            if (c.skipped) {
                ++skip;
            } else if (c.passed) {
                ++pass;
            } else {
                ++fail;
            }
        }
        return {{"version", 1},
                {"command", command},
                {"config", config.to_json()},
                {"checks", cs},
                {"summary", {{"total", checks.size()}, {"passed", pass}, {"failed", fail},
                             {"skipped", skip}}},
                {"wall_ms", wall_ms}};
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qshuffle
