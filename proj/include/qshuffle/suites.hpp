#pragma once

#include <array>
#include <string>
#include <vector>

#include "qshuffle/fusion.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

/// sizes for the verification suites; defaults match the shipped acceptance run
struct SuiteOptions {
    RunConfig cfg;
    int max_mn = 3;  // identity suite: M, N range
    int max_c = 3;
    std::vector<std::array<int, 3>> structural_set = {
        {2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {2, 0, 2}, {3, 0, 1}, {1, 0, 3}};
    int membership_points = 3;
    std::vector<std::array<int, 2>> comm_sigs = {{1, 0}, {2, 0}, {3, 0}, {2, 1}};
    int comm_max_N = 2;
    int comm_max_r = 3;
    int series_order = 4;
    int series_points = 3;
    FusionVariant fusion_variant = FusionVariant::corrected;
};

std::vector<CheckRecord> suite_identities(const SuiteOptions& opt);
std::vector<CheckRecord> suite_wheel(const SuiteOptions& opt);
std::vector<CheckRecord> suite_membership(const SuiteOptions& opt);
std::vector<CheckRecord> suite_commutativity(const SuiteOptions& opt);
std::vector<CheckRecord> suite_example211(const SuiteOptions& opt);
std::vector<CheckRecord> suite_fusion(const SuiteOptions& opt);
std::vector<CheckRecord> suite_classical(const SuiteOptions& opt);
std::vector<CheckRecord> suite_series(const SuiteOptions& opt);

/// dispatch by suite name; "all" concatenates every suite
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qshuffle
