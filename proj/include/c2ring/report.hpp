#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace c2ring {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on pass, short diagnosis on failure
};

struct CheckReport {
    std::vector<CheckResult> results;

    void add(std::string name, bool ok, std::string detail = "") {
        results.push_back({std::move(name), ok, std::move(detail)});
    }
    void merge(CheckReport other) {
        for (auto& r : other.results) results.push_back(std::move(r));
    }
    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& r : results)
            if (!r.passed) ++n;
        return n;
    }
};

}  // namespace c2ring
