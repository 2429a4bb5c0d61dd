// Copyright 2026 The dfsgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace dfsgate {

enum class RegimeStatus { pass = 0, warn = 1, violation = 2 };

inline const char* to_string(RegimeStatus status) {
    switch (status) {
        case RegimeStatus::pass: return "pass";
        case RegimeStatus::warn: return "warn";
        case RegimeStatus::violation: return "violation";
    }
    return "?";
}

/// One advisory condition. For "a << b" style conditions `ratio` is a/b and
/// passes when it does not exceed `threshold`.
struct RegimeCheck {
    std::string name;
    double ratio = 0.0;
    double threshold = 0.0;
    RegimeStatus status = RegimeStatus::pass;
    std::string note;
};

struct RegimeReport {
    std::vector<RegimeCheck> checks;

    RegimeStatus worst() const {
        RegimeStatus w = RegimeStatus::pass;
        for (const auto& c : checks) w = std::max(w, c.status);
        return w;
    }

    bool all_pass() const { return worst() == RegimeStatus::pass; }

    const RegimeCheck* find(const std::string& name) const {
        for (const auto& c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }

    /// "much less than" check: ratio = small/large. A non-finite ratio
    /// (large == 0) is a hard violation.
    void much_less(std::string name, double small, double large, double threshold, std::string note = {}) {
        RegimeCheck c{std::move(name), 0.0, threshold, RegimeStatus::pass, std::move(note)};
        if (large == 0.0) {
            c.ratio = small == 0.0 ? 0.0 : INFINITY;
            c.status = small == 0.0 ? RegimeStatus::pass : RegimeStatus::violation;
        } else {
            c.ratio = std::abs(small / large);
            if (!std::isfinite(c.ratio)) {
                c.status = RegimeStatus::violation;
            } else if (c.ratio > threshold) {
                c.status = RegimeStatus::warn;
            }
        }
        checks.push_back(std::move(c));
    }

    void add(std::string name, double ratio, double threshold, RegimeStatus status, std::string note = {}) {
        checks.push_back(RegimeCheck{std::move(name), ratio, threshold, status, std::move(note)});
    }
};

inline std::ostream& operator<<(std::ostream& out, const RegimeReport& report) {
    char line[256];
    for (const auto& c : report.checks) {
        std::snprintf(line, sizeof line, "%-10s %-34s ratio=%-12.6g threshold=%-8.3g", to_string(c.status),
                      c.name.c_str(), c.ratio, c.threshold);
        out << line;
        if (!c.note.empty()) out << "  " << c.note;
        out << '\n';
    }
    out << "overall: " << to_string(report.worst()) << '\n';
    return out;
}

}  // namespace dfsgate
