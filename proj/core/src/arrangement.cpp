#include "sci/arrangement.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "sci/errors.hpp"

namespace sci {

std::string ComponentArrangement::bits() const {
    std::string s;
    s.reserve(closed.size());
    for (bool b : closed) s.push_back(b ? '1' : '0');
    return s;
}

ComponentArrangement ComponentArrangement::from_bits(const std::string& bits) {
    ComponentArrangement ca;
    ca.closed.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ValidationError("arrangement bits must be 0 or 1: " + bits);
        }
        ca.closed.push_back(c == '1');
    }
    if (ca.closed.empty()) throw ValidationError("arrangement bits must not be empty");
    return ca;
}

int FunctionalArrangement::group_of(const std::string& node) const {
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (std::find(groups[g].begin(), groups[g].end(), node) != groups[g].end()) {
            return static_cast<int>(g);
        }
    }
    return -1;
}

std::string FunctionalArrangement::canonical_string() const {
    std::ostringstream out;
    out << "g:";
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (g) out << '|';
        for (std::size_t i = 0; i < groups[g].size(); ++i) {
            if (i) out << ',';
            out << groups[g][i];
        }
    }
    out << ";b:";
    bool first = true;
    for (const auto& [branch, connected] : branch_connected) {
        if (!first) out << ',';
        first = false;
        out << branch << '=' << (connected ? '1' : '0');
    }
    out << ";e:";
    for (std::size_t g = 0; g < group_energized.size(); ++g) {
        if (g) out << ',';
        out << (group_energized[g] ? '1' : '0');
    }
    return out.str();
}

std::string FunctionalArrangement::id() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_string())));
    return buf;
}

FunctionalArrangement canonical_fa(std::vector<std::vector<std::string>> groups,
                                   std::map<std::string, bool> branch_connected,
                                   std::vector<bool> group_energized) {
    if (groups.size() != group_energized.size()) {
        throw ValidationError("group count and energization flag count differ");
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());

    std::vector<std::size_t> order(groups.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return groups[a].front() < groups[b].front();
    });

    FunctionalArrangement fa;
    fa.branch_connected = std::move(branch_connected);
    fa.groups.reserve(groups.size());
    fa.group_energized.reserve(groups.size());
    for (std::size_t idx : order) {
        fa.groups.push_back(std::move(groups[idx]));
        fa.group_energized.push_back(group_energized[idx]);
    }
    return fa;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace sci
