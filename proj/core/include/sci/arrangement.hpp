#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sci {

/// Breaker-status bit vector ordered as SubstationSpec.breakers;
/// true = closed.
struct ComponentArrangement {
    std::vector<bool> closed;

    std::size_t size() const { return closed.size(); }

    /// "1011" with character i giving breakers[i]; '1' = closed.
    std::string bits() const;
    static ComponentArrangement from_bits(const std::string& bits);  // throws ValidationError

    bool operator==(const ComponentArrangement&) const = default;
};

/// Electrical-connectivity result in canonical form: node groups sorted
/// internally and ordered by their leading member, a per-branch connection
/// map, and per-group energization flags aligned with the group order.
/// Equality of two FAs is structural equality of these three fields.
struct FunctionalArrangement {
    std::vector<std::vector<std::string>> groups;
    std::map<std::string, bool> branch_connected;
    std::vector<bool> group_energized;

    bool operator==(const FunctionalArrangement&) const = default;

    /// Index of the group containing `node`, or -1.
    int group_of(const std::string& node) const;

    /// Stable one-line rendering; two FAs are equal iff they render identically.
    std::string canonical_string() const;

    /// 16-hex-digit FNV-1a hash of canonical_string(); the stream files'
    /// fa_id column.
    std::string id() const;
};

/// Sorts group members, orders groups by leading member and keeps the
/// energization flags aligned. All FA producers funnel through this so that
/// structural equality is meaningful.
FunctionalArrangement canonical_fa(std::vector<std::vector<std::string>> groups,
                                   std::map<std::string, bool> branch_connected,
                                   std::vector<bool> group_energized);

std::uint64_t fnv1a64(std::string_view s);

}  // namespace sci
