#include "sci/substation.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "sci/errors.hpp"

namespace sci {

const char* to_string(ArrangementKind kind) {
    switch (kind) {
        case ArrangementKind::Mtba: return "MTBA";
        case ArrangementKind::Rba: return "RBA";
        case ArrangementKind::Sba: return "SBA";
    }
    return "?";
}

ArrangementKind arrangement_kind_from_string(const std::string& s) {
    if (s == "MTBA") return ArrangementKind::Mtba;
    if (s == "RBA") return ArrangementKind::Rba;
    if (s == "SBA") return ArrangementKind::Sba;
    throw ValidationError("unknown arrangement kind: " + s);
}

const char* to_string(BranchRole role) {
    switch (role) {
        case BranchRole::Source: return "source";
        case BranchRole::Load: return "load";
        case BranchRole::Tie: return "tie";
    }
    return "?";
}

BranchRole branch_role_from_string(const std::string& s) {
    if (s == "source") return BranchRole::Source;
    if (s == "load") return BranchRole::Load;
    if (s == "tie") return BranchRole::Tie;
    throw ValidationError("unknown branch role: " + s);
}

bool SubstationSpec::has_node(const std::string& id) const {
    return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
}

const Branch* SubstationSpec::find_branch(const std::string& id) const {
    for (const auto& b : branches) {
        if (b.id == id) return &b;
    }
    return nullptr;
}

const Breaker* SubstationSpec::find_breaker(const std::string& id) const {
    for (const auto& b : breakers) {
        if (b.id == id) return &b;
    }
    return nullptr;
}

int SubstationSpec::breaker_index(const std::string& id) const {
    for (std::size_t i = 0; i < breakers.size(); ++i) {
        if (breakers[i].id == id) return static_cast<int>(i);
    }
    return -1;
}

const MeasurementChannel* SubstationSpec::find_channel(ChannelKind kind,
                                                       const std::string& target) const {
    for (const auto& c : channels) {
        if (c.kind == kind && c.target == target) return &c;
    }
    return nullptr;
}

std::set<std::string> SubstationSpec::source_branches() const {
    std::set<std::string> out;
    for (const auto& b : branches) {
        if (b.role == BranchRole::Source) out.insert(b.id);
    }
    return out;
}

namespace {

void check_unique(const std::vector<std::string>& ids, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (id.empty()) throw ValidationError(std::string(what) + " id must not be empty");
        if (!seen.insert(id).second) {
            throw ValidationError(std::string("duplicate ") + what + " id: " + id);
        }
    }
}

void check_terminal(const SubstationSpec& spec, const Terminal& t, const std::string& breaker_id) {
    if (t.kind == Terminal::Kind::Node) {
        if (!spec.has_node(t.id)) {
            throw ValidationError("breaker " + breaker_id + " references unknown node " + t.id);
        }
    } else {
        if (spec.find_branch(t.id) == nullptr) {
            throw ValidationError("breaker " + breaker_id + " references unknown branch " + t.id);
        }
    }
}

void validate_mtba_shape(const SubstationSpec& spec) {
    if (spec.nodes.size() != 2) {
        throw ValidationError("MTBA spec must have exactly 2 nodes");
    }
    if (spec.branches.empty()) {
        throw ValidationError("MTBA spec must have at least one branch");
    }
    // Every branch is hard-wired to one common node (the transfer bus).
    const auto& attach0 = spec.branches.front().attach;
    if (!attach0) throw ValidationError("MTBA branches must be attached to the transfer bus");
    for (const auto& br : spec.branches) {
        if (!br.attach || *br.attach != *attach0) {
            throw ValidationError("MTBA branches must all attach to the same node");
        }
    }
    const std::string transfer = *attach0;
    const std::string main = spec.nodes[0] == transfer ? spec.nodes[1] : spec.nodes[0];
    if (!spec.has_node(transfer) || main == transfer) {
        throw ValidationError("MTBA attach node must be one of the two buses");
    }
    // One breaker per branch to the main bus, plus exactly one bus tie.
    std::size_t ties = 0;
    std::unordered_set<std::string> switched;
    for (const auto& bk : spec.breakers) {
        const bool node_node =
            bk.a.kind == Terminal::Kind::Node && bk.b.kind == Terminal::Kind::Node;
        if (node_node) {
            ++ties;
            continue;
        }
        const Terminal& branch_end = bk.a.kind == Terminal::Kind::Branch ? bk.a : bk.b;
        const Terminal& node_end = bk.a.kind == Terminal::Kind::Branch ? bk.b : bk.a;
        if (branch_end.kind != Terminal::Kind::Branch || node_end.kind != Terminal::Kind::Node ||
            node_end.id != main) {
            throw ValidationError("MTBA breaker " + bk.id +
                                  " must connect a branch terminal to the main bus");
        }
        if (!switched.insert(branch_end.id).second) {
            throw ValidationError("MTBA branch " + branch_end.id + " has multiple breakers");
        }
    }
    if (ties != 1) throw ValidationError("MTBA spec must have exactly one bus-tie breaker");
    if (switched.size() != spec.branches.size()) {
        throw ValidationError("MTBA spec must have one breaker per branch");
    }
}

void validate_rba_shape(const SubstationSpec& spec) {
    const std::size_t n = spec.nodes.size();
    if (n < 3) throw ValidationError("RBA spec must have at least 3 nodes");
    if (spec.breakers.size() != n) {
        throw ValidationError("RBA spec must have one breaker per bus-section");
    }
    // Breakers must join nodes into a single cycle: every node has degree 2.
    std::map<std::string, int> degree;
    for (const auto& bk : spec.breakers) {
        if (bk.a.kind != Terminal::Kind::Node || bk.b.kind != Terminal::Kind::Node) {
            throw ValidationError("RBA breaker " + bk.id + " must join two bus-sections");
        }
        if (bk.a.id == bk.b.id) {
            throw ValidationError("RBA breaker " + bk.id + " joins a node to itself");
        }
        ++degree[bk.a.id];
        ++degree[bk.b.id];
    }
    for (const auto& node : spec.nodes) {
        if (degree[node] != 2) {
            throw ValidationError("RBA node " + node + " must sit between exactly 2 breakers");
        }
    }
    // n edges, all degrees 2, n vertices: connectivity makes it one cycle.
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& bk : spec.breakers) {
        adj[bk.a.id].push_back(bk.b.id);
        adj[bk.b.id].push_back(bk.a.id);
    }
    std::unordered_set<std::string> seen;
    std::vector<std::string> stack{spec.nodes.front()};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        for (const auto& next : adj[cur]) stack.push_back(next);
    }
    if (seen.size() != n) {
        throw ValidationError("RBA breakers must form a single ring over all bus-sections");
    }
    for (const auto& br : spec.branches) {
        if (!br.attach) {
            throw ValidationError("RBA branch " + br.id + " must attach to a bus-section");
        }
    }
}

void validate_sba_shape(const SubstationSpec& spec) {
    if (spec.nodes.size() != 1) {
        throw ValidationError("SBA spec must have exactly 1 node");
    }
    if (spec.breakers.size() != spec.branches.size()) {
        throw ValidationError("SBA spec must have one breaker per branch");
    }
    std::unordered_set<std::string> switched;
    for (const auto& bk : spec.breakers) {
        const bool has_branch =
            bk.a.kind == Terminal::Kind::Branch || bk.b.kind == Terminal::Kind::Branch;
        const bool has_node = bk.a.kind == Terminal::Kind::Node || bk.b.kind == Terminal::Kind::Node;
        if (!has_branch || !has_node) {
            throw ValidationError("SBA breaker " + bk.id +
                                  " must connect a branch terminal to the bus");
        }
        const Terminal& branch_end = bk.a.kind == Terminal::Kind::Branch ? bk.a : bk.b;
        if (!switched.insert(branch_end.id).second) {
            throw ValidationError("SBA branch " + branch_end.id + " has multiple breakers");
        }
    }
    for (const auto& br : spec.branches) {
        if (br.attach) {
            throw ValidationError("SBA branch " + br.id +
                                  " must connect through its breaker, not a hard-wired attachment");
        }
    }
}

}  // namespace

void SubstationSpec::validate() const {
    if (substation_id.empty()) throw ValidationError("substation_id must not be empty");
    if (breakers.empty()) throw ValidationError("substation must have at least one breaker");

    check_unique(nodes, "node");
    std::vector<std::string> branch_ids, breaker_ids, channel_ids;
    for (const auto& b : branches) branch_ids.push_back(b.id);
    for (const auto& b : breakers) breaker_ids.push_back(b.id);
    for (const auto& c : channels) channel_ids.push_back(c.channel_id);
    check_unique(branch_ids, "branch");
    check_unique(breaker_ids, "breaker");
    check_unique(channel_ids, "channel");

    // Node and branch ids share the terminal address space.
    for (const auto& bid : branch_ids) {
        if (has_node(bid)) {
            throw ValidationError("id used for both a node and a branch: " + bid);
        }
    }

    for (const auto& br : branches) {
        if (br.attach && !has_node(*br.attach)) {
            throw ValidationError("branch " + br.id + " attaches to unknown node " + *br.attach);
        }
    }
    for (const auto& bk : breakers) {
        check_terminal(*this, bk.a, bk.id);
        check_terminal(*this, bk.b, bk.id);
    }
    for (const auto& ch : channels) {
        if (ch.kind == ChannelKind::BusVoltage && !has_node(ch.target)) {
            throw ValidationError("channel " + ch.channel_id + " targets unknown node " +
                                  ch.target);
        }
        if (ch.kind == ChannelKind::BranchCurrent && find_branch(ch.target) == nullptr) {
            throw ValidationError("channel " + ch.channel_id + " targets unknown branch " +
                                  ch.target);
        }
    }

    switch (kind) {
        case ArrangementKind::Mtba: validate_mtba_shape(*this); break;
        case ArrangementKind::Rba: validate_rba_shape(*this); break;
        case ArrangementKind::Sba: validate_sba_shape(*this); break;
    }
}

MtbaRoles mtba_roles(const SubstationSpec& spec) {
    if (spec.kind != ArrangementKind::Mtba || spec.nodes.size() != 2 || spec.branches.empty() ||
        !spec.branches.front().attach) {
        throw ValidationError("not a valid MTBA spec: " + spec.substation_id);
    }
    MtbaRoles roles;
    roles.transfer = *spec.branches.front().attach;
    roles.main = spec.nodes[0] == roles.transfer ? spec.nodes[1] : spec.nodes[0];
    for (const auto& bk : spec.breakers) {
        if (bk.a.kind == Terminal::Kind::Node && bk.b.kind == Terminal::Kind::Node) {
            roles.tie_breaker = bk.id;
            return roles;
        }
    }
    throw ValidationError("MTBA spec has no bus-tie breaker: " + spec.substation_id);
}

std::vector<RingPair> rba_ring_pairs(const SubstationSpec& spec) {
    if (spec.kind != ArrangementKind::Rba) {
        throw ValidationError("not an RBA spec: " + spec.substation_id);
    }
    std::vector<RingPair> pairs;
    pairs.reserve(spec.breakers.size());
    for (const auto& bk : spec.breakers) {
        if (bk.a.kind != Terminal::Kind::Node || bk.b.kind != Terminal::Kind::Node) {
            throw ValidationError("RBA breaker " + bk.id + " must join two bus-sections");
        }
        pairs.push_back({bk.id, bk.a.id, bk.b.id});
    }
    return pairs;
}

SubstationSpec make_mtba_spec(std::size_t branch_count) {
    SubstationSpec spec;
    spec.substation_id = "MTBA-5L";
    spec.kind = ArrangementKind::Mtba;
    spec.nodes = {"MAIN", "XFER"};
    for (std::size_t i = 1; i <= branch_count; ++i) {
        const std::string id = "L" + std::to_string(i);
        // First branch feeds the substation; the rest are loads.
        spec.branches.push_back(
            {id, "XFER", i == 1 ? BranchRole::Source : BranchRole::Load});
        spec.breakers.push_back(
            {"b" + std::to_string(i), Terminal::branch(id), Terminal::node("MAIN")});
    }
    spec.breakers.push_back({"tie", Terminal::node("MAIN"), Terminal::node("XFER")});
    spec.channels.push_back({"V_MAIN", ChannelKind::BusVoltage, "MAIN"});
    spec.channels.push_back({"V_XFER", ChannelKind::BusVoltage, "XFER"});
    return spec;
}

SubstationSpec make_rba_spec(std::size_t node_count) {
    SubstationSpec spec;
    spec.substation_id = "RBA-5";
    spec.kind = ArrangementKind::Rba;
    for (std::size_t i = 1; i <= node_count; ++i) {
        const std::string node = "N" + std::to_string(i);
        spec.nodes.push_back(node);
        // Ring substations serve lines into a meshed grid: every branch can
        // back-feed its bus-section, so all carry the source role.
        spec.branches.push_back({"B" + std::to_string(i), node, BranchRole::Source});
        spec.channels.push_back({"V_N" + std::to_string(i), ChannelKind::BusVoltage, node});
    }
    for (std::size_t i = 0; i < node_count; ++i) {
        const std::string id =
            i < 26 ? std::string(1, static_cast<char>('a' + i)) : "bk" + std::to_string(i + 1);
        spec.breakers.push_back({id, Terminal::node(spec.nodes[i]),
                                 Terminal::node(spec.nodes[(i + 1) % node_count])});
    }
    return spec;
}

SubstationSpec make_sba_spec(std::size_t branch_count) {
    SubstationSpec spec;
    spec.substation_id = "SBA-6";
    spec.kind = ArrangementKind::Sba;
    spec.nodes = {"BUS"};
    spec.channels.push_back({"V_BUS", ChannelKind::BusVoltage, "BUS"});
    for (std::size_t i = 1; i <= branch_count; ++i) {
        const std::string id = "B" + std::to_string(i);
        // Grid-side lines: any connected branch can energize the bus.
        spec.branches.push_back({id, std::nullopt, BranchRole::Source});
        spec.breakers.push_back(
            {"s" + std::to_string(i), Terminal::branch(id), Terminal::node("BUS")});
        spec.channels.push_back({"I_" + id, ChannelKind::BranchCurrent, id});
    }
    return spec;
}

}  // namespace sci
