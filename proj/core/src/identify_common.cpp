#include "identify_common.hpp"

#include "sci/errors.hpp"
#include "sci/union_find.hpp"

namespace sci::detail {

const Phasor& node_voltage(const SubstationSpec& spec, const PmuFrame& frame,
                           const std::string& node) {
    const MeasurementChannel* ch = spec.find_channel(ChannelKind::BusVoltage, node);
    if (ch == nullptr) {
        throw IdentifyError("spec " + spec.substation_id + " has no voltage channel for node " +
                            node);
    }
    return frame.at(ch->channel_id);
}

const Phasor& branch_current(const SubstationSpec& spec, const PmuFrame& frame,
                             const std::string& branch) {
    const MeasurementChannel* ch = spec.find_channel(ChannelKind::BranchCurrent, branch);
    if (ch == nullptr) {
        throw IdentifyError("spec " + spec.substation_id + " has no current channel for branch " +
                            branch);
    }
    return frame.at(ch->channel_id);
}

namespace {

// Branches with a hard-wired attachment are always connected; the switched
// connectivity lives entirely in the decisions the callers pass in.
std::map<std::string, bool> attached_branch_map(const SubstationSpec& spec) {
    std::map<std::string, bool> out;
    for (const auto& branch : spec.branches) out[branch.id] = branch.attach.has_value();
    return out;
}

}  // namespace

FunctionalArrangement assemble_rba_fa(const SubstationSpec& spec,
                                      const std::vector<bool>& pair_connected,
                                      const std::map<std::string, bool>& node_energized) {
    UnionFind uf(spec.nodes.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) index[spec.nodes[i]] = i;

    const auto pairs = rba_ring_pairs(spec);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pair_connected[i]) uf.unite(index.at(pairs[i].node_x), index.at(pairs[i].node_y));
    }

    std::map<std::size_t, std::vector<std::string>> by_root;
    std::map<std::size_t, bool> root_energized;
    for (const auto& node : spec.nodes) {
        const std::size_t root = uf.find(index.at(node));
        by_root[root].push_back(node);
        if (node_energized.at(node)) root_energized[root] = true;
    }

    std::vector<std::vector<std::string>> groups;
    std::vector<bool> energized;
    for (auto& [root, members] : by_root) {
        groups.push_back(std::move(members));
        energized.push_back(root_energized.count(root) > 0);
    }
    return canonical_fa(std::move(groups), attached_branch_map(spec), std::move(energized));
}

FunctionalArrangement assemble_mtba_fa(const SubstationSpec& spec, bool tied, bool main_energized,
                                       bool transfer_energized) {
    const MtbaRoles roles = mtba_roles(spec);
    std::vector<std::vector<std::string>> groups;
    std::vector<bool> energized;
    if (tied) {
        groups.push_back({roles.main, roles.transfer});
        energized.push_back(main_energized || transfer_energized);
    } else {
        groups.push_back({roles.main});
        energized.push_back(main_energized);
        groups.push_back({roles.transfer});
        energized.push_back(transfer_energized);
    }
    return canonical_fa(std::move(groups), attached_branch_map(spec), std::move(energized));
}

FunctionalArrangement assemble_sba_fa(const SubstationSpec& spec,
                                      const std::map<std::string, bool>& branch_connected,
                                      bool bus_energized) {
    std::vector<std::vector<std::string>> groups{{spec.nodes.front()}};
    return canonical_fa(std::move(groups), branch_connected, {bus_energized});
}

}  // namespace sci::detail
