#include "sci/ldm.hpp"

#include "identify_common.hpp"
#include "sci/errors.hpp"

namespace sci {

RbaPairInputs preprocess_rba_pair(const Phasor& vx, const Phasor& vy, const Thresholds& th) {
    RbaPairInputs in;
    in.A = is_energized(vx, th);
    in.B = is_energized(vy, th);
    in.C = phasor_equal(vx, vy, th);
    in.infeasible = in.C && (in.A != in.B);
    return in;
}

SbaBranchInputs preprocess_sba_branch(const Phasor& v_bus, const Phasor& i_branch,
                                      const Thresholds& th) {
    SbaBranchInputs in;
    in.A = is_energized(v_bus, th);
    in.B = current_present(i_branch, th);
    in.infeasible = in.B && !in.A;
    return in;
}

MtbaInputs preprocess_mtba(const Phasor& v_main, const Phasor& v_transfer, const Thresholds& th) {
    MtbaInputs in;
    in.main_energized = is_energized(v_main, th);
    in.transfer_energized = is_energized(v_transfer, th);
    in.equal = phasor_equal(v_main, v_transfer, th);
    in.infeasible = in.equal && (in.main_energized != in.transfer_energized);
    return in;
}

bool ldm_rba_pair(const RbaPairInputs& in) { return in.C && in.A && in.B; }

bool ldm_sba_branch(const SbaBranchInputs& in) { return in.B && in.A; }

bool ldm_mtba_tie(const MtbaInputs& in) {
    return in.equal && in.main_energized && in.transfer_energized;
}

FunctionalArrangement ldm_identify_mtba(const SubstationSpec& spec, const PmuFrame& frame,
                                        const Thresholds& th, Diagnostics* diag) {
    const MtbaRoles roles = mtba_roles(spec);
    const Phasor& v_main = detail::node_voltage(spec, frame, roles.main);
    const Phasor& v_xfer = detail::node_voltage(spec, frame, roles.transfer);
    const MtbaInputs in = preprocess_mtba(v_main, v_xfer, th);
    if (in.infeasible && diag != nullptr) {
        diag->flag("infeasible bus pair " + roles.main + "/" + roles.transfer +
                   ": equal voltages with one bus dead");
    }
    return detail::assemble_mtba_fa(spec, ldm_mtba_tie(in), in.main_energized,
                                    in.transfer_energized);
}

FunctionalArrangement ldm_identify_rba(const SubstationSpec& spec, const PmuFrame& frame,
                                       const Thresholds& th, Diagnostics* diag) {
    const auto pairs = rba_ring_pairs(spec);
    std::map<std::string, bool> node_energized;
    for (const auto& node : spec.nodes) {
        node_energized[node] = is_energized(detail::node_voltage(spec, frame, node), th);
    }
    std::vector<bool> connected(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const RbaPairInputs in = preprocess_rba_pair(
            detail::node_voltage(spec, frame, pairs[i].node_x),
            detail::node_voltage(spec, frame, pairs[i].node_y), th);
        if (in.infeasible && diag != nullptr) {
            diag->flag("infeasible node pair " + pairs[i].node_x + "/" + pairs[i].node_y +
                       ": equal voltages with one side dead");
        }
        connected[i] = ldm_rba_pair(in);
    }
    return detail::assemble_rba_fa(spec, connected, node_energized);
}

FunctionalArrangement ldm_identify_sba(const SubstationSpec& spec, const PmuFrame& frame,
                                       const Thresholds& th, Diagnostics* diag) {
    const Phasor& v_bus = detail::node_voltage(spec, frame, spec.nodes.front());
    std::map<std::string, bool> branch_connected;
    bool bus_on = false;
    for (const auto& branch : spec.branches) {
        const SbaBranchInputs in =
            preprocess_sba_branch(v_bus, detail::branch_current(spec, frame, branch.id), th);
        if (in.infeasible && diag != nullptr) {
            diag->flag("infeasible branch " + branch.id + ": current present on a dead bus");
        }
        branch_connected[branch.id] = ldm_sba_branch(in);
        bus_on = in.A;
    }
    if (spec.branches.empty()) {
        bus_on = is_energized(v_bus, th);
    }
    return detail::assemble_sba_fa(spec, branch_connected, bus_on);
}

FunctionalArrangement ldm_identify(const SubstationSpec& spec, const PmuFrame& frame,
                                   const Thresholds& th, Diagnostics* diag) {
    switch (spec.kind) {
        case ArrangementKind::Mtba: return ldm_identify_mtba(spec, frame, th, diag);
        case ArrangementKind::Rba: return ldm_identify_rba(spec, frame, th, diag);
        case ArrangementKind::Sba: return ldm_identify_sba(spec, frame, th, diag);
    }
    throw IdentifyError("unknown arrangement kind");
}

}  // namespace sci
