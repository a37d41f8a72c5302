#pragma once

#include <string>
#include <vector>

#include "sci/arrangement.hpp"
#include "sci/measurement.hpp"
#include "sci/substation.hpp"

namespace sci {

/// Data-quality observations accumulated while identifying a frame.
struct Diagnostics {
    std::vector<std::string> flags;

    void flag(std::string message) { flags.push_back(std::move(message)); }
    bool empty() const { return flags.empty(); }
};

/// Binarized view of one consecutive-node voltage pair of a ring.
/// A/B: node energized; C: voltage phasors equal. Equal phasors with
/// exactly one side energized cannot occur physically; such inputs are
/// flagged rather than silently accepted.
struct RbaPairInputs {
    bool A = false;
    bool B = false;
    bool C = false;
    bool infeasible = false;
};

/// Binarized view of one single-bus branch. A: bus energized; B: branch
/// current present. Current on a dead bus is flagged as infeasible.
struct SbaBranchInputs {
    bool A = false;
    bool B = false;
    bool infeasible = false;
};

/// Binarized view of the main/transfer bus pair.
struct MtbaInputs {
    bool main_energized = false;
    bool transfer_energized = false;
    bool equal = false;
    bool infeasible = false;
};

RbaPairInputs preprocess_rba_pair(const Phasor& vx, const Phasor& vy, const Thresholds& th);
SbaBranchInputs preprocess_sba_branch(const Phasor& v_bus, const Phasor& i_branch,
                                      const Thresholds& th);
MtbaInputs preprocess_mtba(const Phasor& v_main, const Phasor& v_transfer, const Thresholds& th);

/// Truth-table decision for a node pair: connected only when the voltages
/// agree and both sides are live. Infeasible combinations fail safe to 0.
bool ldm_rba_pair(const RbaPairInputs& in);

/// Truth-table decision for a branch: connected only when current flows and
/// the bus is live.
bool ldm_sba_branch(const SbaBranchInputs& in);

/// Tie decision for the two buses: tied only when equal and both live.
bool ldm_mtba_tie(const MtbaInputs& in);

/// Frame identifiers. Output is the same canonical form ca_to_fa produces,
/// so identified and oracle arrangements compare with operator==.
/// Throw IdentifyError when a required channel is missing; infeasible input
/// combinations are flagged on `diag` when provided.
FunctionalArrangement ldm_identify_mtba(const SubstationSpec& spec, const PmuFrame& frame,
                                        const Thresholds& th, Diagnostics* diag = nullptr);
FunctionalArrangement ldm_identify_rba(const SubstationSpec& spec, const PmuFrame& frame,
                                       const Thresholds& th, Diagnostics* diag = nullptr);
FunctionalArrangement ldm_identify_sba(const SubstationSpec& spec, const PmuFrame& frame,
                                       const Thresholds& th, Diagnostics* diag = nullptr);

/// Dispatch on the spec's arrangement kind.
FunctionalArrangement ldm_identify(const SubstationSpec& spec, const PmuFrame& frame,
                                   const Thresholds& th, Diagnostics* diag = nullptr);

}  // namespace sci
