#pragma once

// Shared plumbing for the rule-based and neural identifiers: channel lookup
// and assembly of canonical functional arrangements from per-pair /
// per-branch decisions. Internal to the library.

#include <map>
#include <string>
#include <vector>

#include "sci/arrangement.hpp"
#include "sci/measurement.hpp"
#include "sci/substation.hpp"

namespace sci::detail {

/// Voltage phasor measured on `node`; throws IdentifyError naming the
/// channel (or the node when no channel covers it).
const Phasor& node_voltage(const SubstationSpec& spec, const PmuFrame& frame,
                           const std::string& node);

/// Current phasor measured on `branch`.
const Phasor& branch_current(const SubstationSpec& spec, const PmuFrame& frame,
                             const std::string& branch);

/// Ring FA from per-breaker pair decisions plus per-node energization bits.
FunctionalArrangement assemble_rba_fa(const SubstationSpec& spec,
                                      const std::vector<bool>& pair_connected,
                                      const std::map<std::string, bool>& node_energized);

/// Main/transfer FA from the tie decision plus per-bus energization bits.
FunctionalArrangement assemble_mtba_fa(const SubstationSpec& spec, bool tied, bool main_energized,
                                       bool transfer_energized);

/// Single-bus FA from per-branch decisions plus the bus energization bit.
FunctionalArrangement assemble_sba_fa(const SubstationSpec& spec,
                                      const std::map<std::string, bool>& branch_connected,
                                      bool bus_energized);

}  // namespace sci::detail
