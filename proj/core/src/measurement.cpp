#include "sci/measurement.hpp"

#include "sci/errors.hpp"

namespace sci {

const char* to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BusVoltage: return "bus_voltage";
        case ChannelKind::BranchCurrent: return "branch_current";
    }
    return "?";
}

ChannelKind channel_kind_from_string(const std::string& s) {
    if (s == "bus_voltage") return ChannelKind::BusVoltage;
    if (s == "branch_current") return ChannelKind::BranchCurrent;
    throw ValidationError("unknown channel kind: " + s);
}

const Phasor& PmuFrame::at(const std::string& channel_id) const {
    auto it = values.find(channel_id);
    if (it == values.end()) {
        throw IdentifyError("frame " + std::to_string(timestamp_us) +
                            ": missing channel " + channel_id);
    }
    return it->second;
}

}  // namespace sci
