#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sci/phasor.hpp"

namespace sci {

enum class ChannelKind { BusVoltage, BranchCurrent };

const char* to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(const std::string& s);  // throws ValidationError

/// One synchrophasor channel: a voltage on a bus-section node or a current
/// on a branch.
struct MeasurementChannel {
    std::string channel_id;
    ChannelKind kind = ChannelKind::BusVoltage;
    std::string target;  // node id for voltages, branch id for currents

    bool operator==(const MeasurementChannel&) const = default;
};

/// One reporting instant for one substation.
struct PmuFrame {
    std::int64_t timestamp_us = 0;
    std::string substation_id;
    std::map<std::string, Phasor> values;  // channel_id -> phasor
    std::optional<double> frequency_hz;

    /// Phasor for a channel id; throws IdentifyError naming the channel
    /// when it is absent from the frame.
    const Phasor& at(const std::string& channel_id) const;
};

}  // namespace sci
