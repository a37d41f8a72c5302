#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sci/measurement.hpp"

namespace sci {

enum class ArrangementKind { Mtba, Rba, Sba };

const char* to_string(ArrangementKind kind);
ArrangementKind arrangement_kind_from_string(const std::string& s);

enum class BranchRole { Source, Load, Tie };

const char* to_string(BranchRole role);
BranchRole branch_role_from_string(const std::string& s);

/// Breaker endpoint: either a bus-section node or the substation-side
/// terminal of a branch.
struct Terminal {
    enum class Kind { Node, Branch };

    Kind kind = Kind::Node;
    std::string id;

    static Terminal node(std::string id) { return {Kind::Node, std::move(id)}; }
    static Terminal branch(std::string id) { return {Kind::Branch, std::move(id)}; }

    bool operator==(const Terminal&) const = default;
};

/// A line, transformer or feeder entering the substation. `attach` names
/// the node the branch is hard-wired to; branches whose only path runs
/// through a breaker leave it empty.
struct Branch {
    std::string id;
    std::optional<std::string> attach;
    BranchRole role = BranchRole::Load;

    bool operator==(const Branch&) const = default;
};

struct Breaker {
    std::string id;
    Terminal a;
    Terminal b;

    bool operator==(const Breaker&) const = default;
};

/// Static description of one substation: arrangement kind, bus-section
/// nodes, branches, breakers and PMU channels.
struct SubstationSpec {
    std::string substation_id;
    ArrangementKind kind = ArrangementKind::Sba;
    std::vector<std::string> nodes;
    std::vector<Branch> branches;
    std::vector<Breaker> breakers;
    std::vector<MeasurementChannel> channels;

    std::size_t breaker_count() const { return breakers.size(); }

    bool has_node(const std::string& id) const;
    const Branch* find_branch(const std::string& id) const;
    const Breaker* find_breaker(const std::string& id) const;
    int breaker_index(const std::string& id) const;  // -1 when absent

    /// First channel of the given kind measuring `target`; nullptr when absent.
    const MeasurementChannel* find_channel(ChannelKind kind, const std::string& target) const;

    /// Branch ids with role Source: the default energization assumption.
    std::set<std::string> source_branches() const;

    /// Structural invariants, including the per-arrangement shape rules.
    /// Throws ValidationError.
    void validate() const;

    bool operator==(const SubstationSpec&) const = default;
};

/// Node roles of a validated MTBA spec, derived from its shape: `main` is
/// the node the branch breakers switch to, `transfer` carries the hard-wired
/// branch attachments, `tie_breaker` joins the two.
struct MtbaRoles {
    std::string main;
    std::string transfer;
    std::string tie_breaker;
};

MtbaRoles mtba_roles(const SubstationSpec& spec);

/// Ring adjacency of a validated RBA spec: each entry is one breaker with
/// the two node ids it separates, in breaker-list order.
struct RingPair {
    std::string breaker_id;
    std::string node_x;
    std::string node_y;
};

std::vector<RingPair> rba_ring_pairs(const SubstationSpec& spec);

// Canonical test-case builders: a two-branch main-and-transfer substation
// with three breakers, a four-node ring, and a six-branch single bus.
SubstationSpec make_mtba_spec(std::size_t branch_count = 2);
SubstationSpec make_rba_spec(std::size_t node_count = 4);
SubstationSpec make_sba_spec(std::size_t branch_count = 6);

}  // namespace sci
