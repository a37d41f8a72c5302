#include "sci/topology.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sci/errors.hpp"
#include "sci/union_find.hpp"

namespace sci {

namespace {

// Union-find vertex numbering: nodes first, then branch terminals.
struct TerminalIndex {
    std::unordered_map<std::string, std::size_t> node_index;
    std::unordered_map<std::string, std::size_t> branch_index;

    explicit TerminalIndex(const SubstationSpec& spec) {
        for (std::size_t i = 0; i < spec.nodes.size(); ++i) node_index[spec.nodes[i]] = i;
        for (std::size_t i = 0; i < spec.branches.size(); ++i) {
            branch_index[spec.branches[i].id] = spec.nodes.size() + i;
        }
    }

    std::size_t of(const Terminal& t) const {
        if (t.kind == Terminal::Kind::Node) {
            auto it = node_index.find(t.id);
            if (it == node_index.end()) throw ValidationError("unknown node terminal: " + t.id);
            return it->second;
        }
        auto it = branch_index.find(t.id);
        if (it == branch_index.end()) throw ValidationError("unknown branch terminal: " + t.id);
        return it->second;
    }
};

}  // namespace

FunctionalArrangement ca_to_fa(const SubstationSpec& spec, const ComponentArrangement& ca,
                               const std::set<std::string>& energized_sources) {
    if (ca.size() != spec.breakers.size()) {
        throw ValidationError("arrangement has " + std::to_string(ca.size()) +
                              " bits but spec " + spec.substation_id + " has " +
                              std::to_string(spec.breakers.size()) + " breakers");
    }
    for (const auto& src : energized_sources) {
        if (spec.find_branch(src) == nullptr) {
            throw ValidationError("energized source references unknown branch: " + src);
        }
    }

    const TerminalIndex index(spec);
    UnionFind uf(spec.nodes.size() + spec.branches.size());

    for (const auto& branch : spec.branches) {
        if (branch.attach) {
            uf.unite(index.branch_index.at(branch.id), index.node_index.at(*branch.attach));
        }
    }
    for (std::size_t i = 0; i < spec.breakers.size(); ++i) {
        if (ca.closed[i]) uf.unite(index.of(spec.breakers[i].a), index.of(spec.breakers[i].b));
    }

    // Group nodes by root.
    std::map<std::size_t, std::vector<std::string>> by_root;
    for (const auto& node : spec.nodes) {
        by_root[uf.find(index.node_index.at(node))].push_back(node);
    }

    // A branch is connected iff its root owns at least one node.
    std::map<std::string, bool> branch_connected;
    std::map<std::size_t, bool> root_energized;
    for (const auto& branch : spec.branches) {
        const std::size_t root = uf.find(index.branch_index.at(branch.id));
        const bool connected = by_root.count(root) > 0;
        branch_connected[branch.id] = connected;
        if (connected && energized_sources.count(branch.id)) root_energized[root] = true;
    }

    std::vector<std::vector<std::string>> groups;
    std::vector<bool> energized;
    for (auto& [root, members] : by_root) {
        groups.push_back(std::move(members));
        energized.push_back(root_energized.count(root) > 0);
    }
    return canonical_fa(std::move(groups), std::move(branch_connected), std::move(energized));
}

std::vector<ComponentArrangement> enumerate_cas(const SubstationSpec& spec) {
    const std::size_t n = spec.breakers.size();
    if (n > kMaxEnumerationBreakers) {
        throw ValidationError("refusing to enumerate 2^" + std::to_string(n) +
                              " arrangements (limit n = " +
                              std::to_string(kMaxEnumerationBreakers) + ")");
    }
    std::vector<ComponentArrangement> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
        ComponentArrangement ca;
        ca.closed.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            ca.closed[j] = (code >> (n - 1 - j)) & 1u;  // bits() reads as the binary code
        }
        out.push_back(std::move(ca));
    }
    return out;
}

std::vector<FaClass> enumerate_fas(const SubstationSpec& spec,
                                   const std::set<std::string>& energized_sources) {
    std::vector<FaClass> classes;
    std::unordered_map<std::string, std::size_t> by_canonical;
    for (const auto& ca : enumerate_cas(spec)) {
        FunctionalArrangement fa = ca_to_fa(spec, ca, energized_sources);
        const std::string key = fa.canonical_string();
        auto it = by_canonical.find(key);
        if (it == by_canonical.end()) {
            by_canonical.emplace(key, classes.size());
            classes.push_back({std::move(fa), {ca}});
        } else {
            classes[it->second].cas.push_back(ca);
        }
    }
    return classes;
}

namespace {

void check_fa_matches_spec(const SubstationSpec& spec, const FunctionalArrangement& fa) {
    std::size_t covered = 0;
    for (const auto& group : fa.groups) {
        for (const auto& node : group) {
            if (!spec.has_node(node)) {
                throw ValidationError("FA names node " + node + " absent from spec " +
                                      spec.substation_id);
            }
            ++covered;
        }
    }
    if (covered != spec.nodes.size()) {
        throw ValidationError("FA does not cover the node set of spec " + spec.substation_id);
    }
    for (const auto& [branch, connected] : fa.branch_connected) {
        (void)connected;
        if (spec.find_branch(branch) == nullptr) {
            throw ValidationError("FA names branch " + branch + " absent from spec " +
                                  spec.substation_id);
        }
    }
}

std::string rba_category(const SubstationSpec& spec, const FunctionalArrangement& fa) {
    const std::size_t n = spec.nodes.size();
    const std::size_t g = fa.groups.size();
    std::size_t singletons = 0;
    for (const auto& group : fa.groups) {
        if (group.size() == 1) ++singletons;
    }
    if (g == 1) return "all-connected";
    if (g == n) return "isolated";
    if (g == 2 && singletons == 1) return "one-branch-out";
    if (g == 2) return "system-separation";
    if (singletons == 2 && g == 3) return "two-adjacent-out";
    return "multi-section-out";
}

std::string sba_category(const FunctionalArrangement& fa) {
    std::size_t out = 0;
    for (const auto& [branch, connected] : fa.branch_connected) {
        (void)branch;
        if (!connected) ++out;
    }
    return std::to_string(out) + "-branches-out";
}

std::string mtba_category(const SubstationSpec& spec, const FunctionalArrangement& fa) {
    if (fa.groups.size() == 1) return "buses-tied";
    const MtbaRoles roles = mtba_roles(spec);
    const int main_group = fa.group_of(roles.main);
    const int xfer_group = fa.group_of(roles.transfer);
    if (main_group < 0 || xfer_group < 0) {
        throw ValidationError("FA does not carry the MTBA buses of spec " + spec.substation_id);
    }
    const bool main_on = fa.group_energized[static_cast<std::size_t>(main_group)];
    const bool xfer_on = fa.group_energized[static_cast<std::size_t>(xfer_group)];
    if (!main_on && xfer_on) return "main-isolated";
    if (!main_on && !xfer_on) return "out-of-service";
    return "buses-split";
}

}  // namespace

std::string fa_category(const SubstationSpec& spec, const FunctionalArrangement& fa) {
    check_fa_matches_spec(spec, fa);
    switch (spec.kind) {
        case ArrangementKind::Rba: return rba_category(spec, fa);
        case ArrangementKind::Sba: return sba_category(fa);
        case ArrangementKind::Mtba: return mtba_category(spec, fa);
    }
    throw ValidationError("unknown arrangement kind");
}

}  // namespace sci
