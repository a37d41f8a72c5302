#pragma once

#include <set>
#include <string>
#include <vector>

#include "sci/arrangement.hpp"
#include "sci/substation.hpp"

namespace sci {

/// Hard cap on exhaustive enumeration (2^n arrangements).
inline constexpr std::size_t kMaxEnumerationBreakers = 20;

/// Derives the electrical connectivity implied by one breaker-status vector.
///
/// Union-find over bus-section nodes and branch terminals: hard-wired branch
/// attachments and closed breakers merge terminals; a branch is connected
/// when its terminal reaches at least one node; a node group is energized
/// when some connected branch in `energized_sources` reaches it. The result
/// is in canonical form.
///
/// Throws ValidationError when the arrangement length does not match the spec.
FunctionalArrangement ca_to_fa(const SubstationSpec& spec, const ComponentArrangement& ca,
                               const std::set<std::string>& energized_sources);

/// All 2^n breaker-status vectors, ordered so that bits() read as a binary
/// number counts 0, 1, 2, ... Throws ValidationError when n exceeds
/// kMaxEnumerationBreakers.
std::vector<ComponentArrangement> enumerate_cas(const SubstationSpec& spec);

/// One distinct functional arrangement with every component arrangement
/// that maps to it.
struct FaClass {
    FunctionalArrangement fa;
    std::vector<ComponentArrangement> cas;
};

/// Brute-force census: applies ca_to_fa to every component arrangement and
/// groups the results, in first-seen (counting) order.
std::vector<FaClass> enumerate_fas(const SubstationSpec& spec,
                                   const std::set<std::string>& energized_sources);

/// Human category label for an FA of this spec:
///   RBA:  all-connected | one-branch-out | system-separation |
///         two-adjacent-out | isolated | multi-section-out
///   SBA:  "<k>-branches-out" with k the number of disconnected branches
///   MTBA: buses-tied | main-isolated | out-of-service | buses-split
/// Throws ValidationError when the FA does not belong to the spec.
std::string fa_category(const SubstationSpec& spec, const FunctionalArrangement& fa);

}  // namespace sci
