#ifndef SCHINZEL_JSON_IO_HPP
#define SCHINZEL_JSON_IO_HPP

#include <json.hpp>

#include "schinzel/nielsen.hpp"
#include "schinzel/perm.hpp"
#include "schinzel/perm_group.hpp"
#include "schinzel/schinzel.hpp"
#include "schinzel/search.hpp"
#include "schinzel/wreath.hpp"

namespace schinzel {

// Field order is fixed everywhere (ordered_json) so serialized output is
// byte-stable across runs and job counts.
using json = nlohmann::ordered_json;

json perm_to_json(const Perm& p);  // 1-based image array
Perm perm_from_json(const json& j);

json group_to_json(const PermGroup& g);  // {degree, generators, order}
PermGroup group_from_json(const json& j,
                          std::size_t order_bound = default_order_bound());

json tuple_to_json(const BranchTuple& t);  // {degree, entries, infinity_slot}
BranchTuple tuple_from_json(const json& j);

json automorphism_to_json(const GroupAutomorphism& a);  // {group, images}
GroupAutomorphism automorphism_from_json(const json& j);

json nielsen_report_to_json(const NielsenClassSpec& spec,
                            const NielsenEnumeration& e);

json verdict_to_json(const ReducibilityVerdict& verdict,
                     const CharSchinzelReport* charschinzel);

json candidate_to_json(const CandidateReport& report);
CandidateReport candidate_from_json(const json& j);

json compbranch_to_json(const CompBranchResult& result);

json conjecture_to_json(const ConjectureReport& report);

json modular_pairing_to_json(const ModularPairingReport& report);

// Stable content key for the verdict cache.
std::string candidate_cache_key(int degree, int v, const BranchTuple& tuple,
                                std::size_t order_bound);
std::string fnv1a_hex(const std::string& data);

}  // namespace schinzel

#endif
