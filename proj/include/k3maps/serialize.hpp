#ifndef K3MAPS_SERIALIZE_HPP
#define K3MAPS_SERIALIZE_HPP

#include <string>

#include "k3maps/engine.hpp"

namespace k3maps {

std::string verdict_json(const FeasibilityVerdict& v);
std::string table_json(const AdmissibilityTable& t);
std::string report_json(const PaperTableReport& r);
std::string partitions_json(Int n, std::optional<Int> p_cap,
                            const std::vector<BetaPartition>& parts);
std::string tree_report_json(const ExceptionalTree& tree, Int deg);

/// Parse the tree input document {"nodes":[{"id":..,"parent":..,"gamma":..},..]}.
/// Throws std::invalid_argument with a position-bearing message on bad input.
ExceptionalTree parse_tree_json(const std::string& text);

} // namespace k3maps

#endif
