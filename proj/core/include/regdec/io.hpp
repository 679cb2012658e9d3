#pragma once

#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

#include "regdec/decomposition.hpp"
#include "regdec/enumerate.hpp"
#include "regdec/partition.hpp"
#include "regdec/partition_graph.hpp"
#include "regdec/root_system.hpp"

namespace regdec {

using Json = nlohmann::ordered_json;

/// Parses a file, or standard input for "-". Throws InvalidArgument on
/// unreadable files or malformed JSON.
Json read_json(const std::string& path, std::istream& standard_input = std::cin);

Json to_json(const Root& r);
Root root_from_json(const Json& j);

/// Sorted list of coefficient arrays.
Json to_json(const RootSystem& rs, const RootSet& s);
RootSet root_set_from_json(const RootSystem& rs, const Json& j);

/// {"family":"A","rank":3,"blocks":[[[1,0,0],...],...]}
Json to_json(const RootSystem& rs, const BlockPartition& p);
/// Reads "family" and "rank".
RootSystemType type_from_json(const Json& j);
/// Block list of a partition JSON; does not check that it is a partition.
BlockPartition partition_from_json(const RootSystem& rs, const Json& j);

/// {"m":3,"loops":[[v,label]],"edges":[[plus,minus,label]]}
Json to_json(const PartitionGraph& g);
PartitionGraph graph_from_json(const Json& j);

Json to_json(const GraphReport& r);

/// Partition JSON plus "cartan": per summand a list of "p/q" vectors.
Json to_json(const RootSystem& rs, const RegularDecomposition& d);
RegularDecomposition decomposition_from_json(const RootSystem& rs, const Json& j);

/// {"valid":..,"type":[m,k],"witness":{...}}; pair indices are 1-based.
Json to_json(const VerificationReport& r);

Json enumeration_to_json(const RootSystem& rs, const EnumerationOptions& o, const EnumerationResult& r,
                         bool include_classes);
std::string enumeration_csv_header();
std::string enumeration_csv_row(const RootSystem& rs, const EnumerationOptions& o, const EnumerationResult& r);

}  // namespace regdec
