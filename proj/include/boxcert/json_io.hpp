#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "boxcert/closure.hpp"
#include "boxcert/geometry.hpp"
#include "boxcert/pipeline.hpp"
#include "boxcert/reducer.hpp"

namespace boxcert {

// Key order is insertion order so emitted documents are canonical.
using Json = nlohmann::ordered_json;

/// Integers or "p/q" strings; floats and "p/0" raise ParseError.
Rat rat_from_json(const Json& j);
Json to_json(const Rat& r);

Json to_json(const Point& p);
Point point_from_json(const Json& j, std::size_t dim);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"gens": [...], "bound": "p/q"}; bound is optional on input.
struct GeneratorSpec {
  GeneratorSet gens;
  std::optional<Rat> bound;
};
Json to_json(const GeneratorSpec& g);
GeneratorSpec generator_spec_from_json(const Json& j);

Json to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

Json to_json(const ReductionCertificate& r);
ReductionCertificate reduction_from_json(const Json& j, const YSequence& header);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// Parse helpers that convert every library exception into ParseError.
Json parse_json(std::string_view text);
Partition parse_partition(std::string_view text);
Certificate parse_certificate(std::string_view text);

/// Compact canonical form, hashed into partition digests.
std::string canonical_json(const Partition& p);
/// Two-space indented form used for files and stdout.
std::string pretty_json(const Json& j);

/// Comma-separated list such as "17,10,7" or "1/2, 3".
std::vector<Rat> parse_rat_list(std::string_view text);

}  // namespace boxcert
