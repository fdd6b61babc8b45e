#pragma once

#include <json.hpp>

#include <stdexcept>

#include "tn2/derivation.hpp"
#include "tn2/yang_baxter.hpp"

namespace tn2 {

/// Malformed JSON input (wrong shape, unknown family, bad rational).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::json;

// Generators: {"family":"L","index":n}.
Json to_json(const Generator& g);
Generator generator_from_json(const Json& j, const AlgebraSpec& algebra);

// Elements: [{"family":..,"index":..,"coeff":"p/q"}, ...].
Json to_json(const Element& e);
Element element_from_json(const Json& j, const AlgebraSpec& algebra);

// Tensors: [{"slots":[generator, ...],"coeff":"p/q"}, ...].
Json to_json(const Tensor2& t);
Json to_json(const Tensor3& t);
Tensor2 tensor2_from_json(const Json& j, const AlgebraSpec& algebra);
Tensor3 tensor3_from_json(const Json& j, const AlgebraSpec& algebra);

Json to_json(const IndexRange& r);
IndexRange range_from_json(const Json& j);

Json to_json(const AxiomReport& r);
Json to_json(const CheckReport& r);

Json to_json(const WindowConfig& c, const AlgebraSpec& algebra);
/// Inverse of to_json(WindowConfig); also returns the algebra named in it.
std::pair<WindowConfig, const AlgebraSpec*> window_config_from_json(const Json& j);

Json to_json(const CohomologyReport& r);
Json to_json(const ProbeConfig& c, const AlgebraSpec& algebra);
Json to_json(const KernelReport& r, const AlgebraSpec& algebra);
Json to_json(const SkewProbeReport& r, const AlgebraSpec& algebra);

}  // namespace tn2
