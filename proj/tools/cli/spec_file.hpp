#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "balancegate/anf.hpp"
#include "balancegate/errors.hpp"
#include "balancegate/layout.hpp"
#include "balancegate/lfsr.hpp"
#include "balancegate/numeric.hpp"

namespace balancegate::cli {

/// File could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

struct RegisterSpec {
  char name = 'm';
  std::size_t length = 0;
  std::optional<std::vector<unsigned>> polynomial;
  std::optional<std::string> initial_state;  // stage 0 first
};

/// Generator description read from a JSON document:
///
///   {
///     "registers": [{"name": "a", "length": 7, "polynomial": [7, 6, 0],
///                    "initial_state": "1000000"}, ...],
///     "function": "a0*b0 ^ c0",
///     "tolerance": "1/100"
///   }
///
/// `polynomial`, `initial_state` and `tolerance` are optional. `name` may be
/// omitted when there is a single register; it then defaults to "m".
struct SpecFile {
  std::vector<RegisterSpec> registers;
  std::string function;
  std::optional<Rational> tolerance;

  RegisterLayout layout() const;
  AnfFunction parsed_function() const;
};

SpecFile spec_from_json(const nlohmann::json& doc);
SpecFile parse_spec(const std::string& text);
SpecFile load_spec(const std::string& path);

/// How LFSR configurations were completed from the spec.
struct ResolvedLfsrs {
  std::vector<LfsrConfig> lfsrs;
  std::vector<std::string> notices;  // defaults that were applied
};

/// Fills in missing polynomials from the built-in table (lengths 1..16) and
/// missing seeds with all ones. Throws ValidationError when a register has
/// no polynomial and none is built in.
ResolvedLfsrs resolve_lfsrs(const SpecFile& spec);

}  // namespace balancegate::cli
