#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/catalog.hpp"
#include "shiftlab/shift_ops.hpp"
#include "shiftlab/verdict.hpp"

namespace shiftlab {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  ShiftOperatorSpec op;
  TruncationBudget budget;
  std::vector<ExpectedProperty> expected;
  std::optional<std::filesystem::path> json_out;
  std::optional<std::filesystem::path> csv_out;
};

/// INI-style file: [space], [weight], [shift], optional [budget], [expect], [output].
/// Relative table paths resolve against the config file's directory.
RunConfig load_config(const std::filesystem::path& path);

/// Two columns "index value", indices 0, 1, 2, ... in order; '#' starts a comment.
std::vector<double> read_table(const std::filesystem::path& path);

/// "e:R" or "i:c,i:c,...".
FiniteVector parse_vector_spec(const std::string& spec);

}  // namespace shiftlab
