#pragma once

// Claim fixtures: expected basis combinations in text form, each tagged with
// the reduction stage at which it is stated. The default set is compiled in
// from data/fixtures.json.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgr/basis.hpp"
#include "fgr/basisreduce.hpp"

namespace fgr {

struct ClaimFixture {
  std::string id;
  std::string description;
  Stage stage = Stage::Raw;
  std::string expected_text;
  BasisCombo expected;
  /// Rule fixtures: the left-hand side, reduced to `stage` to get the computed value.
  std::optional<std::string> input_text;
  std::optional<BasisCombo> input;
  /// Set when the printed value was corrected after adjudication.
  std::optional<std::string> printed_text;
  std::optional<std::string> correction;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FixtureSet {
 public:
  static FixtureSet from_json(const nlohmann::json& doc);
  static FixtureSet load_file(const std::filesystem::path& path);
  /// The set compiled into the library.
  static const FixtureSet& builtin();

  [[nodiscard]] const std::vector<ClaimFixture>& all() const { return fixtures_; }
  [[nodiscard]] const ClaimFixture* find(std::string_view id) const;
  [[nodiscard]] std::size_t size() const { return fixtures_.size(); }

 private:
  std::vector<ClaimFixture> fixtures_;
};

}  // namespace fgr
