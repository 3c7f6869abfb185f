#include "fgr/fixtures.hpp"

#include <fstream>
#include <set>

#include "fgr/parse.hpp"

namespace fgr {

namespace detail {
extern const std::string_view kEmbeddedFixtures;
}

namespace {

constexpr int kFormatVersion = 1;

BasisCombo parse_field(const std::string& id, const char* field, const std::string& text) {
  try {
    return parse_basis_expr(text);
  } catch (const ParseError& e) {
    throw FixtureError("fixture '" + id + "': cannot parse " + field + ": " + e.what());
  }
}

}  // namespace

FixtureSet FixtureSet::from_json(const nlohmann::json& doc) {
  if (doc.value("format", "") != "fgr-fixtures") throw FixtureError("not a fixture file (format tag missing)");
  if (doc.value("version", 0) != kFormatVersion) {
    throw FixtureError("unsupported fixture version " + doc.value("version", nlohmann::json()).dump());
  }
  FixtureSet set;
  std::set<std::string> seen;
  for (const auto& j : doc.at("fixtures")) {
    ClaimFixture f;
    f.id = j.at("id").get<std::string>();
    if (!seen.insert(f.id).second) throw FixtureError("duplicate fixture id '" + f.id + "'");
    f.description = j.value("description", "");
    try {
      f.stage = stage_from_string(j.at("stage").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FixtureError("fixture '" + f.id + "': " + e.what());
    }
    f.expected_text = j.at("expected").get<std::string>();
    f.expected = parse_field(f.id, "expected", f.expected_text);
    if (j.contains("input")) {
      f.input_text = j.at("input").get<std::string>();
      f.input = parse_field(f.id, "input", *f.input_text);
    }
    if (j.contains("printed")) f.printed_text = j.at("printed").get<std::string>();
    if (j.contains("correction")) f.correction = j.at("correction").get<std::string>();
    set.fixtures_.push_back(std::move(f));
  }
  return set;
}

FixtureSet FixtureSet::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureError("fixture file " + path.string() + ": " + e.what());
  }
  return from_json(doc);
}

const FixtureSet& FixtureSet::builtin() {
  static const FixtureSet set = from_json(nlohmann::json::parse(detail::kEmbeddedFixtures));
  return set;
}

const ClaimFixture* FixtureSet::find(std::string_view id) const {
  for (const auto& f : fixtures_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

}  // namespace fgr
