#include "slnpres/export.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <sstream>
#include <vector>

using namespace slnpres;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

/// Relator expressions listed between the opening bracket line and the
/// closing bracket line of a gap/magma export.
long long bracketed_count(const std::string& text, const std::string& open,
                          const std::string& close) {
  auto lines = lines_of(text);
  long long count = 0;
  bool inside = false;
  for (const std::string& l : lines) {
    if (l == open) { inside = true; continue; }
    if (l.rfind(close, 0) == 0) inside = false;
    if (inside) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("expected relator counts per flavor", "[export]") {
  REQUIRE(expected_relator_count(3, Flavor::base) == 14);
  REQUIRE(expected_relator_count(4, Flavor::psl) == 63);
  REQUIRE(expected_relator_count(5, Flavor::psl) == 182);
  REQUIRE(expected_relator_count(3, Flavor::finite_finite) == 15);
  BuildOptions opt;
  opt.redundant_torsion = true;
  REQUIRE(expected_relator_count(3, Flavor::finite_finite, opt) == 17);
  opt = BuildOptions{};
  opt.dedup = false;
  REQUIRE(expected_relator_count(3, Flavor::base, opt) == 20);
}

TEST_CASE("text export", "[export]") {
  Presentation p = build_base(3, WordScheme::balanced);
  std::string text = export_string(p, ExportFormat::text);
  auto lines = lines_of(text);
  REQUIRE(lines.size() == 15);  // header + 14 relators
  REQUIRE(lines[0] ==
          "presentation rank=3 scheme=balanced flavor=base generators=a,b relators=14");
  REQUIRE(lines[1].rfind("commutativity(1,2,1,3)\t", 0) == 0);
  REQUIRE(lines[13].rfind("torsion\t", 0) == 0);
  REQUIRE(lines[14].rfind("a-defining\t", 0) == 0);
}

TEST_CASE("gap export is bracketed and countable", "[export]") {
  Presentation p = build_base(3, WordScheme::balanced);
  std::string text = export_string(p, ExportFormat::gap);
  REQUIRE(text.find("F := FreeGroup(\"a\", \"b\");;") != std::string::npos);
  REQUIRE(text.find("G := F / rels;;") != std::string::npos);
  REQUIRE(bracketed_count(text, "rels := [", "];;") == 14);
  // Commas separate the expressions: 13 commas for 14 relators.
  long long commas = 0;
  for (std::size_t t = text.find("rels := ["); t < text.size(); ++t)
    if (text[t] == ',') ++commas;
  REQUIRE(commas == 13);

  std::string psl = export_string(build_psl(4, WordScheme::balanced), ExportFormat::gap);
  REQUIRE(bracketed_count(psl, "rels := [", "];;") == 63);
}

TEST_CASE("magma export is bracketed and countable", "[export]") {
  Presentation p = build_base(3, WordScheme::balanced);
  std::string text = export_string(p, ExportFormat::magma);
  REQUIRE(text.find("F<a,b> := FreeGroup(2);") != std::string::npos);
  REQUIRE(text.find("G := quo< F | rels >;") != std::string::npos);
  REQUIRE(bracketed_count(text, "rels := [", "];") == 14);
}

TEST_CASE("json export carries full metadata", "[export]") {
  Presentation p = build_finite_variant(3, WordScheme::balanced);
  nlohmann::json j = nlohmann::json::parse(export_string(p, ExportFormat::json));
  REQUIRE(j.at("schema_version") == 1);
  REQUIRE(j.at("rank") == 3);
  REQUIRE(j.at("scheme") == "balanced");
  REQUIRE(j.at("flavor") == "finite-finite");
  REQUIRE(j.at("generators") == nlohmann::json::array({"u", "v"}));
  REQUIRE(j.at("relators").size() == 15);
  REQUIRE(j.at("stats").at("count") == 15);

  long long total = 0, max_len = 0;
  for (const auto& r : j.at("relators")) {
    const std::string kind = r.at("kind");
    const auto& indices = r.at("indices");
    if (kind == "commutativity") REQUIRE(indices.size() == 4);
    else if (kind == "steinberg") REQUIRE(indices.size() == 3);
    else REQUIRE(indices.empty());
    Word w = parse_word(r.at("word").get<std::string>(), {"u", "v"});
    REQUIRE(Int(r.at("length").get<long long>()) == w.length());
    total += r.at("length").get<long long>();
    max_len = std::max(max_len, r.at("length").get<long long>());
  }
  REQUIRE(j.at("stats").at("total_length") == total);
  REQUIRE(j.at("stats").at("max_length") == max_len);
}

TEST_CASE("json round-trips every flavor", "[export]") {
  for (Flavor f : {Flavor::base, Flavor::infinite_infinite, Flavor::finite_finite, Flavor::psl}) {
    for (int n = 3; n <= 6; ++n) {
      Presentation p = build_flavor(f, n, WordScheme::balanced);
      Presentation back = parse_presentation_json(export_string(p, ExportFormat::json));
      REQUIRE(back == p);
    }
  }
  // Recursive scheme round-trips too (scheme field preserved).
  Presentation p = build_base(4, WordScheme::recursive);
  REQUIRE(parse_presentation_json(export_string(p, ExportFormat::json)) == p);
}

TEST_CASE("streaming export equals materialized export", "[export]") {
  for (ExportFormat f :
       {ExportFormat::text, ExportFormat::gap, ExportFormat::magma, ExportFormat::json}) {
    Presentation p = build_psl(4, WordScheme::balanced);
    std::ostringstream streamed;
    export_stream(4, WordScheme::balanced, Flavor::psl, BuildOptions{}, f, streamed);
    REQUIRE(streamed.str() == export_string(p, f));
  }
}

TEST_CASE("exports are deterministic", "[export]") {
  Presentation p = build_infinite_variant(4, WordScheme::balanced);
  REQUIRE(export_string(p, ExportFormat::json) == export_string(p, ExportFormat::json));
  REQUIRE(export_string(p, ExportFormat::gap) == export_string(p, ExportFormat::gap));
}

TEST_CASE("empty words render as explicit trivial factors", "[export]") {
  Presentation p;
  p.rank = 3;
  p.scheme = WordScheme::balanced;
  p.flavor = Flavor::base;
  p.relators.push_back(Relator{RelatorKind{RelatorTag::torsion, {}}, Word()});
  std::string gap = export_string(p, ExportFormat::gap);
  REQUIRE(gap.find("a^0") != std::string::npos);
}

TEST_CASE("json parser validates its input", "[export]") {
  Presentation p = build_base(3, WordScheme::balanced);
  std::string good = export_string(p, ExportFormat::json);

  REQUIRE_THROWS_AS(parse_presentation_json("not json"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_presentation_json("{}"), std::invalid_argument);

  nlohmann::json j = nlohmann::json::parse(good);
  j["schema_version"] = 2;
  REQUIRE_THROWS_AS(parse_presentation_json(j.dump()), std::invalid_argument);

  j = nlohmann::json::parse(good);
  j["relators"][0]["word"] = "a*c";
  REQUIRE_THROWS_AS(parse_presentation_json(j.dump()), std::invalid_argument);

  j = nlohmann::json::parse(good);
  j["relators"][0]["length"] = 9999;
  REQUIRE_THROWS_AS(parse_presentation_json(j.dump()), std::invalid_argument);

  j = nlohmann::json::parse(good);
  j["stats"]["total_length"] = 0;
  REQUIRE_THROWS_AS(parse_presentation_json(j.dump()), std::invalid_argument);

  j = nlohmann::json::parse(good);
  j["relators"][0]["kind"] = "unknown-kind";
  REQUIRE_THROWS_AS(parse_presentation_json(j.dump()), std::invalid_argument);
}
