#pragma once

#include "slnpres/presentation.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace slnpres {

enum class ExportFormat { text, gap, magma, json };

inline std::string to_string(ExportFormat f) {
  switch (f) {
    case ExportFormat::text: return "text";
    case ExportFormat::gap: return "gap";
    case ExportFormat::magma: return "magma";
    case ExportFormat::json: return "json";
  }
  throw std::logic_error("unknown export format");
}

inline ExportFormat export_format_from_string(const std::string& s) {
  if (s == "text") return ExportFormat::text;
  if (s == "gap") return ExportFormat::gap;
  if (s == "magma") return ExportFormat::magma;
  if (s == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown export format: " + s);
}

/// Relator count a presentation build will produce, without building it.
inline long long expected_relator_count(int n, Flavor flavor, const BuildOptions& opt = {}) {
  RelatorCount c = relator_count_formula(n);
  long long total = opt.dedup ? c.total : c.total + c.commutativity;
  if (flavor == Flavor::finite_finite) total += 1 + (opt.redundant_torsion ? 2 : 0);
  if (flavor == Flavor::psl && n % 2 == 0) total += 1;
  return total;
}

namespace detail {

inline std::string json_quote(const std::string& s) { return nlohmann::json(s).dump(); }

/// Renders a word for the algebra-system formats; those cannot express an
/// empty product inline, so the empty word becomes the explicit "g^0".
inline std::string word_or_trivial(const Word& w, const std::array<std::string, 2>& names) {
  if (w.empty()) return names[0] + "^0";
  return w.str(names);
}

}  // namespace detail

/// Sequential writer producing one of the four formats.  Feed relators in
/// presentation order, then call finish() exactly once.  The JSON layout is
/// fixed (one relator object per line) so identical inputs give identical
/// bytes.
class StreamExporter {
 public:
  StreamExporter(ExportFormat format, std::ostream& os, int rank, WordScheme scheme, Flavor flavor,
                 std::array<std::string, 2> names, long long expected_count)
      : format_(format), os_(os), names_(std::move(names)) {
    switch (format_) {
      case ExportFormat::text:
        os_ << "presentation rank=" << rank << " scheme=" << to_string(scheme)
            << " flavor=" << to_string(flavor) << " generators=" << names_[0] << "," << names_[1]
            << " relators=" << expected_count << "\n";
        break;
      case ExportFormat::gap:
        os_ << "# finitely presented group on two generators\n"
            << "F := FreeGroup(" << detail::json_quote(names_[0]) << ", "
            << detail::json_quote(names_[1]) << ");;\n"
            << names_[0] << " := F.1;;\n"
            << names_[1] << " := F.2;;\n"
            << "rels := [\n";
        break;
      case ExportFormat::magma:
        os_ << "F<" << names_[0] << "," << names_[1] << "> := FreeGroup(2);\n"
            << "rels := [\n";
        break;
      case ExportFormat::json:
        os_ << "{\n"
            << "\"schema_version\": 1,\n"
            << "\"rank\": " << rank << ",\n"
            << "\"scheme\": " << detail::json_quote(to_string(scheme)) << ",\n"
            << "\"flavor\": " << detail::json_quote(to_string(flavor)) << ",\n"
            << "\"generators\": [" << detail::json_quote(names_[0]) << ", "
            << detail::json_quote(names_[1]) << "],\n"
            << "\"relators\": [";
        break;
    }
  }

  void relator(const Relator& r) {
    stats_.add(r);
    switch (format_) {
      case ExportFormat::text: {
        os_ << to_string(r.kind.tag);
        if (!r.kind.indices.empty()) {
          os_ << "(";
          for (std::size_t t = 0; t < r.kind.indices.size(); ++t)
            os_ << (t ? "," : "") << r.kind.indices[t];
          os_ << ")";
        }
        os_ << "\t" << r.word.str(names_) << "\n";
        break;
      }
      case ExportFormat::gap:
      case ExportFormat::magma:
        // One relator per line, comma-separated: hold each line until the
        // next arrives so the final one can close without a comma.
        if (!pending_.empty()) os_ << pending_ << ",\n";
        pending_ = detail::word_or_trivial(r.word, names_);
        break;
      case ExportFormat::json: {
        os_ << (stats_.count > 1 ? ",\n" : "\n");
        os_ << "{\"kind\": " << detail::json_quote(to_string(r.kind.tag)) << ", \"indices\": [";
        for (std::size_t t = 0; t < r.kind.indices.size(); ++t)
          os_ << (t ? "," : "") << r.kind.indices[t];
        os_ << "], \"word\": " << detail::json_quote(r.word.str(names_))
            << ", \"length\": " << r.word.length() << "}";
        break;
      }
    }
  }

  void finish() {
    switch (format_) {
      case ExportFormat::text:
        break;
      case ExportFormat::gap:
        if (!pending_.empty()) os_ << pending_ << "\n";
        os_ << "];;\n"
            << "G := F / rels;;\n";
        break;
      case ExportFormat::magma:
        if (!pending_.empty()) os_ << pending_ << "\n";
        os_ << "];\n"
            << "G := quo< F | rels >;\n";
        break;
      case ExportFormat::json:
        os_ << "\n],\n"
            << "\"stats\": {\"count\": " << stats_.count
            << ", \"total_length\": " << stats_.total_length
            << ", \"max_length\": " << stats_.max_length << "}\n"
            << "}\n";
        break;
    }
    os_.flush();
  }

  const PresentationStats& collected_stats() const { return stats_; }

 private:
  ExportFormat format_;
  std::ostream& os_;
  std::array<std::string, 2> names_;
  PresentationStats stats_;
  std::string pending_;
};

inline void export_presentation(const Presentation& p, ExportFormat format, std::ostream& os) {
  StreamExporter writer(format, os, p.rank, p.scheme, p.flavor, p.generators,
                        static_cast<long long>(p.relators.size()));
  for (const Relator& r : p.relators) writer.relator(r);
  writer.finish();
}

inline std::string export_string(const Presentation& p, ExportFormat format) {
  std::ostringstream os;
  export_presentation(p, format, os);
  return os.str();
}

/// Build-and-export without materializing the relator list; the only way to
/// export ranks whose total relator length runs to tens of millions of
/// letters.
inline void export_stream(int n, WordScheme scheme, Flavor flavor, const BuildOptions& opt,
                          ExportFormat format, std::ostream& os) {
  detail::check_build_args(n, scheme);
  TransvectionTable table(n, scheme);
  StreamExporter writer(format, os, n, scheme, flavor, generator_names(flavor),
                        expected_relator_count(n, flavor, opt));
  enumerate_relators(table, flavor, opt, [&](Relator&& r) { writer.relator(r); });
  writer.finish();
}

/// Inverse of the json exporter; validates the schema and the embedded
/// lengths/stats, so a mangled file fails loudly here rather than producing
/// a silently different presentation.
inline Presentation parse_presentation_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("presentation json: ") + e.what());
  }
  auto require = [&](const char* field) -> const nlohmann::json& {
    if (!j.contains(field))
      throw std::invalid_argument(std::string("presentation json: missing field ") + field);
    return j.at(field);
  };
  if (require("schema_version").get<int>() != 1)
    throw std::invalid_argument("presentation json: unsupported schema_version");

  Presentation p;
  p.rank = require("rank").get<int>();
  p.scheme = word_scheme_from_string(require("scheme").get<std::string>());
  p.flavor = flavor_from_string(require("flavor").get<std::string>());
  const auto& gens = require("generators");
  if (!gens.is_array() || gens.size() != 2)
    throw std::invalid_argument("presentation json: generators must be a pair");
  p.generators = {gens.at(0).get<std::string>(), gens.at(1).get<std::string>()};

  PresentationStats recomputed;
  for (const auto& jr : require("relators")) {
    Relator r;
    r.kind.tag = relator_tag_from_string(jr.at("kind").get<std::string>());
    for (const auto& v : jr.at("indices")) r.kind.indices.push_back(v.get<int>());
    r.word = parse_word(jr.at("word").get<std::string>(), p.generators);
    if (Int(jr.at("length").get<long long>()) != r.word.length())
      throw std::invalid_argument("presentation json: relator length field mismatch");
    recomputed.add(r);
    p.relators.push_back(std::move(r));
  }

  const auto& s = require("stats");
  if (s.at("count").get<long long>() != recomputed.count ||
      Int(s.at("total_length").get<long long>()) != recomputed.total_length ||
      Int(s.at("max_length").get<long long>()) != recomputed.max_length)
    throw std::invalid_argument("presentation json: stats do not match the relator list");
  return p;
}

}  // namespace slnpres
