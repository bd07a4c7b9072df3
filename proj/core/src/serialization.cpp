#include "ostro/serialization.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace ostro {
namespace {

using nlohmann::json;

json ratPair(const Rational& r) {
  return json::array({r.num().get_str(), r.den().get_str()});
}

Rational parseRatPair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw std::invalid_argument("rational must be a [numerator, denominator] string pair");
  try {
    return Rational(mpz_class(j[0].get<std::string>()), mpz_class(j[1].get<std::string>()));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational components must be decimal integers");
  }
}

json columnToJson(const Column& c) {
  json probs = json::array();
  for (const Rational& p : c.explicitProbs()) probs.push_back(ratPair(p));
  json out;
  out["probs"] = std::move(probs);
  if (c.continuation()) {
    out["continuation"] = json{{"ratio", ratPair(c.continuation()->ratio)},
                               {"stride", c.continuation()->stride.get_str()}};
  }
  return out;
}

Column columnFromJson(const json& j) {
  if (!j.is_object() || !j.contains("probs") || !j["probs"].is_array())
    throw std::invalid_argument("column needs a probs array");
  std::vector<Rational> probs;
  for (const json& p : j["probs"]) probs.push_back(parseRatPair(p));
  std::optional<Column::Geometric> geom;
  if (j.contains("continuation")) {
    const json& t = j["continuation"];
    if (!t.is_object() || !t.contains("ratio") || !t.contains("stride") ||
        !t["stride"].is_string())
      throw std::invalid_argument("continuation needs a ratio pair and a stride string");
    try {
      geom = Column::Geometric{parseRatPair(t["ratio"]),
                               mpz_class(t["stride"].get<std::string>())};
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("continuation stride must be a decimal integer");
    }
  }
  return Column(std::move(probs), std::move(geom));
}

}  // namespace

std::string matrixToJson(const SymbolMatrix& P) {
  json cols = json::array();
  for (std::size_t i = 0; i < P.explicitColumns().size(); ++i) {
    json c = columnToJson(P.explicitColumns()[i]);
    c["k"] = i + 1;
    cols.push_back(std::move(c));
  }
  json cycle = json::array();
  for (const Column& c : P.tailCycle()) cycle.push_back(columnToJson(c));
  json doc;
  doc["schema"] = "o1matrix-v1";
  doc["columns"] = std::move(cols);
  doc["tail"] = json{{"cycle", std::move(cycle)}};
  return doc.dump(2);
}

SymbolMatrix matrixFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", "") != "o1matrix-v1")
    throw std::invalid_argument("expected an o1matrix-v1 document");
  std::vector<Column> explicitCols;
  if (doc.contains("columns")) {
    if (!doc["columns"].is_array())
      throw std::invalid_argument("columns must be an array");
    for (const json& c : doc["columns"]) explicitCols.push_back(columnFromJson(c));
  }
  if (!doc.contains("tail") || !doc["tail"].is_object() ||
      !doc["tail"].contains("cycle") || !doc["tail"]["cycle"].is_array())
    throw std::invalid_argument("tail.cycle must be a column array");
  std::vector<Column> cycle;
  for (const json& c : doc["tail"]["cycle"]) cycle.push_back(columnFromJson(c));
  return SymbolMatrix(std::move(explicitCols), std::move(cycle));
}

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::ZeroCertified: return "ZeroCertified";
    case Verdict::PositiveCertified: return "PositiveCertified";
    default: return "Inconclusive";
  }
}

std::string measureReportToJson(const MeasureReport& rep) {
  json levels = json::array();
  for (std::size_t k = 0; k < rep.levelMeasures.size(); ++k)
    levels.push_back(json{{"k", k + 1},
                          {"lo", rep.levelMeasures[k].lo().str()},
                          {"hi", rep.levelMeasures[k].hi().str()}});
  json removed = json::array();
  for (std::size_t k = 0; k < rep.removedLayers.size(); ++k)
    removed.push_back(json{{"k", k + 1},
                           {"lo", rep.removedLayers[k].lo().str()},
                           {"hi", rep.removedLayers[k].hi().str()}});
  json doc;
  doc["schema"] = "measure-report-v1";
  doc["depth"] = rep.depth;
  doc["lo"] = rep.mkEnclosure.lo().str();
  doc["hi"] = rep.mkEnclosure.hi().str();
  doc["lo_decimal"] = rep.mkEnclosure.lo().decimal(12);
  doc["hi_decimal"] = rep.mkEnclosure.hi().decimal(12);
  doc["verdict"] = verdictName(rep.verdict);
  doc["theorem"] = rep.theorem;
  if (rep.lowerBound) {
    doc["lowerBound"] = rep.lowerBound->str();
    doc["lowerBound_decimal"] = rep.lowerBound->decimal(12);
  }
  doc["levels"] = std::move(levels);
  doc["removed"] = std::move(removed);
  doc["trace"] = rep.trace;
  return doc.dump(2);
}

}  // namespace ostro
