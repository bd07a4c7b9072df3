/// Command-line surface: every library capability behind one binary with
/// machine-readable output.  Exact values are emitted as "p/q" strings that
/// round-trip losslessly; decimal fields are display-only.
///
/// Exit codes: 0 success, 2 malformed input or domain error, 3 when a
/// requested certification comes back Inconclusive.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ostro/constraint_family.hpp"
#include "ostro/continued_fraction.hpp"
#include "ostro/cylinder.hpp"
#include "ostro/expansion.hpp"
#include "ostro/measure.hpp"
#include "ostro/random_variable.hpp"
#include "ostro/rational.hpp"
#include "ostro/serialization.hpp"
#include "ostro/symbol_matrix.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ostro;

/// Symbols print as JSON numbers when they fit a signed 64-bit value and as
/// decimal strings beyond that, so no precision is ever silently dropped.
json symbolJson(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json symbolList(const std::vector<mpz_class>& vs) {
  json arr = json::array();
  for (const mpz_class& v : vs) arr.push_back(symbolJson(v));
  return arr;
}

std::vector<mpz_class> parseSymbolList(const std::string& text) {
  std::vector<mpz_class> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::domain_error("empty symbol in list: " + text);
    const auto last = tok.find_last_not_of(" \t");
    out.emplace_back(tok.substr(first, last - first + 1));
  }
  if (out.empty()) throw std::domain_error("empty symbol list");
  return out;
}

/// --family accepts a file path or inline text; ';' separates inline lines.
ConstraintFamily loadFamily(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return ConstraintFamily::parse(buf.str());
  }
  std::string text = arg;
  for (char& c : text)
    if (c == ';') c = '\n';
  return ConstraintFamily::parse(text);
}

SymbolMatrix loadMatrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrixFromJson(buf.str());
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json expansionJson(const O1Expansion& e) {
  json doc;
  doc["q"] = symbolList(e.q());
  doc["g"] = symbolList(e.g());
  doc["exhausted"] = e.exhausted();
  return doc;
}

json enclosureJson(const Enclosure& e, std::size_t digits) {
  json doc;
  doc["lo"] = e.lo().str();
  doc["hi"] = e.hi().str();
  doc["lo_decimal"] = e.lo().decimal(digits);
  doc["hi_decimal"] = e.hi().decimal(digits);
  return doc;
}

struct CommonArgs {
  std::size_t digits = 12;
  std::string format = "json";
};

void addDigits(CLI::App* sub, CommonArgs& c) {
  sub->add_option("--digits", c.digits, "Decimal digits in display-only fields")
      ->default_val("12");
}

void addFormat(CLI::App* sub, CommonArgs& c) {
  sub->add_option("--format", c.format, "Output format for tables")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
}

int runMeasure(const std::string& familyArg, std::size_t depth, std::size_t trunc,
               std::uint64_t cap, const std::string& certify) {
  const ConstraintFamily fam = loadFamily(familyArg);
  MeasureOptions opt;
  opt.truncation = trunc;
  opt.sigmaCap = cap;

  MeasureReport rep;
  if (certify == "zero") {
    rep = zeroMeasureCertificate(fam, depth, opt);
  } else if (certify == "positive") {
    rep = positiveMeasureCertificate(fam, depth, opt);
  } else {
    const LevelTable table = measureLevels(fam, depth, opt);
    rep.depth = depth;
    rep.levelMeasures = table.m;
    rep.removedLayers = table.removed;
    if (!table.m.empty()) rep.mkEnclosure = table.m.back();
    rep.verdict = Verdict::Inconclusive;
    rep.theorem = "";
  }

  json doc = json::parse(measureReportToJson(rep));
  doc["family"] = fam.describe();
  emit(doc);
  return (!certify.empty() && rep.verdict == Verdict::Inconclusive) ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for the alternating reciprocal-product expansion"};
  app.require_subcommand(1);
  int exitCode = 0;

  // expand
  std::string expandX;
  std::size_t expandMax = 64;
  auto* cmdExpand = app.add_subcommand("expand", "Expand a rational into symbols");
  cmdExpand->add_option("--x", expandX, "Rational in (0,1), e.g. 5/7")->required();
  cmdExpand->add_option("--max", expandMax, "Symbol budget")->default_val("64");
  cmdExpand->callback([&] {
    const Rational x = Rational::parse(expandX);
    const O1Expansion e = expand(x, expandMax);
    json doc;
    doc["command"] = "expand";
    doc["x"] = x.str();
    doc.update(expansionJson(e));
    doc["text"] = toText(e);
    emit(doc);
  });

  // eval
  std::string evalG;
  CommonArgs evalArgs;
  auto* cmdEval = app.add_subcommand("eval", "Evaluate a finite symbol list exactly");
  cmdEval->add_option("--g", evalG, "Comma-separated symbols, e.g. 1,2,4")->required();
  addDigits(cmdEval, evalArgs);
  cmdEval->callback([&] {
    const O1Expansion e{parseSymbolList(evalG)};
    const Rational x = evaluate(e);
    json doc;
    doc["command"] = "eval";
    doc["g"] = symbolList(e.g());
    doc["x"] = x.str();
    doc["x_decimal"] = x.decimal(evalArgs.digits);
    emit(doc);
  });

  // convergents
  std::string convX, convG;
  std::size_t convMax = 64;
  CommonArgs convArgs;
  auto* cmdConv = app.add_subcommand("convergents", "Partial-sum convergents A_k/B_k");
  cmdConv->add_option("--x", convX, "Rational in (0,1)");
  cmdConv->add_option("--g", convG, "Comma-separated symbols");
  cmdConv->add_option("--max", convMax, "Symbol budget when expanding --x")->default_val("64");
  addDigits(cmdConv, convArgs);
  addFormat(cmdConv, convArgs);
  cmdConv->callback([&] {
    if (convX.empty() == convG.empty())
      throw std::domain_error("convergents needs exactly one of --x or --g");
    const O1Expansion e =
        convG.empty() ? expand(Rational::parse(convX), convMax) : O1Expansion{parseSymbolList(convG)};
    const std::vector<Convergent> rows = convergents(e);
    if (convArgs.format == "csv") {
      std::cout << "k,A,B,value,value_decimal\n";
      for (const Convergent& c : rows)
        std::cout << c.order << "," << c.A.get_str() << "," << c.B.get_str() << ","
                  << c.value().str() << "," << c.value().decimal(convArgs.digits) << "\n";
      return;
    }
    json doc;
    doc["command"] = "convergents";
    doc["g"] = symbolList(e.g());
    json arr = json::array();
    for (const Convergent& c : rows) {
      json row;
      row["k"] = c.order;
      row["A"] = c.A.get_str();
      row["B"] = c.B.get_str();
      row["value"] = c.value().str();
      row["value_decimal"] = c.value().decimal(convArgs.digits);
      arr.push_back(std::move(row));
    }
    doc["convergents"] = std::move(arr);
    emit(doc);
  });

  // dual
  std::string dualX, dualG;
  auto* cmdDual = app.add_subcommand("dual", "The second finite representation of the same value");
  cmdDual->add_option("--x", dualX, "Rational in (0,1)");
  cmdDual->add_option("--g", dualG, "Comma-separated symbols");
  cmdDual->callback([&] {
    if (dualX.empty() == dualG.empty())
      throw std::domain_error("dual needs exactly one of --x or --g");
    const O1Expansion e =
        dualG.empty() ? expand(Rational::parse(dualX)) : O1Expansion{parseSymbolList(dualG)};
    const O1Expansion d = dualRepresentation(e);
    json doc;
    doc["command"] = "dual";
    doc["value"] = evaluate(e).str();
    doc["input"] = expansionJson(e);
    doc["dual"] = expansionJson(d);
    emit(doc);
  });

  // cylinder
  std::string cylBase;
  std::optional<std::string> cylChild, cylPrefix, cylTail;
  CommonArgs cylArgs;
  auto* cmdCyl = app.add_subcommand("cylinder", "Endpoints, length, and child measures");
  cmdCyl->add_option("--base", cylBase, "Comma-separated base symbols")->required();
  cmdCyl->add_option("--child", cylChild, "Child symbol s: report length ratio");
  cmdCyl->add_option("--prefix", cylPrefix, "k: measure of the union of children 1..k");
  cmdCyl->add_option("--tail", cylTail, "k: measure of the union of children > k");
  addDigits(cmdCyl, cylArgs);
  cmdCyl->callback([&] {
    const Cylinder c{parseSymbolList(cylBase)};
    const auto [a, b] = c.endpoints();
    json doc;
    doc["command"] = "cylinder";
    doc["base"] = symbolList(c.base());
    doc["sigma"] = symbolJson(c.sigma());
    doc["a"] = a.str();
    doc["b"] = b.str();
    doc["length"] = c.length().str();
    doc["length_decimal"] = c.length().decimal(cylArgs.digits);
    if (cylChild) {
      const mpz_class s(*cylChild);
      doc["child"] = symbolJson(s);
      doc["child_ratio"] = childRatio(c, s).str();
      doc["child_length"] = c.child(s).length().str();
    }
    if (cylPrefix) {
      const mpz_class k(*cylPrefix);
      doc["prefix_k"] = symbolJson(k);
      doc["prefix_measure"] = childrenPrefixMeasure(c, k).str();
    }
    if (cylTail) {
      const mpz_class k(*cylTail);
      doc["tail_k"] = symbolJson(k);
      doc["tail_measure"] = childrenTailMeasure(c, k).str();
    }
    emit(doc);
  });

  // measure
  std::string famArg, certify;
  std::size_t meaDepth = 1, meaTrunc = 512;
  std::uint64_t meaCap = 10000;
  auto* cmdMea = app.add_subcommand("measure", "Level enclosures and measure certificates");
  cmdMea->add_option("--family", famArg, "Family spec file, or inline rules with ';'")->required();
  cmdMea->add_option("--depth", meaDepth, "Levels to compute")->required();
  cmdMea->add_option("--trunc", meaTrunc, "Per-level enumeration budget")->default_val("512");
  cmdMea->add_option("--cap", meaCap, "Symbol-sum cap for the state table")->default_val("10000");
  cmdMea->add_option("--certify", certify, "Request a certificate")
      ->check(CLI::IsMember({"zero", "positive"}));
  cmdMea->callback([&] { exitCode = runMeasure(famArg, meaDepth, meaTrunc, meaCap, certify); });

  // asigma
  std::size_t asDepth = 1, asTrunc = 512;
  std::uint64_t asCap = 10000;
  CommonArgs asArgs;
  auto* cmdAs = app.add_subcommand("asigma", "Layer enclosures for the adaptive family");
  cmdAs->add_option("--depth", asDepth, "Layers to compute")->required();
  cmdAs->add_option("--trunc", asTrunc, "Per-level enumeration budget")->default_val("512");
  cmdAs->add_option("--cap", asCap, "Symbol-sum cap for the state table")->default_val("10000");
  addDigits(cmdAs, asArgs);
  addFormat(cmdAs, asArgs);
  cmdAs->callback([&] {
    MeasureOptions opt;
    opt.truncation = asTrunc;
    opt.sigmaCap = asCap;
    const std::vector<Enclosure> layers = aSigmaLayers(asDepth, opt);
    if (asArgs.format == "csv") {
      std::cout << "k,lo,hi,lo_decimal,hi_decimal\n";
      for (std::size_t k = 0; k < layers.size(); ++k)
        std::cout << (k + 1) << "," << layers[k].lo().str() << "," << layers[k].hi().str()
                  << "," << layers[k].lo().decimal(asArgs.digits) << ","
                  << layers[k].hi().decimal(asArgs.digits) << "\n";
      return;
    }
    json doc;
    doc["command"] = "asigma";
    doc["depth"] = asDepth;
    json arr = json::array();
    for (std::size_t k = 0; k < layers.size(); ++k) {
      json row = enclosureJson(layers[k], asArgs.digits);
      row["k"] = k + 1;
      arr.push_back(std::move(row));
    }
    doc["layers"] = std::move(arr);
    emit(doc);
  });

  // rv-cdf
  std::string cdfMatrix, cdfX;
  CommonArgs cdfArgs;
  auto* cmdCdf = app.add_subcommand("rv-cdf", "Distribution function of the symbol-matrix law");
  cmdCdf->add_option("--matrix", cdfMatrix, "o1matrix-v1 JSON file")->required();
  cmdCdf->add_option("--x", cdfX, "Evaluation point p/q")->required();
  addDigits(cmdCdf, cdfArgs);
  cmdCdf->callback([&] {
    const SymbolMatrix P = loadMatrix(cdfMatrix);
    const Rational x = Rational::parse(cdfX);
    const Rational v = cdf(P, x);
    json doc;
    doc["command"] = "rv-cdf";
    doc["x"] = x.str();
    doc["cdf"] = v.str();
    doc["cdf_decimal"] = v.decimal(cdfArgs.digits);
    emit(doc);
  });

  // rv-sample
  std::string samMatrix, samEps;
  std::uint64_t samSeed = 0;
  std::size_t samCount = 1;
  CommonArgs samArgs;
  auto* cmdSam = app.add_subcommand("rv-sample", "Seeded inverse-transform sampling");
  cmdSam->add_option("--matrix", samMatrix, "o1matrix-v1 JSON file")->required();
  cmdSam->add_option("--eps", samEps, "Error budget p/q (default 1/2^60)");
  cmdSam->add_option("--seed", samSeed, "Generator seed")->default_val("0");
  cmdSam->add_option("--count", samCount, "Number of samples")->default_val("1");
  addDigits(cmdSam, samArgs);
  addFormat(cmdSam, samArgs);
  cmdSam->callback([&] {
    const SymbolMatrix P = loadMatrix(samMatrix);
    const Rational eps = samEps.empty() ? Sampler::defaultError() : Rational::parse(samEps);
    Sampler sampler(P, samSeed);
    if (samArgs.format == "csv") {
      std::cout << "i,value,error\n";
      for (std::size_t i = 0; i < samCount; ++i) {
        const SamplePoint p = sampler.sample(eps);
        std::cout << i << "," << p.value.str() << "," << p.errorBound.str() << "\n";
      }
      return;
    }
    json doc;
    doc["command"] = "rv-sample";
    doc["seed"] = samSeed;
    doc["count"] = samCount;
    doc["eps"] = eps.str();
    json arr = json::array();
    for (std::size_t i = 0; i < samCount; ++i) {
      const SamplePoint p = sampler.sample(eps);
      json row;
      row["value"] = p.value.str();
      row["value_decimal"] = p.value.decimal(samArgs.digits);
      row["error"] = p.errorBound.str();
      row["prefix"] = symbolList(p.prefix);
      arr.push_back(std::move(row));
    }
    doc["samples"] = std::move(arr);
    emit(doc);
  });

  // rv-classify
  std::string claMatrix;
  std::size_t claDepth = 4;
  auto* cmdCla = app.add_subcommand("rv-classify", "Pure-type classification of the law");
  cmdCla->add_option("--matrix", claMatrix, "o1matrix-v1 JSON file")->required();
  cmdCla->add_option("--depth", claDepth, "Certificate depth for the singular check")
      ->default_val("4");
  cmdCla->callback([&] {
    const SymbolMatrix P = loadMatrix(claMatrix);
    const Classification c = classify(P, claDepth);
    json doc;
    doc["command"] = "rv-classify";
    doc["kind"] = c.kind == DistributionKind::Discrete ? "Discrete" : "Continuous";
    switch (c.detail) {
      case ContinuousDetail::NotApplicable: doc["detail"] = "NotApplicable"; break;
      case ContinuousDetail::CantorTypeSingular: doc["detail"] = "CantorTypeSingular"; break;
      case ContinuousDetail::Unresolved: doc["detail"] = "Unresolved"; break;
    }
    doc["evidence"] = c.evidence;
    emit(doc);
  });

  // rv-support
  std::string supMatrix;
  std::size_t supDepth = 4, supTrunc = 512;
  std::uint64_t supCap = 10000;
  auto* cmdSup = app.add_subcommand("rv-support", "Topological support family and its measure");
  cmdSup->add_option("--matrix", supMatrix, "o1matrix-v1 JSON file")->required();
  cmdSup->add_option("--depth", supDepth, "Levels to compute")->default_val("4");
  cmdSup->add_option("--trunc", supTrunc, "Per-level enumeration budget")->default_val("512");
  cmdSup->add_option("--cap", supCap, "Symbol-sum cap for the state table")->default_val("10000");
  cmdSup->callback([&] {
    const SymbolMatrix P = loadMatrix(supMatrix);
    MeasureOptions opt;
    opt.truncation = supTrunc;
    opt.sigmaCap = supCap;
    const SupportReport rep = supportReport(P, supDepth, opt);
    json doc = json::parse(measureReportToJson(rep.measure));
    doc["command"] = "rv-support";
    doc["family"] = supportFamily(P).describe();
    doc["nowhere_dense"] = rep.nowhereDense;
    emit(doc);
  });

  // cf
  std::string cfX, cfBase, cfS, cfSigmas;
  CommonArgs cfArgs;
  auto* cmdCf = app.add_subcommand("cf", "Continued-fraction counterpart and ratio contrast");
  cmdCf->add_option("--x", cfX, "Rational in (0,1): partial quotients");
  cmdCf->add_option("--base", cfBase, "Comma-separated quotients");
  cmdCf->add_option("--s", cfS, "Child quotient for the ratio");
  cmdCf->add_option("--sigmas", cfSigmas, "Comma-separated symbol sums for the contrast table");
  addDigits(cmdCf, cfArgs);
  addFormat(cmdCf, cfArgs);
  cmdCf->callback([&] {
    if (!cfSigmas.empty()) {
      if (cfS.empty()) throw std::domain_error("--sigmas needs --s");
      const std::vector<RatioContrastRow> rows =
          ratioDecayContrast(parseSymbolList(cfSigmas), mpz_class(cfS));
      if (cfArgs.format == "csv") {
        std::cout << "sigma,alternating_ratio,cf_low,cf_high\n";
        for (const RatioContrastRow& r : rows)
          std::cout << r.sigma.get_str() << "," << r.o1Ratio.str() << "," << r.cfLow.str()
                    << "," << r.cfHigh.str() << "\n";
        return;
      }
      json doc;
      doc["command"] = "cf";
      json arr = json::array();
      for (const RatioContrastRow& r : rows) {
        json row;
        row["sigma"] = symbolJson(r.sigma);
        row["alternating_ratio"] = r.o1Ratio.str();
        row["alternating_ratio_decimal"] = r.o1Ratio.decimal(cfArgs.digits);
        row["cf_low"] = r.cfLow.str();
        row["cf_high"] = r.cfHigh.str();
        arr.push_back(std::move(row));
      }
      doc["contrast"] = std::move(arr);
      emit(doc);
      return;
    }
    if (!cfBase.empty()) {
      if (cfS.empty()) throw std::domain_error("--base needs --s");
      const CFExpansion base{parseSymbolList(cfBase)};
      const mpz_class s(cfS);
      const Rational ratio = cfCylinderRatio(base, s);
      const auto [lo, hi] = cfRatioBand(s);
      json doc;
      doc["command"] = "cf";
      doc["base"] = symbolList(base.quotients());
      doc["s"] = symbolJson(s);
      doc["ratio"] = ratio.str();
      doc["ratio_decimal"] = ratio.decimal(cfArgs.digits);
      doc["band_lo"] = lo.str();
      doc["band_hi"] = hi.str();
      emit(doc);
      return;
    }
    if (cfX.empty()) throw std::domain_error("cf needs --x, --base --s, or --sigmas --s");
    const Rational x = Rational::parse(cfX);
    const CFExpansion e = cfExpand(x);
    json doc;
    doc["command"] = "cf";
    doc["x"] = x.str();
    doc["quotients"] = symbolList(e.quotients());
    doc["value"] = cfEvaluate(e).str();
    emit(doc);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exitCode;
}
