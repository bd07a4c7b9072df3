#include "ostro/constraint_family.hpp"

#include <cctype>
#include <stdexcept>

namespace ostro {

namespace {

mpz_class evalPoly(const std::vector<mpz_class>& coeffs, std::size_t k) {
  mpz_class acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * static_cast<unsigned long>(k) + coeffs[i];
  return acc;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view what) {
  throw std::invalid_argument("malformed family spec: " + std::string(what));
}

mpz_class parseInt(std::string_view tok) {
  tok = trim(tok);
  if (tok.empty()) fail("empty integer");
  for (char c : tok)
    if (c < '0' || c > '9') fail(tok);
  return mpz_class(std::string(tok), 10);
}

std::vector<mpz_class> parseIntList(std::string_view body, bool* openEnded) {
  *openEnded = false;
  std::vector<mpz_class> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok =
        trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (tok == "...") {
      if (comma != std::string_view::npos || out.empty()) fail(body);
      *openEnded = true;
      return out;
    }
    out.push_back(parseInt(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) fail("empty list");
  return out;
}

/// Parses one rule token; used both for explicit ranks and the tail rule.
/// Rules that only make sense as tail rules (poly/geom/asigma) set tailOnly.
struct ParsedRule {
  bool isAdaptive = false;
  bool isPoly = false, isGeom = false;
  std::vector<mpz_class> coeffs;
  mpz_class geomBase = 0, geomRatio = 0;
  SymbolSet set = SymbolSet::all();
};

ParsedRule parseRule(std::string_view rule) {
  rule = trim(rule);
  ParsedRule out;
  if (rule == "all") {
    out.set = SymbolSet::all();
    return out;
  }
  if (rule == "asigma") {
    out.isAdaptive = true;
    return out;
  }
  if (rule.starts_with("finite:")) {
    bool open = false;
    auto list = parseIntList(rule.substr(7), &open);
    if (open) fail(rule);
    out.set = SymbolSet::finiteSet(std::move(list));
    return out;
  }
  if (rule.starts_with("upto:")) {
    out.set = SymbolSet::upTo(parseInt(rule.substr(5)));
    return out;
  }
  if (rule.starts_with("tail:poly:")) {
    bool open = false;
    out.coeffs = parseIntList(rule.substr(10), &open);
    if (open) fail(rule);
    out.isPoly = true;
    return out;
  }
  if (rule.starts_with("tail:geom:")) {
    bool open = false;
    auto list = parseIntList(rule.substr(10), &open);
    if (open || list.size() != 2) fail(rule);
    out.geomBase = list[0];
    out.geomRatio = list[1];
    if (out.geomBase < 1 || out.geomRatio < 1) fail(rule);
    out.isGeom = true;
    return out;
  }
  if (rule.starts_with("tail:")) {
    out.set = SymbolSet::tailFrom(parseInt(rule.substr(5)));
    return out;
  }
  if (rule.starts_with("complement:")) {
    bool open = false;
    auto list = parseIntList(rule.substr(11), &open);
    if (open) {
      if (list.size() < 2) fail("arithmetic exclusion needs two terms");
      const mpz_class d = list[1] - list[0];
      if (d < 1) fail("exclusion sequence must increase");
      for (std::size_t i = 2; i < list.size(); ++i)
        if (list[i] - list[i - 1] != d) fail("exclusion sequence not arithmetic");
      out.set = SymbolSet::complementArithmetic(list[0], d);
      return out;
    }
    out.set = SymbolSet::complementList(std::move(list));
    return out;
  }
  fail(rule);
}

}  // namespace

ConstraintFamily ConstraintFamily::constant(SymbolSet v) {
  TailRule tail;
  tail.kind = TailRule::Kind::ConstantSet;
  tail.sets.push_back(std::move(v));
  return ConstraintFamily({}, std::move(tail));
}

ConstraintFamily ConstraintFamily::ofRules(std::vector<SymbolSet> explicitRules, TailRule tail) {
  switch (tail.kind) {
    case TailRule::Kind::ConstantSet:
      if (tail.sets.size() != 1) throw std::domain_error("constant tail needs one set");
      break;
    case TailRule::Kind::CyclicSets:
      if (tail.sets.empty()) throw std::domain_error("cyclic tail needs sets");
      break;
    case TailRule::Kind::TailFromPolynomial: {
      if (tail.polyCoeffs.empty()) throw std::domain_error("polynomial tail needs coefficients");
      for (const mpz_class& c : tail.polyCoeffs)
        if (c < 0) throw std::domain_error("polynomial tail needs nonnegative coefficients");
      break;
    }
    case TailRule::Kind::TailFromGeometric:
      if (tail.geomBase < 1 || tail.geomRatio < 1)
        throw std::domain_error("geometric tail needs base, ratio >= 1");
      break;
    case TailRule::Kind::AdaptiveSigma:
      break;
  }
  return ConstraintFamily(std::move(explicitRules), std::move(tail));
}

ConstraintFamily ConstraintFamily::adaptiveSigma() {
  TailRule tail;
  tail.kind = TailRule::Kind::AdaptiveSigma;
  return ConstraintFamily({SymbolSet::all()}, std::move(tail));
}

RankPlan ConstraintFamily::planAt(std::size_t rank) const {
  if (rank == 0) throw std::domain_error("ranks start at 1");
  if (rank <= explicit_.size()) return RankPlan{false, explicit_[rank - 1]};
  switch (tail_.kind) {
    case TailRule::Kind::ConstantSet:
      return RankPlan{false, tail_.sets[0]};
    case TailRule::Kind::CyclicSets:
      return RankPlan{false, tail_.sets[(rank - explicit_.size() - 1) % tail_.sets.size()]};
    case TailRule::Kind::TailFromPolynomial:
      return RankPlan{false, SymbolSet::tailFrom(evalPoly(tail_.polyCoeffs, rank))};
    case TailRule::Kind::TailFromGeometric: {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), tail_.geomRatio.get_mpz_t(), static_cast<unsigned long>(rank));
      return RankPlan{false, SymbolSet::tailFrom(tail_.geomBase * p)};
    }
    case TailRule::Kind::AdaptiveSigma:
      return RankPlan{true, SymbolSet::all()};
  }
  return RankPlan{false, SymbolSet::all()};
}

ConstraintFamily ConstraintFamily::parse(std::string_view text) {
  // Single inline rule: no line structure, no "k=" or "tail-rule:" prefix.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::vector<ParsedRule> rules;
  bool sawTail = false;
  ParsedRule tailParsed;

  std::size_t lineStart = 0;
  bool anyDirective = false;
  while (lineStart <= text.size()) {
    std::size_t nl = text.find('\n', lineStart);
    std::string_view line =
        trim(text.substr(lineStart, nl == std::string_view::npos ? std::string_view::npos : nl - lineStart));
    lineStart = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line.starts_with("#")) continue;
    if (line.starts_with("tail-rule:")) {
      if (sawTail) fail("duplicate tail-rule");
      tailParsed = parseRule(line.substr(10));
      sawTail = true;
      anyDirective = true;
      continue;
    }
    if (line.starts_with("k=")) {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) fail(line);
      std::string_view rangeTok = trim(line.substr(2, colon - 2));
      std::size_t lo = 0, hi = 0;
      const std::size_t dots = rangeTok.find("..");
      if (dots == std::string_view::npos) {
        lo = hi = static_cast<std::size_t>(parseInt(rangeTok).get_ui());
      } else {
        lo = static_cast<std::size_t>(parseInt(rangeTok.substr(0, dots)).get_ui());
        hi = static_cast<std::size_t>(parseInt(rangeTok.substr(dots + 2)).get_ui());
      }
      if (lo < 1 || hi < lo) fail(rangeTok);
      ParsedRule r = parseRule(line.substr(colon + 1));
      if (r.isPoly || r.isGeom) fail("parametric tails are tail rules only");
      ranges.emplace_back(lo, hi);
      rules.push_back(std::move(r));
      anyDirective = true;
      continue;
    }
    // Inline shortcut: the whole text is one rule applied to all ranks.
    if (anyDirective) fail(line);
    ParsedRule r = parseRule(line);
    if (r.isAdaptive) return adaptiveSigma();
    TailRule tail;
    if (r.isPoly) {
      tail.kind = TailRule::Kind::TailFromPolynomial;
      tail.polyCoeffs = std::move(r.coeffs);
    } else if (r.isGeom) {
      tail.kind = TailRule::Kind::TailFromGeometric;
      tail.geomBase = r.geomBase;
      tail.geomRatio = r.geomRatio;
    } else {
      tail.kind = TailRule::Kind::ConstantSet;
      tail.sets.push_back(std::move(r.set));
    }
    return ofRules({}, std::move(tail));
  }

  if (!sawTail) fail("missing tail-rule");
  // Assemble explicit ranks 1..K with no gaps.
  std::size_t K = 0;
  for (const auto& [lo, hi] : ranges) K = std::max(K, hi);
  std::vector<int> owner(K + 1, -1);
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (std::size_t k = ranges[i].first; k <= ranges[i].second; ++k) {
      if (owner[k] != -1) fail("overlapping rank rules");
      owner[k] = static_cast<int>(i);
    }
  std::vector<SymbolSet> explicitRules;
  for (std::size_t k = 1; k <= K; ++k) {
    if (owner[k] == -1) fail("gap in explicit ranks");
    const ParsedRule& r = rules[static_cast<std::size_t>(owner[k])];
    if (r.isAdaptive) fail("asigma applies to whole family or tail only");
    explicitRules.push_back(r.set);
  }

  TailRule tail;
  if (tailParsed.isAdaptive) {
    tail.kind = TailRule::Kind::AdaptiveSigma;
  } else if (tailParsed.isPoly) {
    tail.kind = TailRule::Kind::TailFromPolynomial;
    tail.polyCoeffs = std::move(tailParsed.coeffs);
  } else if (tailParsed.isGeom) {
    tail.kind = TailRule::Kind::TailFromGeometric;
    tail.geomBase = tailParsed.geomBase;
    tail.geomRatio = tailParsed.geomRatio;
  } else {
    tail.kind = TailRule::Kind::ConstantSet;
    tail.sets.push_back(std::move(tailParsed.set));
  }
  return ofRules(std::move(explicitRules), std::move(tail));
}

std::string ConstraintFamily::describe() const {
  std::string out;
  for (std::size_t k = 0; k < explicit_.size(); ++k)
    out += "k=" + std::to_string(k + 1) + ": " + explicit_[k].describe() + "; ";
  switch (tail_.kind) {
    case TailRule::Kind::ConstantSet:
      out += "tail-rule: " + tail_.sets[0].describe();
      break;
    case TailRule::Kind::CyclicSets: {
      out += "tail-rule: cycle(";
      for (std::size_t i = 0; i < tail_.sets.size(); ++i)
        out += (i ? "; " : "") + tail_.sets[i].describe();
      out += ")";
      break;
    }
    case TailRule::Kind::TailFromPolynomial: {
      out += "tail-rule: tail:poly:";
      for (std::size_t i = 0; i < tail_.polyCoeffs.size(); ++i)
        out += (i ? "," : "") + tail_.polyCoeffs[i].get_str();
      break;
    }
    case TailRule::Kind::TailFromGeometric:
      out += "tail-rule: tail:geom:" + tail_.geomBase.get_str() + "," + tail_.geomRatio.get_str();
      break;
    case TailRule::Kind::AdaptiveSigma:
      out += "tail-rule: asigma";
      break;
  }
  return out;
}

}  // namespace ostro
