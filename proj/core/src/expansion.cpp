#include "ostro/expansion.hpp"

#include <cassert>
#include <stdexcept>

namespace ostro {

O1Expansion::O1Expansion(std::vector<mpz_class> g, bool exhausted)
    : g_(std::move(g)), exhausted_(exhausted) {
  for (const mpz_class& s : g_)
    if (s < 1) throw std::domain_error("expansion symbol below 1");
}

std::vector<mpz_class> O1Expansion::q() const {
  std::vector<mpz_class> out;
  out.reserve(g_.size());
  mpz_class acc = 0;
  for (const mpz_class& s : g_) {
    acc += s;
    out.push_back(acc);
  }
  return out;
}

O1Expansion O1Expansion::prefix(std::size_t k) const {
  if (k > g_.size()) throw std::domain_error("prefix longer than expansion");
  return O1Expansion(std::vector<mpz_class>(g_.begin(), g_.begin() + k),
                     exhausted_ && k == g_.size());
}

O1Expansion expand(const Rational& x, std::size_t maxSymbols) {
  if (!(Rational(0) < x && x < Rational(1)))
    throw std::domain_error("expand requires 0 < x < 1");
  if (maxSymbols == 0) throw std::domain_error("expand requires maxSymbols >= 1");

  // With x = p/D the remainders stay over the fixed denominator D:
  //   r_0 = p,  q_n = floor(D / r_{n-1}),  r_n = D mod r_{n-1}.
  // r strictly decreases, so the loop terminates; q strictly increases.
  const mpz_class& D = x.den();
  mpz_class r = x.num();
  std::vector<mpz_class> g;
  mpz_class prevQ = 0;
  while (r != 0 && g.size() < maxSymbols) {
    mpz_class qn, rn;
    mpz_fdiv_qr(qn.get_mpz_t(), rn.get_mpz_t(), D.get_mpz_t(), r.get_mpz_t());
    assert(rn < r);        // remainder law: 0 <= alpha_n < alpha_{n-1}
    assert(qn > prevQ);    // strict denominator growth
    g.push_back(qn - prevQ);
    prevQ = qn;
    r = rn;
  }
  return O1Expansion(std::move(g), r == 0);
}

Rational evaluate(const O1Expansion& e) {
  if (e.size() == 0) throw std::domain_error("evaluate of empty expansion");
  const std::vector<mpz_class> q = e.q();
  // Backward Horner over the alternating sum: t_k = (1 - t_{k+1}) / q_k.
  Rational t(0);
  for (std::size_t k = q.size(); k-- > 0;) t = (Rational(1) - t) / Rational(q[k]);
  return t;
}

std::vector<Convergent> convergents(const O1Expansion& e) {
  if (e.size() == 0) throw std::domain_error("convergents of empty expansion");
  const std::vector<mpz_class> q = e.q();
  std::vector<Convergent> out;
  out.reserve(q.size());
  mpz_class A = 0, B = 1;
  for (std::size_t k = 0; k < q.size(); ++k) {
    A = A * q[k] + (k % 2 == 0 ? 1 : -1);
    B = B * q[k];
    out.push_back(Convergent{A, B, k + 1});
  }
  return out;
}

bool alternationCheck(const O1Expansion& e) {
  const std::vector<Convergent> cs = convergents(e);
  bool haveOdd = false, haveEven = false;
  Rational lastOdd(0), lastEven(0), minOdd(0), maxEven(0);
  for (const Convergent& c : cs) {
    const Rational v = c.value();
    if (c.order % 2 == 1) {
      if (haveOdd && v >= lastOdd) return false;  // odd orders strictly decrease
      lastOdd = v;
      if (!haveOdd || v < minOdd) minOdd = v;
      haveOdd = true;
    } else {
      if (haveEven && v <= lastEven) return false;  // even orders strictly increase
      lastEven = v;
      if (!haveEven || v > maxEven) maxEven = v;
      haveEven = true;
    }
  }
  if (haveOdd && haveEven && minOdd <= maxEven) return false;
  return true;
}

O1Expansion dualRepresentation(const O1Expansion& e) {
  if (!e.exhausted()) throw std::domain_error("dual form of a non-exhausted prefix");
  if (e.size() == 0) throw std::domain_error("dual form of empty expansion");
  std::vector<mpz_class> g = e.g();
  if (g.back() == 1) {
    if (g.size() == 1) throw std::domain_error("expansion (1) has no second form");
    g.pop_back();
    g.back() += 1;
  } else {
    g.back() -= 1;
    g.push_back(1);
  }
  return O1Expansion(std::move(g), true);
}

Rational truncationErrorBound(const O1Expansion& e, std::size_t k) {
  if (k < 1 || k >= e.size()) throw std::domain_error("truncation order out of range");
  const std::vector<mpz_class> q = e.q();
  mpz_class prod = 1;
  for (std::size_t i = 0; i < k; ++i) prod *= q[i];
  prod *= q[k];
  return Rational(1) / Rational(prod);
}

std::string toText(const O1Expansion& e) {
  std::string out = "O1[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += e.g()[i].get_str();
  }
  if (!e.exhausted()) out += ";...";
  out += "]";
  return out;
}

O1Expansion parseText(std::string_view text) {
  const auto fail = [&] { throw std::invalid_argument("malformed expansion text: '" + std::string(text) + "'"); };
  if (!text.starts_with("O1[") || !text.ends_with("]")) fail();
  std::string_view body = text.substr(3, text.size() - 4);
  bool exhausted = true;
  if (body.ends_with(";...")) {
    exhausted = false;
    body.remove_suffix(4);
  }
  if (body.empty()) fail();
  std::vector<mpz_class> g;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty()) fail();
    for (char c : tok)
      if (c < '0' || c > '9') fail();
    g.emplace_back(std::string(tok), 10);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return O1Expansion(std::move(g), exhausted);
}

}  // namespace ostro
