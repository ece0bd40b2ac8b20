#include "qkchev/lattice.hpp"

#include "qkchev/error.hpp"

#include <sstream>

namespace qkchev {

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in '" + s + "'");
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw PreconditionError("not a rational number: '" + s + "'");
  }
}

std::string format_nodes(NodeSet s, int rank) {
  std::string out;
  for (int j = 0; j < rank; ++j) {
    if (!contains(s, j)) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(j + 1);
  }
  return out;
}

NodeSet parse_nodes(const std::string& s, int rank) {
  NodeSet out = 0;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int j = 0;
    try {
      std::size_t used = 0;
      j = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad node index '" + tok + "'");
    }
    if (j < 1 || j > rank)
      throw PreconditionError("node " + std::to_string(j) + " out of range 1.." + std::to_string(rank));
    out |= singleton(j - 1);
  }
  return out;
}

}  // namespace qkchev
