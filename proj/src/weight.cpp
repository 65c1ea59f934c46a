#include "rootpoly/weight.hpp"

#include <cstdlib>
#include <sstream>

#include "rootpoly/errors.hpp"

namespace rp {

static long long parse_coord(const std::string& tok) {
  size_t slash = tok.find('/');
  try {
    if (slash == std::string::npos) {
      return 2 * std::stoll(tok);
    }
    long long num = std::stoll(tok.substr(0, slash));
    long long den = std::stoll(tok.substr(slash + 1));
    if (den == 2) return num;
    if (den == 1) return 2 * num;
  } catch (const std::exception&) {
    throw ParseError("bad weight coordinate '" + tok + "'");
  }
  throw ParseError("weight coordinate denominator must be 1 or 2: '" + tok + "'");
}

Weight weight_from_string(const std::string& text) {
  Weight w;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty weight coordinate");
    size_t b = tok.find_last_not_of(" \t");
    w.push_back(parse_coord(tok.substr(a, b - a + 1)));
  }
  if (w.empty()) throw ParseError("empty weight");
  return w;
}

std::string coord_to_string(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string weight_to_string(const Weight& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += coord_to_string(w[i]);
  }
  return out;
}

}  // namespace rp
