#include "multseq/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace multseq {

namespace {

bool isIdentStart(unsigned char c) { return std::isalpha(c) != 0 || c == '_'; }
bool isIdentChar(unsigned char c) { return std::isalnum(c) != 0 || c == '_'; }

std::string stripWhitespace(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (std::isspace(c) == 0) out.push_back(static_cast<char>(c));
  }
  return out;
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Expo parseExponentDigits(const std::string& digits, const std::string& where) {
  if (digits.empty()) {
    throw ParseError("malformed exponent in '" + where + "'");
  }
  Expo value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("malformed exponent in '" + where + "'");
    }
    value = value * 10 + (c - '0');
    if (value > kExpoGuard) {
      throw ParseError("exponent too large in '" + where + "'");
    }
  }
  return value;
}

void rejectNonMonomial(const std::string& src) {
  for (char c : src) {
    if (c == '+' || c == '-') {
      throw ParseError(std::string("non-monomial generator (found '") + c +
                       "'): only monomial ideals are supported");
    }
  }
}

Monomial parseShorthandTerm(const std::string& term,
                            const std::map<char, int>& varIndex, int d) {
  std::vector<Expo> exps(static_cast<std::size_t>(d), 0);
  std::size_t pos = 0;
  while (pos < term.size()) {
    const char c = term[pos];
    if (!isIdentStart(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "' in '" +
                       term + "'");
    }
    auto it = varIndex.find(c);
    if (it == varIndex.end()) {
      throw ParseError(std::string("unknown variable '") + c + "' in '" +
                       term + "'");
    }
    ++pos;
    Expo e = 1;
    if (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) {
      std::size_t start = pos;
      while (pos < term.size() &&
             std::isdigit(static_cast<unsigned char>(term[pos]))) {
        ++pos;
      }
      e = parseExponentDigits(term.substr(start, pos - start), term);
      if (e == 0) {
        throw ParseError("exponent 0 in '" + term +
                         "': use explicit mode for trivial factors");
      }
    }
    exps[static_cast<std::size_t>(it->second)] =
        checkedAdd(exps[static_cast<std::size_t>(it->second)], e);
  }
  return Monomial(std::move(exps));
}

Monomial parseExplicitTerm(const std::string& term,
                           const std::map<std::string, int>& varIndex,
                           const std::map<char, int>& shortIndex, int d) {
  std::vector<Expo> exps(static_cast<std::size_t>(d), 0);
  for (const std::string& factor : splitOn(term, '*')) {
    if (factor.empty()) {
      throw ParseError("empty factor in '" + term + "'");
    }
    std::size_t pos = 0;
    if (!isIdentStart(static_cast<unsigned char>(factor[0]))) {
      throw ParseError(std::string("unexpected character '") + factor[0] +
                       "' in '" + term + "'");
    }
    while (pos < factor.size() &&
           isIdentChar(static_cast<unsigned char>(factor[pos]))) {
      ++pos;
    }
    const std::string name = factor.substr(0, pos);
    Expo e = 1;
    if (pos < factor.size()) {
      if (factor[pos] != '^') {
        throw ParseError(std::string("unexpected character '") + factor[pos] +
                         "' in '" + term + "'");
      }
      e = parseExponentDigits(factor.substr(pos + 1), term);
    }
    auto it = varIndex.find(name);
    if (it == varIndex.end()) {
      // A name like "x2" usually means shorthand exponents leaked into
      // explicit syntax; say so.
      std::string hint;
      std::size_t letters = 0;
      while (letters < name.size() &&
             !std::isdigit(static_cast<unsigned char>(name[letters]))) {
        ++letters;
      }
      if (letters == 1 && letters < name.size() &&
          shortIndex.count(name[0]) != 0) {
        hint = " (shorthand exponents cannot be mixed with '*'/'^' syntax)";
      }
      throw ParseError("unknown variable '" + name + "'" + hint);
    }
    exps[static_cast<std::size_t>(it->second)] =
        checkedAdd(exps[static_cast<std::size_t>(it->second)], e);
  }
  return Monomial(std::move(exps));
}

}  // namespace

RingSpec parseVarList(const std::string& csv) {
  std::vector<std::string> names;
  for (std::string part : splitOn(csv, ',')) {
    part = stripWhitespace(part);
    if (part.empty()) {
      throw ParseError("empty variable name in list '" + csv + "'");
    }
    if (!isIdentStart(static_cast<unsigned char>(part[0]))) {
      throw ParseError("variable '" + part + "' is not an identifier");
    }
    for (unsigned char c : part) {
      if (!isIdentChar(c)) {
        throw ParseError("variable '" + part + "' is not an identifier");
      }
    }
    names.push_back(std::move(part));
  }
  try {
    return RingSpec(std::move(names));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(e.what());
  }
}

MonomialIdeal parseIdeal(const std::string& src, const RingSpec& ring) {
  const std::string text = stripWhitespace(src);
  if (text.empty()) {
    throw ParseError("empty ideal expression");
  }
  rejectNonMonomial(text);

  const int d = ring.dim();
  std::map<std::string, int> varIndex;
  std::map<char, int> shortIndex;
  bool allSingleChar = true;
  for (int k = 0; k < d; ++k) {
    const std::string& name = ring.varNames()[static_cast<std::size_t>(k)];
    varIndex.emplace(name, k);
    if (name.size() == 1) {
      shortIndex.emplace(name[0], k);
    } else {
      allSingleChar = false;
    }
  }
  const bool explicitMode = !allSingleChar ||
                            text.find('*') != std::string::npos ||
                            text.find('^') != std::string::npos;

  std::vector<Monomial> points;
  for (const std::string& term : splitOn(text, ',')) {
    if (term.empty()) {
      throw ParseError("empty term in '" + src + "'");
    }
    if (term == "1") {
      points.emplace_back(std::vector<Expo>(static_cast<std::size_t>(d), 0));
      continue;
    }
    points.push_back(explicitMode
                         ? parseExplicitTerm(term, varIndex, shortIndex, d)
                         : parseShorthandTerm(term, shortIndex, d));
  }
  return MonomialIdeal::generatedBy(std::move(points), ring);
}

IdealExpression parseIdealExpression(const std::string& raw,
                                     const RingSpec& ring) {
  const std::string text = stripWhitespace(raw);
  std::optional<std::int64_t> power;
  std::string body = text;
  if (!text.empty() && text.front() == '(') {
    const std::size_t close = text.rfind(')');
    if (close == std::string::npos) {
      throw ParseError("unmatched '(' in '" + raw + "'");
    }
    body = text.substr(1, close - 1);
    std::string suffix = text.substr(close + 1);
    if (!suffix.empty()) {
      if (suffix[0] != '^') {
        throw ParseError("expected '^' after ')' in '" + raw + "'");
      }
      const Expo k = parseExponentDigits(suffix.substr(1), raw);
      if (k == 0) {
        throw ParseError("power 0 in '" + raw + "' is not allowed");
      }
      power = k;
    }
  }
  return IdealExpression{raw, ring, parseIdeal(body, ring), power};
}

std::string renderMonomial(const Monomial& m, const RingSpec& ring) {
  if (m.size() != ring.dim()) {
    throw DimensionMismatchError("renderMonomial: dimension mismatch");
  }
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!first) os << '*';
    os << ring.varNames()[static_cast<std::size_t>(k)];
    if (m[k] > 1) os << '^' << m[k];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string renderIdeal(const MonomialIdeal& ideal) {
  if (ideal.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) os << ", ";
    os << renderMonomial(g, ideal.ring());
    first = false;
  }
  return os.str();
}

}  // namespace multseq
