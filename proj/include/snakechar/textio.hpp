#ifndef SNAKECHAR_TEXTIO_HPP
#define SNAKECHAR_TEXTIO_HPP

#include <cctype>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qchar.hpp"

namespace snakechar {

using njson = nlohmann::ordered_json;

/// Text form of a monomial: whitespace separated tokens i_s or i_s^e, unit "1".
inline std::string format_monomial(const YMonomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& x : m.v) {
    if (!first) os << ' ';
    first = false;
    os << x.i << '_' << x.s;
    if (x.e != 1) os << '^' << x.e;
  }
  return os.str();
}

namespace detail {

inline long parse_int(const std::string& tok, size_t& p) {
  size_t start = p;
  if (p < tok.size() && (tok[p] == '-' || tok[p] == '+')) ++p;
  while (p < tok.size() && std::isdigit((unsigned char)tok[p])) ++p;
  if (p == start || (p == start + 1 && !std::isdigit((unsigned char)tok[start])))
    throw std::invalid_argument("bad integer in token: " + tok);
  return std::stol(tok.substr(start, p - start));
}

inline void parse_var_token(const std::string& tok, YMonomial& acc) {
  size_t p = 0;
  long i = parse_int(tok, p);
  if (p >= tok.size() || tok[p] != '_') throw std::invalid_argument("bad variable token: " + tok);
  ++p;
  long s = parse_int(tok, p);
  long e = 1;
  if (p < tok.size()) {
    if (tok[p] != '^') throw std::invalid_argument("bad variable token: " + tok);
    ++p;
    e = parse_int(tok, p);
    if (p != tok.size()) throw std::invalid_argument("bad variable token: " + tok);
  }
  if (i < 1) throw std::invalid_argument("node must be positive in token: " + tok);
  acc = acc * YMonomial::var((int)i, (int)s, (int)e);
}

}  // namespace detail

inline YMonomial parse_monomial(const std::string& text) {
  YMonomial m;
  std::istringstream is(text);
  std::string tok;
  bool any = false;
  while (is >> tok) {
    any = true;
    if (tok == "1") continue;
    detail::parse_var_token(tok, m);
  }
  if (!any) throw std::invalid_argument("empty monomial text");
  return m;
}

/// Text form of a character: terms joined by " + ", leading term first.
/// A term is the monomial text, prefixed "c*" when the coefficient is not 1;
/// coefficient multiples of the unit monomial print as the bare integer.
inline std::string format_qchar(const QCharacter& c) {
  if (c.is_zero()) return "0";
  auto terms = c.sorted_terms();
  std::ostringstream os;
  for (size_t k = terms.size(); k-- > 0;) {
    const auto& [m, x] = terms[k];
    if (m.is_unit())
      os << x.str();
    else if (x == 1)
      os << format_monomial(m);
    else
      os << x.str() << '*' << format_monomial(m);
    if (k > 0) os << " + ";
  }
  return os.str();
}

inline QCharacter parse_qchar(const std::string& text) {
  QCharacter c;
  std::string term;
  auto flush = [&](const std::string& piece) {
    std::istringstream is(piece);
    std::string tok;
    if (!(is >> tok)) throw std::invalid_argument("empty term in character text");
    BigInt coeff = 1;
    YMonomial m;
    size_t star = tok.find('*');
    if (star != std::string::npos) {
      coeff = BigInt(tok.substr(0, star));
      tok = tok.substr(star + 1);
      if (tok.empty()) throw std::invalid_argument("dangling * in character text");
    } else if (tok.find('_') == std::string::npos && tok != "1") {
      c.add_term(YMonomial::unit(), BigInt(tok));
      std::string extra;
      if (is >> extra) throw std::invalid_argument("unexpected token after constant: " + extra);
      return;
    }
    if (tok != "1") detail::parse_var_token(tok, m);
    while (is >> tok) detail::parse_var_token(tok, m);
    c.add_term(m, coeff);
  };
  std::string trimmed = text;
  if (trimmed == "0") return c;
  size_t pos = 0;
  while (true) {
    size_t plus = trimmed.find(" + ", pos);
    if (plus == std::string::npos) {
      flush(trimmed.substr(pos));
      break;
    }
    flush(trimmed.substr(pos, plus - pos));
    pos = plus + 3;
  }
  return c;
}

inline njson monomial_to_json(const YMonomial& m) {
  njson a = njson::array();
  for (const auto& x : m.v) a.push_back({x.i, x.s, x.e});
  return a;
}

inline YMonomial monomial_from_json(const njson& a) {
  YMonomial m;
  for (const auto& x : a) {
    if (!x.is_array() || x.size() != 3) throw std::invalid_argument("bad monomial entry in JSON");
    m = m * YMonomial::var(x[0].get<int>(), x[1].get<int>(), x[2].get<int>());
  }
  return m;
}

inline njson qchar_to_json(const QCharacter& c) {
  njson terms = njson::array();
  auto sorted = c.sorted_terms();
  for (size_t k = sorted.size(); k-- > 0;) {
    njson term;
    term["m"] = monomial_to_json(sorted[k].first);
    term["c"] = sorted[k].second.str();
    terms.push_back(std::move(term));
  }
  njson r;
  r["terms"] = std::move(terms);
  return r;
}

inline QCharacter qchar_from_json(const njson& j) {
  QCharacter c;
  for (const auto& term : j.at("terms"))
    c.add_term(monomial_from_json(term.at("m")), BigInt(term.at("c").get<std::string>()));
  return c;
}

}  // namespace snakechar

#endif
