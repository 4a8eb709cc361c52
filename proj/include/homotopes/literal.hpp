#pragma once

#include "homotopes/errors.hpp"
#include "homotopes/rational.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homotopes::literal {

/// One additive term c * v1^a1 * v2^a2 ... of a sum literal.
struct Term {
  Rational coeff{1};
  std::vector<std::pair<std::string, long>> powers;
};

/// Parses sums of monomials such as "1/2 - x^-1 + 3*s_1_2^2*x". Variables
/// may repeat inside a term; the caller combines them.
inline std::vector<Term> parse_sum(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty literal");

  std::size_t pos = 0;
  auto fail = [&](const std::string &why) -> void {
    throw ParseError(why + " at offset " + std::to_string(pos) + " in '" + s + "'");
  };
  auto digits = [&]() {
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected digits");
    return s.substr(b, pos - b);
  };
  auto signed_int = [&]() -> long {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    std::string d = digits();
    long v = std::stol(d);
    return neg ? -v : v;
  };

  std::vector<Term> out;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    bool saw_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      saw_sign = true;
      ++pos;
    }
    if (!first && !saw_sign) fail("expected '+' or '-'");
    first = false;
    Term t;
    bool need_factor = true;
    while (need_factor) {
      if (pos >= s.size()) fail("unexpected end");
      char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        std::string lit = num;
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          lit += "/" + digits();
        }
        t.coeff *= Rational::parse(lit);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
          ++pos;
        std::string name = s.substr(b, pos - b);
        long e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          if (pos < s.size() && s[pos] == '(') {
            ++pos;
            e = signed_int();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
          } else {
            e = signed_int();
          }
        }
        t.powers.emplace_back(std::move(name), e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      need_factor = pos < s.size() && s[pos] == '*';
      if (need_factor) ++pos;
    }
    if (sign < 0) t.coeff = -t.coeff;
    out.push_back(std::move(t));
  }
  return out;
}

/// Joins already-formatted signed terms "a", "-b" into "a - b".
inline std::string join_terms(const std::vector<std::pair<Rational, std::string>> &terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[c, mono] : terms) {
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    std::string body;
    if (mono.empty()) body = a.str();
    else if (a.is_one()) body = mono;
    else body = a.str() + "*" + mono;
    if (first) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

} // namespace homotopes::literal
