#pragma once

// Text form of polynomials:
//   poly   = ["+" | "-"] term {("+" | "-") term}
//   term   = coeff | [coeff "*"] factor {"*" factor}
//   factor = ident ["^" uint]
//   coeff  = uint ["/" uint]
// Whitespace is ignored. Identifiers must be declared up front.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars,
             const std::optional<std::string>& param)
      : text_(text), vars_(vars), param_(param) {}

  Polynomial parse() {
    Polynomial result(vars_, param_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      parse_term(result, negative);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  void parse_term(Polynomial& out, bool negative) {
    skip_ws();
    Rational coeff = 1;
    ExponentVector exps(vars_.size());
    std::size_t tdeg = 0;
    bool need_factor = true;

    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      skip_ws();
      if (at_end() || peek() != '*') {
        need_factor = false;
      } else {
        ++pos_;
      }
    }
    while (need_factor) {
      parse_factor(exps, tdeg);
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    if (negative) coeff = -coeff;
    out.add_term(exps, Coefficient::monomial(coeff, tdeg));
  }

  Rational parse_coeff() {
    Integer num = parse_uint();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Integer den = parse_uint();
      if (den == 0) throw ParseError("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  void parse_factor(ExponentVector& exps, std::size_t& tdeg) {
    skip_ws();
    const std::size_t at = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      throw ParseError("expected a variable", pos_);
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      name.push_back(text_[pos_++]);

    int power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '-') throw ParseError("negative exponent", pos_);
      const std::size_t exp_at = pos_;
      Integer e = parse_uint();
      if (!e.fits_sint_p() || e > 1000000) throw ParseError("exponent too large", exp_at);
      power = static_cast<int>(e.get_si());
    }

    if (param_ && name == *param_) {
      tdeg += static_cast<std::size_t>(power);
      return;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        exps[i] += power;
        return;
      }
    }
    throw ParseError("unknown identifier '" + name + "'", at);
  }

  Integer parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const std::optional<std::string>& param_;
  std::size_t pos_ = 0;
};

inline void check_identifiers(const std::vector<std::string>& vars,
                              const std::optional<std::string>& param) {
  if (vars.empty()) throw PreconditionError("no variables declared");
  std::set<std::string> seen;
  auto check = [&](const std::string& v) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw PreconditionError("invalid identifier '" + v + "'");
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw PreconditionError("invalid identifier '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionError("identifier declared twice: '" + v + "'");
  };
  for (const auto& v : vars) check(v);
  if (param) check(*param);
}

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars,
                             const std::optional<std::string>& param = std::nullopt) {
  detail::check_identifiers(vars, param);
  return detail::PolyParser(text, vars, param).parse();
}

/// Canonical text: terms in decreasing graded-lex order, parameter powers
/// expanded into separate terms. parse_poly reads it back unchanged.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const std::string tname = p.param().value_or("t");
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const auto& tc = c.coefficients();
    for (std::size_t k = tc.size(); k-- > 0;) {
      const Rational& a = tc[k];
      if (a == 0) continue;
      std::vector<std::string> factors;
      if (k > 0) factors.push_back(k == 1 ? tname : tname + "^" + std::to_string(k));
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        factors.push_back(e[i] == 1 ? p.vars()[i] : p.vars()[i] + "^" + std::to_string(e[i]));
      }
      const Rational mag = abs(a);
      if (first)
        out << (a < 0 ? "-" : "");
      else
        out << (a < 0 ? " - " : " + ");
      first = false;
      bool need_star = false;
      if (mag != 1 || factors.empty()) {
        out << mag.get_str();
        need_star = true;
      }
      for (const auto& f : factors) {
        if (need_star) out << '*';
        out << f;
        need_star = true;
      }
    }
  }
  return out.str();
}

/// Parses "z=0" or "z=a*x+b*y" (a linear form in the other variables).
inline HyperplaneSpec parse_hyperplane(std::string_view text, const std::vector<std::string>& vars) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("hyperplane needs '='", text.size());
  std::string lhs(text.substr(0, eq));
  lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](unsigned char ch) { return std::isspace(ch); }),
            lhs.end());
  HyperplaneSpec h;
  h.coefficients.assign(vars.size(), Rational(0));
  auto it = std::find(vars.begin(), vars.end(), lhs);
  if (it == vars.end()) throw ParseError("left side must be a declared variable", 0);
  h.index = static_cast<std::size_t>(it - vars.begin());

  Polynomial rhs;
  try {
    rhs = parse_poly(text.substr(eq + 1), vars);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in hyperplane right side: ") + e.what(), eq + 1 + e.position());
  }
  for (const auto& [e, c] : rhs.terms()) {
    if (e.degree() != 1) throw ParseError("hyperplane right side must be linear and homogeneous", eq + 1);
    std::size_t j = 0;
    while (e[j] == 0) ++j;
    if (j == h.index) throw ParseError("hyperplane right side uses the eliminated variable", eq + 1);
    h.coefficients[j] = c.constant();
  }
  return h;
}

}  // namespace singlab
