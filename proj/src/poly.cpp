#include "gramcal/poly.hpp"

#include <cctype>
#include <sstream>

namespace gramcal {

namespace {

unsigned degree_of(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [name, exp] : m) d += exp;
  return d;
}

}  // namespace

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  // Same degree: walk names in ascending order, missing exponent = 0; the
  // first difference decides (larger exponent on the earlier name wins).
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ia == a.end()) return true;  // a runs out of early names first
    if (ib == b.end()) return false;
    if (ia->first != ib->first) {
      // The lexicographically smaller name is present in exactly one of them.
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(Rational c) {
  if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Poly Poly::var(const std::string& name) {
  Poly p;
  p.terms_.emplace(Monomial{{name, 1}}, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw input_error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

bool Poly::is_single_variable() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  return m.size() == 1 && m.front().second == 1 && c == 1;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

std::set<std::string> Poly::indeterminates() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& [name, exp] : m) names.insert(name);
  }
  return names;
}

bool Poly::mentions(const std::string& name) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [n, exp] : m) {
      if (n == name) return true;
    }
  }
  return false;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  for (const auto& [ma, ca] : lhs.terms()) {
    for (const auto& [mb, cb] : rhs.terms()) {
      out.add_term(merge_monomials(ma, mb), ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly Poly::pow(unsigned exp) const {
  Poly acc(1);
  Poly base = *this;
  while (exp > 0) {
    if (exp & 1u) acc *= base;
    base *= base;
    exp >>= 1u;
  }
  return acc;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& assignment) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [name, exp] : m) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        throw input_error("evaluate: indeterminate '" + name + "' unassigned");
      }
      term *= rational_pow(it->second, exp);
    }
    total += term;
  }
  return total;
}

Poly Poly::substitute(const std::map<std::string, Poly>& assignment) const {
  Poly total;
  for (const auto& [m, c] : terms_) {
    Poly term{c};
    for (const auto& [name, exp] : m) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        term *= Poly::var(name).pow(exp);
      } else {
        term *= it->second.pow(exp);
      }
    }
    total += term;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading (largest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    const bool unit = coeff == 1;
    if (m.empty()) {
      out << to_string(coeff);
      continue;
    }
    if (!unit) out << to_string(coeff) << "*";
    bool first_var = true;
    for (const auto& [name, exp] : m) {
      if (!first_var) out << "*";
      first_var = false;
      out << name;
      if (exp > 1) out << "^" << exp;
    }
  }
  return out.str();
}

Poly poly_substitute(const Poly& p, const std::map<std::string, Poly>& assignment) {
  for (const auto& [name, value] : assignment) {
    if (!p.mentions(name)) {
      throw input_error("substitute: unknown indeterminate '" + name + "'");
    }
  }
  return p.substitute(assignment);
}

namespace {

// Grammar:  expr   := ['+'|'-'] term (('+'|'-') term)*
//           term   := factor ('*' factor)*
//           factor := rational | name ('^' uint)? | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("polynomial parse error at offset " + std::to_string(pos_) +
                      ": " + what + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc;
    bool negative = false;
    if (eat('-')) {
      negative = true;
    } else {
      eat('+');
    }
    acc = negative ? -term() : term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    const char c = peek();
    if (c == '(') {
      eat('(');
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      unsigned exp = 1;
      if (eat('^')) exp = exponent();
      return Poly::var(name).pow(exp);
    }
    fail("expected rational, name or '('");
  }

  Rational number() {
    skip_space();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    mpz_class num(std::string(text_.substr(start, pos_ - start)), 10);
    if (eat('/')) {
      skip_space();
      const size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator digits");
      mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)), 10);
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  std::string identifier() {
    skip_space();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    skip_space();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent digits");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace gramcal
