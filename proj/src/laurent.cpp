#include "coxtoda/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coxtoda {

MultiLaurent::MultiLaurent(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

MultiLaurent MultiLaurent::variable(const std::string& name, int power) {
  return monomial(Rational(1), {{name, power}});
}

MultiLaurent MultiLaurent::monomial(
    const Rational& c, const std::vector<std::pair<std::string, int>>& factors) {
  MultiLaurent f;
  if (c == 0) return f;
  std::map<std::string, int> exps;
  for (const auto& [name, e] : factors) exps[name] += e;
  Exponents key;
  for (const auto& [name, e] : exps) {
    if (e == 0) continue;
    f.vars_.push_back(name);
    key.push_back(e);
  }
  f.terms_[key] = c;
  return f;
}

Rational MultiLaurent::constant_value() const {
  if (is_zero()) return Rational(0);
  if (!is_constant()) throw std::logic_error("not a constant");
  return terms_.begin()->second;
}

int MultiLaurent::var_index(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var)
    throw std::invalid_argument("unknown variable: " + var);
  return static_cast<int>(it - vars_.begin());
}

void MultiLaurent::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [key, c] : terms_)
    for (size_t i = 0; i < key.size(); ++i)
      if (key[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> kept;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  TermMap pruned;
  for (const auto& [key, c] : terms_) {
    Exponents nk;
    for (size_t i = 0; i < key.size(); ++i)
      if (used[i]) nk.push_back(key[i]);
    pruned[nk] = c;
  }
  vars_ = std::move(kept);
  terms_ = std::move(pruned);
}

MultiLaurent MultiLaurent::with_variables(
    const std::vector<std::string>& vars) const {
  MultiLaurent out;
  out.vars_ = vars;
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    pos[i] = static_cast<size_t>(it - vars.begin());
  }
  for (const auto& [key, c] : terms_) {
    Exponents nk(vars.size(), 0);
    for (size_t i = 0; i < key.size(); ++i) nk[pos[i]] = key[i];
    out.terms_[nk] = c;
  }
  return out;
}

void MultiLaurent::align(MultiLaurent& a, MultiLaurent& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(merged));
  a = a.with_variables(merged);
  b = b.with_variables(merged);
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
  MultiLaurent a = *this, b = o;
  align(a, b);
  for (const auto& [key, c] : b.terms_) a.terms_[key] += c;
  a.normalize();
  return a;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
  return *this + (-o);
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
  MultiLaurent a = *this, b = o;
  align(a, b);
  MultiLaurent out;
  out.vars_ = a.vars_;
  const size_t nv = a.vars_.size();
  Exponents key(nv);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (size_t i = 0; i < nv; ++i) key[i] = ka[i] + kb[i];
      out.terms_[key] += ca * cb;
    }
  }
  out.normalize();
  return out;
}

MultiLaurent MultiLaurent::scale(const Rational& c) const {
  if (c == 0) return MultiLaurent();
  MultiLaurent out = *this;
  for (auto& [key, coef] : out.terms_) coef *= c;
  return out;
}

MultiLaurent operator*(const Rational& c, const MultiLaurent& f) {
  return f.scale(c);
}

MultiLaurent MultiLaurent::inverse() const {
  if (!is_monomial()) throw std::domain_error("inverse requires a monomial");
  MultiLaurent out;
  out.vars_ = vars_;
  const auto& [key, c] = *terms_.begin();
  Exponents nk = key;
  for (int& e : nk) e = -e;
  out.terms_[nk] = Rational(1) / c;
  return out;
}

MultiLaurent MultiLaurent::pow(int k) const {
  if (k == 0) return MultiLaurent(Rational(1));
  MultiLaurent base = k > 0 ? *this : inverse();
  int n = k > 0 ? k : -k;
  MultiLaurent out(Rational(1));
  while (n > 0) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

MultiLaurent MultiLaurent::partial(const std::string& var) const {
  if (!depends_on(var)) return MultiLaurent();
  int idx = var_index(var);
  MultiLaurent out;
  out.vars_ = vars_;
  for (const auto& [key, c] : terms_) {
    if (key[idx] == 0) continue;
    Exponents nk = key;
    nk[idx] -= 1;
    out.terms_[nk] += c * key[idx];
  }
  out.normalize();
  return out;
}

MultiLaurent MultiLaurent::coeff_in(const std::string& var, int power) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var)
    return power == 0 ? *this : MultiLaurent();
  int idx = static_cast<int>(it - vars_.begin());
  MultiLaurent out;
  out.vars_ = vars_;
  for (const auto& [key, c] : terms_) {
    if (key[idx] != power) continue;
    Exponents nk = key;
    nk[idx] = 0;
    out.terms_[nk] = c;
  }
  out.normalize();
  return out;
}

Rational MultiLaurent::evaluate(
    const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end())
      throw std::invalid_argument("no value for variable " + vars_[i]);
    vals[i] = it->second;
  }
  Rational total(0);
  for (const auto& [key, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      if (vals[i] == 0) {
        if (key[i] < 0)
          throw std::domain_error("zero substituted into negative power of " +
                                  vars_[i]);
        t = 0;
        break;
      }
      t *= rational_pow(vals[i], key[i]);
    }
    total += t;
  }
  return total;
}

bool MultiLaurent::depends_on(const std::string& var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

int MultiLaurent::max_degree_in(const std::string& var) const {
  if (!depends_on(var)) return 0;
  int idx = var_index(var);
  int best = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first || key[idx] > best) best = key[idx];
    first = false;
  }
  return best;
}

int MultiLaurent::min_degree_in(const std::string& var) const {
  if (!depends_on(var)) return 0;
  int idx = var_index(var);
  int best = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first || key[idx] < best) best = key[idx];
    first = false;
  }
  return best;
}

std::optional<int> MultiLaurent::uniform_degree_in(
    const std::string& var) const {
  if (is_zero()) return 0;
  if (!depends_on(var)) return 0;
  int idx = var_index(var);
  int deg = terms_.begin()->first[idx];
  for (const auto& [key, c] : terms_)
    if (key[idx] != deg) return std::nullopt;
  return deg;
}

std::string MultiLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c < 0) {
        out << "-";
        mag = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    bool any_var = std::any_of(key.begin(), key.end(),
                               [](int e) { return e != 0; });
    bool printed = false;
    if (mag != 1 || !any_var) {
      out << mag.get_str();
      printed = true;
    }
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      if (printed) out << "*";
      out << vars_[i];
      if (key[i] != 1) out << "^" << key[i];
      printed = true;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Rational rational() {
    Rational num(integer());
    if (eat('/')) num /= Rational(integer());
    return num;
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    auto ok = [&](char c, bool lead) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!lead && std::isdigit(static_cast<unsigned char>(c)));
    };
    if (pos >= s.size() || !ok(s[pos], true)) fail("expected identifier");
    while (pos < s.size() && ok(s[pos], false)) ++pos;
    return s.substr(start, pos - start);
  }

  MultiLaurent factor() {
    skip_ws();
    if (pos >= s.size()) fail("expected factor");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MultiLaurent(rational());
    std::string name = identifier();
    int e = 1;
    if (eat('^')) e = static_cast<int>(integer());
    return MultiLaurent::variable(name, e);
  }

  MultiLaurent term() {
    MultiLaurent f = factor();
    while (eat('*')) f *= factor();
    return f;
  }

  MultiLaurent expression() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MultiLaurent total = term();
    if (neg) total = -total;
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        total += term();
      else if (eat('-'))
        total = total - term();
      else
        fail("expected '+' or '-'");
    }
    return total;
  }
};

}  // namespace

MultiLaurent MultiLaurent::parse(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  if (p.pos >= text.size()) return MultiLaurent();
  return p.expression();
}

}  // namespace coxtoda
