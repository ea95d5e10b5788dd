#ifndef COXTODA_LAURENT_HPP
#define COXTODA_LAURENT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxtoda/rational.hpp"

namespace coxtoda {

/*
  Sparse multivariate Laurent polynomial with exact rational coefficients.

  Canonical form: variable names sorted, every variable appears with a
  nonzero exponent in some term, no zero coefficients stored.  Structural
  equality therefore coincides with mathematical equality.
*/
class MultiLaurent {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  MultiLaurent() = default;  // zero
  explicit MultiLaurent(const Rational& c);
  explicit MultiLaurent(long c) : MultiLaurent(Rational(c)) {}

  static MultiLaurent variable(const std::string& name, int power = 1);
  static MultiLaurent monomial(
      const Rational& c,
      const std::vector<std::pair<std::string, int>>& factors);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  Rational constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }

  MultiLaurent operator-() const;
  MultiLaurent operator+(const MultiLaurent& o) const;
  MultiLaurent operator-(const MultiLaurent& o) const;
  MultiLaurent operator*(const MultiLaurent& o) const;
  MultiLaurent& operator+=(const MultiLaurent& o) { return *this = *this + o; }
  MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
  MultiLaurent scale(const Rational& c) const;

  // Monomials only; throws otherwise.
  MultiLaurent inverse() const;
  MultiLaurent pow(int k) const;

  MultiLaurent partial(const std::string& var) const;
  MultiLaurent coeff_in(const std::string& var, int power) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  bool depends_on(const std::string& var) const;
  int max_degree_in(const std::string& var) const;
  int min_degree_in(const std::string& var) const;
  // Exponent of var if it is the same in every term, nullopt otherwise.
  std::optional<int> uniform_degree_in(const std::string& var) const;

  bool operator==(const MultiLaurent& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

  std::string str() const;
  static MultiLaurent parse(const std::string& text);

 private:
  std::vector<std::string> vars_;  // sorted
  TermMap terms_;

  int var_index(const std::string& var) const;
  void normalize();
  // Rewrites both operands over the union of their variable sets.
  static void align(MultiLaurent& a, MultiLaurent& b);
  MultiLaurent with_variables(const std::vector<std::string>& vars) const;

  friend class LoopMatrix;
};

MultiLaurent operator*(const Rational& c, const MultiLaurent& f);

}  // namespace coxtoda

#endif
