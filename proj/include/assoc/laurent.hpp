#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/numbers.hpp"

namespace assoc {

struct VarSet {
  std::vector<std::string> names;
  explicit VarSet(std::vector<std::string> ns);
  int index_of(const std::string& name) const;  // -1 if absent
  size_t size() const { return names.size(); }
  bool operator==(const VarSet& o) const { return names == o.names; }
};

using VarSetPtr = std::shared_ptr<const VarSet>;
VarSetPtr make_varset(std::vector<std::string> names);

using Exps = std::vector<int32_t>;

struct Term {
  Exps e;
  Int c;
  bool operator==(const Term& o) const { return e == o.e && c == o.c; }
};

/// Sparse multivariate Laurent polynomial over arbitrary-precision integers.
/// Terms are kept sorted by exponent vector (ascending lexicographic) with no
/// zero coefficients, so equal polynomials compare equal structurally.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static LaurentPoly zero(VarSetPtr vars) { return LaurentPoly(std::move(vars)); }
  static LaurentPoly constant(VarSetPtr vars, Int c);
  static LaurentPoly variable(VarSetPtr vars, const std::string& name, int power = 1);
  static LaurentPoly monomial(VarSetPtr vars, Exps e, Int c);

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const;

  /// Integer power; negative k requires a unit monomial base.
  LaurentPoly pow(long long k) const;

 private:
  VarSetPtr vars_;
  std::vector<Term> terms_;
  friend LaurentPoly from_term_list(VarSetPtr, std::vector<Term>&&);
};

/// Exact quotient in the Laurent ring over the integers; throws NotDivisible
/// when b does not divide a (which in the mutation pipeline means the
/// exchange-relation computation is broken, not that the input is bad).
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Monomial substitution: variable v of f maps to the single-term image
/// images[v] over `target`.  Exponents transform linearly.  Throws
/// NonMonomialImage when an image has several terms or a non-unit
/// coefficient raised to a negative power.
LaurentPoly substitute(const LaurentPoly& f, VarSetPtr target,
                       const std::vector<LaurentPoly>& images);

/// Per observed variable, the minimum exponent over all terms of f (the gcd
/// of the monomials); unobserved slots are zero.  Throws ZeroPolynomial.
Exps tropical_exponents(const LaurentPoly& f, const std::vector<char>& observed);

/// tropical_exponents as a coefficient-1 monomial over the observed
/// subvariable set, in f's variable order.
LaurentPoly tropical_eval(const LaurentPoly& f, const std::vector<std::string>& observed);

/// Sets the named variables to 1: their exponents are dropped and like terms
/// merge; result lives on the surviving variables.
LaurentPoly set_vars_to_one(const LaurentPoly& f, const std::vector<std::string>& kill);

/// Distinct exponent vectors of f restricted to the chosen variables, in the
/// order given.  No hull is taken here.  Throws ZeroPolynomial.
std::vector<Exps> newton_points(const LaurentPoly& f, const std::vector<std::string>& chosen);

/// Human-readable sum of monomials, leading terms first,
/// e.g. "y1*y2*y3 + y1*y3 + y1 + y3 + 1".
std::string to_string(const LaurentPoly& f);

/// Parses +, -, *, /, ^, parentheses, integers and variable names.  The
/// divisor of '/' must reduce to a unit monomial.
LaurentPoly parse_poly(VarSetPtr vars, const std::string& text);

}  // namespace assoc
