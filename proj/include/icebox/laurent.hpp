// Exact sparse Laurent polynomials over arbitrary-precision rationals.
//
// Indeterminates live in an IndetRegistry. Exponent vectors are dense integer
// arrays indexed by registry position, stored with trailing zeros trimmed so
// that a monomial has one canonical key even if further indeterminates are
// registered later. No zero coefficient is ever stored, so equality of term
// maps is equality of polynomials.

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace icebox {

using Rat = mpq_class;

// Parses "p" or "p/q" (optionally signed) into a canonical rational.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& x);

class IndetRegistry {
 public:
  // Registers a name if new, returns its stable index either way.
  int add(const std::string& name);
  // Returns -1 if the name is not registered.
  int index_of(const std::string& name) const;
  // Like index_of but throws std::invalid_argument on unknown names.
  int require(const std::string& name) const;
  const std::string& name(int i) const { return names_.at(i); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

class LaurentPoly {
 public:
  LaurentPoly() : reg_(nullptr) {}
  explicit LaurentPoly(const IndetRegistry* reg) : reg_(reg) {}

  static LaurentPoly constant(const IndetRegistry* reg, const Rat& c);
  static LaurentPoly constant(const IndetRegistry* reg, long c);
  // Single variable to a (possibly negative) power.
  static LaurentPoly var(const IndetRegistry* reg, int index, int exp = 1);
  // coef * prod var^exp over the given (index, exponent) pairs.
  static LaurentPoly monomial(const IndetRegistry* reg, const Rat& coef,
                              const std::vector<std::pair<int, int>>& var_exps);

  const IndetRegistry* registry() const { return reg_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Value of a constant polynomial; throws on non-constants.
  Rat constant_value() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const Rat& c) const;
  // Integer power; negative exponents require a monomial base.
  LaurentPoly pow(int e) const;
  // Monomial inverse; throws on non-monomials.
  LaurentPoly inverse() const;

  // Simultaneous substitution of registry indices by polynomials. A variable
  // occurring with a negative exponent must be bound to an invertible
  // monomial (or left unbound); otherwise std::domain_error is thrown.
  LaurentPoly substitute(const std::map<int, LaurentPoly>& bindings) const;

  // Exponent range of one variable over all terms; 0 for absent variables.
  int max_exponent(int var) const;
  int min_exponent(int var) const;

  // Deterministic text form, terms in descending graded-lex order.
  std::string to_string() const;
  // {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}, ...]} with the
  // same term order as to_string and exponent arrays padded to all vars.
  nlohmann::json to_json() const;
  // Accepts any var list whose names are registered; exponents are remapped
  // by name, so round trips are exact across registries.
  static LaurentPoly from_json(const IndetRegistry* reg, const nlohmann::json& j);

  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  // Adds coef * x^exp into the term map, keeping the canonical form.
  void add_term(std::vector<int> exp, const Rat& coef);

 private:
  void check_same_registry(const LaurentPoly& o) const;

  const IndetRegistry* reg_;
  std::map<std::vector<int>, Rat> terms_;
};

// Free-function aliases used throughout the verification code.
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
bool lp_eq(const LaurentPoly& a, const LaurentPoly& b);
// Name-keyed substitution wrapper; unknown names are an error.
LaurentPoly lp_substitute(const LaurentPoly& p,
                          const std::map<std::string, LaurentPoly>& bindings);

}  // namespace icebox
