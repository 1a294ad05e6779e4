#include "icebox/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace icebox {

namespace {

// Removes trailing zero exponents so that each monomial has a unique key.
void trim(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::vector<int> padded(const std::vector<int>& e, int n) {
  std::vector<int> out(e);
  out.resize(n, 0);
  return out;
}

// Descending graded-lex: higher total degree first, ties broken by the
// lexicographically larger padded exponent vector.
bool graded_lex_before(const std::vector<int>& a, const std::vector<int>& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  x.canonicalize();
  return x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

int IndetRegistry::add(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int idx = static_cast<int>(names_.size());
  names_.push_back(name);
  index_[name] = idx;
  return idx;
}

int IndetRegistry::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int IndetRegistry::require(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw std::invalid_argument("unknown indeterminate '" + name + "'");
  return i;
}

LaurentPoly LaurentPoly::constant(const IndetRegistry* reg, const Rat& c) {
  LaurentPoly p(reg);
  p.add_term({}, c);
  return p;
}

LaurentPoly LaurentPoly::constant(const IndetRegistry* reg, long c) {
  return constant(reg, Rat(c));
}

LaurentPoly LaurentPoly::var(const IndetRegistry* reg, int index, int exp) {
  return monomial(reg, Rat(1), {{index, exp}});
}

LaurentPoly LaurentPoly::monomial(const IndetRegistry* reg, const Rat& coef,
                                  const std::vector<std::pair<int, int>>& var_exps) {
  LaurentPoly p(reg);
  std::vector<int> e;
  for (const auto& [idx, ex] : var_exps) {
    if (idx < 0 || idx >= reg->size())
      throw std::invalid_argument("monomial: variable index out of range");
    if (idx >= static_cast<int>(e.size())) e.resize(idx + 1, 0);
    e[idx] += ex;
  }
  p.add_term(std::move(e), coef);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::domain_error("constant_value on a non-constant");
  return terms_.begin()->second;
}

void LaurentPoly::add_term(std::vector<int> exp, const Rat& coef) {
  if (coef == 0) return;
  trim(exp);
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exp), coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_registry(const LaurentPoly& o) const {
  if (reg_ != o.reg_)
    throw std::invalid_argument("operands built over different registries");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(reg_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_registry(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_registry(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_registry(b);
  LaurentPoly out(a.reg_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_registry(b);
  return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly out(reg_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

LaurentPoly LaurentPoly::inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("inverse: only monomials are invertible here");
  const auto& [e, c] = *terms_.begin();
  LaurentPoly out(reg_);
  std::vector<int> ie(e);
  for (int& x : ie) x = -x;
  out.add_term(std::move(ie), Rat(1) / c);
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e == 0) return constant(reg_, Rat(1));
  if (e < 0) return inverse().pow(-e);
  LaurentPoly acc = constant(reg_, Rat(1));
  LaurentPoly base = *this;
  int n = e;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::substitute(const std::map<int, LaurentPoly>& bindings) const {
  for (const auto& [idx, img] : bindings) {
    if (idx < 0 || idx >= reg_->size())
      throw std::invalid_argument("substitute: variable index out of range");
    if (img.reg_ != reg_)
      throw std::invalid_argument("substitute: image over a different registry");
  }
  LaurentPoly out(reg_);
  for (const auto& [e, c] : terms_) {
    // Split the monomial into an unbound part and a product of bound images.
    std::vector<int> rest(e);
    LaurentPoly factor = constant(reg_, c);
    for (const auto& [idx, img] : bindings) {
      if (idx >= static_cast<int>(rest.size())) continue;
      int ex = rest[idx];
      if (ex == 0) continue;
      rest[idx] = 0;
      if (ex < 0 && !img.is_monomial())
        throw std::domain_error("substitute: negative power of a non-invertible image");
      factor = factor * img.pow(ex);
      if (factor.is_zero()) break;
    }
    if (factor.is_zero()) continue;
    LaurentPoly mono(reg_);
    mono.add_term(std::move(rest), Rat(1));
    out += mono * factor;
  }
  return out;
}

int LaurentPoly::max_exponent(int var) const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int x = var < static_cast<int>(e.size()) ? e[var] : 0;
    best = std::max(best, x);
  }
  return best;
}

int LaurentPoly::min_exponent(int var) const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int x = var < static_cast<int>(e.size()) ? e[var] : 0;
    best = std::min(best, x);
  }
  return best;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  const int n = reg_->size();
  std::vector<std::pair<std::vector<int>, Rat>> sorted;
  sorted.reserve(terms_.size());
  for (const auto& [e, c] : terms_) sorted.emplace_back(padded(e, n), c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return graded_lex_before(a.first, b.first); });

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rat ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1)
        factors.push_back(reg_->name(i));
      else
        factors.push_back(reg_->name(i) + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      os << rat_to_string(ac);
    } else {
      if (ac != 1) os << rat_to_string(ac) << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  const int n = reg_->size();
  std::vector<std::pair<std::vector<int>, Rat>> sorted;
  sorted.reserve(terms_.size());
  for (const auto& [e, c] : terms_) sorted.emplace_back(padded(e, n), c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return graded_lex_before(a.first, b.first); });

  nlohmann::json jterms = nlohmann::json::array();
  for (const auto& [e, c] : sorted)
    jterms.push_back({{"exp", e}, {"coef", rat_to_string(c)}});
  return {{"vars", reg_->names()}, {"terms", jterms}};
}

LaurentPoly LaurentPoly::from_json(const IndetRegistry* reg, const nlohmann::json& j) {
  const auto& vars = j.at("vars");
  std::vector<int> remap;
  remap.reserve(vars.size());
  for (const auto& v : vars) remap.push_back(reg->require(v.get<std::string>()));
  LaurentPoly out(reg);
  for (const auto& t : j.at("terms")) {
    const auto& je = t.at("exp");
    if (je.size() != vars.size())
      throw std::invalid_argument("from_json: exp length does not match vars");
    std::vector<int> e;
    for (size_t i = 0; i < je.size(); ++i) {
      int ex = je[i].get<int>();
      if (ex == 0) continue;
      int idx = remap[i];
      if (idx >= static_cast<int>(e.size())) e.resize(idx + 1, 0);
      e[idx] += ex;
    }
    out.add_term(std::move(e), rat_from_string(t.at("coef").get<std::string>()));
  }
  return out;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
bool lp_eq(const LaurentPoly& a, const LaurentPoly& b) { return a == b; }

LaurentPoly lp_substitute(const LaurentPoly& p,
                          const std::map<std::string, LaurentPoly>& bindings) {
  std::map<int, LaurentPoly> by_index;
  for (const auto& [name, img] : bindings)
    by_index.emplace(p.registry()->require(name), img);
  return p.substitute(by_index);
}

}  // namespace icebox
