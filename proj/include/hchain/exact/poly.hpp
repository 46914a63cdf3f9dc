#pragma once

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hchain/exact/monomial.hpp"
#include "hchain/exact/var_table.hpp"

namespace hchain::exact {

/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, reduced).
using Scalar = mpq_class;

class UnsupportedSubstitution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void reduce_imaginary(const VarTable& t, Monomial& m, Scalar& c) {
  int i = t.imaginary();
  if (i < 0) return;
  auto& e = m.e[static_cast<std::size_t>(i)];
  if (e >= 2) {
    int half = e / 2;
    e = static_cast<std::int16_t>(e % 2);
    if (half % 2) c = -c;
  }
}

using Accumulator = std::unordered_map<Monomial, Scalar, MonomialHash>;

inline void accumulate(Accumulator& acc, const Monomial& m, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

}  // namespace detail

/// Ordinary commutative product of monomials.
struct CommutativeProduct {
  static void multiply(const VarTable& t, const Monomial& a, const Scalar& ca, const Monomial& b,
                       const Scalar& cb, detail::Accumulator& out) {
    Monomial m = a + b;
    Scalar c = ca * cb;
    detail::reduce_imaginary(t, m, c);
    detail::accumulate(out, m, c);
  }
};

/// Sparse exact expression over a VarTable: a map from exponent vector to a
/// nonzero rational coefficient, kept in graded-lex order. The Product policy
/// decides how two monomials multiply; with CommutativeProduct this is the
/// phase-space polynomial ring, and weyl_algebra plugs in a normal-ordered
/// product to obtain differential operators on the same storage.
template <class Product>
class BasicPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexLess>;
  using product_type = Product;

  BasicPoly() = default;
  explicit BasicPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

  static BasicPoly constant(VarTablePtr vars, const Scalar& c) {
    BasicPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
  }
  static BasicPoly symbol(VarTablePtr vars, const std::string& name, int power = 1) {
    BasicPoly p(vars);
    Monomial m;
    auto i = vars->index(name);
    if (power < 0 && !vars->laurent(i))
      throw StructuralError("negative power of non-Laurent symbol '" + name + "'");
    m.e[i] = static_cast<std::int16_t>(power);
    Scalar c = 1;
    detail::reduce_imaginary(*vars, m, c);
    p.terms_.emplace(m, c);
    return p;
  }
  static BasicPoly term(VarTablePtr vars, const Monomial& m, const Scalar& c) {
    BasicPoly p(std::move(vars));
    p.add_term(m, c);
    return p;
  }

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Scalar constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  bool is_single_term() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPoly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  BasicPoly& operator+=(const Scalar& s) {
    add_term(Monomial{}, s);
    return *this;
  }
  BasicPoly& operator-=(const Scalar& s) {
    add_term(Monomial{}, -s);
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator+(BasicPoly a, const Scalar& s) { return a += s; }
  friend BasicPoly operator-(BasicPoly a, const Scalar& s) { return a -= s; }
  friend BasicPoly operator+(const Scalar& s, BasicPoly a) { return a += s; }
  friend BasicPoly operator-(const Scalar& s, const BasicPoly& a) { return -a + s; }
  friend BasicPoly operator*(BasicPoly a, const Scalar& s) { return a *= s; }
  friend BasicPoly operator*(const Scalar& s, BasicPoly a) { return a *= s; }
  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_table(b);
    BasicPoly r(a.vars_ ? a.vars_ : b.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    detail::Accumulator acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) Product::multiply(*r.vars_, ma, ca, mb, cb, acc);
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace(m, std::move(c));
    return r;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  BasicPoly pow(unsigned n) const {
    BasicPoly r = constant(vars_, 1);
    BasicPoly base = *this;
    while (n) {
      if (n & 1u) r = r * base;
      n >>= 1u;
      if (n) base = base * base;
    }
    return r;
  }

  bool operator==(const BasicPoly& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return same_table(o) && terms_ == o.terms_;
  }
  bool operator!=(const BasicPoly& o) const { return !(*this == o); }

  /// Reinterprets the stored terms under a different product policy.
  template <class Other>
  BasicPoly<Other> recast() const {
    BasicPoly<Other> r(vars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  /// Same terms, moved to another table with the same symbol names
  /// (every symbol with a nonzero exponent must exist in the target).
  BasicPoly rebase(const VarTablePtr& target) const {
    BasicPoly r(target);
    std::vector<int> map(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->find(vars_->name(i));
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (!m.e[i]) continue;
        if (map[i] < 0) throw StructuralError("symbol '" + vars_->name(i) + "' missing in target table");
        n.e[static_cast<std::size_t>(map[i])] = m.e[i];
      }
      r.add_term(n, c);
    }
    return r;
  }

  /// Partial derivative; d/dx x^n = n x^(n-1) holds for negative n as well.
  BasicPoly derivative(std::size_t var) const {
    BasicPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial n = m;
      n.e[var] = static_cast<std::int16_t>(n.e[var] - 1);
      r.add_term(n, c * m.e[var]);
    }
    return r;
  }
  BasicPoly derivative(const std::string& name) const { return derivative(vars_->index(name)); }

  int max_exponent(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.e[var] > d) d = m.e[var];
      first = false;
    }
    return d;
  }
  int min_exponent(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.e[var] < d) d = m.e[var];
      first = false;
    }
    return d;
  }

  /// Coefficient of var^power, as an expression free of var.
  BasicPoly coefficient(std::size_t var, int power) const {
    BasicPoly r(vars_);
    for (const auto& [m, c] : terms_)
      if (m.e[var] == power) {
        Monomial n = m;
        n.e[var] = 0;
        r.add_term(n, c);
      }
    return r;
  }

  bool depends_on(std::size_t var) const {
    for (const auto& [m, c] : terms_)
      if (m.e[var] != 0) return true;
    return false;
  }
  bool depends_on(const std::string& name) const {
    int i = vars_->find(name);
    return i >= 0 && depends_on(static_cast<std::size_t>(i));
  }
  bool has_phase_dependence() const {
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < vars_->size(); ++i)
        if (m.e[i] && vars_->is_phase(i)) return true;
    return false;
  }

  /// Real and imaginary parts with respect to the table's imaginary unit.
  BasicPoly real_part() const { return imag_split(0); }
  BasicPoly imag_part() const { return imag_split(1); }

  /// Floating-point evaluation at the given values (one per table symbol).
  double evaluate(std::span<const double> values) const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) {
      double t = c.get_d();
      for (std::size_t i = 0; i < vars_->size(); ++i)
        if (m.e[i]) t *= std::pow(values[i], m.e[i]);
      s += t;
    }
    return s;
  }

  /// Exact evaluation with every symbol bound to a rational.
  Scalar evaluate_exact(std::span<const Scalar> values) const {
    Scalar s = 0;
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        int e = m.e[i];
        if (!e) continue;
        Scalar v = values[i];
        if (e < 0) {
          if (v == 0) throw std::domain_error("division by zero in exact evaluation");
          v = 1 / v;
          e = -e;
        }
        for (int k = 0; k < e; ++k) t *= v;
      }
      s += t;
    }
    return s;
  }

  /// Simultaneous substitution. Symbols without a binding are carried over
  /// by name into the target table. A symbol raised to a negative power may
  /// only be bound to a single term, so the result stays Laurent.
  BasicPoly substitute(const std::map<std::string, BasicPoly>& bindings, const VarTablePtr& target) const {
    std::vector<BasicPoly> base;
    base.reserve(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      auto it = bindings.find(vars_->name(i));
      if (it != bindings.end()) {
        if (!it->second.is_zero() && !it->second.same_table_ptr(target))
          base.push_back(it->second.rebase(target));
        else if (it->second.is_zero())
          base.push_back(BasicPoly(target));
        else
          base.push_back(it->second);
      } else if (depends_on(i)) {
        int j = target->find(vars_->name(i));
        if (j < 0) throw StructuralError("symbol '" + vars_->name(i) + "' has no binding or target slot");
        base.push_back(symbol(target, vars_->name(i)));
      } else {
        base.push_back(BasicPoly(target));
      }
    }
    std::vector<std::map<int, BasicPoly>> cache(vars_->size());
    auto power = [&](std::size_t i, int e) -> const BasicPoly& {
      auto it = cache[i].find(e);
      if (it != cache[i].end()) return it->second;
      BasicPoly v;
      if (e >= 0) {
        v = base[i].pow(static_cast<unsigned>(e));
      } else {
        v = base[i].monomial_inverse(vars_->name(i)).pow(static_cast<unsigned>(-e));
      }
      return cache[i].emplace(e, std::move(v)).first->second;
    };
    BasicPoly r(target);
    for (const auto& [m, c] : terms_) {
      BasicPoly t = constant(target, c);
      for (std::size_t i = 0; i < vars_->size(); ++i)
        if (m.e[i]) t = t * power(i, m.e[i]);
      r += t;
    }
    return r;
  }

  /// Inverse of a single-term expression (coefficient and monomial).
  BasicPoly monomial_inverse(const std::string& what = "expression") const {
    if (terms_.size() != 1)
      throw UnsupportedSubstitution("cannot invert multi-term " + what + " = " + to_string() +
                                    " (result would not be Laurent)");
    const auto& [m, c] = *terms_.begin();
    Monomial n;
    const int imag = vars_->imaginary();
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (static_cast<int>(i) == imag) continue;
      n.e[i] = static_cast<std::int16_t>(-m.e[i]);
      if (n.e[i] < 0 && !vars_->laurent(i))
        throw UnsupportedSubstitution("inverting " + what + " needs a negative power of non-Laurent '" +
                                      vars_->name(i) + "'");
    }
    Scalar ic = 1 / c;
    if (imag >= 0 && m.e[static_cast<std::size_t>(imag)] == 1) {
      // 1/I = -I
      n.e[static_cast<std::size_t>(vars_->imaginary())] = 1;
      ic = -ic;
    }
    BasicPoly r(vars_);
    r.add_term(n, ic);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Scalar a = abs(c);
      bool neg = c < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      bool unit = m.is_one();
      if (a != 1 || unit) {
        os << a.get_str();
        if (!unit) os << "*";
      }
      bool firstf = true;
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (!m.e[i]) continue;
        if (!firstf) os << "*";
        firstf = false;
        os << vars_->name(i);
        if (m.e[i] != 1) os << "^" << (m.e[i] < 0 ? "(" : "") << m.e[i] << (m.e[i] < 0 ? ")" : "");
      }
    }
    return os.str();
  }

  bool same_table(const BasicPoly& o) const {
    if (vars_ == o.vars_) return true;
    if (!vars_ || !o.vars_) return true;
    return *vars_ == *o.vars_;
  }
  bool same_table_ptr(const VarTablePtr& t) const { return vars_ == t || (vars_ && t && *vars_ == *t); }

 private:
  template <class>
  friend class BasicPoly;

  void check_table(const BasicPoly& o) const {
    if (!same_table(o)) throw StructuralError("expressions built over different symbol tables");
  }
  BasicPoly imag_split(int want) const {
    BasicPoly r(vars_);
    int i = vars_ ? vars_->imaginary() : -1;
    for (const auto& [m, c] : terms_) {
      int e = i < 0 ? 0 : m.e[static_cast<std::size_t>(i)];
      if (e != want) continue;
      Monomial n = m;
      if (i >= 0) n.e[static_cast<std::size_t>(i)] = 0;
      r.add_term(n, c);
    }
    return r;
  }

  VarTablePtr vars_;
  TermMap terms_;
};

/// Phase-space polynomial: Laurent in positions, polynomial in momenta and
/// parameters, with the commutative product.
using Poly = BasicPoly<CommutativeProduct>;

template <class P>
std::ostream& operator<<(std::ostream& os, const BasicPoly<P>& p) {
  return os << p.to_string();
}

}  // namespace hchain::exact
