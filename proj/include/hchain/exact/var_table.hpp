#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hchain::exact {

/// Raised when two expressions over different symbol tables are combined,
/// or a symbol lookup fails.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VarKind { position, momentum, param };

inline constexpr std::size_t kMaxVars = 24;

/// Ordered symbol table shared by every expression built over it.
///
/// Positions and momenta come in conjugate pairs (x_k, p_k). Positions are
/// Laurent variables; momenta and parameters carry nonnegative exponents
/// unless a parameter is explicitly declared Laurent. An optional symbol
/// plays the role of the imaginary unit and is reduced with I^2 = -1.
class VarTable {
 public:
  class Builder;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  VarKind kind(std::size_t i) const { return kinds_.at(i); }
  bool laurent(std::size_t i) const { return laurent_.at(i); }
  /// Conjugate partner of a position or momentum, -1 for parameters.
  int conjugate(std::size_t i) const { return conjugate_.at(i); }
  int imaginary() const { return imag_; }
  int hbar() const { return hbar_; }

  int find(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }
  std::size_t index(const std::string& n) const {
    int i = find(n);
    if (i < 0) throw StructuralError("unknown symbol '" + n + "'");
    return static_cast<std::size_t>(i);
  }
  bool is_phase(std::size_t i) const { return kinds_[i] != VarKind::param; }

  std::vector<std::size_t> positions() const { return of_kind(VarKind::position); }
  std::vector<std::size_t> momenta() const { return of_kind(VarKind::momentum); }
  std::vector<std::size_t> params() const { return of_kind(VarKind::param); }

  bool operator==(const VarTable& o) const {
    return names_ == o.names_ && kinds_ == o.kinds_ && laurent_ == o.laurent_ &&
           imag_ == o.imag_ && hbar_ == o.hbar_;
  }

 private:
  std::vector<std::size_t> of_kind(VarKind k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kinds_.size(); ++i)
      if (kinds_[i] == k) out.push_back(i);
    return out;
  }

  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
  std::vector<bool> laurent_;
  std::vector<int> conjugate_;
  int imag_ = -1;
  int hbar_ = -1;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable::Builder {
 public:
  /// Adds conjugate pairs; positions precede momenta in the table order.
  Builder& phase(std::vector<std::string> positions, std::vector<std::string> momenta) {
    if (positions.size() != momenta.size())
      throw StructuralError("positions and momenta must have equal length");
    pos_ = std::move(positions);
    mom_ = std::move(momenta);
    return *this;
  }
  Builder& params(std::vector<std::string> p) {
    for (auto& s : p) params_.push_back(std::move(s));
    return *this;
  }
  Builder& laurent_params(std::vector<std::string> p) {
    for (auto& s : p) laurent_params_.push_back(std::move(s));
    return *this;
  }
  /// Declares the Planck constant symbol (must also be a parameter or will be added).
  Builder& hbar(std::string n) {
    hbar_ = std::move(n);
    return *this;
  }
  Builder& imaginary(std::string n) {
    imag_ = std::move(n);
    return *this;
  }

  VarTablePtr build() const {
    auto t = std::make_shared<VarTable>();
    auto add = [&](const std::string& n, VarKind k, bool laurent) {
      if (t->find(n) >= 0) throw StructuralError("duplicate symbol '" + n + "'");
      t->names_.push_back(n);
      t->kinds_.push_back(k);
      t->laurent_.push_back(laurent);
      t->conjugate_.push_back(-1);
    };
    for (auto& n : pos_) add(n, VarKind::position, true);
    for (auto& n : mom_) add(n, VarKind::momentum, false);
    for (std::size_t k = 0; k < pos_.size(); ++k) {
      t->conjugate_[k] = static_cast<int>(pos_.size() + k);
      t->conjugate_[pos_.size() + k] = static_cast<int>(k);
    }
    for (auto& n : params_) add(n, VarKind::param, false);
    for (auto& n : laurent_params_) add(n, VarKind::param, true);
    if (!hbar_.empty()) {
      if (t->find(hbar_) < 0) add(hbar_, VarKind::param, false);
      t->hbar_ = t->find(hbar_);
    }
    if (!imag_.empty()) {
      if (t->find(imag_) < 0) add(imag_, VarKind::param, false);
      t->imag_ = t->find(imag_);
    }
    if (t->size() > kMaxVars) throw StructuralError("too many symbols for one table");
    return t;
  }

 private:
  std::vector<std::string> pos_, mom_, params_, laurent_params_;
  std::string hbar_, imag_;
};

}  // namespace hchain::exact
