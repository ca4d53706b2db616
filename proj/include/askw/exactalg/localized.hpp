#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "askw/exactalg/sparse_poly.hpp"

namespace askw {

/// The multiplicative set {a^k} for a polynomial a that is monic in the
/// variable `x_var`. Powers of a are cached; the cache is guarded so that one
/// Localization may be shared between threads.
template <class R>
class Localization {
 public:
  Localization(SparsePoly<R> a, std::size_t x_var, R one)
      : a_(std::move(a)), x_var_(x_var), one_(std::move(one)) {
    if (a_.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot localize at the zero polynomial");
    powers_.push_back(SparsePoly<R>::constant(a_.nvars(), one_));
  }

  const SparsePoly<R>& a() const { return a_; }
  std::size_t x_var() const { return x_var_; }
  const R& one() const { return one_; }

  SparsePoly<R> power(unsigned k) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (powers_.size() <= k) powers_.push_back(powers_.back() * a_);
    return powers_[k];
  }

 private:
  SparsePoly<R> a_;
  std::size_t x_var_;
  R one_;
  mutable std::mutex mu_;
  mutable std::vector<SparsePoly<R>> powers_;
};

/// numerator / a^a_power in the localization at a.
template <class R>
class LocalizedElement {
 public:
  using Loc = std::shared_ptr<const Localization<R>>;

  LocalizedElement() = default;
  LocalizedElement(Loc loc, SparsePoly<R> numerator, unsigned a_power = 0)
      : loc_(std::move(loc)), num_(std::move(numerator)), k_(a_power) {
    if (num_.is_zero()) k_ = 0;
  }

  const SparsePoly<R>& numerator() const { return num_; }
  unsigned a_power() const { return k_; }
  const Loc& localization() const { return loc_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Same value with denominator a^k (k >= a_power()).
  SparsePoly<R> numerator_over(unsigned k) const {
    if (k < k_) throw std::logic_error("numerator_over: exponent below current denominator");
    if (k == k_ || num_.is_zero()) return num_;
    return num_ * loc_->power(k - k_);
  }

  /// Divides a out of the numerator as long as possible.
  LocalizedElement normalized() const {
    LocalizedElement out = *this;
    while (out.k_ > 0) {
      auto [quo, rem] = divmod_monic(out.num_, loc_->a(), loc_->x_var());
      if (!rem.is_zero()) break;
      out.num_ = std::move(quo);
      --out.k_;
    }
    if (out.num_.is_zero()) out.k_ = 0;
    return out;
  }

  LocalizedElement& operator+=(const LocalizedElement& o) {
    adopt(o);
    const unsigned k = std::max(k_, o.k_);
    num_ = numerator_over(k) + o.numerator_over(k);
    k_ = num_.is_zero() ? 0 : k;
    return *this;
  }

  LocalizedElement& operator-=(const LocalizedElement& o) {
    adopt(o);
    const unsigned k = std::max(k_, o.k_);
    num_ = numerator_over(k) - o.numerator_over(k);
    k_ = num_.is_zero() ? 0 : k;
    return *this;
  }

  friend LocalizedElement operator+(LocalizedElement a, const LocalizedElement& b) { return a += b; }
  friend LocalizedElement operator-(LocalizedElement a, const LocalizedElement& b) { return a -= b; }

  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    LocalizedElement out = a;
    out.adopt(b);
    out.num_ = a.num_ * b.num_;
    out.k_ = out.num_.is_zero() ? 0 : a.k_ + b.k_;
    return out;
  }

  LocalizedElement scaled(const SparsePoly<R>& f) const {
    return LocalizedElement(loc_, num_ * f, k_);
  }

  /// u/a^s == v/a^t iff u*a^t == v*a^s.
  bool equals_cross(const LocalizedElement& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return num_.is_zero() && o.num_.is_zero();
    const auto* loc = loc_ ? loc_.get() : o.loc_.get();
    return num_ * loc->power(o.k_) == o.num_ * loc->power(k_);
  }

 private:
  void adopt(const LocalizedElement& o) {
    if (!loc_) loc_ = o.loc_;
  }

  Loc loc_;
  SparsePoly<R> num_;
  unsigned k_ = 0;
};

template <class R>
bool is_zero(const LocalizedElement<R>& e) { return e.is_zero(); }

}  // namespace askw
