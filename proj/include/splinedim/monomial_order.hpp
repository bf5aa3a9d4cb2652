#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "splinedim/polynomial.hpp"

namespace splinedim {

/// A global monomial order. Orders carry no variable set; slots beyond the
/// active variables are zero in every monomial, so they never decide a comparison.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Weighted, Elimination };

  /// Variable 0 largest.
  static MonomialOrder grevlex();
  /// grevlex with `var` moved to the smallest position; the other variables keep
  /// their relative order. Used for saturation by a variable.
  static MonomialOrder grevlex_last(std::size_t var);
  static MonomialOrder lex();
  /// Compare w.a first, then grevlex. Negative weights make this a well-order
  /// only on homogeneous ideals; buchberger enforces that.
  static MonomialOrder weighted(const WeightVector& w);
  /// Total degree in the `block` variables first, then grevlex.
  static MonomialOrder elimination(const std::vector<std::size_t>& block);

  Kind kind() const { return kind_; }
  const std::vector<int>& weights() const { return weights_; }
  bool has_negative_weight() const;
  bool eliminates(std::size_t var) const { return (block_mask_ >> var) & 1u; }

  /// >0 when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        return rank_is_identity_ ? grevlex_compare(a, b) : permuted_grevlex(a, b);
      case Kind::Lex:
        for (std::size_t i = 0; i < kMaxVariables; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::Weighted: {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
          wa += static_cast<long>(weights_[i]) * a[i];
          wb += static_cast<long>(weights_[i]) * b[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        return grevlex_compare(a, b);
      }
      case Kind::Elimination: {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
          if ((block_mask_ >> i) & 1u) {
            da += a[i];
            db += b[i];
          }
        if (da != db) return da > db ? 1 : -1;
        return grevlex_compare(a, b);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.weights_ == b.weights_ && a.order_ == b.order_ && a.block_mask_ == b.block_mask_;
  }

 private:
  MonomialOrder() = default;

  int permuted_grevlex(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t k = kMaxVariables; k > 0; --k) {
      const std::size_t i = order_[k - 1];
      const int diff = a[i] - b[i];
      if (diff != 0) return diff < 0 ? 1 : -1;
    }
    return 0;
  }

  Kind kind_ = Kind::Grevlex;
  std::vector<int> weights_;
  /// Variables from largest to smallest (grevlex only).
  std::array<std::uint8_t, kMaxVariables> order_{0, 1, 2, 3, 4, 5, 6, 7};
  bool rank_is_identity_ = true;
  std::uint32_t block_mask_ = 0;
};

/// Leading term of a nonzero polynomial under `order`.
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

}  // namespace splinedim
