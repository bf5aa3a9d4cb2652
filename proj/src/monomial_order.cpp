#include "splinedim/monomial_order.hpp"

#include <algorithm>

#include "splinedim/errors.hpp"

namespace splinedim {

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(); }

MonomialOrder MonomialOrder::grevlex_last(std::size_t var) {
  if (var >= kMaxVariables) throw InvalidArgument("variable index out of range");
  MonomialOrder o;
  // Slots past the active variables are always zero, so putting `var` at the
  // very end of the full array makes it the smallest active variable.
  std::size_t k = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (i != var) o.order_[k++] = static_cast<std::uint8_t>(i);
  o.order_[kMaxVariables - 1] = static_cast<std::uint8_t>(var);
  o.rank_is_identity_ = var == kMaxVariables - 1;
  return o;
}

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::weighted(const WeightVector& w) {
  if (w.weights.size() > kMaxVariables) throw InvalidArgument("weight vector too long");
  MonomialOrder o;
  o.kind_ = Kind::Weighted;
  o.weights_ = w.weights;
  return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<std::size_t>& block) {
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  for (auto v : block) {
    if (v >= kMaxVariables) throw InvalidArgument("variable index out of range");
    o.block_mask_ |= 1u << v;
  }
  return o;
}

bool MonomialOrder::has_negative_weight() const {
  return std::any_of(weights_.begin(), weights_.end(), [](int w) { return w < 0; });
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::Grevlex:
      return rank_is_identity_ ? "grevlex" : "grevlex(last=" + std::to_string(order_[kMaxVariables - 1]) + ")";
    case Kind::Lex:
      return "lex";
    case Kind::Weighted: {
      std::string s = "weighted(";
      for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + ")";
    }
    case Kind::Elimination: {
      std::string s = "elimination(";
      bool first = true;
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (eliminates(i)) {
          s += (first ? "" : ",") + std::to_string(i);
          first = false;
        }
      return s + ")";
    }
  }
  return "?";
}

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomialError("the zero polynomial has no leading term");
  const auto& terms = f.terms();
  if (order.kind() == MonomialOrder::Kind::Grevlex && order == MonomialOrder::grevlex()) return terms.front();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (order.greater(terms[i].monomial, terms[best].monomial)) best = i;
  return terms[best];
}

}  // namespace splinedim
