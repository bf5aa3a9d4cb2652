#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace splinedim {

inline constexpr std::size_t kMaxVariables = 8;

/// Ordered list of variable names. Polynomials carry a shared pointer to one
/// of these; two sets are compatible when their names agree.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  static std::shared_ptr<const VariableSet> xyz();
  static std::shared_ptr<const VariableSet> xy();
  static std::shared_ptr<const VariableSet> single(const std::string& name);

  /// A new set with one fresh variable appended (named `hint`, or `hint` plus a
  /// numeric suffix if taken). Existing variables keep their positions.
  static std::shared_ptr<const VariableSet> extended(const std::shared_ptr<const VariableSet>& base,
                                                      const std::string& hint = "t");

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of `name`, or size() if absent.
  std::size_t index_of(const std::string& name) const;

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

bool same_variables(const VarsPtr& a, const VarsPtr& b);

/// Exponent vector. Slots past the active variable count stay zero, so
/// monomials from a set and from its extension compare consistently.
class Monomial {
 public:
  using Exponents = std::array<std::int32_t, kMaxVariables>;

  Monomial() = default;
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  const Exponents& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  /// Highest occupied slot + 1.
  std::size_t support_size() const;

  Monomial with_exponent(std::size_t i, int e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Bit (8*i + j) is set when exponent i exceeds j. If a divides b then
  /// mask(a) & ~mask(b) == 0.
  std::uint64_t divisibility_mask() const;

  std::size_t hash() const;

 private:
  Exponents exps_{};
  int degree_ = 0;
};

bool divides(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison with variable 0 largest:
/// returns >0 when a > b.
int grevlex_compare(const Monomial& a, const Monomial& b);

/// All monomials of total degree `d` in `nvars` variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

std::string to_string(const Monomial& m, const VariableSet& vars);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace splinedim
