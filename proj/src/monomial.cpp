#include "splinedim/monomial.hpp"

#include <algorithm>

#include "splinedim/errors.hpp"

namespace splinedim {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw InvalidArgument("too many variables (max " + std::to_string(kMaxVariables) + ")");
  }
}

std::shared_ptr<const VariableSet> VariableSet::xyz() {
  static const auto vars = std::make_shared<const VariableSet>(std::vector<std::string>{"x", "y", "z"});
  return vars;
}

std::shared_ptr<const VariableSet> VariableSet::xy() {
  static const auto vars = std::make_shared<const VariableSet>(std::vector<std::string>{"x", "y"});
  return vars;
}

std::shared_ptr<const VariableSet> VariableSet::single(const std::string& name) {
  return std::make_shared<const VariableSet>(std::vector<std::string>{name});
}

std::shared_ptr<const VariableSet> VariableSet::extended(const std::shared_ptr<const VariableSet>& base,
                                                         const std::string& hint) {
  std::string candidate = hint;
  for (int k = 1; base->index_of(candidate) != base->size(); ++k) candidate = hint + std::to_string(k);
  auto names = base->names();
  names.push_back(candidate);
  return std::make_shared<const VariableSet>(std::move(names));
}

std::size_t VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

bool same_variables(const VarsPtr& a, const VarsPtr& b) { return a == b || *a == *b; }

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > kMaxVariables) throw InvalidArgument("monomial has too many exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw InvalidArgument("negative exponent");
    exps_[i] = exponents[i];
    degree_ += exponents[i];
  }
}

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

std::size_t Monomial::support_size() const {
  for (std::size_t i = kMaxVariables; i > 0; --i)
    if (exps_[i - 1] != 0) return i;
  return 0;
}

Monomial Monomial::with_exponent(std::size_t i, int e) const {
  Monomial m = *this;
  m.degree_ += e - m.exps_[i];
  m.exps_[i] = e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::uint64_t Monomial::divisibility_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const int e = exps_[i];
    for (int j = 0; j < 8 && j < e; ++j) mask |= std::uint64_t{1} << (8 * i + j);
  }
  return mask;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  std::vector<int> e(kMaxVariables);
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    e[i] = b[i] - a[i];
    if (e[i] < 0) throw InvalidArgument("monomial quotient is not exact");
  }
  return Monomial(e);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(kMaxVariables);
  for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(e);
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(kMaxVariables);
  for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(e);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVariables; i > 0; --i) {
    const int diff = a[i - 1] - b[i - 1];
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, int remaining, std::vector<int>& current,
               std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = e;
    enumerate(nvars, pos + 1, remaining - e, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> current(nvars, 0);
  enumerate(nvars, 0, d, current, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

std::string to_string(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace splinedim
