#include "splinedim/groebner.hpp"

#include <algorithm>
#include <limits>

#include "splinedim/errors.hpp"

namespace splinedim {

namespace {

/// Integral polynomial with terms sorted descending in the active order.
struct IPoly {
  std::vector<Monomial> mons;
  std::vector<Integer> coefs;
  int sugar = 0;
  std::uint64_t lead_mask = 0;

  bool empty() const { return mons.empty(); }
  std::size_t size() const { return mons.size(); }
  const Monomial& lead() const { return mons.front(); }
};

Integer content(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t b_start) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return g;
  }
  for (std::size_t i = b_start; i < b.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b[i].get_mpz_t());
    if (g == 1) return g;
  }
  return g;
}

void divide_all(std::vector<Integer>& v, const Integer& g) {
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Primitive with positive leading coefficient; returns the factor divided out
/// (with sign).
Integer normalize(IPoly& f) {
  if (f.empty()) return 1;
  Integer g = content(f.coefs, {}, 0);
  if (f.coefs.front() < 0) g = -g;
  if (g != 1) divide_all(f.coefs, g);
  f.lead_mask = f.lead().divisibility_mask();
  return g;
}

/// Returns int_f with int_f = scale * f.
IPoly to_integral(const Polynomial& f, const MonomialOrder& order, Rational* scale) {
  std::vector<const Term*> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](const Term* a, const Term* b) { return order.greater(a->monomial, b->monomial); });
  Integer den = 1;
  for (const auto* t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t->coefficient.get_den_mpz_t());
  IPoly p;
  p.mons.reserve(terms.size());
  p.coefs.reserve(terms.size());
  for (const auto* t : terms) {
    p.mons.push_back(t->monomial);
    p.coefs.push_back(t->coefficient.get_num() * (den / t->coefficient.get_den()));
  }
  p.sugar = f.is_zero() ? 0 : f.total_degree();
  Integer g = normalize(p);
  if (scale) {
    *scale = Rational(den, g);
    scale->canonicalize();
  }
  return p;
}

Polynomial to_polynomial(const IPoly& p, const VarsPtr& vars, bool monic) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational c(p.coefs[i]);
    if (monic) {
      c /= p.coefs.front();
    }
    terms.push_back({p.mons[i], c});
  }
  return Polynomial::from_terms(vars, std::move(terms));
}

/// out = a*mf*f[fs..] - b*mg*g[gs..]
void merge(const MonomialOrder& order, const IPoly& f, std::size_t fs, const Integer& a, const Monomial& mf,
           const IPoly& g, std::size_t gs, const Integer& b, const Monomial& mg, IPoly& out) {
  out.mons.clear();
  out.coefs.clear();
  out.mons.reserve(f.size() - fs + g.size() - gs);
  out.coefs.reserve(f.size() - fs + g.size() - gs);
  const bool f_plain = mf.is_one();
  const bool g_plain = mg.is_one();
  std::size_t i = fs, j = gs;
  Monomial mi, mj;
  if (i < f.size()) mi = f_plain ? f.mons[i] : f.mons[i] * mf;
  if (j < g.size()) mj = g_plain ? g.mons[j] : g.mons[j] * mg;
  Integer tmp;
  while (i < f.size() || j < g.size()) {
    int cmp;
    if (i == f.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = order.compare(mi, mj);
    if (cmp > 0) {
      out.mons.push_back(mi);
      out.coefs.push_back(a == 1 ? f.coefs[i] : Integer(a * f.coefs[i]));
      if (++i < f.size()) mi = f_plain ? f.mons[i] : f.mons[i] * mf;
    } else if (cmp < 0) {
      out.mons.push_back(mj);
      out.coefs.push_back(-b * g.coefs[j]);
      if (++j < g.size()) mj = g_plain ? g.mons[j] : g.mons[j] * mg;
    } else {
      tmp = a * f.coefs[i] - b * g.coefs[j];
      if (tmp != 0) {
        out.mons.push_back(mi);
        out.coefs.push_back(tmp);
      }
      if (++i < f.size()) mi = f_plain ? f.mons[i] : f.mons[i] * mf;
      if (++j < g.size()) mj = g_plain ? g.mons[j] : g.mons[j] * mg;
    }
  }
}

class Reducer {
 public:
  Reducer(const MonomialOrder& order, const std::vector<IPoly>& polys, const std::vector<std::size_t>& active)
      : order_(order), polys_(polys), active_(active) {}

  const IPoly* find_divisor(const Monomial& m) const {
    const std::uint64_t mask = m.divisibility_mask();
    for (auto k : active_) {
      const IPoly& g = polys_[k];
      if ((g.lead_mask & ~mask) != 0) continue;
      if (divides(g.lead(), m)) return &g;
    }
    return nullptr;
  }

  /// Returns r with r = lambda * f (mod the ideal); lambda is multiplied into
  /// `*lambda` when given. `full` also clears the tail; `keep_head` leaves the
  /// leading term alone (interreduction).
  IPoly reduce(IPoly f, bool full, bool keep_head, Rational* lambda) const {
    IPoly done;
    done.sugar = f.sugar;
    std::size_t pos = 0;
    if (keep_head && !f.empty()) {
      done.mons.push_back(f.mons[0]);
      done.coefs.push_back(f.coefs[0]);
      pos = 1;
    }
    IPoly next;
    while (pos < f.size()) {
      const Monomial& m = f.mons[pos];
      const IPoly* g = find_divisor(m);
      if (!g) {
        if (!full) break;
        done.mons.push_back(m);
        done.coefs.push_back(f.coefs[pos]);
        ++pos;
        continue;
      }
      Integer a = g->coefs.front();
      Integer b = f.coefs[pos];
      Integer h;
      mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (h != 1) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), h.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), h.get_mpz_t());
      }
      if (a < 0) {
        a = -a;
        b = -b;
      }
      const Monomial q = quotient(m, g->lead());
      done.sugar = std::max(done.sugar, g->sugar + q.degree());
      merge(order_, f, pos + 1, a, Monomial{}, *g, 1, b, q, next);
      std::swap(f.mons, next.mons);
      std::swap(f.coefs, next.coefs);
      pos = 0;
      if (a != 1) {
        for (auto& c : done.coefs) c *= a;
        if (lambda) *lambda *= a;
        Integer cg = content(done.coefs, f.coefs, 0);
        if (cg > 1) {
          divide_all(done.coefs, cg);
          divide_all(f.coefs, cg);
          if (lambda) *lambda /= cg;
        }
      }
    }
    for (; pos < f.size(); ++pos) {
      done.mons.push_back(std::move(f.mons[pos]));
      done.coefs.push_back(std::move(f.coefs[pos]));
    }
    return done;
  }

 private:
  const MonomialOrder& order_;
  const std::vector<IPoly>& polys_;
  const std::vector<std::size_t>& active_;
};

struct Pending {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  int sugar = 0;
  bool generator = false;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, std::optional<int> limit) : order_(order), limit_(limit) {}

  void run(const Ideal& I) {
    for (const auto& g : I.generators()) {
      IPoly p = to_integral(g, order_, nullptr);
      Pending entry;
      entry.generator = true;
      entry.i = inputs_.size();
      entry.lcm = p.lead();
      entry.sugar = p.sugar;
      inputs_.push_back(std::move(p));
      pending_.push_back(std::move(entry));
    }
    Reducer reducer(order_, polys_, active_);
    while (!pending_.empty()) {
      const std::size_t k = select();
      Pending item = std::move(pending_[k]);
      pending_[k] = std::move(pending_.back());
      pending_.pop_back();
      if (limit_ && item.sugar > *limit_) continue;
      IPoly h = item.generator ? inputs_[item.i] : spoly(item);
      if (h.empty()) continue;
      h = reducer.reduce(std::move(h), true, false, nullptr);
      if (h.empty()) continue;
      normalize(h);
      if (h.lead().is_one()) {
        unit_ = true;
        return;
      }
      polys_.push_back(std::move(h));
      update(polys_.size() - 1);
    }
  }

  std::shared_ptr<GroebnerBasis::Impl> finish(const VarsPtr& vars);

 private:
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending_.size(); ++k) {
      const Pending& a = pending_[k];
      const Pending& b = pending_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int cmp = order_.compare(a.lcm, b.lcm);
      if (cmp < 0 || (cmp == 0 && a.generator && !b.generator)) best = k;
    }
    return best;
  }

  IPoly spoly(const Pending& p) const {
    const IPoly& f = polys_[p.i];
    const IPoly& g = polys_[p.j];
    Integer a = g.coefs.front();
    Integer b = f.coefs.front();
    Integer h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= h;
    b /= h;
    IPoly s;
    merge(order_, f, 1, a, quotient(p.lcm, f.lead()), g, 1, b, quotient(p.lcm, g.lead()), s);
    s.sugar = p.sugar;
    return s;
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const IPoly& f = polys_[i];
    const IPoly& g = polys_[j];
    return std::max(f.sugar + l.degree() - f.lead().degree(), g.sugar + l.degree() - g.lead().degree());
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lead();
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> C;
    C.reserve(active_.size());
    for (auto g : active_) C.push_back({g, lcm(polys_[g].lead(), lh), coprime(polys_[g].lead(), lh)});

    std::vector<Candidate> D;
    for (std::size_t idx = 0; idx < C.size(); ++idx) {
      const Candidate& c = C[idx];
      bool keep = true;
      if (!c.coprime) {
        for (std::size_t o = idx + 1; o < C.size() && keep; ++o)
          if (divides(C[o].lcm, c.lcm)) keep = false;
        for (std::size_t o = 0; o < D.size() && keep; ++o)
          if (divides(D[o].lcm, c.lcm)) keep = false;
      }
      if (keep) D.push_back(c);
    }

    std::vector<Pending> kept;
    kept.reserve(pending_.size() + D.size());
    for (auto& p : pending_) {
      if (!p.generator && divides(lh, p.lcm) && lcm(polys_[p.i].lead(), lh) != p.lcm &&
          lcm(polys_[p.j].lead(), lh) != p.lcm)
        continue;
      kept.push_back(std::move(p));
    }
    for (auto& c : D) {
      if (c.coprime) continue;
      Pending p;
      p.i = c.g;
      p.j = h;
      p.lcm = c.lcm;
      p.sugar = pair_sugar(c.g, h, c.lcm);
      kept.push_back(std::move(p));
    }
    pending_ = std::move(kept);

    std::vector<std::size_t> survivors;
    survivors.reserve(active_.size() + 1);
    for (auto g : active_)
      if (!divides(lh, polys_[g].lead())) survivors.push_back(g);
    survivors.push_back(h);
    active_ = std::move(survivors);
  }

  MonomialOrder order_;
  std::optional<int> limit_;
  std::vector<IPoly> inputs_;
  std::vector<IPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pending> pending_;
  bool unit_ = false;
};

}  // namespace

struct GroebnerBasis::Impl {
  VarsPtr vars;
  MonomialOrder order;
  std::optional<int> limit;
  std::vector<IPoly> integral;
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
};

namespace {

std::shared_ptr<GroebnerBasis::Impl> make_impl(const VarsPtr& vars, const MonomialOrder& order,
                                               std::optional<int> limit, std::vector<IPoly> polys) {
  std::sort(polys.begin(), polys.end(), [&](const IPoly& a, const IPoly& b) { return order.greater(b.lead(), a.lead()); });
  auto impl = std::make_shared<GroebnerBasis::Impl>(GroebnerBasis::Impl{vars, order, limit, {}, {}, {}});
  for (auto& p : polys) {
    impl->basis.push_back(to_polynomial(p, vars, true));
    impl->leads.push_back(p.lead());
  }
  impl->integral = std::move(polys);
  return impl;
}

}  // namespace

std::shared_ptr<GroebnerBasis::Impl> Engine::finish(const VarsPtr& vars) {
  if (unit_) {
    IPoly one;
    one.mons.push_back(Monomial{});
    one.coefs.push_back(1);
    one.lead_mask = 0;
    return make_impl(vars, order_, limit_, {one});
  }
  Reducer reducer(order_, polys_, active_);
  std::vector<IPoly> out;
  out.reserve(active_.size());
  for (auto k : active_) {
    IPoly p = reducer.reduce(polys_[k], true, true, nullptr);
    normalize(p);
    out.push_back(std::move(p));
  }
  return make_impl(vars, order_, limit_, std::move(out));
}

const std::vector<Polynomial>& GroebnerBasis::basis() const { return impl_->basis; }
const std::vector<Monomial>& GroebnerBasis::leading_monomials() const { return impl_->leads; }
const MonomialOrder& GroebnerBasis::order() const { return impl_->order; }
const VarsPtr& GroebnerBasis::variables() const { return impl_->vars; }
std::optional<int> GroebnerBasis::degree_limit() const { return impl_->limit; }
bool GroebnerBasis::is_unit() const { return impl_->leads.size() == 1 && impl_->leads.front().is_one(); }

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order, const BuchbergerOptions& options) {
  const bool homogeneous = I.is_homogeneous();
  if (order.has_negative_weight() && !homogeneous)
    throw InvalidArgument("a weight order with negative entries needs a homogeneous ideal");
  if (options.degree_limit && !homogeneous) throw InvalidArgument("degree truncation needs a homogeneous ideal");
  Engine engine(order, options.degree_limit);
  engine.run(I);
  return GroebnerBasis(engine.finish(I.variables()));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!same_variables(f.variables(), G.variables()))
    throw VariableMismatch("normal_form: polynomial and basis use different variables");
  if (f.is_zero()) return f;
  const auto& impl = G.impl();
  std::vector<std::size_t> all(impl.integral.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  Reducer reducer(impl.order, impl.integral, all);
  Rational scale;
  IPoly p = to_integral(f, impl.order, &scale);
  Rational lambda = 1;
  IPoly r = reducer.reduce(std::move(p), true, false, &lambda);
  Polynomial out = to_polynomial(r, f.variables(), false);
  // r = lambda * scale * NF(f)
  out *= Rational(1 / (lambda * scale));
  return out;
}

bool contains(const GroebnerBasis& G, const Polynomial& f) { return normal_form(f, G).is_zero(); }

bool contains(const Ideal& I, const Polynomial& f) { return contains(buchberger(I), f); }

}  // namespace splinedim
