#include "curalg/cocycles.hpp"

#include "curalg/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace curalg {

namespace {

Certificate gather(std::size_t n, const std::function<void(std::size_t, Certificate&)>& body) {
  std::vector<Certificate> parts(n);
  parallel_for(n, [&](std::size_t i) { body(i, parts[i]); });
  Certificate out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

std::string subset_label(const LieAlgebra& g, const std::vector<std::size_t>& s, const std::string& m) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "^" : "") + g.label(s[i]);
  return out + "|" + m;
}

}  // namespace

LieModule trivial_module(const LieAlgebra& g, SpacePtr space) {
  LieModule m{space, {}};
  for (std::size_t x = 0; x < g.dim(); ++x) m.action.push_back(GradedMap::zero(space, space, 0));
  return m;
}

LieModule adjoint_module(const LieAlgebra& g) {
  LieModule m{g.space, {}};
  for (std::size_t x = 0; x < g.dim(); ++x) m.action.push_back(g.ad(x));
  return m;
}

LieModule coadjoint_module(const LieAlgebra& g) {
  std::vector<BasisElement> b;
  for (std::size_t i = 0; i < g.dim(); ++i) b.push_back({g.label(i) + "*", 0});
  LieModule m{make_space(b), {}};
  for (std::size_t x = 0; x < g.dim(); ++x) {
    GradedMap op(m.space, m.space, 0);
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t y = 0; y < g.dim(); ++y) {
        Scalar c = g.br(x, y).get(a);
        if (!is_zero(c)) op.add(m.space->index(g.label(y) + "*"), m.space->index(g.label(a) + "*"), -c);
      }
    m.action.push_back(op);
  }
  return m;
}

Certificate validate_module(const LieAlgebra& g, const LieModule& m) {
  Certificate c;
  c.subject = "module " + g.name;
  c.record("one operator per basis element", m.action.size() == g.dim(), std::to_string(m.action.size()));
  if (m.action.size() != g.dim()) return c;
  Certificate body = gather(g.dim(), [&](std::size_t x, Certificate& part) {
    for (std::size_t y = 0; y < g.dim(); ++y) {
      GradedMap lhs = GradedMap::zero(m.space, m.space, 0);
      for (const auto& [z, s] : g.br(x, y)) lhs = lhs + m.action[z].scaled(s);
      GradedMap rhs = m.action[x].compose(m.action[y]) + m.action[y].compose(m.action[x]).scaled(-1);
      part.record("rho[x,y] = [rho x, rho y]", lhs == rhs, pair_name(g.label(x), g.label(y)));
    }
  });
  c.merge(body);
  return c;
}

std::size_t CeComplex::index(const std::vector<std::size_t>& subset, std::size_t m) const {
  return space->index(subset_label(g, subset, module.space->label(m)));
}

CeComplex ce_complex(const LieAlgebra& g, const LieModule& mod, int max_degree) {
  const std::size_t n = g.dim();
  if (n > 30) throw std::invalid_argument("ce_complex: dimension too large");
  CeComplex c{g, mod, max_degree, nullptr, {}};
  std::vector<BasisElement> basis;
  std::vector<std::vector<std::uint32_t>> by_degree(max_degree + 2);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int k = std::popcount(mask);
    if (k > max_degree) continue;
    by_degree[k].push_back(mask);
    for (std::size_t m = 0; m < mod.dim(); ++m)
      basis.push_back({subset_label(g, members(mask), mod.space->label(m)), k});
  }
  c.space = make_space(basis);
  c.d = GradedMap(c.space, c.space, 1);

  // Value of the basis cochain ξ_S⊗m on (e_k, R) with R increasing.
  auto front_sign = [](std::size_t k, const std::vector<std::size_t>& r, const std::vector<std::size_t>& s) -> int {
    if (std::find(r.begin(), r.end(), k) != r.end()) return 0;
    std::vector<std::size_t> u = r;
    u.insert(std::lower_bound(u.begin(), u.end(), k), k);
    if (u != s) return 0;
    long below = std::count_if(r.begin(), r.end(), [k](std::size_t t) { return t < k; });
    return koszul(below);
  };

  for (int deg = 0; deg < max_degree; ++deg)
    for (std::uint32_t smask : by_degree[deg]) {
      std::vector<std::size_t> s = members(smask);
      for (std::size_t m = 0; m < mod.dim(); ++m) {
        std::size_t col = c.index(s, m);
        Vec out;
        for (std::uint32_t tmask : by_degree[deg + 1]) {
          std::vector<std::size_t> t = members(tmask);
          Vec val;
          for (std::size_t i = 0; i < t.size(); ++i)
            if ((tmask & ~(1u << t[i])) == smask) val.axpy(koszul(long(i)), mod.act(t[i], Vec::unit(m)));
          for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
              std::vector<std::size_t> rest;
              for (std::size_t q = 0; q < t.size(); ++q)
                if (q != i && q != j) rest.push_back(t[q]);
              for (const auto& [k, a] : g.br(t[i], t[j])) {
                int sg = front_sign(k, rest, s);
                if (sg) val.add(m, a * (koszul(long(i + j)) * sg));
              }
            }
          for (const auto& [mm, a] : val) out.add(c.index(t, mm), a);
        }
        c.d.set_column(col, out);
      }
    }
  return c;
}

CohomologyReport ce_cohomology(const LieAlgebra& g, const LieModule& m, int n) {
  if (n < 0 || n > 3) throw std::invalid_argument("ce_cohomology: degree must be in [0,3]");
  CeComplex c = ce_complex(g, m, n + 1);
  return cohomology(c.d, n);
}

std::vector<Form2> invariant_forms2(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto var = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n + j;
  };
  std::vector<Vec> rows;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        Vec r;
        for (const auto& [a, c] : g.br(z, x)) r.add(var(a, y), c);
        for (const auto& [b, c] : g.br(z, y)) r.add(var(x, b), c);
        if (!r.empty()) rows.push_back(r);
      }
  // Unknowns off the i ≤ j pattern are pinned to zero.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) rows.push_back(Vec::unit(i * n + j));
  std::vector<Form2> out;
  for (const auto& v : null_space(rows, n * n).rows) {
    Form2 p(n);
    for (const auto& [k, c] : v) {
      p.at(k / n, k % n) = c;
      p.at(k % n, k / n) = c;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<Form3> invariant_forms3(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto var = [n](std::size_t i, std::size_t j, std::size_t k) {
    std::size_t a[3] = {i, j, k};
    std::sort(a, a + 3);
    return (a[0] * n + a[1]) * n + a[2];
  };
  std::vector<Vec> rows;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y)
        for (std::size_t w = y; w < n; ++w) {
          Vec r;
          for (const auto& [a, c] : g.br(z, x)) r.add(var(a, y, w), c);
          for (const auto& [a, c] : g.br(z, y)) r.add(var(x, a, w), c);
          for (const auto& [a, c] : g.br(z, w)) r.add(var(x, y, a), c);
          if (!r.empty()) rows.push_back(r);
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(i <= j && j <= k)) rows.push_back(Vec::unit((i * n + j) * n + k));
  std::vector<Form3> out;
  for (const auto& v : null_space(rows, n * n * n).rows) {
    Form3 p(n);
    for (const auto& [idx, c] : v) p.set_symmetric(idx / (n * n), (idx / n) % n, idx % n, c);
    out.push_back(p);
  }
  return out;
}

Cocycle2::Cocycle2(std::string n, LieAlgebra b, LieModule m)
    : name(std::move(n)), base(std::move(b)), module(std::move(m)), values(base.dim() * base.dim()) {}

Vec Cocycle2::operator()(const Vec& u, const Vec& v) const {
  Vec out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) out.axpy(a * b, at(i, j));
  return out;
}

std::size_t Cocycle2::nonzero_pairs() const {
  return std::count_if(values.begin(), values.end(), [](const Vec& v) { return !v.empty(); });
}

Certificate validate_cocycle(const Cocycle2& s) {
  const std::size_t n = s.dim();
  const LieAlgebra& g = s.base;
  Certificate c;
  c.subject = "cocycle " + s.name;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.record("antisymmetry", (s.at(i, j) + s.at(j, i)).empty(), pair_name(g.label(i), g.label(j)));
  auto sig = [&](const Vec& u, std::size_t w) { return s(u, Vec::unit(w)); };
  Certificate body = gather(n, [&](std::size_t x, Certificate& part) {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec v = s.module.act(x, s.at(y, z)) - s.module.act(y, s.at(x, z)) + s.module.act(z, s.at(x, y));
        v -= sig(g.br(x, y), z);
        v += sig(g.br(x, z), y);
        v -= sig(g.br(y, z), x);
        part.record("cocycle identity", v.empty(), "(" + g.label(x) + "," + g.label(y) + "," + g.label(z) + ")");
      }
  });
  c.merge(body);
  return c;
}

Vec as_cochain(const Cocycle2& s, const CeComplex& c) {
  Vec out;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      for (const auto& [m, a] : s.at(i, j)) out.add(c.index({i, j}, m), a);
  return out;
}

SpanSolver::SpanSolver(const std::vector<Vec>& vectors, std::size_t ambient_dim) : n_(ambient_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < vectors.size(); ++i) rows.push_back(vectors[i] + Vec::unit(n_ + i));
  tagged_ = rref(rows);
  rank_ = std::count_if(tagged_.pivots.begin(), tagged_.pivots.end(), [this](std::size_t p) { return p < n_; });
}

std::optional<Vec> SpanSolver::solve(const Vec& w) const {
  Vec r = tagged_.reduce(w);
  Vec c;
  for (const auto& [i, a] : r) {
    if (i < n_) return std::nullopt;
    c.add(i - n_, -a);
  }
  return c;
}

std::pair<Vec, Vec> Extraction::split(const Vec& total) const {
  auto c = solver.solve(total);
  if (!c) throw std::domain_error("split: vector outside the total algebra");
  const std::size_t bs = section.size();
  Vec base, fib;
  for (const auto& [i, a] : *c) (i < bs ? base : fib).add(i < bs ? i : i - bs, a);
  return {base, fib};
}

namespace {

// Orders (label, vector) pairs by label so positions match the sorted basis.
void sort_by_label(std::vector<Vec>& v, std::vector<std::string>& labels) {
  std::vector<std::size_t> p(v.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  std::sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<Vec> v2;
  std::vector<std::string> l2;
  for (auto i : p) {
    v2.push_back(v[i]);
    l2.push_back(labels[i]);
  }
  v = std::move(v2);
  labels = std::move(l2);
}

}  // namespace

Extraction extract_cocycle(const LieAlgebra& total, const std::vector<Vec>& section_in, const std::vector<Vec>& fiber_in,
                           const std::vector<std::string>& base_labels_in,
                           const std::vector<std::string>& fiber_labels_in, const std::string& name) {
  const std::size_t n = total.dim(), bs = section_in.size(), fs = fiber_in.size();
  if (base_labels_in.size() != bs || fiber_labels_in.size() != fs)
    throw std::invalid_argument("extract_cocycle: label count mismatch");
  std::vector<Vec> section = section_in, fiber = fiber_in;
  std::vector<std::string> base_labels = base_labels_in, fiber_labels = fiber_labels_in;
  sort_by_label(section, base_labels);
  sort_by_label(fiber, fiber_labels);

  std::vector<Vec> all = section;
  all.insert(all.end(), fiber.begin(), fiber.end());
  Extraction e;
  e.section = section;
  e.fiber = fiber;
  e.solver = SpanSolver(all, n);
  if (all.size() != n || e.solver.rank() != n)
    throw Rejected("direct-sum section", "rank " + std::to_string(e.solver.rank()) + " of " + std::to_string(n) +
                                             " with " + std::to_string(all.size()) + " vectors");

  std::vector<BasisElement> fb;
  for (const auto& l : fiber_labels) fb.push_back({l, 0});
  LieModule mod{make_space(fb), {}};
  mod.action.assign(bs, GradedMap::zero(mod.space, mod.space, 0));
  const std::string nm = name.empty() ? total.name : name;
  e.cocycle = Cocycle2(nm, LieAlgebra(nm + " base", base_labels), mod);

  for (std::size_t i = 0; i < bs; ++i)
    for (std::size_t j = 0; j < bs; ++j) {
      auto [b, f] = e.split(total.br(section[i], section[j]));
      e.cocycle.base.bracket.at(i, j) = b;
      e.cocycle.at(i, j) = f;
    }
  for (std::size_t i = 0; i < bs; ++i)
    for (std::size_t a = 0; a < fs; ++a) {
      auto [b, f] = e.split(total.br(section[i], fiber[a]));
      if (!b.empty()) throw Rejected("fiber ideal", "[" + base_labels[i] + "," + fiber_labels[a] + "]");
      mod.action[i].set_column(a, f);
    }
  for (std::size_t a = 0; a < fs; ++a)
    for (std::size_t b = 0; b < fs; ++b)
      if (!total.br(fiber[a], fiber[b]).empty())
        throw Rejected("fiber abelian", "[" + fiber_labels[a] + "," + fiber_labels[b] + "]");
  e.cocycle.module = mod;

  e.cert.subject = "extraction " + nm;
  e.cert.merge(validate_lie(e.cocycle.base), "base ");
  e.cert.merge(validate_module(e.cocycle.base, mod), "module ");
  e.cert.merge(validate_cocycle(e.cocycle));
  return e;
}

Vec CurrentExtraction::fiber_coords(const Vec& t) const {
  auto [b, f] = ext.split(total.coords(t));
  if (!b.empty()) throw std::domain_error("fiber_coords: element has a base component");
  return f;
}

Vec CurrentExtraction::base_coords(const Vec& t) const { return ext.split(total.coords(t)).first; }

Vec CurrentExtraction::fiber_tensor(const Vec& fc) const {
  Vec out;
  for (const auto& [a, c] : fc) out.axpy(c, total.sub.lift(ext.fiber[a]));
  return out;
}

Cocycle2 CurrentExtraction::from_tensor(const std::string& name,
                                        const std::function<Vec(std::size_t, std::size_t)>& value) const {
  Cocycle2 out(name, cocycle().base, cocycle().module);
  const std::size_t n = out.dim();
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = fiber_coords(value(i, j));
  });
  return out;
}

namespace {

// Fiber classes: all of (Ω⊗F)^{-1} for CA, the closed part of (Ω⊗F)^0 for SA.
Echelon fiber_echelon(const CurrentAlgebra& total, const std::vector<std::string>& fiber_factor) {
  const TensorDgla& t = *total.tensor;
  auto in_fiber = [&](std::size_t elem) {
    return std::find(fiber_factor.begin(), fiber_factor.end(), t.factor.space->label(elem)) != fiber_factor.end();
  };
  const int deg = total.kind == Functor::CA ? -1 : 0;
  std::vector<std::size_t> cols;
  for (auto i : t.dgla.space->in_degree(deg))
    if (in_fiber(t.layout.factors[i].second)) cols.push_back(i);
  std::vector<Vec> tensors;
  if (total.kind == Functor::CA) {
    for (auto i : cols) tensors.push_back(Vec::unit(i));
  } else {
    for (const auto& k : null_space(t.dgla.d.rows_for(cols), cols.size()).rows) {
      Vec v;
      for (const auto& [q, c] : k) v.add(cols[q], c);
      tensors.push_back(v);
    }
  }
  std::vector<Vec> rows;
  for (const auto& v : tensors) rows.push_back(total.coords(v));
  return rref(rows);
}

std::vector<std::string> pivot_labels(const CurrentAlgebra& total, const Echelon& e) {
  std::vector<std::string> out;
  for (auto p : e.pivots) out.push_back(total.sub.space()->label(p));
  return out;
}

}  // namespace

CurrentExtraction extract_current(const CurrentAlgebra& total, const LieAlgebra& g, const std::string& name) {
  const TensorDgla& t = *total.tensor;
  CurrentExtraction out{total, {}, {}, {}};
  for (std::size_t i = 0; i < t.factor.dim(); ++i) {
    const std::string& l = t.factor.space->label(i);
    bool cone_gen = false;
    for (std::size_t x = 0; x < g.dim(); ++x) cone_gen = cone_gen || l == cone_L(g.label(x)) || l == cone_I(g.label(x));
    if (!cone_gen) out.fiber_factor.push_back(l);
  }
  Echelon fib = fiber_echelon(total, out.fiber_factor);

  std::vector<Vec> section;
  std::vector<std::string> labels;
  std::map<std::string, std::pair<std::size_t, std::size_t>> pair_of;
  for (auto f : t.model.space->in_degree(0))
    for (std::size_t x = 0; x < g.dim(); ++x) {
      Vec s = Vec::unit(t.at(f, t.factor.index(cone_I(g.label(x)))));
      if (total.kind == Functor::SA) s = t.dgla.diff(s);
      section.push_back(total.coords(s));
      labels.push_back(t.model.space->label(f) + "*" + g.label(x));
      pair_of[labels.back()] = {f, x};
    }
  out.ext = extract_cocycle(total.lie, section, fib.rows, labels, pivot_labels(total, fib),
                            name.empty() ? total.lie.name : name);
  for (std::size_t i = 0; i < out.cocycle().dim(); ++i) out.base_pairs.push_back(pair_of.at(out.cocycle().base.label(i)));
  return out;
}

CurrentExtraction extract_quotient(const CurrentAlgebra& total, const std::vector<std::string>& fiber_factor,
                                   const std::string& name) {
  CurrentExtraction out{total, fiber_factor, {}, {}};
  Echelon fib = fiber_echelon(total, fiber_factor);
  std::vector<Vec> section;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < total.dim(); ++i)
    if (std::find(fib.pivots.begin(), fib.pivots.end(), i) == fib.pivots.end()) {
      section.push_back(Vec::unit(i));
      labels.push_back(total.sub.space()->label(i));
    }
  out.ext = extract_cocycle(total.lie, section, fib.rows, labels, pivot_labels(total, fib),
                            name.empty() ? total.lie.name : name);
  return out;
}

namespace {

struct Frame {
  const TensorDgla& t;
  const CurrentExtraction& e;

  explicit Frame(const CurrentExtraction& ex) : t(*ex.total.tensor), e(ex) {
    if (ex.base_pairs.empty()) throw std::invalid_argument("evaluator needs the current-algebra section");
  }
  std::size_t form(std::size_t i) const { return e.base_pairs[i].first; }
  std::size_t elem(std::size_t i) const { return e.base_pairs[i].second; }
  Vec f(std::size_t i) const { return Vec::unit(form(i)); }
  Vec df(std::size_t i) const { return t.model.d.column(form(i)); }
  Vec mul(const Vec& a, const Vec& b) const { return t.model.mul(a, b); }
  Vec factor(const std::string& label) const { return Vec::unit(t.factor.index(label)); }
  // V coordinates to factor coordinates by label.
  Vec embed(const GDiffSpace& v, const Vec& w) const {
    Vec out;
    for (const auto& [k, c] : w) out.add(t.factor.index(v.space->label(k)), c);
    return out;
  }
};

}  // namespace

Cocycle2 sigma_gamma(const CurrentExtraction& e, const Form2& gamma, const std::string& c1) {
  Frame fr(e);
  return e.from_tensor("sigma_gamma", [&](std::size_t i, std::size_t j) {
    return fr.t.pure(fr.mul(fr.f(i), fr.f(j)).scaled(gamma.at(fr.elem(i), fr.elem(j))), fr.factor(c1));
  });
}

Cocycle2 sigma_p(const CurrentExtraction& e, const Form2& p, const std::string& c2) {
  Frame fr(e);
  return e.from_tensor("sigma_p", [&](std::size_t i, std::size_t j) {
    return fr.t.pure(fr.mul(fr.f(i), fr.df(j)).scaled(p.at(fr.elem(i), fr.elem(j))), fr.factor(c2));
  });
}

Vec sigma_N_tensor(const CurrentExtraction& e, const Form2& p, const Form2& omega, std::size_t i, std::size_t j,
                   const std::string& c1) {
  Frame fr(e);
  const std::size_t x = fr.elem(i), y = fr.elem(j);
  Vec form = (fr.mul(fr.f(i), fr.df(j)) - fr.mul(fr.df(i), fr.f(j))).scaled(p.at(x, y));
  form.axpy(omega.at(x, y), fr.t.model.diff(fr.mul(fr.f(i), fr.f(j))));
  return fr.t.pure(form, fr.factor(c1));
}

Vec neeb_c2_tensor(const CurrentExtraction& e, const Form2& p, std::size_t i, std::size_t j, const std::string& c2) {
  Frame fr(e);
  return fr.t.pure(fr.mul(fr.df(i), fr.df(j)).scaled(2 * p.at(fr.elem(i), fr.elem(j))), fr.factor(c2));
}

Cocycle2 sigma_omega_delta(const CurrentExtraction& e, const LieAlgebra& g, const GDiffSpace& v,
                           const ExtensionDatum& ext) {
  Frame fr(e);
  Dgla cg = cone(g);
  auto I = [&](std::size_t x) { return cg.index(cone_I(g.label(x))); };
  auto L = [&](std::size_t x) { return cg.index(cone_L(g.label(x))); };
  auto act_delta = [&](std::size_t x, std::size_t y) { return v.I[x].apply(ext.delta.column(I(y))); };
  return e.from_tensor("sigma_omega_delta", [&](std::size_t i, std::size_t j) {
    const std::size_t x = fr.elem(i), y = fr.elem(j);
    Vec fg = fr.mul(fr.f(i), fr.f(j));
    Vec out = fr.t.pure(fg, fr.embed(v, act_delta(x, y) - act_delta(y, x)));
    out += fr.t.pure(fr.mul(fr.df(i), fr.f(j)), fr.embed(v, ext.omega.at(I(x), I(y))));
    out -= fr.t.pure(fr.mul(fr.df(j), fr.f(i)), fr.embed(v, ext.omega.at(I(y), I(x))));
    out += fr.t.pure(fg, fr.embed(v, ext.omega.at(I(x), L(y)) - ext.omega.at(I(y), L(x))));
    return out.scaled(Scalar(1, 2));
  });
}

namespace {

Vec sigma_e_tensor(const Frame& fr, const GDiffSpace& v, const Vec& vec_e, std::size_t i, std::size_t j) {
  Vec w = v.I[fr.elem(i)].apply(v.I[fr.elem(j)].apply(vec_e));
  return fr.t.pure(fr.mul(fr.f(i), fr.f(j)), fr.embed(v, w)).scaled(-1);
}

}  // namespace

Cocycle2 sigma_e(const CurrentExtraction& e, const GDiffSpace& v, const Vec& vec_e) {
  Frame fr(e);
  return e.from_tensor("sigma_e", [&](std::size_t i, std::size_t j) { return sigma_e_tensor(fr, v, vec_e, i, j); });
}

Cocycle2 sigma_e_sa(const CurrentExtraction& e, const GDiffSpace& v, const Vec& vec_e) {
  Frame fr(e);
  return e.from_tensor("sigma_e SA", [&](std::size_t i, std::size_t j) {
    return fr.t.dgla.diff(sigma_e_tensor(fr, v, vec_e, i, j));
  });
}

Cocycle2 sigma_H(const CurrentExtraction& e, const GDiffSpace& v, const Vec& h) {
  Frame fr(e);
  return e.from_tensor("sigma_H", [&](std::size_t i, std::size_t j) {
    Vec w = v.I[fr.elem(j)].apply(v.I[fr.elem(i)].apply(h));
    return fr.t.pure(fr.mul(fr.f(i), fr.f(j)), fr.embed(v, w));
  });
}

Cocycle2 differential(const CurrentExtraction& source, const Cocycle2& sigma, const CurrentExtraction& target) {
  const LieAlgebra& a = sigma.base;
  const LieAlgebra& b = target.cocycle().base;
  bool same = a.dim() == b.dim();
  for (std::size_t i = 0; same && i < a.dim(); ++i) same = a.label(i) == b.label(i);
  if (!same) throw std::invalid_argument("differential: base labels differ");
  return target.from_tensor("d " + sigma.name, [&](std::size_t i, std::size_t j) {
    return source.total.dgla().diff(source.fiber_tensor(sigma.at(i, j)));
  });
}

Cocycle2 coboundary(const LieAlgebra& g, const LieModule& m, const std::vector<Vec>& tau, const std::string& name) {
  Cocycle2 out(name.empty() ? "d tau" : name, g, m);
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = 0; y < g.dim(); ++y) {
      Vec v = m.act(x, tau[y]) - m.act(y, tau[x]);
      for (const auto& [z, c] : g.br(x, y)) v.axpy(-c, tau[z]);
      out.at(x, y) = v;
    }
  return out;
}

CocycleComparison compare_cocycles(const Cocycle2& a, const Cocycle2& b, CompareMode mode) {
  CocycleComparison out;
  if (a.dim() != b.dim() || a.module.dim() != b.module.dim()) {
    out.witness = "shape mismatch";
    return out;
  }
  if (mode == CompareMode::exact) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (!(a.at(i, j) == b.at(i, j))) {
          out.witness = pair_name(a.base.label(i), a.base.label(j));
          return out;
        }
    out.equal = true;
    return out;
  }
  CeComplex c = ce_complex(a.base, a.module, 2);
  const auto& ones = c.space->in_degree(1);
  std::vector<Vec> images;
  for (auto j : ones) images.push_back(c.d.column(j));
  SpanSolver solver(images, c.space->dim());
  auto sol = solver.solve(as_cochain(a, c) - as_cochain(b, c));
  if (!sol) {
    out.witness = "difference is not a coboundary";
    return out;
  }
  std::vector<Vec> tau(a.dim());
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t m = 0; m < a.module.dim(); ++m) {
      Scalar coef = sol->get(std::find(ones.begin(), ones.end(), c.index({x}, m)) - ones.begin());
      if (!is_zero(coef)) tau[x].add(m, coef);
    }
  out.equal = true;
  out.tau = tau;
  return out;
}

Certificate verify_prin_brackets(const Cdga& s, const GDiffSpace& action, const Vec& h, int k) {
  const LieAlgebra& g = action.g;
  GDiffSpace v = shift(action, k + 1);
  Dgla e = sigma_dgla(action, h, k);
  CurrentAlgebra alg = ca(s, e);
  const TensorDgla& t = *alg.tensor;
  Certificate c;
  c.subject = "sigma model brackets " + e.name;
  c.merge(alg.cert, "CA ");

  auto embed = [&](const Vec& w) {
    Vec out;
    for (const auto& [q, a] : w) out.add(e.index(v.space->label(q)), a);
    return out;
  };
  auto same_class = [&](const Vec& a, const Vec& b) { return alg.coords(a) == alg.coords(b); };
  auto ii = [&](std::size_t f, std::size_t x) { return Vec::unit(t.at(f, e.index(cone_I(g.label(x))))); };
  auto in_v = [&](std::size_t i) { return v.space->find(t.factor.space->label(t.layout.factors[i].second)).has_value(); };
  std::vector<std::size_t> v_minus1, v_minus2;
  for (auto i : t.dgla.space->in_degree(-1))
    if (in_v(i)) v_minus1.push_back(i);
  for (auto i : t.dgla.space->in_degree(-2))
    if (in_v(i)) v_minus2.push_back(i);
  const auto& a0 = s.space->in_degree(0);
  auto vpart = [&](std::size_t i) { return v.space->index(t.factor.space->label(t.layout.factors[i].second)); };

  for (auto f : a0)
    for (auto q : a0)
      for (std::size_t x = 0; x < g.dim(); ++x)
        for (std::size_t y = 0; y < g.dim(); ++y) {
          Vec fq = s.product.at(f, q);
          Vec ixy;
          for (const auto& [z, a] : g.br(x, y)) ixy.add(e.index(cone_I(g.label(z))), a);
          Vec rhs = t.pure(fq, ixy) + t.pure(fq, embed(v.I[y].apply(v.I[x].apply(h))));
          c.record("[phi I(x), psi I(y)]", same_class(alg.bracket(ii(f, x), ii(q, y)), rhs),
                   "(" + s.space->label(f) + "," + g.label(x) + "," + s.space->label(q) + "," + g.label(y) + ")");
        }
  for (auto f : a0)
    for (std::size_t x = 0; x < g.dim(); ++x)
      for (auto i : v_minus1) {
        std::size_t eta = t.layout.factors[i].first;
        Vec alpha = Vec::unit(vpart(i));
        Vec rhs = t.pure(s.mul(Vec::unit(f), Vec::unit(eta)), embed(v.L[x].apply(alpha)));
        rhs.axpy(koszul(s.degree(eta)), t.pure(s.mul(s.d.column(f), Vec::unit(eta)), embed(v.I[x].apply(alpha))));
        c.record("[phi I(x), eta alpha]", same_class(alg.bracket(ii(f, x), Vec::unit(i)), rhs),
                 "(" + s.space->label(f) + "," + g.label(x) + "," + t.dgla.space->label(i) + ")");
      }
  for (auto i : v_minus1)
    for (auto j : v_minus1)
      c.record("[eta alpha, eta' alpha'] = 0", alg.coords(alg.bracket(Vec::unit(i), Vec::unit(j))).empty(),
               pair_name(t.dgla.space->label(i), t.dgla.space->label(j)));
  for (auto i : v_minus2)
    c.record("d(eta beta) = 0 in the quotient", alg.coords(t.dgla.diff(Vec::unit(i))).empty(), t.dgla.space->label(i));

  try {
    CurrentExtraction ex = extract_current(alg, g, "sigma model");
    c.record("abelian extension", true);
    c.merge(ex.ext.cert, "extraction ");
    CocycleComparison cmp = compare_cocycles(ex.cocycle(), sigma_H(ex, v, h), CompareMode::exact);
    c.record("cocycle = i_v i_u H", cmp.equal, cmp.witness);
  } catch (const Rejected& r) {
    c.record("abelian extension", false, r.check() + " " + r.witness());
  }
  return c;
}

}  // namespace curalg
