#include "curalg/forms.hpp"

namespace curalg {

Scalar Form2::operator()(const Vec& x, const Vec& y) const {
  Scalar s = 0;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) s += a * b * at(i, j);
  return s;
}

Form2 Form2::transpose() const {
  Form2 t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Form2 Form2::symmetric_part() const {
  Form2 t = transpose();
  Form2 out(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) out.m_[k] = (m_[k] + t.m_[k]) / 2;
  return out;
}

Form2 Form2::skew_part() const {
  Form2 t = transpose();
  Form2 out(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) out.m_[k] = (m_[k] - t.m_[k]) / 2;
  return out;
}

bool Form2::is_symmetric() const { return *this == transpose(); }
bool Form2::is_skew() const { return transpose() == scaled(-1); }

bool Form2::is_zero() const {
  for (const auto& c : m_)
    if (!curalg::is_zero(c)) return false;
  return true;
}

Form2 Form2::operator+(const Form2& o) const {
  Form2 out(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) out.m_[k] = m_[k] + o.m_[k];
  return out;
}

Form2 Form2::scaled(const Scalar& c) const {
  Form2 out(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) out.m_[k] = c * m_[k];
  return out;
}

bool Form3::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& v = at(i, j, k);
        if (v != at(j, i, k) || v != at(i, k, j) || v != at(k, j, i)) return false;
      }
  return true;
}

bool Form3::is_zero() const {
  for (const auto& c : m_)
    if (!curalg::is_zero(c)) return false;
  return true;
}

void Form3::set_symmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  at(i, j, k) = c;
  at(i, k, j) = c;
  at(j, i, k) = c;
  at(j, k, i) = c;
  at(k, i, j) = c;
  at(k, j, i) = c;
}

namespace {

Scalar eval2(const Form2& p, const Vec& x, std::size_t y) {
  Scalar s = 0;
  for (const auto& [i, c] : x) s += c * p.at(i, y);
  return s;
}

Scalar eval2r(const Form2& p, std::size_t x, const Vec& y) {
  Scalar s = 0;
  for (const auto& [j, c] : y) s += c * p.at(x, j);
  return s;
}

}  // namespace

std::string invariance_violation(const LieAlgebra& g, const Form2& p) {
  const std::size_t n = g.dim();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Scalar v = eval2(p, g.br(z, x), y) + eval2r(p, x, g.br(z, y));
        if (!is_zero(v)) return "(" + g.label(z) + "," + g.label(x) + "," + g.label(y) + ")";
      }
  return {};
}

std::string invariance_violation(const LieAlgebra& g, const Form3& p) {
  const std::size_t n = g.dim();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t w = 0; w < n; ++w) {
          Scalar v = 0;
          for (const auto& [k, c] : g.br(z, x)) v += c * p.at(k, y, w);
          for (const auto& [k, c] : g.br(z, y)) v += c * p.at(x, k, w);
          for (const auto& [k, c] : g.br(z, w)) v += c * p.at(x, y, k);
          if (!is_zero(v))
            return "(" + g.label(z) + "," + g.label(x) + "," + g.label(y) + "," + g.label(w) + ")";
        }
  return {};
}

Form3 ce_differential(const LieAlgebra& g, const Form2& omega) {
  const std::size_t n = g.dim();
  Form3 out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        out.at(x, y, z) = -eval2(omega, g.br(x, y), z) + eval2(omega, g.br(x, z), y) - eval2(omega, g.br(y, z), x);
  return out;
}

Form3 ce_differential_coadjoint(const LieAlgebra& g, const Form2& alpha) {
  const std::size_t n = g.dim();
  Form3 out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        out.at(x, y, z) = -eval2r(alpha, y, g.br(x, z)) + eval2r(alpha, x, g.br(y, z)) - eval2(alpha, g.br(x, y), z);
  return out;
}

}  // namespace curalg
