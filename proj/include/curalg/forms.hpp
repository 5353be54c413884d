#pragma once

#include "curalg/algebra.hpp"

#include <string>
#include <vector>

namespace curalg {

/// Bilinear form on an n-dimensional Lie algebra, dense. Also used for maps
/// α: g → g* via α(x)y = at(x, y).
class Form2 {
 public:
  Form2() = default;
  explicit Form2(std::size_t n) : n_(n), m_(n * n, Scalar(0)) {}

  std::size_t dim() const { return n_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }
  Scalar operator()(const Vec& x, const Vec& y) const;

  Form2 transpose() const;
  Form2 symmetric_part() const;
  Form2 skew_part() const;
  bool is_symmetric() const;
  bool is_skew() const;
  bool is_zero() const;
  Form2 operator+(const Form2& o) const;
  Form2 scaled(const Scalar& c) const;

  friend bool operator==(const Form2& a, const Form2& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> m_;
};

/// Trilinear form, dense.
class Form3 {
 public:
  Form3() = default;
  explicit Form3(std::size_t n) : n_(n), m_(n * n * n, Scalar(0)) {}

  std::size_t dim() const { return n_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return m_[(i * n_ + j) * n_ + k]; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return m_[(i * n_ + j) * n_ + k]; }
  bool is_symmetric() const;
  bool is_zero() const;
  /// Sets all six permutations of (i,j,k) to c.
  void set_symmetric(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  friend bool operator==(const Form3& a, const Form3& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> m_;
};

/// p([z,x],y) + p(x,[z,y]) for all z,x,y; returns the first violating triple
/// as "(z,x,y)", or an empty string when p is g-invariant.
std::string invariance_violation(const LieAlgebra& g, const Form2& p);
std::string invariance_violation(const LieAlgebra& g, const Form3& p);

/// Chevalley–Eilenberg differential of a trivial-coefficient 2-cochain:
/// (dω)(x,y,z) = -ω([x,y],z) + ω([x,z],y) - ω([y,z],x).
Form3 ce_differential(const LieAlgebra& g, const Form2& omega);

/// d_g α for α: g → g* (coadjoint coefficients), evaluated as
/// (d_g α)(x,y)z = -α(y)[x,z] + α(x)[y,z] - α([x,y])z.
Form3 ce_differential_coadjoint(const LieAlgebra& g, const Form2& alpha);

}  // namespace curalg
