#include "curalg/graded.hpp"

#include <doctest.h>

#include <random>

using namespace curalg;

namespace {

SpacePtr flat(std::size_t n, int degree = 0, const std::string& prefix = "v") {
  std::vector<BasisElement> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back({prefix + std::to_string(i), degree});
  return make_space(b);
}

GradedMap random_map(std::mt19937& rng, SpacePtr src, SpacePtr tgt) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::bernoulli_distribution sparse(0.4);
  GradedMap m(src, tgt, 0);
  for (std::size_t i = 0; i < tgt->dim(); ++i)
    for (std::size_t j = 0; j < src->dim(); ++j)
      if (sparse(rng)) m.add(i, j, coef(rng));
  return m;
}

}  // namespace

TEST_CASE("scalars print as p/q in lowest terms") {
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(parse_scalar("-3")) == "-3");
  CHECK(to_string(parse_scalar("0/7")) == "0");
  CHECK(to_string(Scalar(1, 3) + Scalar(1, 6)) == "1/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/-2"), std::invalid_argument);
  Scalar big = parse_scalar("123456789012345678901234567890/2");
  CHECK(to_string(big) == "61728394506172839450617283945");
}

TEST_CASE("rref of identity, zero and a rank-one matrix") {
  auto id = rref(to_sparse_rows({{1, 0}, {0, 1}}));
  CHECK(id.rank() == 2);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  CHECK(to_dense(id.rows, 2) == DenseMatrix{{1, 0}, {0, 1}});

  auto zero = rref(to_sparse_rows({{0, 0}, {0, 0}}));
  CHECK(zero.rank() == 0);
  CHECK(zero.pivots.empty());

  // hand reduction: R2 <- R2 - 2 R1 leaves [[1,2],[0,0]]
  auto r1 = rref(to_sparse_rows({{1, 2}, {2, 4}}));
  CHECK(r1.rank() == 1);
  CHECK(r1.pivots == std::vector<std::size_t>{0});
  CHECK(to_dense(r1.rows, 2) == DenseMatrix{{1, 2}});
}

TEST_CASE("rref picks the first nonzero column as pivot") {
  auto e = rref(to_sparse_rows({{0, 2, 4}, {0, 1, 3}}));
  CHECK(e.pivots == std::vector<std::size_t>{1, 2});
  CHECK(to_dense(e.rows, 3) == DenseMatrix{{0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("kernel and image of zero and identity maps") {
  auto v = flat(3);
  auto z = GradedMap::zero(v, v, 0);
  CHECK(kernel(z).dim() == 3);
  CHECK(image(z).dim() == 0);
  auto id = GradedMap::identity(v);
  CHECK(kernel(id).dim() == 0);
  CHECK(image(id).dim() == 3);
}

TEST_CASE("rank-nullity and subquotient round trips on random maps") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dims(0, 6);
    auto src = flat(dims(rng), 0, "s");
    auto tgt = flat(dims(rng), 0, "t");
    GradedMap m = random_map(rng, src, tgt);
    Subquotient k = kernel(m), im = image(m);
    REQUIRE(k.dim() + im.dim() == src->dim());
    CHECK(rank(m) == im.dim());
    for (const auto& r : k.representatives()) CHECK(m.apply(r).empty());

    Subquotient q = quotient(tgt, im);
    CHECK(q.dim() + im.dim() == tgt->dim());
    GradedMap pi = q.projection(), s = q.section();
    CHECK(pi.compose(s) == GradedMap::identity(q.space()));
    for (std::size_t j = 0; j < src->dim(); ++j) CHECK(pi.apply(m.column(j)).empty());
    // subspace: section then coords is the identity
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(k.coords(k.representative(i)) == Vec::unit(i));
  }
}

TEST_CASE("quotients with echelon representatives") {
  auto v = make_space({{"eta", 1}, {"epseta", 1}});
  Subquotient all_of_it = quotient(v, std::vector<Vec>{});
  CHECK(all_of_it.dim() == 2);
  CHECK(all_of_it.projection() == GradedMap::identity(all_of_it.space()));

  Subquotient q = quotient(v, {Vec::unit(v->index("eta"))});
  REQUIRE(q.dim() == 1);
  CHECK(q.space()->label(0) == "epseta");
  CHECK(q.representative(0) == Vec::unit(v->index("epseta")));

  Subquotient none = quotient(v, {Vec::unit(0), Vec::unit(1)});
  CHECK(none.dim() == 0);
}

TEST_CASE("subquotient coords reject vectors outside the numerator") {
  auto v = flat(3);
  Subquotient s = span(v, {Vec::unit(0) + Vec::unit(1)});
  CHECK(s.in_numerator(Vec::unit(0).scaled(2) + Vec::unit(1).scaled(2)));
  CHECK_THROWS_AS(s.coords(Vec::unit(2)), std::domain_error);
}

TEST_CASE("tensor products add degrees") {
  auto pt = make_space({{"1", 0}});
  auto x = make_space({{"a", 0}, {"b", 1}, {"c", -1}});
  auto t = tensor(pt, x);
  CHECK(t.space->dim() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(t.space->degree(t.at(0, j)) == x->degree(j));

  CHECK(tensor(flat(2), flat(3, 0, "w")).space->dim() == 6);

  auto a = make_space({{"p", 0}, {"q", 1}});
  auto b = make_space({{"r", 0}, {"s", -1}});
  auto ab = tensor(a, b);
  CHECK(ab.space->degrees() == std::vector<int>{-1, 0, 1});
}

TEST_CASE("graded spaces sort by degree then label and reject duplicates") {
  auto s = make_space({{"z", 0}, {"a", 1}, {"m", -1}, {"b", 0}});
  CHECK(s->label(0) == "m");
  CHECK(s->label(1) == "b");
  CHECK(s->label(2) == "z");
  CHECK(s->label(3) == "a");
  CHECK_THROWS_AS(make_space({{"x", 0}, {"x", 1}}), std::invalid_argument);
  CHECK(shift(*make_space({{"g", 0}}), 2)->degree(0) == -2);
}
