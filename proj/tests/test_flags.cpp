#include <doctest.h>

#include <cmath>

#include "flagflow/flags.hpp"

using namespace flagflow;

TEST_CASE("coordinate pair transversality") {
  const FlagType t{{1, 1, 1}};
  const Flag F = coordinate_flag(t, Field::Real, 3);
  // reversed coordinate flag: spans e3, then e3,e2, ...
  Flag W = coordinate_flag(t.reversed(), Field::Real, 3);
  CMat rev = CMat::Zero(3, 3);
  rev(2, 0) = 1;
  rev(1, 1) = 1;
  rev(0, 2) = 1;
  W.frame = rev;
  CHECK(is_transverse(F, W));
  const FlagType t2{{1, 1}};
  const Flag F2 = coordinate_flag(t2, Field::Real, 2);
  CHECK_FALSE(is_transverse(F2, F2));
}

TEST_CASE("grading round trip") {
  const FlagType t{{1, 2}};
  const Flag F = coordinate_flag(t, Field::Real, 3);
  CMat rev = CMat::Zero(3, 3);
  rev(2, 0) = 1;
  rev(1, 1) = 1;
  rev(0, 2) = 1;
  Flag W = coordinate_flag(t.reversed(), Field::Real, 3);
  W.frame = rev;
  const Grading E = grading_from_pair(F, W);
  CHECK(E.dims() == std::vector<int>{1, 2});
  CMat e1 = CMat::Zero(3, 1);
  e1(0, 0) = 1;
  CHECK(subspace_distance(E.subspaces[0], e1) < 1e-10);
  const auto [F2, W2] = pair_from_grading(E);
  CHECK(subspace_distance(F2.basis(1), F.basis(1)) < 1e-9);
  CHECK(subspace_distance(W2.basis(1), W.basis(1)) < 1e-9);
}

TEST_CASE("grading is equivariant") {
  const FlagType t{{1, 1, 1}};
  CMat g(3, 3);
  g << 1, 0.4, -0.2, 0.1, 1.3, 0.3, -0.2, 0.2, 0.8;
  const Flag F = coordinate_flag(t, Field::Real, 3);
  CMat rev = CMat::Zero(3, 3);
  rev(2, 0) = 1;
  rev(1, 1) = 1;
  rev(0, 2) = 1;
  Flag W = coordinate_flag(t.reversed(), Field::Real, 3);
  W.frame = rev;
  const Grading E = grading_from_pair(act(g, F), act(g, W));
  const Grading E0 = grading_from_pair(F, W);
  for (int i = 0; i < 3; ++i)
    CHECK(subspace_distance(E.subspaces[i],
                            orthonormalize(g * E0.subspaces[i])) < 1e-8);
}

TEST_CASE("flag projection to a Grassmannian") {
  const FlagType t{{2, 1}};
  const Flag F = coordinate_flag(t, Field::Real, 3);
  const CMat V = project_flag(F, 1);
  CHECK(V.cols() == 2);
  CMat e12 = CMat::Zero(3, 2);
  e12(0, 0) = 1;
  e12(1, 1) = 1;
  CHECK(subspace_distance(V, e12) < 1e-12);
  CHECK_THROWS_AS(project_flag(F, 5), Error);
}

TEST_CASE("nilradical bases have block-count dimension") {
  const Flag F2 = coordinate_flag(FlagType{{1, 1}}, Field::Real, 2);
  const auto b2 = nilradical_basis(F2);
  REQUIRE(b2.size() == 1);
  CHECK(std::abs(b2[0](0, 1)) == doctest::Approx(1.0));
  const Flag F3 = coordinate_flag(FlagType{{1, 1, 1}}, Field::Real, 3);
  CHECK(nilradical_basis(F3).size() == 3);
  const Flag F3c = coordinate_flag(FlagType{{1, 2}}, Field::Complex, 3);
  CHECK(nilradical_basis(F3c).size() == 4);  // 1*2 complex dims, x2 real
}

TEST_CASE("adjoint determinant on the nilradical") {
  const Flag F = coordinate_flag(FlagType{{1, 1, 1}}, Field::Real, 3);
  const double a = 0.4, b = -0.1, c = -0.3;
  CMat g = CMat::Zero(3, 3);
  g(0, 0) = std::exp(a);
  g(1, 1) = std::exp(b);
  g(2, 2) = std::exp(c);
  CHECK(adjoint_det_on_nilradical(g, F) ==
        doctest::Approx(std::exp(2 * a - 2 * c)));
  CHECK(adjoint_det_on_nilradical(CMat::Identity(3, 3), F) ==
        doctest::Approx(1.0));
  // multiplicativity at a common fixed flag
  CMat h = CMat::Zero(3, 3);
  h(0, 0) = 2;
  h(1, 1) = 1;
  h(2, 2) = 0.5;
  h(0, 1) = 0.3;
  CHECK(adjoint_det_on_nilradical(g * h, F) ==
        doctest::Approx(adjoint_det_on_nilradical(g, F) *
                        adjoint_det_on_nilradical(h, F)));
}

TEST_CASE("non-stabilizing elements are rejected") {
  const Flag F = coordinate_flag(FlagType{{1, 1, 1}}, Field::Real, 3);
  CMat g(3, 3);
  g << 0, 0, 1, 1, 0, 0, 0, 1, 0;  // cyclic permutation, moves the flag
  CHECK_THROWS_AS(adjoint_det_on_nilradical(g, F), NotStabilizing);
}

TEST_CASE("transversality is open") {
  const FlagType t{{1, 1, 1}};
  const Flag F = coordinate_flag(t, Field::Real, 3);
  CMat rev = CMat::Zero(3, 3);
  rev(2, 0) = 1;
  rev(1, 1) = 1;
  rev(0, 2) = 1;
  Flag W = coordinate_flag(t.reversed(), Field::Real, 3);
  W.frame = rev;
  Flag Wp = W;
  CMat noise(3, 3);
  noise << 1e-7, -2e-7, 5e-8, 3e-7, 1e-7, -1e-7, 2e-7, 4e-8, -3e-7;
  Wp.frame = orthonormalize(W.frame + noise);
  CHECK(is_transverse(F, Wp));
}

TEST_CASE("subspace intersection") {
  CMat A = CMat::Zero(3, 2);
  A(0, 0) = 1;
  A(1, 1) = 1;
  CMat B = CMat::Zero(3, 2);
  B(1, 0) = 1;
  B(2, 1) = 1;
  const CMat I = subspace_intersection(A, B);
  REQUIRE(I.cols() == 1);
  CMat e2 = CMat::Zero(3, 1);
  e2(1, 0) = 1;
  CHECK(subspace_distance(I, e2) < 1e-9);
}
