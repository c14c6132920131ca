#include <doctest.h>

#include "uqrs/vertex.hpp"

using namespace uqrs;

namespace {

using Engine = VertexEngine<SymbolicField>;
using Vec = FockVector<Scalar>;

Scalar mono(const Rational& a, const Rational& b) { return Scalar(rs_monomial(a, b)); }

FockState with_creators(FockState s, std::vector<Creator> c) {
  for (Creator x : c) insert_creator(s.creators, x);
  return s;
}

Vec commutator_on(const Engine& e, int i, int k, int j, int kk, const FockState& s) {
  Vec out;
  for (const auto& [t, c] : e.mode(j, -1, kk, s)) out.axpy(c, e.mode(i, 1, k, t));
  for (const auto& [t, c] : e.mode(i, 1, k, s)) out.axpy(-c, e.mode(j, -1, kk, t));
  return out;
}

}  // namespace

TEST_CASE("boson actions") {
  RootData roots(2);
  SymbolicField f;
  HeisenbergTable<SymbolicField> heis(roots, f);
  const FockState vac = vacuum_state(2);
  auto one_boson = [&](Family fam, int idx) { return Vec::basis(with_creators(vac, {encode_creator(fam, idx, 1)}), Scalar(1L)); };
  CHECK(apply_boson(roots, heis, f, {Family::A, 1, 1}, one_boson(Family::A, 1)) == Vec::basis(vac, Scalar(1L)));
  CHECK(apply_boson(roots, heis, f, {Family::A, 2, 1}, one_boson(Family::A, 2)) ==
        Vec::basis(vac, mono(Rational(-1, 2), Rational(-1, 2)) * (Scalar::r() + Scalar::s())));
  CHECK(apply_boson(roots, heis, f, {Family::A, 1, 1}, one_boson(Family::B, 1)).is_zero());
  CHECK(apply_boson(roots, heis, f, {Family::B, 1, 1}, one_boson(Family::B, 1)) == Vec::basis(vac, Scalar(1L)));
  // [a_1(1), a_2(-1)] = (rs)^{1/2} (rs)^{1/4} [-1/2] from the contraction formula
  CHECK(heisenberg_constant(RootData(3), 1, 2, 1) == mono(Rational(3, 4), Rational(3, 4)) * qnum(Rational(-1, 2)));
}

TEST_CASE("zero modes, signs, degrees, torus and cocycle actions") {
  RootData roots(2);
  StructConsts sc(roots);
  Cocycle eps(roots);
  SymbolicField f;
  FockState e2 = vacuum_state(2);
  e2.point.lam = {0, 1};
  CHECK(zero_mode(roots, 1, Family::A, e2) == Rational(-1));
  RootData r3(3);
  FockState e2b = vacuum_state(3);
  e2b.point.lam = {0, 1, 0};
  e2b.point.lam_tilde = {0, 1};
  CHECK(zero_mode(r3, 1, Family::A, e2b) == Rational(-1, 2));
  CHECK(sign_op(r3, 1, e2b) == -1);
  FockState et = vacuum_state(3);
  et.point.lam_tilde = {1, 0};
  CHECK(zero_mode(r3, 1, Family::B, et) == 1);
  FockState en = vacuum_state(2);
  en.point.lam = {0, 1};
  CHECK(sign_op(roots, 2, en) == 1);
  CHECK(weighted_degree(roots, vacuum_state(2)) == 0);
  CHECK(weighted_degree(roots, with_creators(vacuum_state(2), {encode_creator(Family::A, 1, 2)})) == 1);
  CHECK(weighted_degree(roots, with_creators(vacuum_state(2), {encode_creator(Family::A, 2, 1),
                                                               encode_creator(Family::B, 1, 1)})) == Rational(3, 2));
  FockState e1 = vacuum_state(2);
  e1.point.lam = {1, 0};
  CHECK(apply_omega(sc, f, 1, false, Vec::basis(e1, Scalar(1L))) == Vec::basis(e1, mono(Rational(1, 2), Rational(-1, 2))));
  CHECK(apply_omega(sc, f, 1, true, Vec::basis(e1, Scalar(1L))) == Vec::basis(e1, mono(Rational(-1, 2), Rational(1, 2))));
  CHECK(apply_eps(eps, f, {1, 0}, Vec::basis(e1, Scalar(1L))) == Vec::basis(e1, -mono(Rational(1, 4), Rational(1, 4))));
  CHECK_THROWS_AS(shift_state(r3, vacuum_state(3), {1, 0, 0}, {0, 0}), ArithmeticError);
  CHECK_NOTHROW(shift_state(r3, vacuum_state(3), {1, 0, 0}, {1, 0}));
  CHECK_NOTHROW(shift_state(r3, vacuum_state(3), {0, 0, 1}, {0, 0}));
}

TEST_CASE("vertex operator slices") {
  Engine e(2, SymbolicField{});
  const FockState vac = vacuum_state(2);
  auto y = e.apply_Y(1, 1, vac, Rational(0), Rational(1));
  FockState e1 = vac;
  e1.point.lam = {1, 0};
  CHECK(y.at(Rational(0)) == Vec::basis(e1, Scalar(1L)));
  CHECK(y.at(Rational(1)) == Vec::basis(with_creators(e1, {encode_creator(Family::A, 1, 1)}), mono(0, Rational(1, 2))));
  auto u = e.apply_U(1, 1, Monomial{}, vac, Rational(0), Rational(0));
  FockState t1 = vac;
  t1.point.lam_tilde = {1};
  CHECK(u.at(Rational(0)) == Vec::basis(t1, mono(Rational(-1, 8), Rational(-1, 8))));
  auto um = e.apply_U(1, -1, Monomial{}, vac, Rational(0), Rational(0));
  CHECK(um.at(Rational(0)).begin()->first.point.lam_tilde == TildeVector{-1});
  // X_n equals Y_n
  auto xn = e.apply_X(2, 1, vac, Rational(-2), Rational(2));
  auto yn = e.apply_Y(2, 1, vac, Rational(-2), Rational(2));
  CHECK(xn == yn);
}

TEST_CASE("anchor of the current commutator") {
  for (int n : {2, 3}) {
    Engine e(n, SymbolicField{});
    const FockState vac = vacuum_state(n);
    CHECK(commutator_on(e, 1, 0, 1, 0, vac).is_zero());
    FockState e1 = vac;
    e1.point.lam[0] = 1;
    e1.point.lam_tilde[0] = 1;
    const Scalar expect = (mono(Rational(1, 2), 0) + mono(0, Rational(1, 2))) / mono(Rational(1, 2), Rational(1, 2));
    Vec got = commutator_on(e, 1, 0, 1, 0, e1);
    INFO(got.to_string());
    CHECK(got == Vec::basis(e1, expect));
  }
}

TEST_CASE("psi and phi modes") {
  Engine e(2, SymbolicField{});
  FockState s = with_creators(vacuum_state(2), {encode_creator(Family::A, 1, 1)});
  s.point.lam = {1, 0};
  const Scalar w1(e.consts().pairing(s.point.lam, 1));
  CHECK(e.psi(1, 0, s) == Vec::basis(s, w1));
  CHECK(e.psi(1, 1, s) == Vec::basis(vacuum_state(2).creators.empty() ? FockState{{}, s.point} : s,
                                     (Scalar::r() - Scalar::s()) * w1));
  const Scalar w1p = Scalar(e.consts().pairing_rev(1, s.point.lam)).inverse();
  CHECK(e.phi(1, 0, s) == Vec::basis(s, w1p));
  CHECK(e.phi(1, -1, s) == Vec::basis(with_creators(s, {encode_creator(Family::A, 1, 1)}), -(Scalar::r() - Scalar::s()) * w1p));
}
