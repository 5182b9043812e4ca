#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "trigonal/arith/roots.hpp"
#include "trigonal/normal/normal_form.hpp"
#include "trigonal/poly/ratfunc.hpp"

using namespace trigonal;
using trigonal::testing::random_nonzero;
using trigonal::testing::random_rational;

namespace {

using Q = Rational;
using P = MPoly<Rational>;
using K = NFElement<Rational>;

Q q(const char* s) { return Q::parse(s); }

// A random (u, v) with every guard of the (u, v) formulas nonzero.
UVPoint<Q> random_uv(std::mt19937_64& rng) {
  for (;;) {
    UVPoint<Q> p{random_rational(rng, 30, 5), random_rational(rng, 30, 5)};
    if (p.v.is_zero() || p.v == Q(27)) continue;
    if (detail::at(formulas::den_uv(), p.u, p.v).is_zero()) continue;
    if (detail::at(formulas::j2_uv(), p.u, p.v).is_zero()) continue;
    if ((p.v - Q(3) * p.u).is_zero() || (p.v - Q(9) - Q(2) * p.u).is_zero()) continue;
    return p;
  }
}

ABPoint<Q> random_ab(std::mt19937_64& rng) {
  for (;;) {
    ABPoint<Q> p{random_rational(rng, 20, 4), random_nonzero(rng, 20, 4)};
    if (delta_ab(p).is_zero()) continue;
    if (detail::at(formulas::j2_uv(), p.a * p.b, pow(p.b, 3)).is_zero()) continue;
    return p;
  }
}

P uv(const char* text) { return P::parse(text, formulas::uv_vars()); }

}  // namespace

TEST(NormalForm, SexticFromAB) {
  SexticForm<Q> f = sextic_from_ab(ABPoint<Q>{Q(1), Q(1)});
  UniPoly<Q> expect = UniPoly<Q>({Q(1), Q(1), Q(1), Q(1)}) * UniPoly<Q>({Q(1), Q(2), Q(1), Q(4)});
  EXPECT_EQ(f.poly().coeffs(), expect.coeffs());
  EXPECT_EQ(delta_ab(ABPoint<Q>{Q(1), Q(1)}), Q(256 * -26));
  EXPECT_EQ(delta_ab(ABPoint<Q>{Q(0), Q(0)}), Q(27 * 27 * -27));
  for (auto bad : {ABPoint<Q>{Q(2), Q(3)}, ABPoint<Q>{Q(-1), Q(-1)}}) {
    try {
      sextic_from_ab(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::DegenerateParameters);
      EXPECT_EQ(e.guard(), "Delta=0");
    }
  }
  UVPoint<Q> p = uv_from_ab(ABPoint<Q>{Q(2), Q(3)});
  EXPECT_EQ(p, (UVPoint<Q>{Q(6), Q(27)}));
}

TEST(NormalForm, DiscriminantOfSexticIsDeltaTimesConstant) {
  PolyRing<Q> R({"a", "b"});
  P a = R["a"], b = R["b"];
  SexticForm<P> f = sextic_from_ab(ABPoint<P>{a, b});
  P disc = discriminant(f.poly());
  P Qab = formulas::q_ab();
  P delta = Qab * Qab * (b * b * b - P(Q(27)));
  // Same zero set as Δ, but q(a, b) enters cubed: disc = −16 q(a, b)³ (b³ − 27).
  P c = exact_divide(disc, delta);
  EXPECT_FALSE(c.is_constant());
  EXPECT_EQ(c, P(Q(-16)) * Qab);
}

TEST(NormalForm, ResultantConstructionOfTheSextic) {
  // (φ(x) − φ(z))/(x − z) has numerator −x²z² + bxz + x + z for φ = X²/(X³+aX²+bX+1).
  PolyRing<Q> R({"x", "b", "z"});
  P x = R["x"], b = R["b"], z = R["z"];
  P kernel = -(x * x * z * z) + b * x * z + x + z;
  P target = (x * x * x - b * x - P(Q(2))) * (P(Q(4)) * x * x * x + b * b * x * x + P(Q(2)) * b * x + P(Q(1)));
  P cubic = z * z * z - b * z - P(Q(2));
  P res = resultant(cubic.to_univariate(2), kernel.to_univariate(2));
  EXPECT_EQ(res, -target);
  // Reading the first polynomial as z² − bz − 2 gives something else.
  P quad = z * z - b * z - P(Q(2));
  P other = resultant(quad.to_univariate(2), kernel.to_univariate(2));
  EXPECT_FALSE(divides(target, other));
}

TEST(NormalForm, SubfieldCubicAtOneOne) {
  EllipticCubic<Q> e = subfield_cubic(ABPoint<Q>{Q(1), Q(1)});
  EXPECT_EQ(e, (EllipticCubic<Q>{q("1/2"), q("11/16"), q("-1/4")}));
  EXPECT_EQ(elliptic_j(e), q("780448/2197"));
  EXPECT_EQ(elliptic_j(e), j_invariants(UVPoint<Q>{Q(1), Q(1)}).j1);
  // With the denominator read as Δ/(b³ − 27) = 256 the j-invariant is different.
  EllipticCubic<Q> wrong{q("1/32"), q("11/256"), q("-1/64")};
  EXPECT_NE(elliptic_j(wrong), elliptic_j(e));
}

TEST(NormalForm, SubfieldIdentityIsSymbolic) {
  // V = Y(X³ − bX − 2)/F², U = X²/F, Y² = F G. Then V² = −q(a,b) (U³ + c2U² + c1U + c0),
  // i.e. G (X³ − bX − 2)² = −(q X⁶ + q c2 X⁴F + q c1 X²F² + q c0 F³).
  PolyRing<Q> R({"a", "b", "X"});
  P a = R["a"], b = R["b"], X = R["X"];
  P F = X * X * X + a * X * X + b * X + P(Q(1));
  P G = P(Q(4)) * X * X * X + b * b * X * X + P(Q(2)) * b * X + P(Q(1));
  P W = X * X * X - b * X - P(Q(2));
  P Qab = formulas::q_ab().embed(R.vars());
  auto c = subfield_cubic_parts(ABPoint<P>{a, b});
  for (const auto& f : c) ASSERT_EQ(f.den.size(), 1u);
  P X2 = X * X;
  P lhs = G * W * W;
  P rhs = -(Qab * X2 * X2 * X2 + c[0].num * X2 * X2 * F + c[1].num * X2 * F * F + c[2].num * F * F * F);
  EXPECT_EQ(lhs, rhs);
}

TEST(NormalForm, SubfieldJEqualsJ1Symbolically) {
  PolyRing<Q> R({"a", "b"});
  P a = R["a"], b = R["b"];
  auto c = subfield_cubic_parts(ABPoint<P>{a, b});
  // Scale the cubic by q: j is unchanged under U -> U/q.
  P Qab = formulas::q_ab();
  EllipticCubic<P> scaled{c[0].num, c[1].num * Qab, c[2].num * Qab * Qab};
  RatFunc j = elliptic_j_parts(scaled).ratfunc();
  RatFunc u(a * b), v(b * b * b);
  auto jp = j_invariant_parts(UVPoint<P>{uv("u"), uv("v")});
  RatFunc j1 = compose(jp[0].num, {u, v}) / compose(jp[0].ratfunc().den(), {u, v});
  EXPECT_EQ(j, j1);
}

TEST(NormalForm, EllipticJ) {
  EXPECT_EQ(elliptic_j(EllipticCubic<Q>{Q(0), Q(-1), Q(0)}), Q(1728));
  EXPECT_EQ(elliptic_j(EllipticCubic<Q>{Q(0), Q(0), Q(-1)}), Q(0));
  try {
    elliptic_j(EllipticCubic<Q>{Q(0), Q(0), Q(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularCubic);
  }
}

TEST(NormalForm, DegenerateFamily) {
  PolyRing<Q> R({"X", "c"});
  P X = R["X"], c = R["c"];
  P X2 = X * X;
  P lhs = (P(Q(3)) * X2 + P(Q(1))) * (P(Q(3)) * X2 + P(Q(1))) * (P(Q(3)) * X2 + P(Q(4)));
  P t = X2 * X + X;
  EXPECT_EQ(lhs, P(Q(27)) * t * t + P(Q(4)));
  // V = Y(3X² + 1), U = X³ + X + c: V² = U(27U² − 54cU + 4 + 27c²).
  DegenerateCurve<P> d = degenerate_curve(c);
  P Y2 = P::from_univariate(d.sextic.poly("X"), R.vars(), 0);
  P U = t + c;
  P V2 = Y2 * (P(Q(3)) * X2 + P(Q(1))) * (P(Q(3)) * X2 + P(Q(1)));
  P cubic = U * U * U + d.cubic.c2 * U * U + d.cubic.c1 * U + d.cubic.c0;
  EXPECT_EQ(V2, d.scale * cubic);

  DegenerateCurve<Q> d0 = degenerate_curve(Q(0));
  EXPECT_EQ(igusa_invariants(d0.sextic), (IgusaTuple<Q>{Q(774), Q(9648), Q(2763360), Q(27648)}));
  EXPECT_EQ(igusa_invariants(degenerate_curve(Q(1)).sextic).J10, Q(432L * 29791));
}

TEST(NormalForm, PipelineIdentity) {
  std::mt19937_64 rng(201);
  for (int t = 0; t < 40; ++t) {
    ABPoint<Q> p = random_ab(rng);
    AbsoluteTriple<Q> via_curve = absolute_invariants(igusa_invariants(sextic_from_ab(p)));
    UVPoint<Q> w = uv_from_ab(p);
    ASSERT_EQ(via_curve, i_from_uv(w));
    ASSERT_EQ(absolute_invariants(igusa_invariants(sextic_from_uv(w))), via_curve);
  }
}

TEST(NormalForm, J2OfTheNormalForm) {
  // The pipeline gives J2 = +2(3v² + 4u² − 12uv + 252u − 54v − 405); the opposite sign
  // does not match.
  PolyRing<Q> R({"u", "v"});
  SexticForm<P> f = sextic_from_uv(UVPoint<P>{R["u"], R["v"]});
  P J2 = igusa_invariants(f).J2;
  // J_d scales by b^(3d) under X -> X/b, so the (u, v) form carries v².
  P v2 = R["v"] * R["v"];
  EXPECT_EQ(J2, P(Q(2)) * v2 * formulas::j2_uv());
  EXPECT_NE(J2, P(Q(-2)) * v2 * formulas::j2_uv());
  std::mt19937_64 rng(203);
  for (int t = 0; t < 10; ++t) {
    ABPoint<Q> p = random_ab(rng);
    UVPoint<Q> w = uv_from_ab(p);
    EXPECT_EQ(igusa_invariants(sextic_from_ab(p)).J2, Q(2) * detail::at(formulas::j2_uv(), w.u, w.v));
  }
}

TEST(NormalForm, CubicPairInvariants) {
  UniPoly<Q> F({Q(1), Q(1), Q(1), Q(1)}), G({Q(1), Q(2), Q(1), Q(4)});
  auto c = cubic_pair_invariants(F, G, true);
  EXPECT_EQ(c.r1, q("-125/54"));
  EXPECT_EQ(c.r2, q("625/33696"));
  ASSERT_TRUE(c.r3.has_value());
  EXPECT_EQ(*c.r3, c.H * c.H / igusa_invariants(SexticForm<Q>(F * G)).J2);
  EXPECT_EQ(r_from_uv(UVPoint<Q>{Q(1), Q(1)}), (RPoint<Q>{c.r1, c.r2}));
  try {
    cubic_pair_invariants(F, F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CommonRoot);
  }
  UniPoly<Q> sq({Q(0), Q(0), Q(1), Q(1)});
  try {
    cubic_pair_invariants(sq, G);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RepeatedRoot);
  }
  std::mt19937_64 rng(205);
  for (int t = 0; t < 30; ++t) {
    ABPoint<Q> p = random_ab(rng);
    UniPoly<Q> f({Q(1), p.b, p.a, Q(1)}), g({Q(1), Q(2) * p.b, p.b * p.b, Q(4)});
    if ((p.b * p.b * p.b - Q(9) - Q(2) * p.a * p.b).is_zero()) continue;
    auto ci = cubic_pair_invariants(f, g);
    ASSERT_EQ((RPoint<Q>{ci.r1, ci.r2}), r_from_uv(uv_from_ab(p)));
  }
}

TEST(NormalForm, RFromUV) {
  EXPECT_EQ(r_from_uv(UVPoint<Q>{Q(1), Q(1)}), (RPoint<Q>{q("-125/54"), q("625/33696")}));
  try {
    r_from_uv(UVPoint<Q>{Q(1), Q(27)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PoleAtPoint);
    EXPECT_EQ(e.guard(), "v=27");
  }
  std::mt19937_64 rng(207);
  for (int t = 0; t < 30; ++t) {
    UVPoint<Q> p = random_uv(rng);
    UVPoint<Q> b = beta(p);
    if (b.v == Q(27) || detail::at(formulas::den_uv(), b.u, b.v).is_zero()) continue;
    ASSERT_EQ(r_from_uv(b), r_from_uv(p));
  }
}

TEST(NormalForm, RConstantsAsPrintedAreInconsistent) {
  // r1 = 27 v(...)³/den, r2 = −1296 v(...)⁴/((v−27) den) differ by 729 and 6⁸ from the
  // consistent values and do not reproduce the (u, v) triple.
  UVPoint<Q> p{Q(1), Q(1)};
  RPoint<Q> r = r_from_uv(p);
  RPoint<Q> printed{Q(729) * r.r1, Q(1679616) * r.r2};
  EXPECT_EQ(printed.r1, q("-3375/2"));
  EXPECT_EQ(printed.r2, q("405000/13"));
  EXPECT_EQ(i_from_r(r), i_from_uv(p));
  EXPECT_NE(i_from_r(printed), i_from_uv(p));
}

TEST(NormalForm, IFromUV) {
  EXPECT_EQ(i_from_uv(UVPoint<Q>{q("25/2"), q("250/9")}),
            (AbsoluteTriple<Q>{q("-8019/20"), q("-1240029/200"), q("-531441/100000")}));
  EXPECT_EQ(i_from_uv(UVPoint<Q>{q("-775/8"), q("125/36")}),
            (AbsoluteTriple<Q>{q("-8019/20"), q("-1240029/200"), q("-531441/100000")}));
  auto Fi = quadratic_field(Q(-1), "I");
  K I = Fi->gen();
  UVPoint<K> p{K(27) - K(q("77/2")) * I, K(23) + K(q("77/9")) * I};
  AbsoluteTriple<K> t = i_from_uv(p);
  EXPECT_EQ(t, (AbsoluteTriple<K>{K(q("729/2116")), K(q("1240029/97336")), K(q("531441/13181630464"))}));
  UVPoint<Q> one{Q(1), Q(1)};
  EXPECT_EQ(i_from_uv(one), absolute_invariants(igusa_invariants(sextic_from_ab(ABPoint<Q>{Q(1), Q(1)}))));
  try {
    i_from_uv(UVPoint<Q>{Q(1), Q(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.guard(), "v=0");
  }
}

TEST(NormalForm, I3DerivativeTwoWaysAndPoles) {
  auto parts = i_from_uv_parts(UVPoint<P>{uv("u"), uv("v")});
  RatFunc i3 = parts[2].ratfunc();
  std::vector<Q> pt{Q(1), Q(1)};
  Q d1 = i3.derivative("u").eval(pt);
  P N = i3.num(), D = i3.den();
  Q n = N.eval(pt), d = D.eval(pt), nu = N.derivative(0).eval(pt), du = D.derivative(0).eval(pt);
  EXPECT_EQ(d1, (nu * d - n * du) / (d * d));
  // On v = 27 the denominator vanishes exactly where J2 does: at u = 9.
  EXPECT_EQ(i3.eval(std::vector<Q>{Q(1), Q(27)}), Q(0));
  try {
    i3.eval(std::vector<Q>{Q(9), Q(27)}, "J2=0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PoleAtPoint);
  }
  EXPECT_EQ(beta_parts(UVPoint<P>{uv("u"), uv("v")})[1].ratfunc().eval(pt), Q(2));
}

TEST(NormalForm, IFromRConsistency) {
  std::mt19937_64 rng(209);
  for (int t = 0; t < 30; ++t) {
    UVPoint<Q> p = random_uv(rng);
    ASSERT_EQ(i_from_r(r_from_uv(p)), i_from_uv(p));
  }
  try {
    i_from_r(RPoint<Q>{Q(0), Q(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.guard(), "r1=0");
  }
}

TEST(NormalForm, Beta) {
  UVPoint<Q> one{Q(1), Q(1)};
  EXPECT_EQ(beta(one), (UVPoint<Q>{q("17/13"), Q(2)}));
  EXPECT_EQ(beta(beta(one)), one);
  std::mt19937_64 rng(211);
  for (int t = 0; t < 30; ++t) {
    UVPoint<Q> p = random_uv(rng);
    UVPoint<Q> b = beta(p);
    if (b.v == Q(27) || detail::at(formulas::den_uv(), b.u, b.v).is_zero()) continue;
    ASSERT_EQ(beta(b), p);
  }
  // On 2v − 9u + 27 = 0, β(v) = 27.
  PolyRing<Q> R({"v"});
  P v = R["v"];
  RatFunc u_on_line(P(Q(2)) * v + P(Q(27)), P(Q(9)));
  auto bp = beta_parts(UVPoint<P>{uv("u"), uv("v")});
  RatFunc bv = compose(bp[1].num, {u_on_line, RatFunc(v)}) / compose(bp[1].ratfunc().den(), {u_on_line, RatFunc(v)});
  EXPECT_EQ(bv, RatFunc(Q(27)));
}

TEST(NormalForm, UVQuadratics) {
  UVPoint<Q> one{Q(1), Q(1)};
  auto [qu, qv] = uv_quadratics(r_from_uv(one));
  EXPECT_TRUE(qu(Q(1)).is_zero());
  EXPECT_TRUE(qu(q("17/13")).is_zero());
  EXPECT_TRUE(qv(Q(1)).is_zero());
  EXPECT_TRUE(qv(Q(2)).is_zero());
  EXPECT_EQ(-qu.coeff(1) / qu.coeff(2), Q(1) + q("17/13"));
  EXPECT_EQ(qv.coeff(0) / qv.coeff(2), Q(2));
  EXPECT_THROW(uv_quadratics(RPoint<Q>{Q(0), Q(1)}), Error);
}

TEST(NormalForm, JInvariants) {
  UVPoint<Q> one{Q(1), Q(1)};
  JPair<Q> j = j_invariants(one);
  EXPECT_EQ(j.j2, j_invariants(UVPoint<Q>{q("17/13"), Q(2)}).j1);
  std::mt19937_64 rng(213);
  int done = 0;
  for (int t = 0; t < 40 && done < 5; ++t) {
    // j1 = j2 on the ramification curve, checked in Q[v]/(curve at u = u0).
    Q u0 = random_rational(rng, 20, 3);
    std::vector<Q> c;
    const auto ram = formulas::ramification().to_univariate(1);
    for (const auto& x : ram.coeffs()) c.push_back(x.eval(std::vector<Q>{u0, Q(0)}));
    UniPoly<Q> cubic(c, "v");
    if (cubic.degree() != 3 || !is_irreducible(cubic)) continue;
    auto F = quotient_ring(cubic, "v");
    UVPoint<K> p{K(u0), F->gen()};
    JPair<K> jk = j_invariants(p);
    ASSERT_EQ(jk.j1, jk.j2);
    ++done;
  }
  EXPECT_EQ(done, 5);
}

TEST(NormalForm, NumeratorOfJ1MinusJ2Divisibility) {
  auto jp = j_invariant_parts(UVPoint<P>{uv("u"), uv("v")});
  RatFunc diff = (jp[0].ratfunc() - jp[1].ratfunc()).normalized();
  P cof;
  ASSERT_TRUE(divides(formulas::ramification(), diff.num(), &cof));
  ASSERT_TRUE(divides(formulas::iso_subfield(), cof));
}

TEST(NormalForm, SexticsFromDifferentUAreNotIsomorphic) {
  EXPECT_FALSE(isomorphic(sextic_from_ab(ABPoint<Q>{Q(1), Q(1)}), sextic_from_ab(ABPoint<Q>{Q(2), Q(1)})));
}
