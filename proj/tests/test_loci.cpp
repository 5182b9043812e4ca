#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "test_support.hpp"
#include "trigonal/loci/classify.hpp"

using namespace trigonal;
using trigonal::testing::random_nonzero;
using trigonal::testing::random_rational;

namespace {

using Q = Rational;
using K = NFElement<Rational>;
using T = NFElement<K>;

Q q(const char* s) { return Q::parse(s); }

// J2, J4, J6, J10 of (3X² + 4)(X³ + X + c) as polynomials in w = c².
IgusaTuple<Q> degenerate_J(const Q& w) {
  Q t = Q(27) * w + Q(4);
  return {Q(774), Q(36) * (Q(268) + Q(837) * w), Q(36) * (Q(76760) + Q(290574) * w - Q(729) * w * w),
          Q(432) * t * t * t};
}

SexticForm<Q> mobius(const SexticForm<Q>& f, Q a, Q b, Q c, Q d) {
  UniPoly<Q> g({}, "X");
  for (int i = 0; i <= 6; ++i) {
    UniPoly<Q> t = UniPoly<Q>::constant(f.a[i], "X");
    for (int k = 0; k < i; ++k) t = t * UniPoly<Q>({b, a}, "X");
    for (int k = i; k < 6; ++k) t = t * UniPoly<Q>({d, c}, "X");
    g = g + t;
  }
  return SexticForm<Q>(g.coeffs());
}

// The ramification cubic in v at u = u0, if it is an irreducible cubic.
std::optional<UniPoly<Q>> ramification_cubic(const Q& u0) {
  const auto ram = formulas::ramification().to_univariate(1);
  std::vector<Q> c;
  for (const auto& x : ram.coeffs()) c.push_back(x.eval(std::vector<Q>{u0, Q(0)}));
  UniPoly<Q> cubic(c, "v");
  if (cubic.degree() != 3 || !is_irreducible(cubic)) return std::nullopt;
  return cubic;
}

}  // namespace

TEST(Data, ChecksumsVerify) {
  EXPECT_NO_THROW(data::read_verified("appendix_a.mpoly"));
  EXPECT_NO_THROW(data::read_verified("appendix_b.mpoly"));
  EXPECT_NO_THROW(data::read_verified("registry.json"));
}

TEST(Data, TamperedFileIsRejected) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "trigonal_tamper_test";
  fs::create_directories(dir);
  for (const char* f : {"SHA256SUMS", "appendix_b.mpoly"})
    fs::copy_file(fs::path(data::data_dir()) / f, dir / f, fs::copy_options::overwrite_existing);
  EXPECT_NO_THROW(data::read_verified("appendix_b.mpoly", dir.string()));
  {
    std::ofstream out(dir / "appendix_b.mpoly", std::ios::app);
    out << "+ 1 * i1\n";
  }
  try {
    data::read_verified("appendix_b.mpoly", dir.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DataIntegrity);
  }
  try {
    data::read_verified("registry.json", dir.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DataIntegrity);
  }
  fs::remove_all(dir);
}

TEST(Data, L3EquationAudit) {
  const auto& L = data::l3_polynomial();
  EXPECT_EQ(L.terms().size(), 318u);
  EXPECT_TRUE(data::isobaric(L, {2, 4, 6, 10}, 80));
  EXPECT_EQ(data::l3_leading_coefficient(L), q("3883782492464424496895506065638925150000"));
  // An edited exponent breaks isobarity.
  MPoly<Rational> bad = L + MPoly<Rational>::parse("J2^2", L.vars());
  EXPECT_FALSE(data::isobaric(bad, {2, 4, 6, 10}, 80));
}

TEST(Data, BranchCurveShape) {
  const auto& G = data::branch_polynomial();
  EXPECT_EQ(G.terms().size(), 45u);
  EXPECT_EQ(G.degree_in(0), 12);
  EXPECT_EQ(G.degree_in(1), 8);
}

TEST(Loci, L3VanishesOnTheNormalForm) {
  std::mt19937_64 rng(301);
  for (int t = 0; t < 15; ++t) {
    ABPoint<Q> p{random_rational(rng, 15, 4), random_nonzero(rng, 15, 4)};
    if (delta_ab(p).is_zero()) continue;
    ASSERT_TRUE(l3_residual(igusa_invariants(sextic_from_ab(p))).on_locus());
  }
}

TEST(Loci, L3VanishesOnTheDegenerateFamily) {
  for (int c : {0, 1, -2, 3}) EXPECT_TRUE(l3_residual(igusa_invariants(degenerate_curve(Q(c)).sextic)).on_locus());
  for (const char* w : {"5", "-1/3", "7/2"}) EXPECT_TRUE(l3_residual(degenerate_J(q(w))).on_locus());
}

TEST(Loci, L3IsNonzeroOffTheLocus) {
  // Every monomial carries J6 or J10 or a power of J4 times J2, so (1, 0, 0, 0) is on the locus.
  EXPECT_TRUE(l3_residual(IgusaTuple<Q>{Q(1), Q(0), Q(0), Q(0)}).on_locus());
  EXPECT_FALSE(l3_residual(IgusaTuple<Q>{Q(1), Q(2), Q(3), Q(5)}).on_locus());
  SexticForm<Q> f({Q(1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(1)});  // X⁶ + X + 1
  EXPECT_FALSE(l3_residual(igusa_invariants(f)).on_locus());
  std::mt19937_64 rng(303);
  for (int t = 0; t < 10; ++t) {
    IgusaTuple<Q> J{random_nonzero(rng), random_rational(rng), random_rational(rng), random_nonzero(rng)};
    EXPECT_FALSE(l3_residual(J).on_locus());
  }
}

TEST(Loci, BranchCurveVanishesOnTheRamificationCurve) {
  std::mt19937_64 rng(307);
  int done = 0;
  for (int t = 0; t < 40 && done < 3; ++t) {
    Q u0 = random_rational(rng, 20, 3);
    auto cubic = ramification_cubic(u0);
    if (!cubic) continue;
    auto F = quotient_ring(*cubic, "v");
    UVPoint<K> p{K(u0), F->gen()};
    ASSERT_TRUE(ramification_residual(p).on_locus());
    ASSERT_TRUE(branch_residual(i_from_uv(p)).on_locus());
    ++done;
  }
  EXPECT_EQ(done, 3);
  EXPECT_FALSE(branch_residual(i_from_uv(UVPoint<Q>{Q(1), Q(1)})).on_locus());
  EXPECT_FALSE(branch_residual(AbsoluteTriple<Q>{q("3/7"), q("-2/5"), Q(1)}).on_locus());
}

TEST(Loci, RamificationAndIsoSubfieldValues) {
  EXPECT_EQ(ramification_residual(UVPoint<Q>{Q(1), Q(1)}).value[0], Q(-16));
  EXPECT_TRUE(ramification_residual(UVPoint<Q>{Q(0), Q(0)}).on_locus());
  EXPECT_FALSE(iso_subfield_residual(UVPoint<Q>{Q(1), Q(1)}).on_locus());
  // j1 = j2 on the iso-subfield curve, checked in Q[v]/(curve at u = u0).
  std::mt19937_64 rng(311);
  int done = 0;
  for (int t = 0; t < 40 && done < 2; ++t) {
    Q u0 = random_rational(rng, 20, 3);
    const auto iso = formulas::iso_subfield().to_univariate(1);
    std::vector<Q> c;
    for (const auto& x : iso.coeffs()) c.push_back(x.eval(std::vector<Q>{u0, Q(0)}));
    UniPoly<Q> m(c, "v");
    if (m.degree() != 4 || !is_irreducible(m)) continue;
    auto F = quotient_ring(m, "v");
    UVPoint<K> p{K(u0), F->gen()};
    ASSERT_TRUE(iso_subfield_residual(p).on_locus());
    JPair<K> j = j_invariants(p);
    ASSERT_EQ(j.j1, j.j2);
    ++done;
  }
  EXPECT_EQ(done, 2);
}

TEST(Loci, DegenerateResidual) {
  for (const char* w : {"0", "5", "1", "-2/7"})
    EXPECT_TRUE(degenerate_residual(absolute_invariants(degenerate_J(q(w)))).on_locus()) << w;
  auto r = degenerate_residual(i_from_uv(UVPoint<Q>{Q(1), Q(1)}));
  EXPECT_EQ(r.value.size(), 2u);
  EXPECT_FALSE(r.on_locus());
  // On 2v − 9u + 27 = 0 the curve is degenerate-paired.
  UVPoint<Q> line{Q(7), Q(18)};
  ASSERT_TRUE(degenerate_partner(line));
  EXPECT_TRUE(degenerate_residual(i_from_uv(line)).on_locus());
}

TEST(Loci, DegeneratePartner) {
  EXPECT_TRUE(degenerate_partner(UVPoint<Q>{Q(3), Q(0)}));
  EXPECT_TRUE(degenerate_partner(UVPoint<Q>{Q(5), Q(9)}));
  EXPECT_FALSE(degenerate_partner(UVPoint<Q>{Q(1), Q(1)}));
}

TEST(Loci, J2ZeroResiduals) {
  auto F = quadratic_field(Q(6), "s6");
  K s = F->gen();
  auto el = [&](const char* a, const char* b) { return F->element({q(a), q(b)}); };
  A1A2Pair<K> P1{el("-77169/8", "30759/8"), el("13783592/23149125", "5629912/23149125")};
  A1A2Pair<K> P2{el("-650835/8", "268785/8"), el("-2984/20002028625", "-144872/60006085875")};
  for (const auto& P : {P1, P2}) {
    auto [c1, c2] = j2zero_residuals(P);
    EXPECT_FALSE(c1.sqrt6_split);
    EXPECT_TRUE(c1.on_locus());
    EXPECT_FALSE(c2.on_locus());
    EXPECT_TRUE(j2zero_singular(P, 1));
    A1A2Pair<K> Pc{conjugate(P.a1), conjugate(P.a2)};
    auto [d1, d2] = j2zero_residuals(Pc);
    EXPECT_FALSE(d1.on_locus());
    EXPECT_TRUE(d2.on_locus());
    EXPECT_TRUE(j2zero_singular(Pc, 2));
  }
  // Q[t]/(t² − 24) holds √6 as t/2.
  auto G = quadratic_field(Q(24), "t");
  K half_t = G->gen() * G->element({q("1/2")});
  A1A2Pair<K> P1t{G->element({q("-77169/8")}) + G->element({q("30759/8")}) * half_t,
                  G->element({q("13783592/23149125")}) + G->element({q("5629912/23149125")}) * half_t};
  EXPECT_TRUE(j2zero_residuals(P1t).first.on_locus());
  // Over Q the components split into rational and √6 parts.
  auto [r1, r2] = j2zero_residuals(A1A2Pair<Q>{Q(1), Q(1)});
  EXPECT_TRUE(r1.sqrt6_split);
  EXPECT_EQ(r1.value.size(), 2u);
  EXPECT_FALSE(r1.on_locus());
  (void)s;
  (void)r2;
}

TEST(Registry, Shape) {
  const auto& reg = special_points();
  int exceptional = 0, j2zero = 0;
  for (const auto& p : reg) {
    if (p.kind == "exceptional") ++exceptional;
    if (p.kind == "j2zero_singular") ++j2zero;
  }
  EXPECT_EQ(exceptional, 4);
  EXPECT_EQ(j2zero, 4);
  EXPECT_EQ(special_point("exceptional-d6").aut, (std::vector<std::string>{"D6", "D12"}));
  EXPECT_FALSE(special_point("exceptional-j10-zero").genus2);
}

TEST(Registry, ExceptionalPointsReproduce) {
  for (const auto& p : special_points()) {
    if (p.kind != "exceptional" || !p.i) continue;
    ASSERT_EQ(p.uv.size(), 2u) << p.id;
    for (const auto& uv : p.uv) {
      EXPECT_EQ(i_from_uv(uv), *p.i) << p.id;
      // Isolated zeros of the Jacobian minors, off the ramification curve.
      for (const K& m : jacobian_minors_at(uv)) EXPECT_TRUE(m.is_zero()) << p.id;
      EXPECT_FALSE(ramification_residual(uv).on_locus()) << p.id;
    }
    EXPECT_EQ(beta(p.uv[0]), p.uv[1]) << p.id;
  }
  const auto& d4 = special_point("exceptional-d4-rational");
  EXPECT_EQ(d4.i->i3, K(q("-531441/100000")));
}

TEST(Registry, J10ZeroPoint) {
  const auto& p = special_point("exceptional-j10-zero");
  UVPoint<Q> uv{p.uv[0].u.base_value(), p.uv[0].v.base_value()};
  EXPECT_EQ(uv.u, q("-7/2"));
  // The (u, v) denominator vanishes there, which is J10 = 0.
  EXPECT_TRUE(detail::at(formulas::den_uv(), uv.u, uv.v).is_zero());
  EXPECT_TRUE(i_from_uv(uv).i3.is_zero());
  try {
    sextic_from_uv(uv);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.guard(), "Delta=0");
  }
  for (const Q& m : jacobian_minors_at(uv)) EXPECT_TRUE(m.is_zero());
}

TEST(Registry, QuarticPreimagesGiveTheStoredA12) {
  for (const char* id : {"j2zero-p1", "j2zero-p2-conj"}) {
    const auto& p = special_point(id);
    ASSERT_TRUE(p.preimage && p.a12);
    UVPoint<T> uv = preimage_point(*p.preimage);
    IgusaTuple<T> J = igusa_invariants(sextic_from_uv(uv));
    EXPECT_TRUE(J.J2.is_zero()) << id;
    A1A2Pair<T> a = a_invariants(J);
    EXPECT_EQ(a.a1, *embed_scalar(p.a12->a1, a.a1)) << id;
    EXPECT_EQ(a.a2, *embed_scalar(p.a12->a2, a.a1)) << id;
  }
}

TEST(Classify, NormalFormIsGenericTwo) {
  Classification c = classify_e3(sextic_from_ab(ABPoint<Q>{Q(1), Q(1)}));
  EXPECT_EQ(c.e3, 2);
  EXPECT_EQ(c.branch_case, BranchCase::GenericTwo);
}

TEST(Classify, ExceptionalTriple) {
  Classification c = classify_absolute(AbsoluteTriple<Q>{Q(81), q("-5103/25"), q("-729/12500")});
  EXPECT_EQ(c.e3, 2);
  EXPECT_EQ(c.branch_case, BranchCase::Exceptional);
  EXPECT_EQ(c.aut, (std::vector<std::string>{"D6", "D12"}));
  EXPECT_EQ(c.special_point, "exceptional-d6");
}

TEST(Classify, OffLocusAndNotGenusTwo) {
  EXPECT_EQ(classify_e3(SexticForm<Q>({Q(1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(1)})).e3, 0);
  SexticForm<Q> rep(
      (UniPoly<Q>({Q(1), Q(1)}, "X") * UniPoly<Q>({Q(1), Q(1)}, "X") * UniPoly<Q>({Q(3), Q(0), Q(0), Q(0), Q(1)}, "X"))
          .coeffs());
  try {
    classify_e3(rep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotGenusTwo);
    EXPECT_EQ(e.guard(), "J10=0");
  }
}

TEST(Classify, BranchCurveGivesOne) {
  std::mt19937_64 rng(313);
  for (int t = 0; t < 40; ++t) {
    Q u0 = random_rational(rng, 20, 3);
    auto cubic = ramification_cubic(u0);
    if (!cubic) continue;
    auto F = quotient_ring(*cubic, "v");
    Classification c = classify_e3(sextic_from_uv(UVPoint<K>{K(u0), F->gen()}));
    EXPECT_EQ(c.e3, 1);
    EXPECT_EQ(c.branch_case, BranchCase::BranchOne);
    return;
  }
  FAIL() << "no irreducible ramification cubic found";
}

TEST(Classify, DegeneratePairIsTagged) {
  Classification c = classify_e3(degenerate_curve(Q(2)).sextic);
  EXPECT_EQ(c.e3, 2);
  EXPECT_EQ(c.branch_case, BranchCase::DegeneratePresent);
}

TEST(Classify, J2ZeroRegistryCurvesHaveFour) {
  for (const auto& p : special_points()) {
    if (p.kind != "j2zero_singular") continue;
    Classification c = classify_e3(sextic_from_uv(preimage_point(*p.preimage)));
    EXPECT_EQ(c.e3, 4) << p.id;
    EXPECT_EQ(c.branch_case, BranchCase::J2ZeroSingFour) << p.id;
    EXPECT_EQ(c.special_point, p.id);
  }
}

TEST(Classify, UnsupportedSubcases) {
  Classification c = classify_invariants(IgusaTuple<Q>{Q(0), Q(0), Q(1), Q(1)});
  EXPECT_TRUE(c.indeterminate());
  EXPECT_EQ(c.branch_case, BranchCase::UnsupportedSubcase);
  EXPECT_TRUE(classify_invariants(IgusaTuple<Q>{Q(0), Q(1), Q(0), Q(1)}).indeterminate());
  // J2 = 0 off both components.
  EXPECT_EQ(classify_invariants(IgusaTuple<Q>{Q(0), Q(1), Q(1), Q(1)}).e3, 0);
}

TEST(Classify, InvariantUnderMobius) {
  std::mt19937_64 rng(317);
  std::vector<SexticForm<Q>> curves{sextic_from_ab(ABPoint<Q>{Q(1), Q(1)}), degenerate_curve(Q(2)).sextic,
                                    SexticForm<Q>({Q(1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(1)})};
  for (const auto& f : curves) {
    Classification base = classify_e3(f);
    for (int t = 0; t < 3; ++t) {
      Q a = random_rational(rng, 5, 2), b = random_rational(rng, 5, 2);
      Q c = random_rational(rng, 5, 2), d = random_rational(rng, 5, 2);
      if ((a * d - b * c).is_zero()) continue;
      Classification g = classify_e3(mobius(f, a, b, c, d));
      EXPECT_EQ(g.e3, base.e3);
      EXPECT_EQ(g.branch_case, base.branch_case);
    }
  }
}

TEST(Loci, RamificationDividesTheJacobianMinors) {
  for (const auto& m : jacobian_minor_numerators()) {
    EXPECT_FALSE(m.is_zero());
    EXPECT_TRUE(divides(formulas::ramification(), m));
  }
}
