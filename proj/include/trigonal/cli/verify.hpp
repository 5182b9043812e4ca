#pragma once

// Self-check suites run by `trigonal verify`. The symbolic suite checks
// polynomial identities once; the numeric suite checks pointwise identities at
// seeded random points. Each property reports how many checks it ran and the
// first few failures.

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trigonal/cli/json_io.hpp"
#include "trigonal/loci/classify.hpp"
#include "trigonal/poly/ratfunc.hpp"

namespace trigonal::cli {

struct PropertyResult {
  std::string name;
  std::string suite;
  long checks = 0;
  std::vector<std::string> failures;
  double ms = 0;

  bool passed() const { return failures.empty(); }
};

namespace vdetail {

using Q = Rational;
using P = MPoly<Rational>;
using K = NFElement<Rational>;

class Recorder {
 public:
  explicit Recorder(PropertyResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.failures.size() < 5) r_.failures.push_back(what);
    if (!ok && r_.failures.size() == 5) r_.failures.back() += " (further failures omitted)";
  }

 private:
  PropertyResult& r_;
};

inline Q random_q(std::mt19937_64& rng, long range, long den) {
  std::uniform_int_distribution<long> n(-range, range), d(1, den);
  return Q(mpz_class(n(rng)), mpz_class(d(rng)));
}

inline P uv(const char* name) { return P::var(formulas::uv_vars(), name); }

inline bool uv_generic(const UVPoint<Q>& p) {
  if (p.v.is_zero() || p.v == Q(27)) return false;
  if (trigonal::detail::at(formulas::den_uv(), p.u, p.v).is_zero()) return false;
  if (trigonal::detail::at(formulas::j2_uv(), p.u, p.v).is_zero()) return false;
  // r1 = 0 or the r-quadratic denominators
  return !(p.v - Q(9) - Q(2) * p.u).is_zero();
}

inline UVPoint<Q> random_uv(std::mt19937_64& rng) {
  for (;;) {
    UVPoint<Q> p{random_q(rng, 30, 5), random_q(rng, 30, 5)};
    if (!uv_generic(p)) continue;
    UVPoint<Q> b = beta(p);
    if (uv_generic(b)) return p;
  }
}

inline ABPoint<Q> random_ab(std::mt19937_64& rng) {
  for (;;) {
    ABPoint<Q> p{random_q(rng, 20, 4), random_q(rng, 20, 4)};
    if (p.b.is_zero() || delta_ab(p).is_zero()) continue;
    if (uv_generic(uv_from_ab(p))) return p;
  }
}

inline std::string pt(const Q& x, const Q& y) { return "(" + x.str() + ", " + y.str() + ")"; }

// The ramification curve at u = u0 as a polynomial in v, if irreducible of degree 3.
inline std::optional<UniPoly<Q>> ramification_cubic(const Q& u0) {
  const auto ram = formulas::ramification().to_univariate(1);
  std::vector<Q> c;
  for (const auto& x : ram.coeffs()) c.push_back(x.eval(std::vector<Q>{u0, Q(0)}));
  UniPoly<Q> m(c, "v");
  if (m.degree() != 3 || !is_irreducible(m)) return std::nullopt;
  return m;
}

// ---- symbolic properties ----

inline void calibration(Recorder& r) {
  r.check(trigonal::detail::calibration_holds(), "J of (3X^2+4)(X^3+X+c) as polynomials in c");
}

inline void degenerate_identity(Recorder& r) {
  PolyRing<Q> R({"X"});
  P X = R["X"], X2 = X * X;
  P lhs = (P(Q(3)) * X2 + P(Q(1))) * (P(Q(3)) * X2 + P(Q(1))) * (P(Q(3)) * X2 + P(Q(4)));
  P rhs = P(Q(27)) * (X2 * X + X) * (X2 * X + X) + P(Q(4));
  r.check(lhs == rhs, "(3X^2+1)^2 (3X^2+4) = 27(X^3+X)^2 + 4");
}

// G (X³ − bX − 2)² = −q (X⁶ + c2 X⁴F + c1 X²F² + c0 F³) with c_i scaled by q.
inline void subfield_identity(Recorder& r) {
  PolyRing<Q> R({"a", "b", "X"});
  P a = R["a"], b = R["b"], X = R["X"];
  P F = X * X * X + a * X * X + b * X + P(Q(1));
  P G = P(Q(4)) * X * X * X + b * b * X * X + P(Q(2)) * b * X + P(Q(1));
  P W = X * X * X - b * X - P(Q(2));
  P q = formulas::q_ab().embed(R.vars());
  auto c = subfield_cubic_parts(ABPoint<P>{a, b});
  P X2 = X * X;
  P rhs = -(q * X2 * X2 * X2 + c[0].num * X2 * X2 * F + c[1].num * X2 * F * F + c[2].num * F * F * F);
  r.check(G * W * W == rhs, "V^2 = -q(a,b) (U^3 + c2 U^2 + c1 U + c0)");
}

inline void subfield_j(Recorder& r) {
  PolyRing<Q> R({"a", "b"});
  P a = R["a"], b = R["b"];
  auto c = subfield_cubic_parts(ABPoint<P>{a, b});
  P q = formulas::q_ab();
  EllipticCubic<P> scaled{c[0].num, c[1].num * q, c[2].num * q * q};
  RatFunc j = elliptic_j_parts(scaled).ratfunc();
  auto jp = j_invariant_parts(UVPoint<P>{uv("u"), uv("v")});
  RatFunc u(a * b), v(b * b * b);
  r.check(j == compose(jp[0].num, {u, v}) / compose(jp[0].ratfunc().den(), {u, v}), "j(subfield cubic) = j1(ab, b^3)");
}

inline void beta_on_degenerate_line(Recorder& r) {
  PolyRing<Q> R({"v"});
  P v = R["v"];
  RatFunc u_line(P(Q(2)) * v + P(Q(27)), P(Q(9)));
  auto bp = beta_parts(UVPoint<P>{uv("u"), uv("v")});
  RatFunc bv = compose(bp[1].num, {u_line, RatFunc(v)}) / compose(bp[1].ratfunc().den(), {u_line, RatFunc(v)});
  r.check(bv == RatFunc(Q(27)), "beta(v) = 27 on 2v - 9u + 27 = 0");
}

inline void j_difference_divisibility(Recorder& r) {
  auto jp = j_invariant_parts(UVPoint<P>{uv("u"), uv("v")});
  RatFunc diff = (jp[0].ratfunc() - jp[1].ratfunc()).normalized();
  P cof;
  r.check(divides(formulas::ramification(), diff.num(), &cof), "ramification curve divides num(j1 - j2)");
  r.check(divides(formulas::iso_subfield(), diff.num()), "iso-subfield curve divides num(j1 - j2)");
}

inline void r_factorization(Recorder& r) {
  auto rp = r_from_uv_parts(UVPoint<P>{uv("u"), uv("v")});
  std::vector<RatFunc> rr{rp[0].ratfunc(), rp[1].ratfunc()};
  PolyRing<Q> Rr(formulas::r_vars());
  auto ir = i_from_r_parts(RPoint<P>{Rr.gen(0), Rr.gen(1)});
  auto iu = i_from_uv_parts(UVPoint<P>{uv("u"), uv("v")});
  for (int k = 0; k < 3; ++k) {
    RatFunc lhs = compose(ir[k].num, rr) / compose(ir[k].ratfunc().den(), rr);
    r.check(lhs == iu[k].ratfunc(), "i" + std::to_string(k + 1) + "(r(u, v)) = i" + std::to_string(k + 1) + "(u, v)");
  }
}

inline void jacobian_minors(Recorder& r) {
  int k = 0;
  for (const auto& m : jacobian_minor_numerators())
    r.check(!m.is_zero() && divides(formulas::ramification(), m), "ramification curve divides M" + std::to_string(++k));
}

inline void l3_audit(Recorder& r) {
  const auto& L = data::l3_polynomial();
  r.check(data::isobaric(L, {2, 4, 6, 10}, 80), "L3 equation isobaric of weight 80");
  r.check(data::l3_leading_coefficient(L) == data::expected_l3_leading_coefficient(), "J10^8 coefficient");
}

inline void data_checksums(Recorder& r) {
  for (const char* f : {"appendix_a.mpoly", "appendix_b.mpoly", "registry.json"}) {
    bool ok = true;
    try {
      data::read_verified(f);
    } catch (const Error&) {
      ok = false;
    }
    r.check(ok, std::string(f) + " matches SHA256SUMS");
  }
}

inline void registry(Recorder& r) {
  using T = NFElement<K>;
  for (const auto& p : special_points()) {
    if (p.kind == "exceptional" && p.i) {
      for (const auto& x : p.uv) {
        r.check(i_from_uv(x) == *p.i, p.id + ": stored triple from (u, v)");
        bool minors = true;
        for (const auto& m : jacobian_minors_at(x)) minors = minors && m.is_zero();
        r.check(minors, p.id + ": Jacobian minors vanish");
      }
      if (p.uv.size() == 2) r.check(beta(p.uv[0]) == p.uv[1], p.id + ": beta swaps the pair");
    }
    if (p.preimage && p.a12) {
      UVPoint<T> x = preimage_point(*p.preimage);
      IgusaTuple<T> J = igusa_invariants(sextic_from_uv(x));
      bool ok = J.J2.is_zero();
      if (ok) {
        A1A2Pair<T> a = a_invariants(J);
        ok = a.a1 == *embed_scalar(p.a12->a1, a.a1) && a.a2 == *embed_scalar(p.a12->a2, a.a1);
      }
      r.check(ok, p.id + ": quartic preimage gives J2 = 0 and the stored (a1, a2)");
    }
  }
}

// ---- numeric properties ----

inline void pipeline(Recorder& r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < n; ++t) {
    ABPoint<Q> p = random_ab(rng);
    AbsoluteTriple<Q> i = absolute_invariants(igusa_invariants(sextic_from_ab(p)));
    r.check(i == i_from_uv(uv_from_ab(p)), "pipeline identity at (a, b) = " + pt(p.a, p.b));
  }
}

inline void l3_on_image(Recorder& r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < n; ++t) {
    ABPoint<Q> p = random_ab(rng);
    r.check(l3_residual(igusa_invariants(sextic_from_ab(p))).on_locus(), "L3 vanishes at (a, b) = " + pt(p.a, p.b));
  }
}

inline void beta_suite(Recorder& r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  for (int t = 0; t < n; ++t) {
    UVPoint<Q> p = random_uv(rng);
    UVPoint<Q> b = beta(p);
    JPair<Q> j = j_invariants(p), jb = j_invariants(b);
    r.check(beta(b) == p && r_from_uv(b) == r_from_uv(p) && jb.j1 == j.j2 && jb.j2 == j.j1,
            "beta at (u, v) = " + pt(p.u, p.v));
  }
}

inline void r_factorization_points(Recorder& r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  for (int t = 0; t < n; ++t) {
    UVPoint<Q> p = random_uv(rng);
    r.check(i_from_r(r_from_uv(p)) == i_from_uv(p), "i(r(u, v)) at " + pt(p.u, p.v));
  }
}

inline void uv_quadratic_roots(Recorder& r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 2);
  for (int t = 0; t < n; ++t) {
    UVPoint<Q> p = random_uv(rng), b = beta(p);
    auto [qu, qv] = uv_quadratics(r_from_uv(p));
    bool ok = qu(p.u).is_zero() && qu(b.u).is_zero() && qv(p.v).is_zero() && qv(b.v).is_zero();
    ok = ok && -qu.coeff(1) / qu.coeff(2) == p.u + b.u && qu.coeff(0) / qu.coeff(2) == p.u * b.u;
    ok = ok && -qv.coeff(1) / qv.coeff(2) == p.v + b.v && qv.coeff(0) / qv.coeff(2) == p.v * b.v;
    r.check(ok, "u and v quadratics at " + pt(p.u, p.v));
  }
}

inline void subfield_j_points(Recorder& r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 3);
  for (int t = 0; t < n; ++t) {
    ABPoint<Q> p = random_ab(rng);
    r.check(elliptic_j(subfield_cubic(p)) == j_invariants(uv_from_ab(p)).j1, "subfield j at " + pt(p.a, p.b));
  }
}

// In Q[v]/(ramification at u = u0); at most 10 fields.
inline void branch_on_ramification(Recorder& r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 4);
  const int want = n < 10 ? n : 10;
  for (int done = 0, tries = 0; done < want && tries < 40 * want; ++tries) {
    Q u0 = random_q(rng, 20, 3);
    auto m = ramification_cubic(u0);
    if (!m) continue;
    auto F = quotient_ring(*m, "v");
    UVPoint<K> p{K(u0), F->gen()};
    r.check(branch_residual(i_from_uv(p)).on_locus(), "branch curve at u = " + u0.str());
    ++done;
  }
}

}  // namespace vdetail

struct VerifyOptions {
  std::string suite = "all";  // all | symbolic | numeric
  int samples = 20;
  std::uint64_t seed = 0;
};

inline std::vector<PropertyResult> run_verify(const VerifyOptions& o) {
  using namespace vdetail;
  using Symbolic = std::function<void(Recorder&)>;
  using Numeric = std::function<void(Recorder&, int, std::uint64_t)>;
  std::vector<PropertyResult> out;
  auto run = [&](const std::string& name, const std::string& suite, const std::function<void(Recorder&)>& f) {
    PropertyResult res{name, suite};
    Recorder rec(res);
    auto t0 = std::chrono::steady_clock::now();
    try {
      f(rec);
    } catch (const std::exception& e) {
      rec.check(false, std::string("threw: ") + e.what());
    }
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(res));
  };
  if (o.suite == "all" || o.suite == "symbolic") {
    const std::vector<std::pair<std::string, Symbolic>> props{
        {"igusa.calibration", calibration},
        {"normal.degenerate_identity", degenerate_identity},
        {"normal.subfield_identity", subfield_identity},
        {"normal.subfield_j", subfield_j},
        {"normal.beta_on_degenerate_line", beta_on_degenerate_line},
        {"normal.j_difference_divisibility", j_difference_divisibility},
        {"normal.r_factorization", r_factorization},
        {"normal.jacobian_minors", jacobian_minors},
        {"loci.data_checksums", data_checksums},
        {"loci.l3_audit", l3_audit},
        {"loci.registry", registry},
    };
    for (const auto& [name, f] : props) run(name, "symbolic", f);
  }
  if (o.suite == "all" || o.suite == "numeric") {
    const std::vector<std::pair<std::string, Numeric>> props{
        {"normal.pipeline_identity", pipeline},
        {"loci.l3_on_image", l3_on_image},
        {"normal.beta", beta_suite},
        {"normal.r_factorization_points", r_factorization_points},
        {"normal.uv_quadratics", uv_quadratic_roots},
        {"normal.subfield_j_points", subfield_j_points},
        {"loci.branch_on_ramification", branch_on_ramification},
    };
    for (const auto& [name, f] : props)
      run(name, "numeric", [&, f = f](Recorder& r) { f(r, o.samples, o.seed); });
  }
  return out;
}

}  // namespace trigonal::cli
