// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact (this is an exact kernel); the stated
// wall-clock budgets are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "exalg/counterexample.hpp"
#include "exalg/extensions.hpp"
#include "exalg/generator.hpp"
#include "exalg/regtools.hpp"

using namespace exalg;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
  int failures = 0;

  void run(const std::string& name, double budget_seconds,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
      ok = false;
      detail += " [exceeded " + std::to_string(budget_seconds) + " s budget]";
    }
    std::printf("%s %-12s (%6.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::vector<Scalar> random_element(const FDAlgebra& a, SplitMix64& rng) {
  auto v = a.zero_element();
  for (int i = 0; i < a.dim(); ++i)
    if (rng.below(3) != 0) v[static_cast<size_t>(i)] = a.field().random_small(rng);
  return v;
}

std::vector<Scalar> random_ideal_element(const ExtensionInstance& inst, SplitMix64& rng) {
  const auto& r = inst.q.ambient;
  auto v = r.zero_element();
  for (int i = 0; i < inst.q.ideal.dim(); ++i)
    v = r.add(v, r.scale(inst.q.ideal.basis.row(i), r.field().random_small(rng)));
  return v;
}

// criterion 1: the subalgebra-lifting pipeline over F_5 and Q
bool criterion1(std::string& detail) {
  std::vector<ExtensionProfile> profiles;
  {
    ExtensionProfile a;
    a.ideal_blocks = {{2, {}}};
    a.quotient_blocks = {{2, {}}};
    profiles.push_back(a);  // dim 8
    ExtensionProfile b;
    b.ideal_blocks = {{1, {}}, {2, {}}};
    b.quotient_blocks = {{3, {}}};
    profiles.push_back(b);  // dim 14
    ExtensionProfile c;
    c.ideal_blocks = {{3, {}}};
    c.quotient_blocks = {{2, {}}, {1, {}}, {1, {}}};
    profiles.push_back(c);  // dim 15
    ExtensionProfile d;
    d.ideal_blocks = {{2, {}}, {2, {}}};
    d.quotient_blocks = {{4, {}}};
    profiles.push_back(d);  // dim 24
  }
  auto F5 = make_field(FieldDesc::prime(5));
  auto Q = make_field(FieldDesc::rationals());
  int done = 0;
  for (int half = 0; half < 2; ++half) {
    FieldRef f = half == 0 ? F5 : Q;
    for (uint64_t seed = 1; seed <= 50; ++seed) {
      const ExtensionProfile& prof = profiles[static_cast<size_t>(seed % profiles.size())];
      auto g = gen::generate_random_extension(seed + 1000 * static_cast<uint64_t>(half), f, prof);
      const auto& r = g.inst.q.ambient;
      auto full = linalg::subspace_full(*f, g.inst.q.quotient.dim());
      // perturb the lifts by ideal components
      SplitMix64 rng(seed * 77 + static_cast<uint64_t>(half));
      std::vector<std::vector<Scalar>> lifts;
      for (int i = 0; i < g.inst.q.quotient.dim(); ++i) {
        auto x = g.inst.q.lift(g.inst.q.quotient.basis_element(i));
        if (rng.below(2)) x = r.add(x, random_ideal_element(g.inst, rng));
        lifts.push_back(x);
      }
      auto [t, trace] = extensions::lift_subalgebra(g.inst, full, &lifts);
      // exact invariants, recomputed here
      if (t.dim() != g.inst.q.quotient.dim()) return false;
      if (linalg::intersect(t, g.inst.q.ideal).dim() != 0) return false;
      if (!algcore::is_multiplicatively_closed(r, t)) return false;
      for (const auto& v : trace.defects)
        if (!linalg::contains(g.inst.q.ideal, v)) return false;
      for (int i = 0; i < trace.w_ideal.dim(); ++i) {
        auto w = trace.w_ideal.basis.row(i);
        if (!r.eq(r.mul(trace.f, w), w)) return false;
      }
      std::vector<std::vector<Scalar>> pirows;
      for (int i = 0; i < t.dim(); ++i) pirows.push_back(g.inst.q.project(t.basis.row(i)));
      auto span = linalg::subspace_from_rows(Matrix::from_rows(*f, pirows));
      if (!(span == full)) return false;
      ++done;
    }
  }
  detail = std::to_string(done) + "/100 lifts verified";
  return done == 100;
}

// criterion 2: the centralizing idempotent with matricial T
bool criterion2(std::string& detail) {
  auto F5 = make_field(FieldDesc::prime(5));
  auto F3 = make_field(FieldDesc::prime(3));
  std::vector<std::vector<BlockSpec>> tprofiles = {
      {{1, {}}}, {{2, {}}}, {{1, {}}, {1, {}}}, {{2, {}}, {1, {}}}, {{2, {}}, {2, {}}}};
  int done = 0;
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    FieldRef f = seed % 2 ? F5 : F3;
    ExtensionProfile prof;
    prof.ideal_blocks = {{2, {}}};
    prof.quotient_blocks = tprofiles[static_cast<size_t>(seed % tprofiles.size())];
    auto g = gen::generate_random_extension(seed + 500, f, prof);
    const auto& r = g.inst.q.ambient;
    auto full = linalg::subspace_full(*f, g.inst.q.quotient.dim());
    auto [t, lt] = extensions::lift_subalgebra(g.inst, full);
    SplitMix64 rng(seed);
    std::vector<std::vector<Scalar>> y;
    int ysize = static_cast<int>(rng.below(3)) + 1;
    for (int k = 0; k < ysize; ++k) y.push_back(random_ideal_element(g.inst, rng));
    auto [e, trace] = extensions::centralizing_idempotent(r, g.inst.q.ideal, t, y);
    if (!r.is_idempotent(e)) return false;
    if (!linalg::contains(g.inst.q.ideal, e)) return false;
    for (const auto& yy : y)
      if (!r.eq(r.mul(e, yy), yy) || !r.eq(r.mul(yy, e), yy)) return false;
    for (int i = 0; i < t.dim(); ++i)
      if (!r.eq(r.mul(e, t.basis.row(i)), r.mul(t.basis.row(i), e))) return false;
    ++done;
  }
  detail = std::to_string(done) + "/50 instances";
  return done == 50;
}

// criterion 3: the matricial envelope certifies R when J and R/J are
// matricial, agreeing with the direct certificate
bool criterion3(std::string& detail) {
  auto F5 = make_field(FieldDesc::prime(5));
  auto F3 = make_field(FieldDesc::prime(3));
  std::vector<ExtensionProfile> profiles;
  {
    ExtensionProfile a;
    a.ideal_blocks = {{2, {}}};
    a.quotient_blocks = {{1, {}}, {1, {}}};
    profiles.push_back(a);
    ExtensionProfile b;
    b.ideal_blocks = {{1, {}}, {1, {}}};
    b.quotient_blocks = {{2, {}}};
    profiles.push_back(b);
    ExtensionProfile c;
    c.ideal_blocks = {{2, {}}};
    c.quotient_blocks = {{2, {}}};
    profiles.push_back(c);
  }
  int done = 0;
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    FieldRef f = seed % 2 ? F5 : F3;
    auto g = gen::generate_random_extension(seed + 900,
                                            f, profiles[static_cast<size_t>(seed % profiles.size())]);
    std::vector<std::vector<Scalar>> xs;
    for (int i = 0; i < g.inst.q.ambient.dim(); ++i)
      xs.push_back(g.inst.q.ambient.basis_element(i));
    auto [s, units] = extensions::matricial_envelope(g.inst, xs);
    if (s.dim() != g.inst.q.ambient.dim()) return false;
    if (!structure::is_matricial(g.inst.q.ambient).matricial) return false;
    ++done;
  }
  detail = std::to_string(done) + "/50 envelopes span R and agree";
  return done == 50;
}

// criterion 4: the perfect-field fdss pipeline with separable components
bool criterion4(std::string& detail) {
  auto Q = make_field(FieldDesc::rationals());
  auto F2 = make_field(FieldDesc::prime(2));
  int done = 0;
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    bool overQ = seed % 2 == 0;
    FieldRef f = overQ ? Q : F2;
    ExtensionProfile prof;
    prof.ideal_blocks = {{2, {}}};
    if (overQ)
      prof.quotient_blocks = {{1, (seed % 4 == 0) ? std::vector<std::string>{"1", "0", "1"}
                                                  : std::vector<std::string>{}}};
    else
      prof.quotient_blocks = {{1, (seed % 4 == 1) ? std::vector<std::string>{"1", "1", "1"}
                                                  : std::vector<std::string>{}}};
    if (seed % 3 == 0) prof.quotient_blocks.push_back({1, {}});
    auto g = gen::generate_random_extension(seed + 4000, f, prof);
    const auto& r = g.inst.q.ambient;
    std::vector<std::vector<Scalar>> xs;
    for (int i = 0; i < r.dim(); ++i) xs.push_back(r.basis_element(i));
    auto [s, rep] = extensions::fdss_envelope(g.inst, xs);
    if (!rep.semisimple) return false;
    algcore::Subalgebra ssub = algcore::subalgebra_on(r, s);
    if (structure::radical(ssub.alg).dim() != 0) return false;
    for (const auto& xx : xs)
      if (!linalg::contains(s, xx)) return false;
    // t_stable postconditions on the lifted complement
    auto full = linalg::subspace_full(*f, g.inst.q.quotient.dim());
    auto [t, lt] = extensions::lift_subalgebra(g.inst, full);
    SplitMix64 rng(seed);
    std::vector<std::vector<Scalar>> y{random_ideal_element(g.inst, rng)};
    auto res = extensions::condition_star_check(r, g.inst.q.ideal, t, y);
    if (!std::holds_alternative<std::vector<Scalar>>(res)) return false;
    const auto& e = std::get<std::vector<Scalar>>(res);
    if (!r.is_idempotent(e)) return false;
    for (const auto& yy : y)
      if (!r.eq(r.mul(e, yy), yy) || !r.eq(r.mul(yy, e), yy)) return false;
    for (int i = 0; i < t.dim(); ++i)
      if (!r.eq(r.mul(e, t.basis.row(i)), r.mul(t.basis.row(i), e))) return false;
    ++done;
  }
  detail = std::to_string(done) + "/50 instances (incl. non-split Q(i))";
  return done == 50;
}

// criterion 5: the non-perfect-field verifier
bool criterion5(std::string& detail) {
  int done = 0;
  for (uint64_t p : {2ull, 3ull}) {
    for (int n : {2, 4, 6}) {
      auto v = cx::counterexample_verify(p, n, false);
      if (v.feasible || !v.certificate.has_value()) return false;
      auto s = cx::counterexample_verify(p, n, true);
      if (!s.feasible) return false;
      // window identity is re-checked inside the builder; re-verify here
      auto sys = cx::counterexample_build(p, n, false);
      auto tp = cx::power(sys.t_op, static_cast<int>(p));
      Scalar alpha = sys.ext->parse("t");
      auto alphaI = cx::banded_identity(*sys.ext, static_cast<int>(p));
      alphaI.band[0] = linalg::scale(alphaI.band[0], alpha);
      if (!cx::eq(tp, alphaI)) return false;
      ++done;
    }
  }
  detail = std::to_string(done) + "/6 (p,n) pairs, both modes";
  return done == 6;
}

// criterion 6: the separability gate
bool criterion6(std::string& detail) {
  auto F2t = make_field(FieldDesc::rational_functions(2, "t"));
  auto E = gen::extension_component(F2t, {"t", "0", "1"});
  auto full = linalg::subspace_full(*F2t, E.dim());
  bool raised = false;
  try {
    extensions::t_stable_idempotent(E, linalg::subspace_zero(*F2t, E.dim()), full, {});
  } catch (const Error& e) {
    raised = e.code() == Err::NotSeparable;
  }
  if (!raised) return false;
  // never on separable seeds
  auto Q = make_field(FieldDesc::rationals());
  auto F2 = make_field(FieldDesc::prime(2));
  auto F5 = make_field(FieldDesc::prime(5));
  int separable_ok = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    FDAlgebra t;
    switch (seed % 5) {
      case 0:
        t = gen::generate_scrambled_matricial(seed, Q, {2}).alg;
        break;
      case 1:
        t = gen::generate_scrambled_matricial(seed, F2, {1, 2}).alg;
        break;
      case 2:
        t = gen::generate_scrambled_matricial(seed, F5, {2, 1}).alg;
        break;
      case 3:
        t = gen::extension_component(Q, {"1", "0", "1"});
        break;
      default:
        t = gen::extension_component(F2, {"1", "1", "1"});
        break;
    }
    if (!structure::is_separable(t)) return false;
    ++separable_ok;
  }
  detail = "gate raised on tau^2 = t; " + std::to_string(separable_ok) + "/100 separable seeds clean";
  return separable_ok == 100;
}

// criterion 7: the Wedderburn oracle on scrambles plus radical properties
bool criterion7(std::string& detail) {
  auto Q = make_field(FieldDesc::rationals());
  auto F3 = make_field(FieldDesc::prime(3));
  std::vector<std::vector<int>> shapes = {{1, 2}, {2, 2}, {3}, {1, 1, 2}, {3, 2},
                                          {4}, {2, 2, 2}, {3, 3}, {4, 2}, {5, 1}};
  int recovered = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    FieldRef f = seed % 2 ? F3 : Q;
    auto shape = shapes[static_cast<size_t>(seed % shapes.size())];
    int dimsum = 0;
    for (int n : shape) dimsum += n * n;
    if (dimsum > 32) return false;
    auto g = gen::generate_scrambled_matricial(seed + 31, f, shape);
    auto rep = structure::wedderburn(g.alg);
    if (!rep.semisimple || !rep.matricial) return false;
    std::vector<int> sizes;
    for (auto& c : rep.components) sizes.push_back(c.matrix_size);
    std::sort(sizes.begin(), sizes.end());
    std::sort(shape.begin(), shape.end());
    if (sizes != shape) return false;
    ++recovered;
  }
  int radical_ok = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    FieldRef f = seed % 2 ? F3 : Q;
    auto g = gen::generate_nonsemisimple(seed + 7, f, 12);
    auto rad = structure::radical(g.alg);
    if (!(rad == g.known_radical)) return false;
    if (rad.dim() == 0) return false;  // these seeds are non-semisimple
    // nilpotent and quotient-semisimple
    auto qp = algcore::quotient(g.alg, rad);
    if (structure::radical(qp.quotient).dim() != 0) return false;
    ++radical_ok;
  }
  detail = std::to_string(recovered) + "/100 scrambles recovered, " +
           std::to_string(radical_ok) + "/100 radical seeds verified";
  return recovered == 100 && radical_ok == 100;
}

// criterion 8: the unit-regularity constructions
bool criterion8(std::string& detail) {
  auto F3 = make_field(FieldDesc::prime(3));
  // embedded witnesses on 100 seeded (x, quasi_inverse(x)) pairs
  SplitMix64 rng(2024);
  int embeds = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    auto mn = algcore::matrix_algebra(F3, n);
    auto v = random_element(mn, rng);
    auto y = regtools::quasi_inverse(mn, v);
    Matrix xm(F3.get(), n, n), ym(F3.get(), n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        xm.at(i, j) = v[static_cast<size_t>(i * n + j)];
        ym.at(i, j) = y[static_cast<size_t>(i * n + j)];
      }
    auto w = regtools::embed_unit_regular_witness(xm, ym);
    if (!(linalg::mul(w.u, w.u_inv) == Matrix::identity(*F3, 2 * n))) return false;
    ++embeds;
  }
  // 50 seeded splittings with verified lifted units
  int lifts = 0;
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    ExtensionProfile prof;
    prof.ideal_blocks = {{seed % 2 ? 2 : 3, {}}};
    prof.quotient_blocks = {{2, {}}};
    auto g = gen::generate_random_extension(seed + 600, F3, prof);
    auto full = linalg::subspace_full(*F3, g.inst.q.quotient.dim());
    auto [t, lt] = extensions::lift_subalgebra(g.inst, full);
    SplitMix64 rng2(seed);
    std::vector<Scalar> ubar;
    for (;;) {
      ubar = g.inst.q.quotient.zero_element();
      for (int i = 0; i < g.inst.q.quotient.dim(); ++i)
        ubar[static_cast<size_t>(i)] = F3->random_small(rng2);
      if (g.inst.q.quotient.inverse(ubar).has_value()) break;
    }
    auto w = regtools::lift_unit_through_splitting(g.inst.q, t, ubar);
    if (!g.inst.q.ambient.inverse(w).has_value()) return false;
    if (!g.inst.q.quotient.eq(g.inst.q.project(w), ubar)) return false;
    ++lifts;
  }
  // 500 unit-regular witnesses over matricial algebras
  int witnesses = 0;
  auto F5 = make_field(FieldDesc::prime(5));
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = gen::generate_scrambled_matricial(seed + 40, seed % 2 ? F3 : F5, {2, 1});
    auto mr = structure::is_matricial(g.alg);
    if (!mr.matricial) return false;
    SplitMix64 rng3(seed);
    for (int k = 0; k < 50; ++k) {
      auto v = random_element(g.alg, rng3);
      auto wit = regtools::unit_regular_witness(g.alg, v, &*mr.units);
      const auto& a = g.alg;
      if (!a.eq(a.mul(v, a.mul(*wit.unit, v)), v)) return false;
      if (!a.eq(a.mul(*wit.unit, *wit.unit_inv), a.identity())) return false;
      ++witnesses;
    }
  }
  detail = std::to_string(embeds) + "/100 embeds, " + std::to_string(lifts) + "/50 lifts, " +
           std::to_string(witnesses) + "/500 witnesses";
  return embeds == 100 && lifts == 50 && witnesses == 500;
}

}  // namespace

int main() {
  Harness h;
  auto total_start = Clock::now();
  h.run("criterion-1", 30.0, criterion1);
  h.run("criterion-2", 0.0, criterion2);
  h.run("criterion-3", 0.0, criterion3);
  h.run("criterion-4", 0.0, criterion4);
  h.run("criterion-5", 60.0, criterion5);
  h.run("criterion-6", 0.0, criterion6);
  h.run("criterion-7", 0.0, criterion7);
  h.run("criterion-8", 0.0, criterion8);
  double total = std::chrono::duration<double>(Clock::now() - total_start).count();
  bool within_budget = total < 300.0;
  std::printf("%s total         (%6.2fs) full suite budget 300 s\n",
              within_budget ? "PASS" : "FAIL", total);
  if (!within_budget) ++h.failures;
  return h.failures == 0 ? 0 : 1;
}
