#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "superdq/clifford_fine.hpp"
#include "superdq/qft.hpp"
#include "superdq/quantization.hpp"
#include "superdq/suites.hpp"
#include "superdq/superfunction.hpp"
#include "superdq/supertorus.hpp"

using namespace superdq;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* what, double budget, const std::function<Outcome()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = o.ok && dt < budget;
  if (!ok) ++failures;
  std::printf("[%s] %2d %s (%.2fs / %.0fs) %s%s\n", ok ? "PASS" : "FAIL", id, what, dt, budget, o.detail.c_str(),
              o.ok && dt >= budget ? " over time budget" : "");
  std::fflush(stdout);
}

bool all_pass(const Report& r, std::string& why) {
  for (auto& c : r.checks)
    if (c.status == Status::Fail) why += c.suite + "/" + c.name + " ";
  return why.empty();
}

const CheckRecord& find(const Report& r, const std::string& name) {
  for (auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

Grid2 gaussian(int N, double L, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  double c0 = 0.5 * nd(rng), c1 = 0.5 * nd(rng);
  cplx a(nd(rng), nd(rng));
  Grid2 g = Grid2::centered(N, L);
  g.fill([&](double x, double y) { return a * std::exp(-(x - c0) * (x - c0) - (y - c1) * (y - c1)); });
  return g;
}

}  // namespace

int main() {
  criterion(1, "structure constants: brute force = closed form, exact, n<=4", 5, [] {
    long bad = 0;
    const QI a0s[] = {QI(mpq_class(1, 2)), QI(1), QI(2)};
    const QI als[] = {QI(mpq_class(1, 2)), QI(1), QI(2), QI(1, 1)};
    for (int n = 1; n <= 4; ++n)
      for (auto& a0 : a0s)
        for (auto& al : als) {
          OddParams<QI> p{a0, al};
          auto b = lambda_bruteforce<QI>(n, p), c = lambda_closedform<QI>(n, p);
          for (std::size_t k = 0; k < b.table.size(); ++k) bad += b.table[k] != c.table[k];
        }
    return Outcome{bad == 0, std::to_string(bad) + " mismatching entries over 48 parameter sets"};
  });

  criterion(2, "n=1 and n=2 product tables, coefficient by coefficient", 1, [] {
    long bad = 0;
    for (int n : {1, 2})
      for (auto& a0 : {QI(1), QI(mpq_class(1, 2)), QI(3)})
        for (auto& al : {QI(1), QI(2), QI(1, 1)}) {
          auto c = lambda_closedform<QI>(n, OddParams<QI>{a0, al});
          auto r = reference_table(n, a0, al);
          for (std::size_t k = 0; k < c.table.size(); ++k) bad += c.table[k] != r.table[k];
        }
    return Outcome{bad == 0, std::to_string(bad) + " mismatching coefficients over 9 parameter sets"};
  });

  criterion(3, "Clifford relations n<=5 exact; sigma_star ~ sigma_Cl via rho, n<=4, both roots", 5, [] {
    long bad = 0;
    for (int n = 1; n <= 5; ++n) {
      auto c = clifford_relations_exact(n, OddParams<QI>{QI(1), QI(1)});
      bad += !c.squares_one + !c.anticommute + !c.scale_matches_formula;
    }
    for (int n = 1; n <= 4; ++n)
      for (int br : {1, -1}) {
        OddParams<cplx> p{1.0, 1.0};
        auto r = factor_set_from_star(lambda_closedform<cplx>(n, p), p, br);
        bad += !r.cocycle.ok + !r.star_vs_clifford.ok + !r.coeff_vs_clifford.ok;
      }
    return Outcome{bad == 0, std::to_string(bad) + " violations"};
  });

  // shared test set for 4 and 5: m=2, n=2, N=128, L=10
  std::mt19937 rng(42);
  const int n = 2, N = 128;
  const double L = 10, theta = 1.0;
  auto Lc = lambda_closedform<cplx>(n, OddParams<cplx>{1.0, 1.0});
  std::vector<std::pair<GridSuperFunction, GridSuperFunction>> set;
  for (int t = 0; t < 3; ++t) {
    GridSuperFunction f(n, Grid2::centered(N, L)), g = f;
    for (auto& c : f.comp) c = gaussian(N, L, rng);
    for (auto& c : g.comp) c = gaussian(N, L, rng);
    set.emplace_back(f, g);
  }
  criterion(4, "tracial identity |int f*g - int fg| / |int fg| <= 1e-6", 30, [&] {
    double worst = 0;
    for (auto& [f, g] : set) {
      cplx a = supertrace_fn(grid_super_star(f, g, Lc, theta)), b = supertrace_fn(grid_super_mul(f, g));
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    return Outcome{worst <= 1e-6, "max rel. deviation " + fmt(worst)};
  });
  criterion(5, "twisted trace cyclic |tr(f*g) - tr(g*f)| <= 1e-6", 30, [&] {
    double worst = 0;
    for (auto& [f, g] : set)
      worst = std::max(worst, std::abs(twisted_trace(grid_super_star(f, g, Lc, theta)) -
                                       twisted_trace(grid_super_star(g, f, Lc, theta))));
    return Outcome{worst <= 1e-6, "max deviation " + fmt(worst)};
  });

  RunConfig qc;
  qc.n = 1;
  qc.N = 64;
  qc.L = 8;
  Report qr;
  criterion(6, "quantization: homomorphism <= 1e-3, adjoint <= 1e-10, Omega(1) monotone in L", 120, [&] {
    qr = run_suite("quantization", qc);
    std::string d;
    bool ok = true;
    for (auto* nm : {"homomorphism", "adjoint", "unit_truncation_monotone"}) {
      auto& c = find(qr, nm);
      ok = ok && c.status == Status::Pass;
      d += std::string(nm) + " " + c.measured + "; ";
    }
    return Outcome{ok, d};
  });
  criterion(7, "resolution of identity: error <= 1e-3, C = 2 pi i within 1e-3", 60, [&] {
    auto& a = find(qr, "resolution_constant");
    auto& b = find(qr, "resolution_reconstruction");
    return Outcome{a.status == Status::Pass && b.status == Status::Pass,
                   "C rel. error " + a.measured + " (" + a.detail + "), reconstruction " + b.measured};
  });
  criterion(8, "Berezin transform with the nominal prefactor r1((alpha-beta)/(1+alpha))^n(-1)^{n|f|}", 60, [&] {
    auto& a = find(qr, "berezin_nominal_prefactor_beta=0");
    auto& b = find(qr, "berezin_nominal_prefactor_beta=alpha/2");
    bool ok = a.status == Status::Pass && b.status == Status::Pass;
    return Outcome{ok, "trace/(prefactor f): " + a.measured + ", " + b.measured};
  });

  criterion(9, "supertorus: VU = e^{2 pi i theta} UV, odd relations exact, theta=0 exact", 1, [] {
    RunConfig tc;
    tc.n = 2;
    auto r = run_suite("torus", tc);
    std::string why;
    bool rest = true;
    for (auto& c : r.checks)
      if (c.name != "commutation_factor_nominal" && c.status != Status::Pass) rest = false, why += c.name + " ";
    auto& s = find(r, "commutation_factor_nominal");
    return Outcome{rest && s.status == Status::Pass, "factors " + s.measured + (why.empty() ? "" : "; failing " + why)};
  });

  criterion(10, "QFT bracket and action identities exact; numeric cross-check <= 1e-4", 30, [] {
    auto b = qft::verify_bracket_identity(true);
    auto a = qft::verify_action_identity(true, false);
    qft::NumericParams np;
    auto nr = qft::numeric_crosscheck(np);
    bool ok = b.ok && a.ok && nr.rel_dev <= 1e-4;
    return Outcome{ok, std::string("bracket ") + (b.ok ? "exact" : "fails") + ", action " + (a.ok ? "exact" : "fails") +
                           ", numeric rel. dev. " + fmt(nr.rel_dev)};
  });

  criterion(11, "structural suites: symplectic, Hilbert superspace, Grassmann", 10, [] {
    RunConfig cfg;
    Report r;
    for (auto* s : {"symplectic", "hilbert", "grassmann"}) r.append(run_suite(s, cfg));
    std::string why;
    bool ok = all_pass(r, why);
    return Outcome{ok, std::to_string(r.checks.size()) + " checks" + (ok ? "" : ", failing " + why)};
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures ? 1 : 0;
}
