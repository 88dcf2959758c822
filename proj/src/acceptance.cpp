#include "wildram/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace wildram {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  Json data = Json::array();

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  void merge(Outcome&& o) {
    checked += o.checked;
    for (auto& f : o.failures) failures.push_back(std::move(f));
    for (auto& d : o.data) data.push_back(std::move(d));
  }
};

std::string tag(const GridPoint& g) {
  return "(" + std::to_string(g.p) + "," + std::to_string(g.s) + "," + std::to_string(g.m) + ")";
}

template <class F>
Outcome sweep(std::size_t n, bool parallel, F f) {
  std::vector<Outcome> parts(n);
  if (!parallel || n < 2) {
    for (std::size_t i = 0; i < n; ++i) parts[i] = f(i);
  } else {
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) parts[i] = f(i);
      });
    for (auto& t : pool) t.join();
  }
  Outcome out;
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

template <class F>
Outcome guarded(const std::string& where, F f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Outcome o;
    o.check(false, where + ": " + e.what());
    return o;
  }
}

std::uint64_t point_seed(std::uint64_t seed, const GridPoint& g, int salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(g.p), static_cast<std::uint32_t>(g.s), static_cast<std::uint32_t>(g.m),
                    static_cast<std::uint32_t>(salt)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

FieldElem rand_elem(const Field& k, std::mt19937_64& rng) {
  return FieldElem{static_cast<std::uint32_t>(rng() % k.order())};
}

Outcome c1_formula(const std::vector<GridPoint>& grid, bool par) {
  return sweep(grid.size(), par, [&](std::size_t i) {
    const auto& g = grid[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto dim = h1_brute_force(grid_character(g)).dim;
      const int f = h1_closed_formula(g.p, g.s, g.m).h1;
      o.check(dim == static_cast<std::size_t>(f), tag(g) + " brute force " + std::to_string(dim) + " vs formula " + std::to_string(f));
      o.data.push_back(Json::array({g.p, g.s, g.m, dim, f}));
      return o;
    });
  });
}

Outcome c2_basis(const std::vector<GridPoint>& grid, bool par) {
  std::vector<GridPoint> pts;
  std::copy_if(grid.begin(), grid.end(), std::back_inserter(pts), [](const GridPoint& g) { return g.s == 1; });
  return sweep(pts.size(), par, [&](std::size_t i) {
    const auto& g = pts[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto ch = grid_character(g);
      const auto dim = h1_brute_force(ch).dim;
      const auto b = h1_basis_cyclic(g.p, g.m, ch.field());
      o.check(b.span_rank == dim, tag(g) + " span rank " + std::to_string(b.span_rank) + " vs " + std::to_string(dim));
      o.data.push_back(Json::array({g.p, g.m, b.span_rank, dim, b.exponents_match}));
      return o;
    });
  });
}

Outcome c3_split(const std::vector<GridPoint>& grid, bool par) {
  std::vector<GridPoint> pts;
  for (const auto& g : grid)
    if (g.s >= 2 && split_condition(g.p, g.s, g.m).holds) pts.push_back(g);
  Outcome out = sweep(pts.size(), par, [&](std::size_t i) {
    const auto& g = pts[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto c = split_check(grid_character(g));
      o.check(c.h1_total == c.factor_sum,
              tag(g) + " condition holds but " + std::to_string(c.h1_total) + " != " + std::to_string(c.factor_sum));
      o.data.push_back(Json::array({g.p, g.s, g.m, c.h1_total, c.factor_sum}));
      return o;
    });
  });
  out.merge(guarded("(3,2,2)", [] {
    Outcome o;
    const GridPoint g{3, 2, 2};
    const bool holds = split_condition(3, 2, 2).holds;
    const auto c = split_check(grid_character(g));
    o.check(!holds && c.h1_total == 3 && c.factor_sum == 4,
            "(3,2,2) condition " + std::string(holds ? "holds" : "fails") + ", dims " + std::to_string(c.h1_total) + " vs " +
                std::to_string(c.factor_sum));
    return o;
  }));
  return out;
}

// Every valid first-order datum over the prime field: lambda1 = lambda c
// (lambda = 0 for p = 2), all delta and all a1.
std::vector<DeformationDatum> exhaustive_data(const Character& ch) {
  const Field& k = ch.field();
  const int m = ch.m();
  const std::uint32_t q = k.order();
  std::vector<DeformationDatum> out;
  const std::uint32_t lambdas = ch.p() == 2 ? 1 : q;
  std::uint64_t a_count = 1;
  for (int i = 0; i < m; ++i) a_count *= q;
  for (std::uint32_t l = 0; l < lambdas; ++l)
    for (std::uint32_t dl = 0; dl < q; ++dl)
      for (std::uint64_t a = 0; a < a_count; ++a) {
        DeformationDatum d{ch, {k.mul(FieldElem{l}, ch.vals()[0])}, {FieldElem{dl}}, {}};
        std::uint64_t x = a;
        for (int i = 0; i < m; ++i, x /= q) d.a1.push_back(FieldElem{static_cast<std::uint32_t>(x % q)});
        out.push_back(std::move(d));
      }
  return out;
}

Outcome c4_formula(const std::vector<GridPoint>& grid, bool par, std::uint64_t seed) {
  const std::set<std::pair<int, int>> exhaustive{{2, 3}, {2, 5}, {2, 7}, {3, 2}, {3, 4}, {3, 5}};
  std::vector<GridPoint> pts = grid;
  for (auto [p, m] : exhaustive)
    if (std::none_of(pts.begin(), pts.end(), [&](const GridPoint& g) { return g.p == p && g.s == 1 && g.m == m; }))
      pts.push_back({p, 1, m});
  Outcome out = sweep(pts.size(), par, [&](std::size_t i) {
    const auto& g = pts[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto ch = grid_character(g);
      const Field& k = ch.field();
      std::vector<DeformationDatum> data;
      if (g.s == 1 && exhaustive.count({g.p, g.m})) {
        data = exhaustive_data(ch);
      } else {
        std::mt19937_64 rng(point_seed(seed, g, 4));
        for (int r = 0; r < 20; ++r) data.push_back(random_datum(ch, rng));
      }
      const int prec = g.m + 3;
      std::size_t equal = 0, negated = 0;
      for (const auto& d : data) {
        const auto tc = tangent_cocycle_extract(d.rep(), d.ftilde(prec + 2 * g.m + 2), prec);
        bool eq = true, neg = true;
        for (int j = 0; j < g.s; ++j) {
          const auto f = cocycle_formula(d, GroupElem::generator(g.s, j));
          auto nf = f;
          for (auto& c : nf.coeffs) c = k.neg(c);
          eq = eq && tc.poles[static_cast<std::size_t>(j)] == f;
          neg = neg && tc.poles[static_cast<std::size_t>(j)] == nf;
        }
        equal += eq;
        negated += neg;
        ++o.checked;
      }
      if (equal != data.size())
        o.failures.push_back(tag(g) + " " + std::to_string(data.size() - equal) + "/" + std::to_string(data.size()) +
                             " data differ from the formula");
      o.data.push_back(Json::array({g.p, g.s, g.m, data.size(), equal, negated}));
      return o;
    });
  });
  return out;
}

Outcome c5_rho(const std::vector<GridPoint>& grid, bool par) {
  return sweep(grid.size(), par, [&](std::size_t i) {
    const auto& g = grid[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto ch = grid_character(g);
      const auto r = verify_group_law(ch, ch.default_prec());
      o.check(r.ok, tag(g) + " " + r.first_discrepancy);
      o.data.push_back(Json::array({g.p, g.s, g.m, r.pairs_checked}));
      return o;
    });
  });
}

Outcome c6_cover(const std::vector<GridPoint>& grid, bool par) {
  return sweep(grid.size(), par, [&](std::size_t i) {
    const auto& g = grid[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto ch = grid_character(g);
      const auto germ = germ_model(ch);
      const auto cls = class_reduce(germ.downstairs, g.s);
      const auto c = conductor(cls);
      o.check(c.value == g.m && !c.unramified, tag(g) + " conductor " + std::to_string(c.value));
      o.check(witness_ok(germ.downstairs, cls), tag(g) + " witness does not verify");
      return o;
    });
  });
}

Outcome c7_normalization(const std::vector<GridPoint>& grid, bool par) {
  std::vector<GridPoint> pts;
  std::copy_if(grid.begin(), grid.end(), std::back_inserter(pts), [](const GridPoint& g) { return g.s == 2; });
  Outcome out = sweep(pts.size(), par, [&](std::size_t i) {
    const auto& g = pts[i];
    return guarded(tag(g), [&] {
      Outcome o;
      for (const auto& y : normalized_generators(grid_character(g))) {
        o.check(std::all_of(y.shift.begin(), y.shift.end(), [](bool b) { return b; }), tag(g) + " shift relation");
        o.check(y.vanishes_at_zero, tag(g) + " y(0) != 0");
      }
      return o;
    });
  });
  std::vector<std::pair<int, int>> fields;
  for (int p : {2, 3, 5, 7})
    for (int d = 1, q = p; q <= 64; ++d, q *= p) fields.emplace_back(p, d);
  out.merge(sweep(fields.size(), par, [&](std::size_t i) {
    const auto [p, d] = fields[i];
    const std::string where = "F_" + std::to_string(p) + "^" + std::to_string(d);
    return guarded(where, [&, p = p, d = d] {
      Outcome o;
      const auto k = Field::make(p, d);
      std::vector<FieldElem> basis{k.one()};
      for (int j = 1; j < d; ++j) basis.push_back(k.mul(basis.back(), k.gen()));
      for (int s = 1; s <= d; ++s) {
        std::vector<FieldElem> vals(basis.begin(), basis.begin() + s);
        const auto ch = Character::make(k, vals, p == 2 ? 3 : 2);
        for (int j = 1; j <= s; ++j) o.check(moore_swap_identity_check(ch, j), where + " swap identity s=" + std::to_string(s));
        std::set<std::uint32_t> span{0};
        for (auto v : vals) {
          std::set<std::uint32_t> next;
          for (auto x : span)
            for (int c = 0; c < p; ++c) next.insert(k.add(FieldElem{x}, k.mul(k.from_int(c), v)).v);
          span = std::move(next);
        }
        const auto phi = additive_poly_from_character(ch);
        std::set<std::uint32_t> roots;
        for (std::uint32_t a = 0; a < k.order(); ++a)
          if (ppoly_apply(phi, FieldElem{a}) == k.zero()) roots.insert(a);
        o.check(roots == span, where + " roots of Phi differ from the span, s=" + std::to_string(s));
      }
      return o;
    });
  }));
  return out;
}

Outcome c8_obstruction(const std::vector<GridPoint>& grid, bool par, std::uint64_t seed) {
  return sweep(grid.size(), par, [&](std::size_t i) {
    const auto& g = grid[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto ch = grid_character(g);
      std::mt19937_64 rng(point_seed(seed, g, 8));
      const auto d = random_datum(ch, rng);
      const int prec = g.m + 4;
      const auto elems = group_elements(g.p, g.s);
      for (int n : {2, 3}) {
        auto [rep, ft] = lift_data(d, n, prec + 3 * g.m);
        std::vector<LaurentSeries> lifts;
        for (const auto& e : elems) lifts.push_back(deformed_rho(rep, ft, e, prec));
        const auto exact = obstruction_two_cocycle(rep, ft, lifts, prec);
        const std::string where = tag(g) + " eps^" + std::to_string(n);
        o.check(exact.cochain.is_zero(), where + " matrix-data lifts give a nonzero cochain");
        ArtinElem kappa{};
        kappa.c[static_cast<std::size_t>(n - 1)] = ch.field().one();
        const std::size_t at = 1 + rng() % (elems.size() - 1);
        lifts[at] = add(lifts[at], LaurentSeries::monomial(rep.A, kappa, 1, prec));
        const auto pert = obstruction_two_cocycle(rep, ft, lifts, prec);
        o.check(!pert.cochain.is_zero(), where + " perturbation vanished");
        o.check(pert.is_cocycle, where + " perturbed cochain is not a cocycle");
        o.check(pert.vanishes_in_h2, where + " perturbed cochain is not a coboundary");
      }
      return o;
    });
  });
}

Outcome c9_conjugation(const std::vector<GridPoint>& grid, bool par, std::uint64_t seed) {
  return sweep(grid.size(), par, [&](std::size_t i) {
    const auto& g = grid[i];
    return guarded(tag(g), [&] {
      Outcome o;
      const auto ch = grid_character(g);
      const Field& k = ch.field();
      std::mt19937_64 rng(point_seed(seed, g, 9));
      H1Engine eng(ch);
      const int prec = eng.N() + g.m + 2;
      auto cochain = [&](const MatrixRep& rep, const LaurentSeries& ft) {
        const auto tc = tangent_cocycle_extract(rep, ft, prec);
        OneCochain x;
        for (const auto& v : tc.cochain.vals) x.vals.push_back(v.truncate(eng.N()));
        return x;
      };
      for (int datum = 0; datum < 4; ++datum) {
        const auto d = random_datum(ch, rng);
        const auto rep = d.rep();
        const auto ft = d.ftilde(prec + 2 * g.m);
        const auto base = cochain(rep, ft);
        const auto& A = rep.A;
        for (int r = 0; r < 5; ++r) {
          const auto mu = A.make_elem({k.zero(), rand_elem(k, rng)});
          const auto lam0 = A.make_elem({k.one(), rand_elem(k, rng)});
          const auto conj = conjugate_rep(rep, mu, lam0);
          o.check(rep_validate(conj).ok, tag(g) + " conjugate is not a valid representation");
          o.check(eng.same_class(base, cochain(conj, ft)), tag(g) + " conjugate changes the tangent class");
        }
      }
      return o;
    });
  });
}

Json record(int id, const std::string& name, Outcome&& o, double ms, const std::string& detail) {
  Json fails = Json::array();
  for (std::size_t i = 0; i < o.failures.size() && i < 20; ++i) fails.push_back(o.failures[i]);
  return {{"id", id},
          {"name", name},
          {"pass", o.failures.empty()},
          {"checked", o.checked},
          {"failure_count", o.failures.size()},
          {"failures", fails},
          {"detail", detail},
          {"data", std::move(o.data)},
          {"timing", {{"ms", ms}}}};
}

}  // namespace

std::vector<GridPoint> acceptance_grid(int max_m) {
  std::vector<GridPoint> out;
  for (int p : {2, 3, 5})
    for (int s : {1, 2})
      for (int m = 1; m <= max_m; ++m)
        if (m % p != 0 && !(s == 2 && m == 1)) out.push_back({p, s, m});
  return out;
}

Character grid_character(const GridPoint& g) {
  const auto k = Field::make(g.p, g.s == 1 ? 1 : 2);
  std::vector<FieldElem> vals{k.one()};
  if (g.s == 2) vals.push_back(k.gen());
  return Character::make(k, vals, g.m);
}

Json run_acceptance(const AcceptanceOptions& opt) {
  const auto t0 = Clock::now();
  const auto grid = acceptance_grid(opt.max_m);
  const bool par = opt.parallel;
  Json crit = Json::array();
  auto timed = [&](int id, const std::string& name, const std::function<Outcome()>& f,
                   const std::function<std::string(const Outcome&)>& detail) {
    const auto s = Clock::now();
    Outcome o = f();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - s).count();
    const std::string d = detail(o);
    crit.push_back(record(id, name, std::move(o), ms, d));
  };
  auto count = [](const Outcome& o) {
    return std::to_string(o.checked - o.failures.size()) + "/" + std::to_string(o.checked) + " checks";
  };
  timed(1, "cohomology formula vs brute force", [&] { return c1_formula(grid, par); }, count);
  timed(2, "cyclic basis spans H1", [&] { return c2_basis(grid, par); }, count);
  timed(3, "splitting criterion", [&] { return c3_split(grid, par); }, count);
  timed(4, "tangent extraction vs closed formula", [&] { return c4_formula(grid, par, opt.seed); },
        [](const Outcome& o) {
          std::size_t n = 0, eq = 0, neg = 0;
          for (const auto& r : o.data) {
            n += r[3].get<std::size_t>();
            eq += r[4].get<std::size_t>();
            neg += r[5].get<std::size_t>();
          }
          return std::to_string(eq) + "/" + std::to_string(n) + " data equal; " + std::to_string(neg) + "/" +
                 std::to_string(n) + " equal to the negated formula";
        });
  timed(5, "defining equation and group law", [&] { return c5_rho(grid, par); }, count);
  timed(6, "artin-schreier conductor round trip", [&] { return c6_cover(grid, par); }, count);
  timed(7, "normalization identities", [&] { return c7_normalization(grid, par); }, count);
  timed(8, "obstruction vanishing", [&] { return c8_obstruction(grid, par, opt.seed); }, count);
  timed(9, "conjugation invariance", [&] { return c9_conjugation(grid, par, opt.seed); }, count);
  const double first_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  if (opt.determinism) {
    const auto s = Clock::now();
    AcceptanceOptions again = opt;
    again.determinism = false;
    again.parallel = !opt.parallel;
    const Json inner{{"criteria", crit}};
    const Json rerun = run_acceptance(again);
    const bool same = dump(strip_timing(inner)) == dump(strip_timing(Json{{"criteria", rerun["criteria"]}}));
    const bool fast = first_ms < 600000.0;
    Outcome o;
    o.check(same, "rerun differs");
    o.check(fast, "first run exceeded 10 minutes");
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - s).count();
    crit.push_back(record(10, "determinism", std::move(o), ms,
                          std::string("rerun with parallel=") + (again.parallel ? "on" : "off") +
                              (same ? " is byte-identical" : " differs")));
    crit.back()["timing"]["first_run_ms"] = first_ms;
  }
  bool all = true;
  Json failed = Json::array();
  for (const auto& c : crit)
    if (!c["pass"].get<bool>()) {
      all = false;
      failed.push_back(c["id"]);
    }
  return {{"schema", kSelftestSchema},
          {"seed", opt.seed},
          {"max_m", opt.max_m},
          {"criteria", crit},
          {"summary", {{"ok", all}, {"failed", failed}}},
          {"timing", {{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}}}};
}

std::string acceptance_lines(const Json& report) {
  std::ostringstream out;
  for (const auto& c : report["criteria"]) {
    out << "criterion " << (c["id"].get<int>() < 10 ? " " : "") << c["id"].get<int>() << "  "
        << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << c["name"].get<std::string>() << "  ("
        << c["detail"].get<std::string>() << ")\n";
    for (const auto& f : c["failures"]) out << "    " << f.get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace wildram
