#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "umbracal/analysis.hpp"
#include "umbracal/heat.hpp"
#include "umbracal/lacunary.hpp"
#include "umbracal/numbers.hpp"
#include "umbracal/polynomials.hpp"
#include "umbracal/umbral.hpp"
#include "umbracal/verify.hpp"

namespace umbracal::cli {
namespace {

std::vector<double> linspace(double a, double b, int points) {
  if (points < 1) throw UsageError("sweep needs at least 1 point");
  if (points == 1) return {a};
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double step = (b - a) / (points - 1);
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = a + i * step;
  xs.back() = b;
  return xs;
}

// Rows of numbers from a CSV file; a first line that does not parse is a header.
std::vector<std::vector<double>> read_numeric_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    bool ok = true;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(field, &used));
      } catch (const std::exception&) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      if (first) {
        first = false;
        continue;
      }
      throw UsageError(path + ": unparsable line: " + line);
    }
    first = false;
    if (row.size() < 2) throw UsageError(path + ": need at least two columns");
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2) throw UsageError(path + ": too few rows");
  return rows;
}

// Uniformly spaced samples x, re[, im] turned into a field.
Field field_from_file(const std::string& path) {
  const auto rows = read_numeric_csv(path);
  const double h = rows[1][0] - rows[0][0];
  if (!(h > 0.0)) throw UsageError(path + ": x must increase");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::abs(rows[i][0] - rows[0][0] - static_cast<double>(i) * h) > 1e-9 * h * static_cast<double>(i)) {
      throw UsageError(path + ": x must be uniformly spaced");
    }
  }
  const int n = static_cast<int>(rows.size());
  Field f{Grid{rows[0][0], rows[0][0] + n * h, n}, {}};
  for (const auto& r : rows) f.values.emplace_back(r[1], r.size() > 2 ? r[2] : 0.0);
  f.validate();
  return f;
}

UmbralPoly umbral_base(double x, std::span<const int> orders) {
  UmbralPoly base = UmbralPoly::constant(x);
  for (int order : orders) base += UmbralPoly::monomial(UmbraId{order}, 2, 1.0);
  return base;
}

// Newton binomial: (x_1 + sum_j x_j^{1/m_j} u_j)^n projected with the roots kept symbolic.
double umbral_route(const PolyFamilyId& fam, int n, std::span<const double> args) {
  std::vector<int> orders;
  std::vector<DeferredRoot> roots;
  switch (fam.kind) {
    case PolyKind::kTwoVariable:
      orders = {2};
      break;
    case PolyKind::kOrderM:
      orders = {fam.m};
      break;
    case PolyKind::kThirdOrder3Var:
      orders = {2, 3};
      break;
    case PolyKind::kMultiVariable:
      for (int j = 2; j <= static_cast<int>(args.size()); ++j) orders.push_back(j);
      break;
  }
  for (std::size_t k = 0; k < orders.size(); ++k) roots.push_back({UmbraId{orders[k]}, args[k + 1]});
  const UmbralPoly p = pow(umbral_base(args[0], orders), static_cast<unsigned>(n));
  return project(p, roots).real();
}

std::vector<double> real_parts(const Field& f) {
  std::vector<double> out;
  for (const auto& v : f.values) out.push_back(v.real());
  return out;
}

Field gaussian_field(const Grid& g) {
  return Field::sample(g, [](double x) { return std::complex<double>(std::exp(-x * x)); });
}

void warn_aliasing(const Grid& g, const EvolutionSpec& spec) {
  const double gain = band_edge_gain(g, spec);
  if (gain > kAliasingGain) {
    std::cerr << "warning: band-edge gain " << gain
              << " exceeds 1e12; the result is dominated by rounding noise\n";
  }
}

// Rows of the field restricted to [lo, hi].
Table windowed(const Grid& g, const std::vector<std::pair<std::string, std::vector<double>>>& cols,
               double lo, double hi) {
  std::vector<std::size_t> keep;
  for (int i = 0; i < g.n; ++i) {
    const double x = g.node(i);
    if (x >= lo && x <= hi) keep.push_back(static_cast<std::size_t>(i));
  }
  Table t;
  std::vector<double> xs;
  for (auto i : keep) xs.push_back(g.node(static_cast<int>(i)));
  t.add("x", xs);
  for (const auto& [name, values] : cols) {
    std::vector<double> v;
    for (auto i : keep) v.push_back(values[i]);
    t.add(name, v);
  }
  return t;
}

Table figure1() {
  const auto xs = linspace(-8.0, 8.0, 321);
  Table t;
  t.add("x", xs);
  for (double alpha : {3.0, 2.9}) {
    std::vector<double> re, mod;
    for (double x : xs) {
      const double v = super_gaussian_integrand(alpha, x, 400).value;
      re.push_back(v);
      mod.push_back(std::abs(v));
    }
    const std::string tag = alpha == 3.0 ? "3" : "2.9";
    t.add("re_alpha" + tag, re);
    t.add("abs_alpha" + tag, mod);
  }
  return t;
}

Table figure2() {
  const auto xs = linspace(-1.0, 1.0, 41);
  std::vector<double> a, b, d;
  for (double x : xs) {
    a.push_back(lacunary_umbral(x, -0.2, -0.1).value);
    b.push_back(lacunary_factored(x, -0.2, -0.1, kDefaultLacunaryTerms, FactoredMode::kPowersOfY).value);
    d.push_back(std::abs(a.back() - b.back()));
  }
  Table t;
  t.add("x", xs);
  t.add("eq311_route", a);
  t.add("eq312_route", b);
  t.add("diff", d);
  return t;
}

Table figure3a() {
  // The quartic kernel decays slowly; a wide grid keeps periodic images small.
  const Grid g{-40.0, 40.0, 4096};
  const Field f = gaussian_field(g);
  // The quartic curve uses the dissipative sign; the forward one is ill-posed.
  const Field quartic = evolve_spectral(f, {4, 1.0, -1});
  const Field heat = evolve_spectral(f, {2, 1.0, 1});
  return windowed(g, {{"m4_y1", real_parts(quartic)}, {"m2_y1", real_parts(heat)}}, -6.0, 6.0);
}

Table figure3b() {
  const Grid g{-204.8, 204.8, 8192};
  const Field f = gaussian_field(g);
  std::vector<std::pair<std::string, std::vector<double>>> cols;
  for (double y : {0.1, 0.5, 1.0}) {
    std::ostringstream name;
    name << "m3_y" << y;
    cols.emplace_back(name.str(), real_parts(evolve_spectral(f, {3, y, 1})));
  }
  return windowed(g, cols, -10.0, 10.0);
}

}  // namespace

Table cmd_numbers(const NumbersArgs& a) {
  if (a.m < 2) throw UsageError("--m must be >= 2");
  if (a.max_r < 0) throw UsageError("--max-r must be >= 0");
  const auto table = build_table(a.m, a.max_r);
  std::vector<std::int64_t> r;
  std::vector<std::string> h;
  for (std::size_t i = 0; i < table.size(); ++i) {
    r.push_back(static_cast<std::int64_t>(i));
    h.push_back(table[i].str());
  }
  Table t;
  t.add("r", r);
  t.add("h_r", h);
  return t;
}

Table cmd_poly(const PolyArgs& a) {
  if (a.n < 0) throw UsageError("--n must be >= 0");
  if (a.family == "multivar" && a.xs.empty()) throw UsageError("--family multivar needs --xs");
  PolyFamilyId fam;
  try {
    const bool multivar = a.family == "multivar";
    fam = parse_family(a.family, multivar ? static_cast<int>(a.xs.size()) : a.m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<double> args;
  if (fam.kind == PolyKind::kMultiVariable) {
    args = a.xs;
  } else {
    args = {a.x, a.y};
    if (fam.kind == PolyKind::kThirdOrder3Var) args.push_back(a.z);
  }
  const double value = evaluate(fam, a.n, args);
  Table t;
  t.add("family", std::vector<std::string>{a.family});
  t.add("n", std::vector<std::int64_t>{a.n});
  t.add("value", std::vector<double>{value});
  if (a.umbral_check) {
    const double umbral = umbral_route(fam, a.n, args);
    t.add("umbral", std::vector<double>{umbral});
    t.add("abs_diff", std::vector<double>{std::abs(value - umbral)});
  }
  return t;
}

Table cmd_verify(const VerifyArgs& a, bool& failed) {
  Suite suite;
  try {
    suite = parse_suite(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.tol && !(*a.tol > 0.0)) throw UsageError("--tol must be positive");
  const SuiteReport report = run_suite(suite, a.tol);
  Table t;
  std::vector<std::string> name, suite_col, status, note;
  std::vector<std::int64_t> criterion;
  std::vector<double> measured, tolerance;
  for (const auto& c : report.checks) {
    name.push_back(c.name);
    suite_col.emplace_back(suite_name(c.suite));
    criterion.push_back(c.criterion);
    status.emplace_back(c.informational ? "info" : (c.passed ? "pass" : "fail"));
    measured.push_back(c.measured);
    tolerance.push_back(c.tolerance);
    note.push_back(c.note);
  }
  t.add("check", name);
  t.add("suite", suite_col);
  t.add("criterion", criterion);
  t.add("status", status);
  t.add("measured", measured);
  t.add("tolerance", tolerance);
  t.add("note", note);
  failed = !report.passed();
  return t;
}

Table cmd_heat(const HeatArgs& a) {
  const EvolutionSpec spec{a.m, a.y, a.sign};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Field f;
  if (a.init == "gaussian") {
    f = Field{Grid{a.grid.x_min, a.grid.x_max, a.grid.n}, {}};
    f.grid.validate();
    f = gaussian_field(f.grid);
  } else if (a.init.rfind("monomial:", 0) == 0) {
    int n = -1;
    const std::string digits = a.init.substr(9);
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || p != digits.data() + digits.size() || n < 0) {
      throw UsageError("--init monomial:n needs a non-negative integer n");
    }
    // Polynomials evolve exactly into heat polynomials, in either direction.
    const Grid g{a.grid.x_min, a.grid.x_max, a.grid.n};
    g.validate();
    const double ys = a.sign * a.y;
    Field out = Field::sample(g, [&](double x) { return std::complex<double>(evolve_monomial(a.m, n, x, ys)); });
    Table t;
    t.add("x", g.nodes());
    t.add("re(F)", real_parts(out));
    t.add("im(F)", std::vector<double>(static_cast<std::size_t>(g.n), 0.0));
    return t;
  } else if (a.init.rfind("file:", 0) == 0) {
    f = field_from_file(a.init.substr(5));
  } else {
    throw UsageError("--init must be gaussian, monomial:n or file:PATH");
  }

  Field out;
  if (a.route == "spectral") {
    if (!(spec.ill_posed() && !a.allow_illposed)) warn_aliasing(f.grid, spec);
    out = evolve_spectral(f, spec, {a.allow_illposed, true});
  } else if (a.route == "airy") {
    if (a.m != 3) throw UsageError("--route airy needs --m 3");
    out = a.y == 0.0 ? f : evolve_airy(f, a.sign * a.y);
  } else {
    throw UsageError("--route must be spectral or airy");
  }
  Table t;
  t.add("x", out.grid.nodes());
  std::vector<double> im;
  for (const auto& v : out.values) im.push_back(v.imag());
  t.add("re(F)", real_parts(out));
  t.add("im(F)", im);
  return t;
}

Table cmd_gabor(const GaborArgs& a) {
  if (a.terms < 0) throw UsageError("--terms must be >= 0");
  Signal sig;
  if (a.signal_file.empty()) {
    sig = GaussianSignal{a.amplitude, a.rate, a.center};
  } else {
    const Field f = field_from_file(a.signal_file);
    sig = SampledSignal::from_field(f);
  }
  try {
    validate(sig);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!gabor_series_converges(sig)) {
    std::cerr << "warning: the Hermite series diverges for this signal (rate <= pi)\n";
  }
  std::vector<double> tau, omega, re_d, im_d, re_s, im_s, diff, last;
  std::vector<std::int64_t> used;
  for (double tv : a.tau) {
    for (double w : a.omega) {
      const auto d = gabor_direct(sig, tv, w);
      const auto s = gabor_series(sig, tv, w, a.terms);
      tau.push_back(tv);
      omega.push_back(w);
      re_d.push_back(d.real());
      im_d.push_back(d.imag());
      re_s.push_back(s.value.real());
      im_s.push_back(s.value.imag());
      diff.push_back(std::abs(d - s.value));
      used.push_back(s.terms_used);
      last.push_back(std::abs(s.last_term));
    }
  }
  Table t;
  t.add("tau", tau);
  t.add("omega", omega);
  t.add("re_direct", re_d);
  t.add("im_direct", im_d);
  t.add("re_series", re_s);
  t.add("im_series", im_s);
  t.add("abs_diff", diff);
  t.add("terms_used", used);
  t.add("last_term", last);
  return t;
}

Table cmd_lacunary(const LacunaryArgs& a) {
  if (a.terms < 0 || a.terms > kMaxLacunaryTerms) {
    throw UsageError("--terms must be in [0, " + std::to_string(kMaxLacunaryTerms) + "]");
  }
  FactoredMode mode;
  if (a.order == "t") {
    mode = FactoredMode::kPowersOfT;
  } else if (a.order == "y") {
    mode = FactoredMode::kPowersOfY;
  } else {
    throw UsageError("--order must be t or y");
  }
  const auto xs = linspace(a.x_min, a.x_max, a.points);
  std::vector<double> direct, factored, diff;
  for (double x : xs) {
    direct.push_back(lacunary_direct(x, a.y, a.t, a.terms).value);
    factored.push_back(lacunary_factored(x, a.y, a.t, a.terms, mode).value);
    diff.push_back(std::abs(direct.back() - factored.back()));
  }
  Table t;
  t.add("x", xs);
  t.add("route_direct", direct);
  t.add("route_factored", factored);
  t.add("abs_diff", diff);
  return t;
}

Table cmd_figure(const FigureArgs& a) {
  if (a.id == "1") return figure1();
  if (a.id == "2") return figure2();
  if (a.id == "3a") return figure3a();
  if (a.id == "3b") return figure3b();
  throw UsageError("unknown figure id '" + a.id + "' (expected 1, 2, 3a or 3b)");
}

}  // namespace umbracal::cli
