#include <exception>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "output.hpp"
#include "umbracal/heat.hpp"

namespace {

using namespace umbracal::cli;

struct Common {
  std::string format = "csv";
  std::string out = "-";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output file, - for stdout");
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

RunManifest manifest_for(const CLI::App* sub, const Common& c) {
  RunManifest m;
  m.subcommand = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
    const std::string key = opt->get_lnames().front();
    if (key == "format" || key == "out") continue;
    std::string value = opt->count() > 0 ? joined(opt->results()) : opt->get_default_str();
    if (opt->get_type_size() == 0 && value.empty()) value = "false";
    if (opt->get_type_size() == 0 && opt->count() > 0) value = "true";
    m.parameters.emplace_back(key, value);
  }
  m.output = c.out;
  m.format = parse_format(c.format);
  m.version = UMBRACAL_VERSION;
  m.timestamp = utc_timestamp();
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite numbers, umbral evaluation of Hermite polynomials, integral identities,\n"
               "lacunary series and higher-order heat equations."};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", UMBRACAL_VERSION);
  app.option_defaults()->always_capture_default();
  Common common;

  NumbersArgs numbers;
  auto* s_numbers = app.add_subcommand("numbers", "Table of exact Hermite numbers h_r of order m");
  s_numbers->add_option("--m", numbers.m, "Order (>= 2)");
  s_numbers->add_option("--max-r", numbers.max_r, "Largest index r");
  add_common(s_numbers, common);

  PolyArgs poly;
  auto* s_poly = app.add_subcommand("poly", "Evaluate a Hermite polynomial family");
  s_poly->add_option("--family", poly.family, "2var, m-order, 3var3 or multivar");
  s_poly->add_option("--m", poly.m, "Order for the m-order family");
  s_poly->add_option("--n", poly.n, "Degree")->required();
  s_poly->add_option("--x", poly.x);
  s_poly->add_option("--y", poly.y);
  s_poly->add_option("--z", poly.z);
  s_poly->add_option("--xs", poly.xs, "Arguments x_1 .. x_m for multivar")->delimiter(',');
  s_poly->add_flag("--umbral-check", poly.umbral_check, "Also evaluate by umbral projection");
  add_common(s_poly, common);

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "Run a suite of numerical checks");
  s_verify->add_option("--suite", verify.suite, "integrals, series, umbral, heat, lacunary or all")
      ->check(CLI::IsMember({"integrals", "series", "umbral", "heat", "lacunary", "all"}));
  s_verify->add_option("--tol", verify.tol, "Override every check's tolerance");
  add_common(s_verify, common);

  HeatArgs heat;
  auto* s_heat = app.add_subcommand("heat", "Solve d_y F = sign * d_x^m F from F(x, 0) = g(x)");
  s_heat->add_option("--m", heat.m, "Derivative order (>= 2)");
  s_heat->add_option("--y", heat.y, "Evolution variable");
  s_heat->add_option("--sign", heat.sign, "+1 or -1")->check(CLI::IsMember({-1, 1}));
  s_heat->add_option("--init", heat.init, "gaussian, monomial:n or file:PATH (CSV x,re[,im])");
  s_heat->add_option("--route", heat.route, "spectral, or airy for m = 3");
  s_heat->add_option("--x-min", heat.grid.x_min);
  s_heat->add_option("--x-max", heat.grid.x_max);
  s_heat->add_option("--n", heat.grid.n, "Grid points, a power of two >= 8");
  s_heat->add_flag("--allow-illposed", heat.allow_illposed, "Evolve in an ill-posed direction");
  add_common(s_heat, common);

  GaborArgs gabor;
  gabor.rate = 4.0 * std::numbers::pi;
  auto* s_gabor = app.add_subcommand("gabor", "Gabor transform by quadrature and by Hermite series");
  s_gabor->add_option("--amplitude", gabor.amplitude, "Gaussian signal A e^{-a (t - c)^2}");
  s_gabor->add_option("--rate", gabor.rate, "a; the series converges for a > pi");
  s_gabor->add_option("--center", gabor.center, "c");
  s_gabor->add_option("--signal-file", gabor.signal_file, "Sampled signal, CSV t,re[,im]");
  s_gabor->add_option("--tau", gabor.tau)->delimiter(',');
  s_gabor->add_option("--omega", gabor.omega)->delimiter(',');
  s_gabor->add_option("--terms", gabor.terms, "Series truncation N");
  add_common(s_gabor, common);

  LacunaryArgs lac;
  auto* s_lac = app.add_subcommand("lacunary", "Lacunary series sum_r t^r H_3r(x, y) / r! by two routes");
  s_lac->add_option("--x-min", lac.x_min);
  s_lac->add_option("--x-max", lac.x_max);
  s_lac->add_option("--points", lac.points);
  s_lac->add_option("--y", lac.y);
  s_lac->add_option("--t", lac.t);
  s_lac->add_option("--terms", lac.terms, "Largest series index considered");
  s_lac->add_option("--order", lac.order, "Factored route ordered by powers of t or y")
      ->check(CLI::IsMember({"t", "y"}));
  add_common(s_lac, common);

  FigureArgs figure;
  auto* s_figure = app.add_subcommand("figure", "Emit the data behind a figure");
  s_figure->add_option("--id", figure.id, "1, 2, 3a or 3b")->required();
  add_common(s_figure, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    const RunManifest manifest = manifest_for(sub, common);
    bool failed = false;
    Table table;
    if (sub == s_numbers) {
      table = cmd_numbers(numbers);
    } else if (sub == s_poly) {
      table = cmd_poly(poly);
    } else if (sub == s_verify) {
      table = cmd_verify(verify, failed);
    } else if (sub == s_heat) {
      table = cmd_heat(heat);
    } else if (sub == s_gabor) {
      table = cmd_gabor(gabor);
    } else if (sub == s_lac) {
      table = cmd_lacunary(lac);
    } else {
      table = cmd_figure(figure);
    }
    emit(table, manifest);
    if (failed) {
      std::cerr << "one or more checks failed\n";
      return 1;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const umbracal::IllPosedError& e) {
    std::cerr << "error: " << e.what() << "; pass --allow-illposed to proceed\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
