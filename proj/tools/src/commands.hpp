#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "output.hpp"

namespace umbracal::cli {

/// Bad flag combination detected after parsing; exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ran to completion but a check failed; exit code 1.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NumbersArgs {
  int m = 2;
  int max_r = 10;
};

struct PolyArgs {
  std::string family = "2var";
  int m = 2;
  int n = 0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  std::vector<double> xs;
  bool umbral_check = false;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<double> tol;
};

struct GridArgs {
  double x_min = -20.0;
  double x_max = 20.0;
  int n = 2048;
};

struct HeatArgs {
  int m = 2;
  double y = 0.0;
  int sign = 1;
  std::string init = "gaussian";
  std::string route = "spectral";
  GridArgs grid;
  bool allow_illposed = false;
};

struct GaborArgs {
  double amplitude = 1.0;
  double rate = 0.0;  // set by main to 4 pi
  double center = 0.5;
  std::string signal_file;
  std::vector<double> tau{0.0, 0.5, 1.0};
  std::vector<double> omega{0.0, 0.5, 1.0};
  int terms = 40;
};

struct LacunaryArgs {
  double x_min = -1.0;
  double x_max = 1.0;
  int points = 41;
  double y = -0.2;
  double t = -0.1;
  int terms = 120;
  std::string order = "t";
};

struct FigureArgs {
  std::string id;
};

Table cmd_numbers(const NumbersArgs& a);
Table cmd_poly(const PolyArgs& a);
/// Sets failed when any non-informational check fails.
Table cmd_verify(const VerifyArgs& a, bool& failed);
Table cmd_heat(const HeatArgs& a);
Table cmd_gabor(const GaborArgs& a);
Table cmd_lacunary(const LacunaryArgs& a);
Table cmd_figure(const FigureArgs& a);

}  // namespace umbracal::cli
