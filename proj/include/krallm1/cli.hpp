// cli.hpp
//
// Command dispatch for the krallm1 tool. Argument parsing lives in
// tools/krallm1.cpp; everything here works on a validated RunConfig so the
// commands can be driven from tests without a process boundary.

#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "krallm1/verify.hpp"

namespace krallm1::cli {

enum class Command { gen, verify_q, verify_m1, moments, gram, limit_scan, matrix_verify };
enum class Format { json, csv };

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDegenerate = 2;
inline constexpr int kExitUsage = 64;

inline std::optional<Command> parse_command(const std::string& s) {
  if (s == "gen") return Command::gen;
  if (s == "verify-q") return Command::verify_q;
  if (s == "verify-m1") return Command::verify_m1;
  if (s == "moments") return Command::moments;
  if (s == "gram") return Command::gram;
  if (s == "limit-scan") return Command::limit_scan;
  if (s == "matrix-verify") return Command::matrix_verify;
  return std::nullopt;
}

inline const char* to_string(Command c) {
  switch (c) {
    case Command::gen: return "gen";
    case Command::verify_q: return "verify-q";
    case Command::verify_m1: return "verify-m1";
    case Command::moments: return "moments";
    case Command::gram: return "gram";
    case Command::limit_scan: return "limit-scan";
    case Command::matrix_verify: return "matrix-verify";
  }
  return "";
}

/// Raw flag values as given on the command line.
struct RawArgs {
  std::string command;
  std::optional<std::string> beta, M, q, b, family, tol, eps_list, out, format;
  std::optional<int> j, n_max, precision, s_max;
};

struct RunConfig {
  Command command = Command::verify_m1;
  std::optional<MinusOneParams> m1;  // unset for matrix-verify means auto-select
  std::optional<QJacobiParams<Rational>> qside;
  bool q_family = false;  // gen: q-side Geronimus family instead of the -1 family
  int n_max = 6;
  int s_max = 3;
  unsigned precision = kDefaultDigits;
  std::optional<std::string> tol;
  std::vector<std::string> eps_list{"1e-2", "1e-3", "1e-4"};
  std::optional<std::string> out;
  Format format = Format::json;
};

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("--eps-list has an empty entry");
    out.push_back(item.substr(first, last - first + 1));
  }
  if (out.empty()) throw ParseError("--eps-list is empty");
  return out;
}

/// Validates flags into a RunConfig; errors name the offending flag.
inline RunConfig make_config(const RawArgs& a, const char* env_precision) {
  RunConfig c;
  auto cmd = parse_command(a.command);
  if (!cmd) throw ParseError("unknown command '" + a.command + "'");
  c.command = *cmd;

  auto rational = [](const std::optional<std::string>& v, const char* flag) {
    try {
      return parse_rational(*v);
    } catch (const ParseError& e) {
      throw ParseError(std::string(flag) + ": " + e.what());
    }
  };
  auto require = [&](const std::optional<std::string>& v, const char* flag) {
    if (!v) {
      throw ParseError(std::string(flag) + " is required for " + to_string(c.command));
    }
    return rational(v, flag);
  };

  if (env_precision != nullptr && *env_precision != '\0') {
    const std::string text(env_precision);
    if (!krallm1::detail::is_integer_literal(text, false)) {
      throw ParseError("KRALLM1_PRECISION: not a positive integer: '" + text + "'");
    }
    c.precision = static_cast<unsigned>(std::stoul(text));
  }
  if (a.precision) {
    if (*a.precision < 0) throw ParseError("--precision must be positive");
    c.precision = static_cast<unsigned>(*a.precision);
  }
  if (c.precision < kMinDigits) {
    throw ParseError("precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  if (a.n_max) {
    if (*a.n_max < 0) throw ParseError("--n-max must be >= 0");
    c.n_max = *a.n_max;
  } else if (c.command == Command::verify_m1 || c.command == Command::verify_q) {
    c.n_max = 12;
  } else if (c.command == Command::moments || c.command == Command::gram) {
    c.n_max = 4;
  }
  if (a.s_max) {
    if (*a.s_max < 0) throw ParseError("--s-max must be >= 0");
    c.s_max = *a.s_max;
  }
  if (a.tol) {
    (void)parse_float(*a.tol);
    c.tol = *a.tol;
  }
  if (a.eps_list) c.eps_list = split_list(*a.eps_list);
  {
    PrecisionScope scope(c.precision);
    for (std::size_t i = 0; i < c.eps_list.size(); ++i) {
      const PrecisionFloat e = parse_float(c.eps_list[i]);
      if (e <= 0 || (i > 0 && e >= parse_float(c.eps_list[i - 1]))) {
        throw ParseError("--eps-list must be positive and strictly decreasing");
      }
    }
  }
  c.out = a.out;

  const bool table_command = c.command == Command::moments || c.command == Command::gram ||
                             c.command == Command::gen;
  c.format = table_command ? Format::csv : Format::json;
  if (a.format) {
    if (*a.format == "json") {
      c.format = Format::json;
    } else if (*a.format == "csv") {
      c.format = Format::csv;
    } else {
      throw ParseError("--format must be json or csv");
    }
  }

  if (a.family && *a.family != "m1" && *a.family != "q") {
    throw ParseError("--family must be m1 or q");
  }
  c.q_family = a.family && *a.family == "q";
  if (c.q_family && c.command != Command::gen) {
    throw ParseError("--family applies to gen only");
  }

  if (c.command == Command::verify_q || c.q_family) {
    QJacobiParams<Rational> qp;
    qp.q = require(a.q, "--q");
    qp.b = require(a.b, "--b");
    qp.M = require(a.M, "--M");
    qp.j = a.j.value_or(MinusOneParams::kJ);
    c.qside = qp;
  } else if (c.command == Command::matrix_verify && !a.beta && !a.M) {
    // auto-selected at run time
  } else {
    c.m1 = MinusOneParams{require(a.beta, "--beta"), require(a.M, "--M")};
  }
  return c;
}

namespace detail {

inline std::string matrix_csv(const char* kind, const std::vector<std::vector<Rational>>& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      os << kind << ',' << i << ',' << j << ',' << krallm1::to_string(g[i][j]) << '\n';
    }
  }
  return os.str();
}

inline std::string polys_csv(const std::vector<RationalPoly>& polys) {
  std::ostringstream os;
  os << "n,degree,coeff\n";
  for (std::size_t n = 0; n < polys.size(); ++n) {
    for (auto it = polys[n].terms().rbegin(); it != polys[n].terms().rend(); ++it) {
      os << n << ',' << it->first << ',' << krallm1::to_string(it->second) << '\n';
    }
  }
  return os.str();
}

inline nlohmann::ordered_json polys_json(const std::vector<RationalPoly>& polys) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n < polys.size(); ++n) {
    arr.push_back({{"n", n}, {"coeffs", to_json(polys[n])}});
  }
  return arr;
}

/// Error kinds that map to exit status 2.
inline bool is_degenerate(const std::string& kind) {
  return kind == "GeronimusDegenerate" || kind == "DegenerateParameters" ||
         kind == "NotPositiveDefinite" || kind == "IntegrabilityError";
}

inline int report_status(const VerificationReport& report) {
  if (const auto& e = report.error()) {
    return is_degenerate(e->kind) ? kExitDegenerate : kExitCheckFailed;
  }
  return report.all_passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace detail

struct RunResult {
  int status = kExitPass;
  std::string output;
  std::optional<std::string> error;  // one-line diagnostic for stderr
};

/// Runs one command and renders its output; nothing is written anywhere.
inline RunResult execute(const RunConfig& c) {
  RunResult result;
  auto render = [&](const VerificationReport& report) {
    result.output = c.format == Format::json ? report.to_json().dump(2) + "\n" : report.to_csv();
    result.status = detail::report_status(report);
    if (const auto& e = report.error()) result.error = e->message;
  };
  const std::string default_tol =
      c.command == Command::matrix_verify ? std::string("1e-40") : std::string("1e-2");

  try {
    switch (c.command) {
      case Command::verify_m1:
        render(verify_m1(*c.m1, c.n_max));
        break;
      case Command::verify_q:
        render(verify_q(*c.qside, c.n_max));
        break;
      case Command::limit_scan: {
        PrecisionScope scope(c.precision);
        const double rel_tol = parse_float(c.tol.value_or(default_tol)).convert_to<double>();
        render(limit_scan(*c.m1, c.n_max, c.s_max, c.eps_list, c.precision, rel_tol));
        break;
      }
      case Command::matrix_verify: {
        const MinusOneParams p = c.m1 ? *c.m1 : select_positive_point(2 * c.n_max + 3);
        render(matrix_verify(p, c.n_max, c.precision, c.tol.value_or(default_tol)));
        break;
      }
      case Command::moments: {
        const auto mu = moments(c.n_max, *c.m1);
        if (c.format == Format::csv) {
          result.output = to_csv(mu);
        } else {
          nlohmann::ordered_json j;
          j["params"] = to_json(*c.m1);
          nlohmann::ordered_json values = nlohmann::ordered_json::array();
          for (const auto& v : mu.values) values.push_back(krallm1::to_string(v));
          j["moments"] = values;
          result.output = j.dump(2) + "\n";
        }
        break;
      }
      case Command::gram: {
        const auto gram = gram_matrix(c.n_max, *c.m1);
        const auto dets = hankel_dets(c.n_max, *c.m1);
        if (c.format == Format::csv) {
          std::ostringstream os;
          os << "kind,i,j,value\n" << detail::matrix_csv("gram", gram);
          for (std::size_t m = 0; m < dets.size(); ++m) {
            os << "hankel," << m << ',' << m << ',' << krallm1::to_string(dets[m]) << '\n';
          }
          result.output = os.str();
        } else {
          nlohmann::ordered_json j;
          j["params"] = to_json(*c.m1);
          nlohmann::ordered_json rows = nlohmann::ordered_json::array();
          for (const auto& row : gram) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& v : row) r.push_back(krallm1::to_string(v));
            rows.push_back(r);
          }
          j["gram"] = rows;
          nlohmann::ordered_json h = nlohmann::ordered_json::array();
          for (const auto& d : dets) h.push_back(krallm1::to_string(d));
          j["hankel"] = h;
          j["positive_definite"] = is_positive_definite(dets);
          result.output = j.dump(2) + "\n";
        }
        break;
      }
      case Command::gen: {
        std::vector<RationalPoly> polys;
        nlohmann::ordered_json params;
        if (c.q_family) {
          for (int n = 0; n <= c.n_max; ++n) polys.push_back(geronimus(n, *c.qside));
          params = to_json(*c.qside);
        } else {
          polys = MinusOneFamily::build(*c.m1, c.n_max).polys();
          params = to_json(*c.m1);
        }
        if (c.format == Format::csv) {
          result.output = detail::polys_csv(polys);
        } else {
          nlohmann::ordered_json j;
          j["family"] = c.q_family ? "q" : "m1";
          j["params"] = params;
          j["polys"] = detail::polys_json(polys);
          result.output = j.dump(2) + "\n";
        }
        break;
      }
    }
  } catch (const Error& e) {
    result.status = detail::is_degenerate(e.kind()) ? kExitDegenerate : kExitCheckFailed;
    result.error = e.what();
    if (c.format == Format::json) {
      nlohmann::ordered_json j;
      j["command"] = to_string(c.command);
      j["status"] = "error";
      j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      result.output = j.dump(2) + "\n";
    } else {
      result.output = std::string("check,n,status,residual\nerror,,") + e.kind() + ",\"" +
                      e.what() + "\"\n";
    }
  }
  return result;
}

/// Executes and writes the output to --out or stdout; diagnostics go to err.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const RunResult r = execute(c);
  if (c.out) {
    std::ofstream file(*c.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *c.out << '\n';
      return kExitCheckFailed;
    }
    file << r.output;
  } else {
    out << r.output;
  }
  if (r.error) err << "error: " << *r.error << '\n';
  return r.status;
}

}  // namespace krallm1::cli
