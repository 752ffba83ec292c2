#include "cyclicpic/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "cyclicpic/binary_forms.hpp"
#include "cyclicpic/elimination.hpp"
#include "cyclicpic/error.hpp"
#include "cyclicpic/picard.hpp"

namespace cyclicpic {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(to_int64(t));
  return Json{{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

// Resolves --g / --d into validated parameters.
CoverParams resolve(int r, const std::optional<int>& g, const std::optional<int>& d, int n) {
  if (!g && !d) throw UsageError("one of --g or --d is required");
  if (g) {
    CoverParams p = make_params(r, *g, n);
    if (d && *d != p.d) {
      throw UsageError("--g " + std::to_string(*g) + " gives d = " + std::to_string(p.d) +
                       ", not " + std::to_string(*d));
    }
    return p;
  }
  return params_from_degree(r, *d, n);
}

struct Options {
  bool json = false;
  int r = 2;
  std::optional<int> g;
  std::optional<int> d;
  int n = 0;
  std::optional<int> verify_n;
  int trials = 20;
  std::uint64_t seed = 0;
  std::string coeffs;
  std::optional<int> degree;
};

int cmd_picgroup(const Options& o, std::ostream& out) {
  const CoverParams p = resolve(o.r, o.g, o.d, o.n);
  const PicardResult res = picard_group(p);
  if (o.json) {
    Json j{{"r", p.r}, {"g", p.g}, {"n", p.n}, {"d", p.d}};
    Json group = group_json(res.group);
    j["free_rank"] = group["free_rank"];
    j["torsion"] = group["torsion"];
    j["far"] = group_json(res.far_group);
    j["free_basis"] = res.free_basis;
    j["free_basis_canonical"] = res.free_basis_canonical;
    j["torsion_origin"] = to_string(res.torsion_origin);
    out << j.dump() << '\n';
    return 0;
  }
  out << "Pic(r=" << p.r << ", g=" << p.g << ", n=" << p.n << ", d=" << p.d
      << ") = " << to_string(res.group) << '\n';
  out << "far locus: " << to_string(res.far_group) << '\n';
  out << "free basis:";
  for (const auto& b : res.free_basis) out << ' ' << b;
  if (res.free_basis.empty()) out << " (none)";
  if (!res.free_basis_canonical && !res.free_basis.empty()) out << " (one possible choice)";
  out << '\n';
  out << "torsion origin: " << to_string(res.torsion_origin) << '\n';
  return 0;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const CoverParams p = resolve(o.r, o.g, o.d, o.n);
  const EliminationData data = build_elimination(p.r, p.d, p.n);
  const int top = p.n - 3;
  if (o.json) {
    Json phi = Json::array();
    Json lambda = Json::array();
    Json psi = Json::array();
    for (int i = 0; i <= top; ++i) {
      phi.push_back(to_string(data.phi_rational(i)));
      lambda.push_back(to_string(data.lambda[static_cast<std::size_t>(i)]));
      psi.push_back(to_string(data.psi_rational(i)));
    }
    out << Json{{"r", p.r}, {"g", p.g}, {"n", p.n}, {"d", p.d}, {"phi", phi}, {"lambda", lambda}, {"psi", psi}}
               .dump()
        << '\n';
    return 0;
  }
  for (int i = top; i >= 0; --i) out << "phi[" << i << "]=" << to_string(data.phi_rational(i)) << '\n';
  for (int i = top; i >= 0; --i) {
    out << "lambda[" << i << "]=" << to_string(data.lambda[static_cast<std::size_t>(i)]) << '\n';
  }
  for (int i = top; i >= 0; --i) out << "psi[" << i << "]=" << to_string(data.psi_rational(i)) << '\n';
  return 0;
}

int cmd_disc(const Options& o, std::ostream& out) {
  if (o.coeffs.empty() == !o.degree) throw UsageError("give exactly one of --coeffs or --degree");
  if (o.degree) {
    const MultiPoly disc = symbolic_discriminant(*o.degree);
    if (o.json) {
      out << Json{{"degree", *o.degree}, {"discriminant", to_string(disc)}}.dump() << '\n';
    } else {
      out << to_string(disc) << '\n';
    }
    return 0;
  }
  const NumericForm f = parse_form(o.coeffs);
  const Rational disc = discriminant(f);
  if (o.json) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
    out << Json{{"degree", f.degree()}, {"coeffs", coeffs}, {"discriminant", to_string(disc)}}.dump() << '\n';
  } else {
    out << to_string(disc) << '\n';
  }
  return 0;
}

int cmd_relations(const Options& o, std::ostream& out) {
  if (o.g) make_params(o.r, *o.g, o.n);
  const IntMatrix m = divisor_relation_matrix(o.r, o.n);
  const auto indices = divisor_indices(o.r, o.n);
  const AbelianGroup quotient = quotient_of_free(m.cols(), m);
  const auto rk = rank(m);
  std::vector<std::string> columns;
  for (const auto& idx : indices) {
    columns.push_back(divisor_label(o.r, idx));
  }
  std::vector<std::string> row_labels;
  for (int i = 2; i <= o.n; ++i) {
    for (int j = i + 1; j <= o.n; ++j) row_labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (o.json) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
      rows.push_back(row);
    }
    out << Json{{"r", o.r}, {"n", o.n}, {"rows", m.rows()}, {"cols", m.cols()}, {"rank", rk},
                {"quotient", group_json(quotient)}, {"columns", columns}, {"row_pairs", row_labels},
                {"matrix", rows}}
               .dump()
        << '\n';
    return 0;
  }
  out << "relation matrix r=" << o.r << " n=" << o.n << ": " << m.rows() << " x " << m.cols()
      << ", rank " << rk << '\n';
  out << "quotient: " << to_string(quotient) << '\n';
  out << "columns:";
  for (const auto& c : columns) out << ' ' << c;
  out << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << row_labels[static_cast<std::size_t>(i)] << ':';
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << ' ' << m(i, j).get_str();
    out << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& target, const Options& o, std::ostream& out) {
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  const int d = o.g ? resolve(o.r, o.g, o.d, 0).d : *o.d;
  if (o.r < 2 || d < 1) throw Error(ErrorKind::InvalidParams, "need r >= 2 and d >= 1");
  const int full_rd = o.r * d;
  std::vector<int> ns;
  if (o.verify_n) {
    if (*o.verify_n < 3 || *o.verify_n > full_rd + 1) {
      throw Error(ErrorKind::OutOfRange, "--n must lie in 3.." + std::to_string(full_rd + 1));
    }
    ns.push_back(*o.verify_n);
  } else {
    for (int n = 3; n <= full_rd + 1; ++n) ns.push_back(n);
  }

  std::vector<Report> reports;
  const bool all = target == "all";
  if (all || target == "elimination") {
    for (int n : ns) reports.push_back(verify_elimination_properties(build_elimination(o.r, d, n), o.trials, o.seed));
  }
  if (all || target == "discriminant") {
    reports.push_back(verify_discriminant_properties(full_rd, o.trials, o.seed));
    for (int n : ns) {
      reports.push_back(verify_delta_weight(build_elimination(o.r, d, n), std::max(1, o.trials / 2), 5, o.seed));
    }
  }
  if (all || target == "lattice") reports.push_back(verify_lattice_properties(o.r, d, o.trials, o.seed));

  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& rep : reports) {
    for (const auto& c : rep.checks) {
      ++total;
      if (!c.passed) ++failed;
    }
  }
  std::string header = "verify " + target + " r=" + std::to_string(o.r) + " d=" + std::to_string(d) +
                       " n=" + (o.verify_n ? std::to_string(*o.verify_n) : "3.." + std::to_string(full_rd + 1)) +
                       " trials=" + std::to_string(o.trials) + " seed=" + std::to_string(o.seed);
  if (o.json) {
    Json reps = Json::array();
    for (const auto& rep : reports) {
      Json checks = Json::array();
      for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      reps.push_back(Json{{"name", rep.header}, {"checks", checks}});
    }
    out << Json{{"verify", target}, {"r", o.r}, {"d", d}, {"seed", o.seed}, {"trials", o.trials},
                {"reports", reps}, {"passed", failed == 0}}
               .dump()
        << '\n';
  } else {
    out << header << '\n';
    for (const auto& rep : reports) {
      out << "-- " << rep.header << '\n';
      print_checks(out, rep);
    }
    if (failed == 0) {
      out << "ALL CHECKS PASSED\n";
    } else {
      out << "CHECKS FAILED: " << failed << " of " << total << '\n';
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard groups of moduli stacks of pointed cyclic covers of the projective line",
               "cyclicpic"};
  app.require_subcommand(1);
  Options o;

  auto* picgroup = app.add_subcommand("picgroup", "Picard group for given r, g (or d) and n");
  auto* phi = app.add_subcommand("phi", "Rational functions phi, lambda, psi of the elimination");
  auto* disc = app.add_subcommand("disc", "Discriminant of a binary form");
  auto* relations = app.add_subcommand("relations", "Divisor relation matrix for r and n");
  auto* verify = app.add_subcommand("verify", "Run property checks");

  for (auto* sub : {picgroup, phi}) {
    sub->add_option("--r", o.r, "Cover degree r >= 2")->required();
    sub->add_option("--g", o.g, "Genus");
    sub->add_option("--d", o.d, "Branch degree");
    sub->add_option("--n", o.n, "Number of marked points")->required();
  }
  relations->add_option("--r", o.r, "Cover degree r >= 2")->required();
  relations->add_option("--n", o.n, "Number of marked points, at least 2")->required();
  relations->add_option("--g", o.g, "Genus, checked for consistency");
  disc->add_option("--coeffs", o.coeffs, "Comma-separated coefficients a_0,...,a_m (p/q allowed)");
  disc->add_option("--degree", o.degree, "Print the generic discriminant of this degree (<= 8)");

  verify->require_subcommand(1);
  verify->add_option("--r", o.r, "Cover degree (default 2)");
  verify->add_option("--d", o.d, "Branch degree (default 3)");
  verify->add_option("--g", o.g, "Genus, instead of --d");
  verify->add_option("--n", o.verify_n, "Number of marked points (default: every n in 3..rd+1)");
  verify->add_option("--trials", o.trials, "Random trials per check (default 20)");
  verify->add_option("--seed", o.seed, "Seed (default 0)");
  std::string target;
  for (const char* name : {"elimination", "discriminant", "lattice", "all"}) {
    verify->add_subcommand(name, std::string("Checks: ") + name)->fallthrough()->callback([&target, name] {
      target = name;
    });
  }
  for (auto* sub : {picgroup, phi, disc, relations, verify}) sub->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (picgroup->parsed()) return cmd_picgroup(o, out);
    if (phi->parsed()) return cmd_phi(o, out);
    if (disc->parsed()) return cmd_disc(o, out);
    if (relations->parsed()) return cmd_relations(o, out);
    if (!o.d && !o.g) o.d = 3;
    return cmd_verify(target, o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (o.json) {
      out << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cyclicpic
