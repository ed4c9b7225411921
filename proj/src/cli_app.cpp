#include "sphcode/cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphcode/config.hpp"
#include "sphcode/delsarte.hpp"
#include "sphcode/geom_bounds.hpp"
#include "sphcode/graphs.hpp"
#include "sphcode/parallel.hpp"
#include "sphcode/refdata.hpp"
#include "sphcode/rigidity.hpp"
#include "sphcode/twodist.hpp"

namespace sphcode {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += "\"\"";
    else q += ch;
  }
  q += "\"";
  return q;
}

double elapsed_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<std::string> lines;
  int exit_code = 0;
};

int emit(const Report& r, bool json_mode, std::ostream& out, double elapsed) {
  if (json_mode) {
    const json doc{{"command", r.command},
                   {"elapsed", elapsed},
                   {"inputs", r.inputs},
                   {"outputs", r.outputs},
                   {"version", kVersion}};
    out << doc.dump(2) << "\n";
  } else {
    for (const std::string& line : r.lines) out << line << "\n";
  }
  return r.exit_code;
}

double angle_radians(double deg, double rad) {
  const bool has_deg = !std::isnan(deg);
  const bool has_rad = !std::isnan(rad);
  if (has_deg == has_rad)
    throw UsageError("pass exactly one of --angle-deg / --angle-rad");
  return has_deg ? deg * std::numbers::pi / 180.0 : rad;
}

SphericalConfig load_config(const std::string& name, const std::string& file) {
  if (name.empty() == file.empty())
    throw UsageError("pass exactly one of --name / --file");
  if (!name.empty()) return named_config(name);
  json j;
  if (file == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open '" + file + "'");
    in >> j;
  }
  return config_from_json(j);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (t + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  return z ^ (z >> 31);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certified bounds for spherical codes and kissing numbers", "sphcode"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  int dim = 0, degree = 0, grid = kDefaultLpGrid;
  double angle_deg = NAN, angle_rad = NAN, tol = 1e-9;
  long long count_n = 0;
  int points_n = 0, restarts = 20, iters = 150, jobs = 1;
  unsigned long long seed = 0;
  std::string name, file, out_path, graph_path, table_format = "text";

  CLI::App* bound = app.add_subcommand("bound", "upper bounds on code sizes");
  bound->require_subcommand(1);

  CLI::App* bound_lp = bound->add_subcommand(
      "lp", "linear-programming bound on A(dim, angle)");
  bound_lp->add_option("--dim", dim, "ambient dimension")->required()->check(CLI::Range(2, 64));
  bound_lp->add_option("--angle-deg", angle_deg, "angle in degrees");
  bound_lp->add_option("--angle-rad", angle_rad, "angle in radians");
  bound_lp->add_option("--degree", degree, "polynomial degree")->required()->check(CLI::Range(1, 60));
  bound_lp->add_option("--grid", grid, "initial grid size");
  bound_lp->add_option("--out", out_path, "write the certificate JSON here");
  add_format(bound_lp);

  CLI::App* bound_ft = bound->add_subcommand(
      "ft", "triangle-area bound on A(3, angle)");
  bound_ft->add_option("--angle-deg", angle_deg, "angle in degrees");
  bound_ft->add_option("--angle-rad", angle_rad, "angle in radians");
  add_format(bound_ft);

  CLI::App* bound_harborth = bound->add_subcommand(
      "harborth", "max contacts of n unit circles in the plane");
  bound_harborth->add_option("--n", count_n, "number of circles")->required();
  add_format(bound_harborth);

  CLI::App* bound_contacts = bound->add_subcommand(
      "contacts", "trivial contact bound k(dim) * n / 2");
  bound_contacts->add_option("--n", count_n, "number of spheres")->required();
  bound_contacts->add_option("--dim", dim, "dimension")->required();
  add_format(bound_contacts);

  CLI::App* config = app.add_subcommand("config", "spherical point configurations");
  config->require_subcommand(1);
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--name", name, "named configuration");
    cmd->add_option("--file", file, "config JSON path, '-' for stdin");
  };

  CLI::App* config_show = config->add_subcommand("show", "print a configuration");
  add_source(config_show);
  add_format(config_show);

  CLI::App* config_verify = config->add_subcommand(
      "verify", "check the minimum-separation property");
  add_source(config_verify);
  config_verify->add_option("--angle-deg", angle_deg, "angle in degrees");
  config_verify->add_option("--angle-rad", angle_rad, "angle in radians");
  add_format(config_verify);

  CLI::App* config_rigidity = config->add_subcommand(
      "rigidity", "single-vertex rigidity of the contact graph");
  add_source(config_rigidity);
  config_rigidity->add_option("--tol", tol, "contact tolerance (rad)");
  add_format(config_rigidity);

  CLI::App* config_contacts = config->add_subcommand(
      "contacts", "edges at the minimum distance");
  add_source(config_contacts);
  config_contacts->add_option("--tol", tol, "contact tolerance (rad)");
  add_format(config_contacts);

  CLI::App* tammes = app.add_subcommand(
      "tammes", "maximize the minimum angle of n points on S^2");
  tammes->add_option("--n", points_n, "number of points")->required()->check(CLI::Range(2, 64));
  tammes->add_option("--restarts", restarts, "random restarts");
  tammes->add_option("--seed", seed, "random seed");
  tammes->add_option("--iters", iters, "accepted steps per smoothing stage");
  tammes->add_option("--jobs", jobs, "parallel restarts");
  add_format(tammes);

  CLI::App* twodist = app.add_subcommand("twodist", "two-distance set combinatorics");
  twodist->require_subcommand(1);

  CLI::App* twodist_count = twodist->add_subcommand(
      "count", "graph classes, partitions and the census size");
  twodist_count->add_option("--n", points_n, "vertex count")->required()->check(CLI::Range(1, 8));
  add_format(twodist_count);

  CLI::App* twodist_dim2 = twodist->add_subcommand(
      "dim2", "minimum embedding dimension of a graph");
  twodist_dim2->add_option("--graph", graph_path, "graph file ('n m' then edges)")->required();
  add_format(twodist_dim2);

  CLI::App* twodist_census = twodist->add_subcommand(
      "census", "dim2 census over all graph classes");
  twodist_census->add_option("--n", points_n, "vertex count")->required()->check(CLI::Range(1, 8));
  twodist_census->add_option("--out", out_path, "output CSV path")->required();
  twodist_census->add_option("--jobs", jobs, "parallel rows");
  add_format(twodist_census);

  CLI::App* tables = app.add_subcommand("tables", "cited reference data");
  tables->require_subcommand(1);
  CLI::App* tables_reference = tables->add_subcommand("reference", "cited constants");
  tables_reference->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  CLI::App* tables_kissing = tables->add_subcommand("kissing", "known kissing numbers");
  tables_kissing->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const bool json_mode = (format == "json");
  const auto t0 = Clock::now();

  try {
    if (bound_lp->parsed()) {
      const double phi = angle_radians(angle_deg, angle_rad);
      const LPCertificate cert = delsarte_bound(dim, phi, degree, grid);
      Report r;
      r.command = "bound lp";
      r.inputs = {{"dim", dim}, {"angle_rad", phi}, {"degree", degree}, {"grid", grid}};
      r.outputs = {{"bound", cert.bound},
                   {"verified", cert.verified},
                   {"max_violation", cert.max_violation},
                   {"certificate", certificate_json(cert)}};
      r.lines.push_back("bound " + fmt(cert.bound));
      r.lines.push_back(std::string("verified ") + (cert.verified ? "true" : "false"));
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        f << certificate_json(cert).dump(2) << "\n";
        r.outputs["certificate_path"] = out_path;
        r.lines.push_back("certificate " + out_path);
      }
      r.exit_code = cert.verified ? 0 : 2;
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (bound_ft->parsed()) {
      const double phi = angle_radians(angle_deg, angle_rad);
      const double value = fejes_toth_bound(phi);
      Report r;
      r.command = "bound ft";
      r.inputs = {{"angle_rad", phi}};
      r.outputs = {{"bound", value}, {"floor", std::floor(value)}};
      r.lines.push_back("bound " + fmt(value));
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (bound_harborth->parsed()) {
      const long long value = harborth(count_n);
      Report r;
      r.command = "bound harborth";
      r.inputs = {{"n", count_n}};
      r.outputs = {{"contacts", value}};
      r.lines.push_back("contacts " + std::to_string(value));
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (bound_contacts->parsed()) {
      const double value = trivial_contact_bound(count_n, dim);
      Report r;
      r.command = "bound contacts";
      r.inputs = {{"n", count_n}, {"dim", dim}};
      r.outputs = {{"bound", value}};
      r.lines.push_back("bound " + fmt(value));
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (config_show->parsed()) {
      const SphericalConfig cfg = load_config(name, file);
      Report r;
      r.command = "config show";
      r.inputs = {{"name", name}, {"file", file}};
      r.outputs = {{"config", config_json(cfg)},
                   {"label", cfg.label},
                   {"points", cfg.size()},
                   {"psi", cfg.size() >= 2 ? psi(cfg) : 0.0}};
      r.lines.push_back("label " + (cfg.label.empty() ? std::string("(none)") : cfg.label));
      r.lines.push_back("dim " + std::to_string(cfg.dim));
      r.lines.push_back("points " + std::to_string(cfg.size()));
      if (cfg.size() >= 2) r.lines.push_back("psi " + fmt(psi(cfg)));
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (config_verify->parsed()) {
      const SphericalConfig cfg = load_config(name, file);
      const double phi = angle_radians(angle_deg, angle_rad);
      const bool ok = verify_code(cfg, phi);
      Report r;
      r.command = "config verify";
      r.inputs = {{"name", name}, {"file", file}, {"angle_rad", phi}};
      r.outputs = {{"verified", ok},
                   {"points", cfg.size()},
                   {"psi", cfg.size() >= 2 ? psi(cfg) : 0.0}};
      r.lines.push_back(std::string(ok ? "true" : "false") + ", |X|=" +
                        std::to_string(cfg.size()));
      r.exit_code = ok ? 0 : 2;
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (config_rigidity->parsed()) {
      const SphericalConfig cfg = load_config(name, file);
      const RigidityReport report = is_irreducible(cfg, tol);
      Report r;
      r.command = "config rigidity";
      r.inputs = {{"name", name}, {"file", file}, {"tol", tol}};
      r.outputs = {{"irreducible", report.irreducible}};
      if (report.irreducible) {
        r.lines.push_back("irreducible");
      } else {
        r.outputs["movable_vertex"] = *report.movable_vertex;
        r.outputs["improving_direction"] = *report.improving_direction;
        r.outputs["directional_gain"] = report.directional_gain;
        std::string dir = "[";
        for (std::size_t k = 0; k < report.improving_direction->size(); ++k) {
          if (k) dir += ", ";
          dir += fmt((*report.improving_direction)[k]);
        }
        dir += "]";
        r.lines.push_back("reducible, vertex " + std::to_string(*report.movable_vertex) +
                          ", direction " + dir);
      }
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (config_contacts->parsed()) {
      const SphericalConfig cfg = load_config(name, file);
      const ContactGraph cg = contact_graph(cfg, tol);
      Report r;
      r.command = "config contacts";
      r.inputs = {{"name", name}, {"file", file}, {"tol", tol}};
      json edges = json::array();
      for (const auto& [u, v] : cg.edges) edges.push_back({u, v});
      r.outputs = {{"psi", cg.psi}, {"edge_count", cg.edges.size()}, {"edges", edges}};
      r.lines.push_back("psi " + fmt(cg.psi));
      r.lines.push_back("edges " + std::to_string(cg.edges.size()));
      for (const auto& [u, v] : cg.edges)
        r.lines.push_back(std::to_string(u) + " " + std::to_string(v));
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (tammes->parsed()) {
      double best_psi = -1.0;
      bool supported = (points_n == 3 || points_n == 4 || points_n == 6 || points_n == 12);
      bool match = false;
      if (supported) {
        const auto [ps, ok] = tammes_check(points_n, restarts, seed, jobs);
        best_psi = ps;
        match = ok;
      } else {
        std::vector<double> results(std::max(restarts, 1), 0.0);
        parallel_for(jobs, std::max(restarts, 1), [&](int t) {
          const SphericalConfig start = random_config(
              3, points_n, trial_seed(seed, static_cast<std::uint64_t>(t)));
          results[t] = psi(maximize_min_angle(start, 1, seed, iters));
        });
        best_psi = *std::max_element(results.begin(), results.end());
      }
      Report r;
      r.command = "tammes";
      r.inputs = {{"n", points_n}, {"restarts", restarts}, {"seed", seed}, {"jobs", jobs}};
      r.outputs = {{"psi_rad", best_psi},
                   {"psi_deg", best_psi * 180.0 / std::numbers::pi}};
      r.lines.push_back("psi_deg " + fmt(best_psi * 180.0 / std::numbers::pi));
      r.lines.push_back("psi_rad " + fmt(best_psi));
      if (supported) {
        const double target = tammes_angle(points_n);
        r.outputs["target_rad"] = target;
        r.outputs["match"] = match;
        r.lines.push_back(std::string("match ") + (match ? "true" : "false") +
                          " (target_deg " + fmt(target * 180.0 / std::numbers::pi) + ")");
      }
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (twodist_count->parsed()) {
      const long long gamma = count_graphs(static_cast<int>(points_n));
      const unsigned long long p = partitions(static_cast<int>(points_n));
      const long long s = sigma(static_cast<int>(points_n));
      Report r;
      r.command = "twodist count";
      r.inputs = {{"n", points_n}};
      r.outputs = {{"gamma", gamma}, {"p", p}, {"sigma", s}};
      r.lines.push_back("Gamma=" + std::to_string(gamma) + " p=" + std::to_string(p) +
                        " Sigma=" + std::to_string(s));
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (twodist_dim2->parsed()) {
      std::ifstream in(graph_path);
      if (!in) throw UsageError("cannot open '" + graph_path + "'");
      const SimpleGraph g = graph_from_text(in);
      const Dim2Result res = dim2(g);
      Report r;
      r.command = "twodist dim2";
      r.inputs = {{"graph", graph_path}, {"n", g.n}, {"edges", g.edge_count()}};
      r.outputs = {{"dim2", res.dim2}, {"ratio_c", res.ratio_c}, {"witness", res.witness}};
      r.lines.push_back("dim2=" + std::to_string(res.dim2) + " c=" + fmt_g(res.ratio_c));
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (twodist_census->parsed()) {
      const std::vector<std::uint64_t> forms = enumerate_graphs(static_cast<int>(points_n));
      std::vector<std::string> rows(forms.size());
      parallel_for(jobs, static_cast<int>(forms.size()), [&](int i) {
        const SimpleGraph g = SimpleGraph::unpack(static_cast<int>(points_n), forms[i]);
        const Dim2Result res = dim2(g);
        char hex[32];
        std::snprintf(hex, sizeof(hex), "%llx", static_cast<unsigned long long>(forms[i]));
        rows[i] = std::string(hex) + "," + std::to_string(g.n) + "," +
                  std::to_string(g.edge_count()) + "," + std::to_string(res.dim2) +
                  "," + fmt_g(res.ratio_c);
      });
      std::ofstream f(out_path);
      if (!f) throw UsageError("cannot write '" + out_path + "'");
      f << "canonical_form_hex,n,edges,dim2,ratio_c\n";
      for (const std::string& row : rows) f << row << "\n";
      Report r;
      r.command = "twodist census";
      r.inputs = {{"n", points_n}, {"out", out_path}, {"jobs", jobs}};
      r.outputs = {{"rows", rows.size()}, {"path", out_path}};
      r.lines.push_back("rows " + std::to_string(rows.size()));
      r.lines.push_back("wrote " + out_path);
      return emit(r, json_mode, out, elapsed_since(t0));
    }

    if (tables_reference->parsed()) {
      if (table_format == "json") {
        json arr = json::array();
        for (const ReferenceEntry& e : reference_table())
          arr.push_back({{"key", e.key},
                         {"value", e.value},
                         {"status", to_string(e.status)},
                         {"citation", e.citation}});
        Report r;
        r.command = "tables reference";
        r.outputs = {{"entries", arr}};
        return emit(r, true, out, elapsed_since(t0));
      }
      out << "key,value,status,citation\n";
      for (const ReferenceEntry& e : reference_table())
        out << csv_field(e.key) << "," << fmt_g(e.value) << ","
            << to_string(e.status) << "," << csv_field(e.citation) << "\n";
      return 0;
    }

    if (tables_kissing->parsed()) {
      if (table_format == "json") {
        json arr = json::array();
        for (const auto& [d, k] : kissing_numbers())
          arr.push_back({{"dim", d}, {"kissing", k}});
        Report r;
        r.command = "tables kissing";
        r.outputs = {{"entries", arr}};
        return emit(r, true, out, elapsed_since(t0));
      }
      out << "dim,kissing\n";
      for (const auto& [d, k] : kissing_numbers())
        out << d << "," << k << "\n";
      return 0;
    }
  } catch (const InfeasibleDegree& e) {
    err << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no command\n";
  return 1;
}

}  // namespace sphcode
