#include "tiltbg/cli.hpp"

#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tiltbg/bounds.hpp"
#include "tiltbg/error.hpp"
#include "tiltbg/figures.hpp"
#include "tiltbg/geometry.hpp"
#include "tiltbg/json_io.hpp"
#include "tiltbg/tilt.hpp"

namespace tiltbg {

namespace {

using json_io::json;

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::string slurp(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Inline JSON, "@path", or "-" for stdin.
json load_json(const std::string& arg, Io& io) {
  std::string text;
  if (arg == "-") {
    text = slurp(io.in);
  } else if (!arg.empty() && arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw Error(ErrorCode::ParseError, "cannot read '" + arg.substr(1) + "'");
    text = slurp(f);
  } else {
    text = arg;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

SurfaceLattice load_lattice(const std::string& arg, Io& io) {
  if (arg == "quadric") return SurfaceLattice::quadric();
  if (arg.rfind("hypersurface:", 0) == 0) {
    return SurfaceLattice::hypersurface(static_cast<int>(Rational::parse(arg.substr(13)).numerator().get_si()));
  }
  return json_io::lattice_from_json(load_json(arg.front() == '@' || arg == "-" || arg.front() == '{' ? arg : "@" + arg, io));
}

BoundFunction load_bound(const std::string& arg, Io& io) {
  for (const char* name : {"theta", "gamma", "xi", "gamma_small"}) {
    if (arg == name) return bound_by_name(arg);
  }
  return json_io::bound_from_json(load_json(arg.front() == '@' || arg == "-" || arg.front() == '{' ? arg : "@" + arg, io));
}

int print_status(Io& io, json payload, bool ok) {
  payload["status"] = ok ? "ok" : "violated";
  io.out << payload.dump(2) << '\n';
  return ok ? kExitOk : kExitViolated;
}

Boundary parse_boundary(const std::string& s) {
  if (s == "parabola") return Boundary::Parabola;
  if (s == "theta") return Boundary::ThetaCurve;
  throw Error(ErrorCode::ParseError, "boundary must be 'parabola' or 'theta'");
}

json endpoints_json(const WallEndpoints& ep) {
  return json::array({json_io::to_json(ep.first), json_io::to_json(ep.second)});
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::DomainError, "cannot write '" + path + "'");
  f << content;
  if (!f) throw Error(ErrorCode::DomainError, "failed writing '" + path + "'");
}

// Evaluates fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned t = 0; t < workers; ++t) {
    tasks.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < n; i += workers) out[i] = fn(i);
    }));
  }
  for (auto& task : tasks) task.get();
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out};
  CLI::App app{"Exact tilt-stability calculator for P3 and hypersurfaces", "tiltbg"};
  app.require_subcommand(1);
  std::function<int()> action;

  // eval-bound
  std::string bound_name;
  std::string t_text;
  auto* eval_cmd = app.add_subcommand("eval-bound", "Evaluate theta, gamma, xi or gamma_small exactly");
  eval_cmd->add_option("name", bound_name, "theta | gamma | xi | gamma_small")->required();
  eval_cmd->add_option("t", t_text, "argument p/q")->required();
  eval_cmd->callback([&] {
    action = [&]() -> int {
      const Rational t = Rational::parse(t_text);
      Rational value;
      if (bound_name == "theta") {
        value = theta(t);
      } else if (bound_name == "gamma_small") {
        value = small_gamma(t);
      } else {
        value = bound_by_name(bound_name)(t);
      }
      out << value << '\n';
      return kExitOk;
    };
  });

  // check-bg
  std::string char_text;
  std::string form = "tilt";
  std::string beta_text = "0";
  std::string alpha_text;
  std::string lattice_arg;
  auto* bg_cmd = app.add_subcommand("check-bg", "Check a BG-type inequality for a Chern character");
  bg_cmd->add_option("--char", char_text, "character JSON (NumChern, or LatticeChern with --lattice)")->required();
  bg_cmd->add_option("--form", form, "classical | tilt | bg3")->check(CLI::IsMember({"classical", "tilt", "bg3"}));
  bg_cmd->add_option("--beta", beta_text, "beta for bg3");
  bg_cmd->add_option("--alpha", alpha_text, "alpha for bg3");
  bg_cmd->add_option("--lattice", lattice_arg, "surface lattice for the classical check");
  bg_cmd->callback([&] {
    action = [&]() -> int {
      const json input = load_json(char_text, io);
      json payload{{"form", form}};
      if (!lattice_arg.empty()) {
        if (form != "classical") throw Error(ErrorCode::DomainError, "--lattice only applies to the classical form");
        const SurfaceLattice lattice = load_lattice(lattice_arg, io);
        const LatticeChern v = json_io::lattice_chern_from_json(input);
        payload["delta"] = json_io::to_json(delta_surface(lattice, v));
        payload["delta_bar"] = json_io::to_json(delta_bar(to_num_chern(lattice, v)));
        return print_status(io, payload, bg_classical_check(lattice, v));
      }
      const NumChern v = json_io::num_chern_from_json(input);
      payload["delta_bar"] = json_io::to_json(delta_bar(v));
      if (form == "bg3") {
        if (alpha_text.empty()) throw Error(ErrorCode::DomainError, "bg3 needs --alpha");
        const TiltPoint point(Rational::parse(beta_text), Rational::parse(alpha_text));
        const Rational q = bg3_quadratic(v, point.beta(), point.alpha());
        payload["beta"] = json_io::to_json(point.beta());
        payload["alpha"] = json_io::to_json(point.alpha());
        payload["Q"] = json_io::to_json(q);
        return print_status(io, payload, q.sign() >= 0);
      }
      return print_status(io, payload, form == "tilt" ? bg_tilt_check(v) : bg_classical_check(v));
    };
  });

  // wall
  std::string v_text;
  std::string w_text;
  std::string boundary_text;
  std::string anchor_text = "0";
  auto* wall_cmd = app.add_subcommand("wall", "Numerical wall between two characters and its endpoints");
  wall_cmd->add_option("--v", v_text, "first character JSON")->required();
  wall_cmd->add_option("--w", w_text, "second character JSON")->required();
  wall_cmd->add_option("--boundary", boundary_text, "parabola | theta")->required();
  wall_cmd->add_option("--anchor", anchor_text, "beta selecting the component on the theta curve");
  wall_cmd->callback([&] {
    action = [&]() -> int {
      const NumChern v = json_io::num_chern_from_json(load_json(v_text, io));
      const NumChern w = json_io::num_chern_from_json(load_json(w_text, io));
      const Boundary boundary = parse_boundary(boundary_text);
      const auto wall = wall_between(v, w);
      if (!wall) return print_status(io, {{"result", "no-wall"}}, true);
      json payload{{"result", "wall"}, {"boundary", boundary_text}, {"wall", json_io::to_json(*wall)}};
      json components = json::array();
      for (const auto& comp : wall_components(*wall, boundary)) components.push_back(endpoints_json(comp));
      payload["components"] = components;
      if (const auto ep = wall_endpoints(*wall, boundary, Rational::parse(anchor_text))) {
        payload["endpoints"] = endpoints_json(*ep);
        payload["width"] = json_io::to_json(wall_width(*ep));
      } else {
        payload["endpoints"] = nullptr;
      }
      return print_status(io, payload, true);
    };
  });

  // derive-xi
  int xi_d = 0;
  std::string mu_text;
  int grid = 0;
  unsigned jobs = 1;
  auto* xi_cmd = app.add_subcommand("derive-xi", "Re-derive the hypersurface bound from the ch3 inequality");
  xi_cmd->add_option("--d", xi_d, "surface degree")->required();
  auto* mu_opt = xi_cmd->add_option("--mu", mu_text, "slope in [0, 1/2]");
  auto* grid_opt = xi_cmd->add_option("--grid", grid, "tabulate mu = j/(2k), j = 0..k");
  mu_opt->excludes(grid_opt);
  xi_cmd->add_option("--jobs", jobs, "worker threads for --grid");
  xi_cmd->callback([&] {
    action = [&]() -> int {
      if (xi_d < 1) throw Error(ErrorCode::DomainError, "--d must be at least 1");
      if (!mu_text.empty()) {
        out << derive_xi(xi_d, Rational::parse(mu_text)) << '\n';
        return kExitOk;
      }
      if (grid < 1) throw Error(ErrorCode::DomainError, "give --mu or --grid k with k >= 1");
      const auto n = static_cast<std::size_t>(grid) + 1;
      const auto derived = parallel_map<Rational>(n, jobs, [&](std::size_t j) {
        return derive_xi(xi_d, Rational(static_cast<long>(j), 2L * grid));
      });
      bool all_match = true;
      out << "mu,derived,xi,match\n";
      for (std::size_t j = 0; j < n; ++j) {
        const Rational mu(static_cast<long>(j), 2L * grid);
        const Rational expected = xi(mu);
        const bool match = derived[j] == expected;
        all_match = all_match && match;
        out << mu << ',' << derived[j] << ',' << expected << ',' << (match ? "true" : "false") << '\n';
      }
      return all_match ? kExitOk : kExitViolated;
    };
  });

  // figures
  int which = 1;
  std::optional<int> fig_d;
  std::string csv_path;
  std::string svg_path;
  int samples = 401;
  auto* fig_cmd = app.add_subcommand("figures", "Emit the bound-function figures as CSV and SVG");
  fig_cmd->add_option("--which", which, "1 (P3) or 2 (hypersurfaces)")->check(CLI::IsMember({1, 2}));
  fig_cmd->add_option("--d", fig_d, "also plot the lower curve t^2 - (d/2)t");
  fig_cmd->add_option("--csv", csv_path, "CSV output path");
  fig_cmd->add_option("--svg", svg_path, "SVG output path");
  fig_cmd->add_option("--samples", samples, "number of sample points over [-1, 1]");
  fig_cmd->callback([&] {
    action = [&]() -> int {
      const auto rows = sample_figure(which, samples, fig_d);
      if (csv_path.empty() && svg_path.empty()) {
        out << figure_csv(rows);
        return kExitOk;
      }
      json payload{{"which", which}, {"samples", samples}};
      if (!csv_path.empty()) {
        write_file(csv_path, figure_csv(rows));
        payload["csv"] = csv_path;
      }
      if (!svg_path.empty()) {
        write_file(svg_path, figure_svg(which, rows));
        payload["svg"] = svg_path;
      }
      return print_status(io, payload, true);
    };
  });

  // scan
  std::string scan_v;
  int rank_bound = 0;
  std::string beta_min_text;
  std::string beta_max_text;
  int scan_d = 0;
  std::string scan_boundary;
  unsigned scan_jobs = 1;
  auto* scan_cmd = app.add_subcommand("scan", "Enumerate candidate walls and report first-wall widths");
  scan_cmd->add_option("--v", scan_v, "character JSON on P3")->required();
  scan_cmd->add_option("--rank-bound", rank_bound, "|ch0| bound for destabilizers")->required();
  scan_cmd->add_option("--beta-min", beta_min_text, "left end of the open beta region");
  scan_cmd->add_option("--beta-max", beta_max_text, "right end of the open beta region");
  scan_cmd->add_option("--d", scan_d, "surface degree for the width bound")->required();
  scan_cmd->add_option("--boundary", scan_boundary, "parabola | theta, for wall endpoints")->required();
  scan_cmd->add_option("--jobs", scan_jobs, "worker threads");
  scan_cmd->callback([&] {
    action = [&]() -> int {
      const NumChern v = json_io::num_chern_from_json(load_json(scan_v, io));
      const Boundary boundary = parse_boundary(scan_boundary);
      if (rank_bound < 1) throw Error(ErrorCode::DomainError, "--rank-bound must be at least 1");
      if (scan_d < 1) throw Error(ErrorCode::DomainError, "--d must be at least 1");
      BetaInterval region;
      if (beta_min_text.empty() || beta_max_text.empty()) {
        region = default_scan_region(v, scan_d);
        if (!beta_min_text.empty()) region.lo = Rational::parse(beta_min_text);
        if (!beta_max_text.empty()) region.hi = Rational::parse(beta_max_text);
      } else {
        region = {Rational::parse(beta_min_text), Rational::parse(beta_max_text)};
      }
      const auto candidates = enumerate_candidate_walls(v, rank_bound, region, scan_jobs);
      json walls = json::array();
      int straddling = 0;
      int exceeding = 0;
      for (const auto& cand : candidates) {
        json entry{{"w", json_io::to_json(cand.w)},
                   {"wall", json_io::to_json(cand.wall)},
                   {"segment", endpoints_json(cand.segment)}};
        const auto ep = wall_endpoints(cand.wall, boundary);
        entry["endpoints"] = ep ? endpoints_json(*ep) : json(nullptr);
        const QuadSurd zero(0);
        const bool straddles = ep && ep->first.beta < zero && zero < ep->second.beta;
        entry["straddles"] = straddles;
        if (straddles) {
          ++straddling;
          const bool within = check_first_wall_bound(*ep, scan_d);
          if (!within) ++exceeding;
          entry["width"] = json_io::to_json(wall_width(*ep));
          entry["width_within_d"] = within;
        }
        walls.push_back(std::move(entry));
      }
      json payload{{"v", json_io::to_json(v)},
                   {"rank_bound", rank_bound},
                   {"d", scan_d},
                   {"region", json::array({json_io::to_json(region.lo), json_io::to_json(region.hi)})},
                   {"boundary", scan_boundary},
                   {"walls", walls},
                   {"straddling", straddling},
                   {"width_exceeds_d", exceeding}};
      return print_status(io, payload, exceeding == 0);
    };
  });

  // pushforward
  int pf_d = 0;
  std::string r_text;
  std::string a_text;
  std::string b_text;
  auto* pf_cmd = app.add_subcommand("pushforward", "ch of the pushforward of (r, a, b) from a degree-d surface");
  pf_cmd->add_option("--d", pf_d, "surface degree")->required();
  pf_cmd->add_option("--r", r_text, "ch0")->required();
  pf_cmd->add_option("--a", a_text, "H.ch1/d")->required();
  pf_cmd->add_option("--b", b_text, "ch2")->required();
  pf_cmd->callback([&] {
    action = [&]() -> int {
      const NumChern v = grr_pushforward(pf_d, Rational::parse(r_text), Rational::parse(a_text), Rational::parse(b_text));
      out << json_io::to_json(v).dump(2) << '\n';
      return kExitOk;
    };
  });

  // alpha-mu
  int am_d = 0;
  std::string am_mu;
  auto* am_cmd = app.add_subcommand("alpha-mu", "alpha_mu = -mu^2 + (2d-1)mu/4");
  am_cmd->add_option("--d", am_d, "surface degree")->required();
  am_cmd->add_option("--mu", am_mu, "slope in [0, 1/2]")->required();
  am_cmd->callback([&] {
    action = [&]() -> int {
      out << alpha_mu(am_d, Rational::parse(am_mu)) << '\n';
      return kExitOk;
    };
  });

  // chi
  std::string chi_lattice;
  std::string chi_v;
  std::string chi_w;
  auto* chi_cmd = app.add_subcommand("chi", "Euler pairing chi(v, w) on a surface lattice");
  chi_cmd->add_option("--lattice", chi_lattice, "lattice file, 'quadric' or 'hypersurface:d'")->required();
  chi_cmd->add_option("--v", chi_v, "LatticeChern JSON")->required();
  chi_cmd->add_option("--w", chi_w, "LatticeChern JSON")->required();
  chi_cmd->callback([&] {
    action = [&]() -> int {
      const SurfaceLattice lattice = load_lattice(chi_lattice, io);
      const LatticeChern v = json_io::lattice_chern_from_json(load_json(chi_v, io));
      const LatticeChern w = json_io::lattice_chern_from_json(load_json(chi_w, io));
      out << euler_pairing(lattice, v, w) << '\n';
      return kExitOk;
    };
  });

  // star-shaped
  std::string star_f;
  std::string star_d;
  auto* star_cmd = app.add_subcommand("star-shaped", "Decide star-shapedness along beta = d exactly");
  star_cmd->add_option("--f", star_f, "theta | xi | gamma | gamma_small | bound JSON file")->required();
  star_cmd->add_option("--d", star_d, "apex abscissa d >= 0")->required();
  star_cmd->callback([&] {
    action = [&]() -> int {
      const BoundFunction f = load_bound(star_f, io);
      const auto cert = star_shape_certificate(f, Rational::parse(star_d));
      json checks = json::array();
      for (const auto& c : cert.checks) checks.push_back({{"what", c.what}, {"symbolic", c.symbolic}, {"passed", c.passed}});
      return print_status(io, {{"function", f.name}, {"d", star_d}, {"star_shaped", cert.holds}, {"checks", checks}},
                          cert.holds);
    };
  });

  // check-restriction-hypotheses
  std::string rh_f;
  int rh_d = 0;
  auto* rh_cmd = app.add_subcommand("check-restriction-hypotheses",
                                    "Star-shape at 0 and d, boundary values, and the quadratic chain");
  rh_cmd->add_option("--f", rh_f, "theta | xi | gamma | gamma_small | bound JSON file")->required();
  rh_cmd->add_option("--d", rh_d, "hypersurface degree")->required();
  rh_cmd->callback([&] {
    action = [&]() -> int {
      const BoundFunction f = load_bound(rh_f, io);
      const auto h = check_restriction_hypotheses(f, rh_d);
      return print_status(io,
                          {{"function", f.name},
                           {"d", rh_d},
                           {"star_shaped_0", h.star_at_zero},
                           {"star_shaped_d", h.star_at_d},
                           {"boundary_conditions", h.boundary},
                           {"chain", h.chain}},
                          h.all());
    };
  });

  std::vector<std::string> argv_store{"tiltbg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace tiltbg
