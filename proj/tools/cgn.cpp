// cgn: command-line front end for generalized numbers, internal sets,
// internal functions, saturation witnesses and mollifiers.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "colombeau/error.hpp"
#include "colombeau/ifuncs.hpp"
#include "colombeau/isets.hpp"
#include "colombeau/mollifier.hpp"
#include "colombeau/parse.hpp"
#include "colombeau/saturation.hpp"

using namespace colombeau;

namespace {

/// Human-readable body plus the `RESULT:` trailer. Exit 0 iff the verdict (if
/// any) holds.
struct Report {
  std::ostringstream body;
  std::vector<std::string> trailer;
  std::optional<bool> verdict;

  void add(const std::string& key, const std::string& value) { trailer.push_back(key + "=" + value); }
  void flag(const std::string& token) { trailer.push_back(token); }
};

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

/// Drops blanks so a net or set fits in one trailer token.
std::string compact(std::string s) {
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  return s;
}

/// Reads `arg` as a file when one exists, else treats it as literal text.
std::string load(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::io, "cannot read " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// First non-comment line of a single-item input.
std::string single(const std::string& arg) {
  std::istringstream in(load(arg));
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!compact(line).empty()) return line;
  }
  return {};
}

SetFamily read_set(const std::string& arg) { return parse_set(single(arg)); }
GenNumber read_net(const std::string& arg) { return parse_net(single(arg)); }

/// NET or (NET,...,NET), reusing the point grammar of sets.
VecNet read_point(const std::string& arg) {
  const auto fam = parse_set("points(" + single(arg) + ")");
  return std::get<Points>(fam.shapes().at(0)).pts.at(0);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  return out;
}

/// k, eps, sign, logmag (one sign/logmag pair per component).
void write_samples(const VecNet& u, const Grid& grid, const std::string& path) {
  auto out = open_out(path);
  out << "k,eps";
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const std::string s = u.dim() == 1 ? "" : "_" + std::to_string(i);
    out << ",sign" << s << ",logmag" << s;
  }
  out << '\n';
  std::vector<SampledNet> comps;
  for (const auto& c : u.comps()) comps.push_back(c.sampled(grid));
  for (int k = grid.k_min; k <= grid.k_max; ++k) {
    out << k << ',' << fmt(std::ldexp(1.0, -k));
    for (const auto& c : comps) out << ',' << c.sign(k) << ',' << fmt(c.logmag(k));
    out << '\n';
  }
}

void describe_valuation(Report& r, const std::string& key, const GenNumber& x, const Config& cfg) {
  const auto v = valuation(x, cfg);
  r.add(key + "_val", fmt(v.value));
  r.add(key + "_sharp", fmt(sharp_norm(x, cfg)));
  r.add("backend", backend_name(v.backend));
}

void write_thresholds(const SpliceNet& s, const std::string& path) {
  auto out = open_out(path);
  out << "n,k,eps\n";
  for (const auto& t : s.thresholds) out << t.n << ',' << t.k << ',' << fmt(std::ldexp(1.0, -t.k)) << '\n';
}

/// Largest n such that every membership row up to n passed.
int verified_depth(const SaturationResult& s) {
  int depth = 0;
  for (const auto& m : s.membership) {
    if (!m.contains || !m.depth_ok) break;
    depth = m.n;
  }
  return depth;
}

struct Options {
  std::string config_file;
  std::optional<unsigned long> seed;
};

using Action = std::function<Report(const Config&)>;

void add_gnum(CLI::App& app, Action& action) {
  auto* gnum = app.add_subcommand("gnum", "generalized numbers");
  gnum->require_subcommand(1);

  static std::string a, b, out;
  static int kmin = 0, kmax = 0;

  auto* val = gnum->add_subcommand("val", "valuation ν(x)");
  val->add_option("NET", a, "net file or literal")->required();
  val->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto x = read_net(a);
      r.body << "net: " << x.to_string() << '\n';
      const auto v = valuation(x, cfg);
      r.add("val", fmt(v.value));
      r.add("backend", backend_name(v.backend));
      return r;
    };
  });

  auto* sn = gnum->add_subcommand("sharpnorm", "sharp norm exp(-ν(x))");
  sn->add_option("NET", a, "net file or literal")->required();
  sn->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto x = read_net(a);
      r.body << "net: " << x.to_string() << '\n';
      r.add("sharpnorm", fmt(sharp_norm(x, cfg)));
      return r;
    };
  });

  auto* eq = gnum->add_subcommand("eq", "equality in the quotient");
  eq->add_option("NET1", a)->required();
  eq->add_option("NET2", b)->required();
  eq->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto x = read_net(a), y = read_net(b);
      const auto j = gen_eq(x, y, cfg);
      r.body << "x - y = " << (x - y).to_string() << '\n';
      r.add("eq", yes(j.value));
      r.add("backend", backend_name(j.backend));
      r.verdict = j.value;
      return r;
    };
  });

  auto* sample = gnum->add_subcommand("sample", "sample on the grid 2^-k");
  sample->add_option("NET", a)->required();
  sample->add_option("--kmin", kmin, "first grid exponent");
  sample->add_option("--kmax", kmax, "last grid exponent");
  sample->add_option("--out", out, "CSV path")->required();
  sample->callback([&] {
    action = [](const Config& base) {
      Config cfg = base;
      if (kmin > 0) cfg.k_min = kmin;
      if (kmax > 0) cfg.k_max = kmax;
      cfg.validate();
      Report r;
      const auto x = read_net(a);
      write_samples(VecNet(x), grid_of(cfg), out);
      r.body << "wrote " << out << '\n';
      r.add("samples", std::to_string(cfg.k_max - cfg.k_min + 1));
      return r;
    };
  });
}

void add_iset(CLI::App& app, Action& action) {
  auto* iset = app.add_subcommand("iset", "internal sets");
  iset->require_subcommand(1);

  static std::string a, b, out;
  static int m = 0, count = 20;
  static std::vector<std::size_t> coords;
  static bool allow_unbounded = false;

  auto* contains_cmd = iset->add_subcommand("contains", "membership of a point");
  contains_cmd->add_option("SET", a)->required();
  contains_cmd->add_option("NET", b, "NET or (NET,...)")->required();
  contains_cmd->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto rep = contains(read_set(a), read_point(b), cfg);
      if (rep.distance) r.body << "distance: " << rep.distance->to_string() << '\n';
      r.add("contains", yes(rep.member.value));
      r.add("backend", backend_name(rep.member.backend));
      r.verdict = rep.member.value;
      return r;
    };
  });

  for (const char* name : {"subset", "equal"}) {
    const bool subset = std::string(name) == "subset";
    auto* cmd = iset->add_subcommand(name, subset ? "A ⊆ B via the directed sup-distance"
                                                  : "A = B via the Hausdorff distance");
    cmd->add_option("SET1", a)->required();
    cmd->add_option("SET2", b)->required();
    cmd->callback([&action, subset, name] {
      action = [subset, name](const Config& cfg) {
        Report r;
        const auto x = read_set(a), y = read_set(b);
        const auto rep = subset ? subset_report(x, y, cfg) : equality_report(x, y, cfg);
        if (rep.delta) {
          r.body << "delta: " << rep.delta->to_string() << '\n';
          r.body << "delta valuation: " << fmt(valuation(*rep.delta, cfg).value) << '\n';
        }
        r.add(name, yes(rep.holds.value));
        r.add("backend", backend_name(rep.holds.backend));
        r.verdict = rep.holds.value;
        return r;
      };
    });
  }

  auto* mindist = iset->add_subcommand("mindist", "attained minimal distance");
  mindist->add_option("SET1", a)->required();
  mindist->add_option("SET2", b)->required();
  mindist->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto md = min_distance(read_set(a), read_set(b), cfg);
      r.body << "distance: " << md.distance.to_string() << "\nu: " << md.u.to_string()
             << "\nv: " << md.v.to_string() << '\n';
      if (md.distance.symbolic()) r.add("mindist", compact(md.distance.to_string()));
      describe_valuation(r, "mindist", md.distance, cfg);
      return r;
    };
  });

  auto* maxnorm = iset->add_subcommand("maxnorm", "attained maximal norm");
  maxnorm->add_option("SET", a)->required();
  maxnorm->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto mn = max_norm(read_set(a), cfg);
      r.body << "norm: " << mn.norm.to_string() << "\nwitness: " << mn.witness.to_string() << '\n';
      if (mn.norm.symbolic()) r.add("maxnorm", compact(mn.norm.to_string()));
      describe_valuation(r, "maxnorm", mn.norm, cfg);
      return r;
    };
  });

  auto* uni = iset->add_subcommand("union", "union of two families");
  uni->add_option("SET1", a)->required();
  uni->add_option("SET2", b)->required();
  uni->add_option("--out", out, "write the set here");
  uni->callback([&] {
    action = [](const Config&) {
      Report r;
      const auto u = internal_union(read_set(a), read_set(b));
      r.body << u.to_string() << '\n';
      if (!out.empty()) open_out(out) << u.to_string() << '\n';
      r.add("shapes", std::to_string(u.shapes().size()));
      return r;
    };
  });

  auto* fat = iset->add_subcommand("fatten", "ε^m-neighbourhood");
  fat->add_option("SET", a)->required();
  fat->add_option("m", m)->required();
  fat->callback([&] {
    action = [](const Config&) {
      Report r;
      const auto f = fatten(read_set(a), m);
      r.body << f.to_string() << '\n';
      r.add("shapes", std::to_string(f.shapes().size()));
      return r;
    };
  });

  auto* proj = iset->add_subcommand("project", "coordinate projection");
  proj->add_option("SET", a)->required();
  proj->add_option("--coords", coords, "kept coordinates, e.g. 0,2")->required()->delimiter(',');
  proj->add_flag("--allow-unbounded", allow_unbounded, "return an unverified upper bound");
  proj->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto p = project(read_set(a), coords, allow_unbounded, cfg);
      r.body << p.family.to_string() << '\n';
      r.add("verified", yes(p.verified));
      r.verdict = p.verified;
      return r;
    };
  });

  auto* ball = iset->add_subcommand("sharpball", "no maximal norm in the sharp unit ball");
  ball->add_option("--count", count, "random members");
  ball->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto demo = sharp_ball_demo(count, cfg.seed, cfg);
      for (const auto& c : demo.cases)
        r.body << "u=" << c.u << " c=" << fmt(c.c) << " larger=" << yes(c.v_strictly_larger)
               << " in_ball=" << yes(c.v_in_ball) << " h_bounds=" << yes(c.h_bounds_u) << '\n';
      r.add("sharpball", yes(demo.all_ok));
      r.add("cases", std::to_string(demo.cases.size()));
      r.verdict = demo.all_ok;
      return r;
    };
  });
}

void add_ifn(CLI::App& app, Action& action) {
  auto* ifn = app.add_subcommand("ifn", "internal functions");
  ifn->require_subcommand(1);

  static std::string body, domain, at, demo;
  static int n = 1, m_cap = 40;

  auto* eval = ifn->add_subcommand("eval", "evaluate g_ε(x_ε)");
  eval->add_option("EXPR", body)->required();
  eval->add_option("--domain", domain)->required();
  eval->add_option("--at", at)->required();
  eval->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto g = make_graph(make_fn(single(body), read_set(domain)), cfg);
      const auto res = eval_at(g, read_net(at), cfg);
      const auto& s = res.value.samples();
      for (int k = s.grid().k_max - 4; k <= s.grid().k_max; ++k)
        r.body << "k=" << k << " value=" << fmt(static_cast<double>(s.at(k))) << '\n';
      r.add("value_val", fmt(valuation(res.value, cfg).value));
      r.add("guaranteed", yes(res.guaranteed));
      return r;
    };
  });

  auto* image = ifn->add_subcommand("image", "membership in the image f(A)");
  image->add_option("EXPR", body)->required();
  image->add_option("--domain", domain)->required();
  image->add_option("--y", at)->required();
  image->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto g = make_graph(make_fn(single(body), read_set(domain)), cfg);
      const auto rep = image_membership(g, read_net(at), cfg);
      if (rep.distance) r.body << "distance valuation: " << fmt(valuation(*rep.distance, cfg).value) << '\n';
      r.add("member", yes(rep.member.value));
      r.add("backend", backend_name(rep.member.backend));
      r.verdict = rep.member.value;
      return r;
    };
  });

  auto* mod = ifn->add_subcommand("modulus", "uniform continuity modulus m(n)");
  mod->add_option("EXPR", body)->required();
  mod->add_option("--domain", domain)->required();
  mod->add_option("--n", n)->required();
  mod->add_option("--mcap", m_cap, "largest m tried");
  mod->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto g = make_graph(make_fn(single(body), read_set(domain)), cfg);
      const auto rep = continuity_modulus(g, n, m_cap, cfg);
      r.body << "|x - x'| <= eps^" << rep.m << " => |g(x) - g(x')| <= eps^" << rep.n << " for k >= "
             << rep.threshold_k << '\n';
      r.add("n", std::to_string(rep.n));
      r.add("m", std::to_string(rep.m));
      r.add("threshold_k", std::to_string(rep.threshold_k));
      return r;
    };
  });

  auto* dem = ifn->add_subcommand("demo", "fixtures: zeroset, nonclosed");
  dem->add_option("NAME", demo)->required()->check(CLI::IsMember({"zeroset", "nonclosed"}));
  dem->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      if (demo == "zeroset") {
        const auto d = zero_set_demo(cfg);
        for (const auto& c : d.cases)
          r.body << "x=" << c.x << " f(x)=0:" << yes(c.x_is_zero) << " y>x:" << yes(c.y_greater)
                 << " f(y)=0:" << yes(c.fy_zero) << " deep_ratio=" << fmt(c.deep_ratio) << '\n';
        r.add("zeroset", yes(d.all_ok));
        r.add("cases", std::to_string(d.cases.size()));
        r.verdict = d.all_ok;
      } else {
        const auto d = nonclosed_image_demo(6, cfg);
        r.body << "unbounded refused: " << yes(d.unbounded_refused) << "\n1 rejected: " << yes(d.one_rejected)
               << "\n1/2 accepted: " << yes(d.half_accepted) << '\n';
        for (const auto& [M, v] : d.gap_valuations) r.body << "M=" << M << " gap valuation " << fmt(v) << '\n';
        r.add("nonclosed", yes(d.ok));
        r.verdict = d.ok;
      }
      return r;
    };
  });
}

void add_saturation(CLI::App& app, Action& action) {
  static std::string file, out;
  static int nmax = 0, depth = 30;

  auto* sat = app.add_subcommand("saturate", "witness for a decreasing chain of internal sets");
  sat->add_option("CHAINFILE", file, "lines `n t SET`")->required();
  sat->add_option("--nmax", nmax, "drop entries with n > nmax");
  sat->add_option("--out", out, "writes PREFIX_thresholds.csv and PREFIX_witness.csv");
  sat->callback([&] {
    action = [](const Config& base) {
      Config cfg = base;
      auto chain = parse_chain(load(file));
      if (nmax > 0) {
        std::erase_if(chain.entries, [](const ChainEntry& e) { return e.n > nmax; });
        cfg.n_max = nmax;
      }
      validate_chain(chain, cfg);
      const auto res = saturation_witness(chain, cfg);
      Report r;
      for (const auto& m : res.membership)
        r.body << "n=" << m.n << " contains=" << yes(m.contains) << " distance_val=" << fmt(m.distance_valuation)
               << '\n';
      r.body << "witness valuation: " << fmt(res.witness_valuation) << '\n';
      if (!out.empty()) {
        write_thresholds(res.splice, out + "_thresholds.csv");
        write_samples(res.splice.witness, grid_of(cfg), out + "_witness.csv");
      }
      r.flag(res.all_members ? "witness-ok" : "witness-failed");
      r.add("depth", std::to_string(verified_depth(res)));
      r.add("valuation", fmt(res.witness_valuation));
      r.verdict = res.all_members;
      return r;
    };
  });

  auto* balls = app.add_subcommand("balls", "point in a nested chain of sharp balls");
  balls->add_option("BALLFILE", file, "lines `n r NET`")->required();
  balls->add_option("--out", out, "writes PREFIX_witness.csv");
  balls->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto res = nested_balls_witness(parse_balls(load(file)), cfg);
      for (const auto& [n, v] : res.grid_valuations) r.body << "n=" << n << " val(x - a_n)=" << fmt(v) << '\n';
      r.body << "eventually constant: " << yes(res.eventually_constant) << '\n';
      if (!out.empty()) {
        write_samples(VecNet(res.witness), grid_of(cfg), out + "_witness.csv");
        if (res.saturation) write_thresholds(res.saturation->splice, out + "_thresholds.csv");
      }
      r.flag(res.all_ok ? "witness-ok" : "witness-failed");
      r.add("depth", std::to_string(res.grid_valuations.empty() ? 0 : res.grid_valuations.back().first));
      r.add("branches_ok", yes(res.branches_ok));
      r.verdict = res.all_ok;
      return r;
    };
  });

  auto* cauchy = app.add_subcommand("cauchy", "sharp limit of a Cauchy sequence");
  cauchy->add_option("SEQFILE", file, "one net per line")->required();
  cauchy->add_option("--depth", depth, "chain depth");
  cauchy->add_option("--out", out, "writes PREFIX_witness.csv");
  cauchy->callback([&] {
    action = [](const Config& cfg) {
      Report r;
      const auto res = cauchy_limit(parse_sequence(load(file)), depth, cfg);
      for (const auto& row : res.table)
        r.body << "j=" << row.j << " val(u_j - L)=" << fmt(row.valuation) << " sharp=" << fmt(row.sharp) << '\n';
      if (!out.empty()) write_samples(VecNet(res.limit), grid_of(cfg), out + "_witness.csv");
      r.flag(res.saturation.all_members ? "witness-ok" : "witness-failed");
      r.add("depth", std::to_string(verified_depth(res.saturation)));
      r.verdict = res.saturation.all_members;
      return r;
    };
  });
}

void add_mollifier(CLI::App& app, Action& action) {
  auto* moll = app.add_subcommand("mollifier", "vanishing-moment mollifiers");
  moll->require_subcommand(1);

  static int order = 8, dim = 1;
  static double delta = 0.1;
  static std::string out;

  for (const char* name : {"build", "diagonal"}) {
    const bool diagonal = std::string(name) == "diagonal";
    auto* cmd = moll->add_subcommand(name, diagonal ? "threshold table of the generalized mollifier"
                                                    : "order-N mollifier with L1 norm <= 1+delta");
    cmd->add_option("--order", order, "N (0..12)");
    cmd->add_option("--delta", delta, "L1 budget");
    cmd->add_option("--out", out, "CSV prefix");
    if (!diagonal) cmd->add_option("--dim", dim, "dimension d of the tensor product");
    cmd->callback([&action, diagonal] {
      action = [diagonal](const Config& cfg) {
        Report r;
        const auto tree = build_vanishing(order, delta, cfg);
        const auto table = assemble_generalized(tree, cfg);
        auto rep = moment_report(tree, order + 1, cfg);
        const double tol = moment_tolerance(cfg);
        const double mass = rep.rows[0].moment;
        const double worst = rep.max_moment(order);
        for (const auto& l : tree.levels())
          r.body << "n=" << l.n << " eta=" << fmt(l.eta) << " a=" << fmt(l.a) << " b=" << fmt(l.b)
                 << " L1=" << fmt(l.l1) << '\n';
        r.body << "mass=" << fmt(mass) << " max|m_k|=" << fmt(worst) << " L1=" << fmt(rep.l1) << '\n';
        if (diagonal)
          for (const auto& row : table.rows)
            r.body << "n=" << row.n << " M=" << fmt(row.M) << " eps=" << fmt(row.eps) << '\n';

        if (dim > 1 && !diagonal) {
          // Moments and samples of ψ_d along the first axis.
          const auto psi = tensorize(tree, dim);
          std::vector<double> m1;
          for (const auto& row : rep.rows) m1.push_back(row.moment);
          for (auto& row : rep.rows) {
            std::vector<int> beta(dim, 0);
            beta[0] = row.k;
            const double scale = std::pow(std::sqrt(static_cast<double>(dim)), -row.k);
            row.moment = psi.moment(beta, m1);
            row.gauss *= scale;
            row.error *= scale;
          }
        }
        if (!out.empty()) {
          if (dim > 1 && !diagonal) {
            const auto psi = tensorize(tree, dim);
            auto f = open_out(out + "_samples.csv");
            f << "x,psi\n";
            std::vector<double> p(dim, 0.0);
            for (int i = 0; i < 4001; ++i) {
              p[0] = -1.0 + 2.0 * i / 4000;
              f << fmt(p[0]) << ',' << fmt(psi(p)) << '\n';
            }
          } else {
            write_samples_csv(tree, out + "_samples.csv");
          }
          write_moments_csv(rep, out + "_moments.csv");
          write_schedule_csv(tree, table, out + "_schedule.csv");
          if (diagonal) write_diagonal_csv(table, cfg, out + "_diagonal.csv");
        }
        const bool ok = std::abs(mass - 1.0) <= tol && worst <= tol && rep.l1 <= 1.0 + delta + tol;
        r.add("order", std::to_string(order));
        r.add("mass", fmt(mass));
        r.add("max_moment", fmt(worst));
        r.add("l1", fmt(rep.l1));
        if (diagonal) {
          r.add("decreasing", yes(table.decreasing));
          r.add("diagonal_moments", yes(table.moments_ok));
          r.add("overflow", yes(table.overflow));
        }
        r.add("mollifier", yes(ok));
        r.verdict = ok && (!diagonal || (table.decreasing && table.moments_ok));
        return r;
      };
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized numbers, internal sets and mollifiers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--config", opts.config_file, "key=value config file")->check(CLI::ExistingFile);
  app.add_option("--seed", opts.seed, "random seed for property subcommands");

  Action action;
  add_gnum(app, action);
  add_iset(app, action);
  add_ifn(app, action);
  add_saturation(app, action);
  add_mollifier(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    Config cfg = opts.config_file.empty() ? default_config() : Config::from_file(opts.config_file);
    if (opts.seed) cfg.seed = *opts.seed;
    cfg.validate();
    const Report r = action(cfg);
    std::cout << r.body.str() << "RESULT:";
    for (const auto& t : r.trailer) std::cout << ' ' << t;
    std::cout << std::endl;
    return r.verdict.value_or(true) ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    std::cout << "RESULT: error=" << error_name(e.code()) << std::endl;
    return 1;
  }
}
