// Command-line front end: coefficient queries, tables, saturation scans,
// decomposition reports, crystal graphs, hive counts and the cross-check.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "skewlr/cli.hpp"

using namespace skewlr;

namespace {

struct Globals {
  std::size_t n = 0;  // 0: inferred from the longest list
  bool json = false;
  std::size_t limit = 1000000;
};

struct BoundaryArgs {
  std::string lambda, mu, gamma, nu, phi;
  bool has_nu = false;
};

std::size_t infer_n(const Globals& g, std::initializer_list<const std::string*> lists) {
  if (g.n) return g.n;
  std::size_t n = 0;
  for (const auto* s : lists) n = std::max(n, parse_int_list(*s).size());
  if (n == 0) throw std::invalid_argument("cannot infer n; pass --n");
  return n;
}

Flag flag_or_full(const std::string& text, std::size_t n) {
  return text.empty() ? Flag::full(n) : Flag::parse(text, n);
}

void add_boundary(CLI::App* app, BoundaryArgs& a, bool with_nu, bool nu_required) {
  app->add_option("--lambda,-l", a.lambda, "lambda as a comma list (empty for the zero partition)");
  app->add_option("--mu,-m", a.mu, "outer shape mu")->required();
  app->add_option("--gamma,-g", a.gamma, "inner shape gamma");
  if (with_nu) {
    auto* o = app->add_option("--nu", a.nu, "nu");
    if (nu_required) o->required();
  }
  app->add_option("--phi,-f", a.phi, "flag, default (n,...,n)");
}

int emit(const Globals& g, const json& j, const std::string& text, bool ok) {
  if (g.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
  return ok ? 0 : 1;
}

std::vector<Flag> parse_flag_set(const std::string& text, std::size_t n) {
  if (text == "all") return all_flags(n);
  std::vector<Flag> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    auto tok = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    if (tok == "standard") out.push_back(Flag::standard(n));
    else if (tok == "full") out.push_back(Flag::full(n));
    else if (!tok.empty()) out.push_back(Flag::parse(tok, n));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flagged skew Littlewood-Richardson coefficients: tableaux, hives, Demazure crystals"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--n", g.n, "ambient number of variables (default: longest list)");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--limit", g.limit, "node visits allowed per polytope enumeration");

  BoundaryArgs ca, ta, sa, hc, hi;
  std::string method = "all";
  auto* coeff = app.add_subcommand("coeff", "one coefficient c^nu_{lambda, mu/gamma}(Phi)");
  add_boundary(coeff, ca, true, true);
  coeff->add_option("--method", method, "tableau | hive | demazure | all");

  std::string table_method = "all";
  auto* table = app.add_subcommand("table", "every nonzero coefficient over nu");
  add_boundary(table, ta, false, false);
  table->add_option("--method", table_method, "tableau | hive | demazure | all");

  int kmax = 3;
  auto* sat = app.add_subcommand("saturate", "coefficients of the dilated data for k = 1..kmax");
  add_boundary(sat, sa, true, true);
  sat->add_option("--kmax,-k", kmax, "largest dilation factor");

  std::string dmu, dgamma, dphi, dbounds;
  auto* dec = app.add_subcommand("decompose", "Demazure decomposition of Tab(mu/gamma, Phi)");
  dec->add_option("--mu,-m", dmu, "outer shape")->required();
  dec->add_option("--gamma,-g", dgamma, "inner shape");
  auto* dphi_opt = dec->add_option("--phi,-f", dphi, "flag");
  dec->add_option("--bounds,-b", dbounds, "arbitrary row bounds (need not be a flag)")->excludes(dphi_opt);

  std::string gmu, ggamma, gphi, gout = "-";
  auto* graph = app.add_subcommand("crystal-graph", "DOT graph of the crystal on Tab(mu/gamma, Phi)");
  graph->add_option("--mu,-m", gmu, "outer shape")->required();
  graph->add_option("--gamma,-g", ggamma, "inner shape");
  graph->add_option("--phi,-f", gphi, "flag or row bounds");
  graph->add_option("--output,-o", gout, "file path, '-' for standard output");

  bool show = false;
  std::size_t max_show = 20;
  auto* count = app.add_subcommand("hive-count", "integral points of the flagged skew hive polytope");
  add_boundary(count, hc, true, true);
  count->add_flag("--show", show, "print the hives");
  count->add_option("--max-show", max_show, "print at most this many");

  auto* iso = app.add_subcommand("hive-iso", "compare skew hives with triangular hives under the lift");
  add_boundary(iso, hi, true, true);

  GridSpec spec;
  std::string flags = "all";
  int max_lambda = -1;
  bool no_lift = false, no_decomp = false, matrix = false;
  auto* verify = app.add_subcommand("verify", "three-way cross-check over a grid of boundary data");
  verify->add_option("--max-mu", spec.max_mu, "largest |mu|");
  verify->add_option("--max-lambda", max_lambda, "largest |lambda| (default: max-mu)");
  verify->add_option("--flags", flags, "all | list separated by ';' (standard, full or comma lists)");
  verify->add_option("--threads,-j", spec.threads, "worker threads (0: all cores)");
  verify->add_option("--saturation", spec.saturation_k, "also scan dilations up to k");
  verify->add_flag("--no-lift", no_lift, "skip the triangular-hive comparison");
  verify->add_flag("--no-decompose", no_decomp, "skip the decomposition checks");
  verify->add_flag("--matrix", matrix, "include every tuple in the JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coeff || *table) {
      auto& a = *coeff ? ca : ta;
      const std::size_t n = infer_n(g, {&a.lambda, &a.mu, &a.gamma, &a.nu, &a.phi});
      CoefficientQuery q{Partition::parse(a.lambda, n), Partition::parse(a.mu, n), Partition::parse(a.gamma, n),
                         std::nullopt, flag_or_full(a.phi, n), parse_method(*coeff ? method : table_method), g.limit};
      if (*coeff) q.nu = Partition::parse(a.nu, n);
      auto r = run_coefficient(q);
      return emit(g, r.to_json(), r.to_text(), r.agree());
    }
    if (*sat) {
      const std::size_t n = infer_n(g, {&sa.lambda, &sa.mu, &sa.gamma, &sa.nu, &sa.phi});
      HiveBoundary b{Partition::parse(sa.lambda, n), Partition::parse(sa.mu, n), Partition::parse(sa.gamma, n),
                     Partition::parse(sa.nu, n)};
      auto r = saturation_scan(b, flag_or_full(sa.phi, n), kmax, g.limit);
      return emit(g, r.to_json(), r.to_text(), r.pass());
    }
    if (*dec) {
      const std::size_t n = infer_n(g, {&dmu, &dgamma, &dphi, &dbounds});
      std::vector<int> bounds = !dbounds.empty() ? parse_int_list(dbounds) : flag_or_full(dphi, n).bounds();
      if (bounds.size() != n) throw std::invalid_argument("bounds must have length n");
      auto r = decomposition_report(Partition::parse(dmu, n), Partition::parse(dgamma, n), bounds);
      return emit(g, r.to_json(), r.to_text(), r.pass());
    }
    if (*graph) {
      const std::size_t n = infer_n(g, {&gmu, &ggamma, &gphi});
      std::vector<int> bounds = gphi.empty() ? Flag::full(n).bounds() : parse_int_list(gphi);
      if (bounds.size() != n) throw std::invalid_argument("bounds must have length n");
      auto words = reading_words(enumerate_tableaux(Partition::parse(gmu, n), Partition::parse(ggamma, n), bounds));
      auto dot = crystal_dot(words, n, "tableaux");
      if (gout == "-") {
        std::cout << dot;
      } else {
        std::ofstream f(gout);
        if (!f) throw std::runtime_error("cannot write " + gout);
        f << dot;
        std::cerr << words.size() << " vertices written to " << gout << "\n";
      }
      return 0;
    }
    if (*count) {
      const std::size_t n = infer_n(g, {&hc.lambda, &hc.mu, &hc.gamma, &hc.nu, &hc.phi});
      HiveBoundary b{Partition::parse(hc.lambda, n), Partition::parse(hc.mu, n), Partition::parse(hc.gamma, n),
                     Partition::parse(hc.nu, n)};
      auto res = enumerate_skew_hive_points(b, flag_or_full(hc.phi, n), show, g.limit);
      json j = to_json(b);
      j["phi"] = to_json(flag_or_full(hc.phi, n));
      j["points"] = res.points;
      std::string text = "skew hives: " + std::to_string(res.points) + "\n";
      if (show) {
        json hs = json::array();
        for (std::size_t k = 0; k < res.hives.size() && k < max_show; ++k) {
          hs.push_back(to_json(res.hives[k].h));
          text += "\n" + render(res.hives[k]);
        }
        j["hives"] = hs;
      }
      return emit(g, j, text, true);
    }
    if (*iso) {
      const std::size_t n = infer_n(g, {&hi.lambda, &hi.mu, &hi.gamma, &hi.nu, &hi.phi});
      HiveBoundary b{Partition::parse(hi.lambda, n), Partition::parse(hi.mu, n), Partition::parse(hi.gamma, n),
                     Partition::parse(hi.nu, n)};
      auto r = hive_iso(b, flag_or_full(hi.phi, n), g.limit);
      return emit(g, r.to_json(), r.to_text(), r.pass());
    }
    if (*verify) {
      spec.n = g.n ? g.n : 2;
      spec.limit = g.limit;
      if (max_lambda >= 0) spec.max_lambda = max_lambda;
      spec.flags = parse_flag_set(flags, spec.n);
      spec.lift = !no_lift;
      spec.decomposition = !no_decomp;
      auto s = cross_check(spec);
      return emit(g, s.to_json(matrix), s.to_text(), s.pass());
    }
  } catch (const ScaleExceeded& e) {
    std::cerr << "error: " << e.what() << "; raise --limit to continue\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
