// mckay_lab: command-line front end for the McKay correspondence pipeline.
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mckay/emit.hpp"
#include "mckay/error.hpp"
#include "mckay/kgroup.hpp"
#include "mckay/mesh.hpp"
#include "mckay/quiver_rep.hpp"
#include "mckay/root_lattice.hpp"
#include "mckay/verify.hpp"

using namespace mckay;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw UsageError("format '" + fmt + "' is not available for this command");
}

ARVertex parse_object(const McKayGraph& g, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "object must be i,n");
  try {
    std::size_t p1 = 0, p2 = 0;
    long i = std::stol(text.substr(0, comma), &p1);
    long n = std::stol(text.substr(comma + 1), &p2);
    if (p1 != comma || p2 != text.size() - comma - 1 || i < 0) throw Error(ErrorKind::Parse, "object must be i,n");
    ARVertex q{static_cast<std::size_t>(i), n};
    require_legal(g, q);
    return q;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "object must be i,n");
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string cyclo_text(const CycloNum& x) { return x.to_string(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact McKay correspondence: characters, affine Dynkin graphs, root systems, AR quivers, K-theory"};
  app.require_subcommand(1);
  std::map<CLI::App*, std::string> formats;
  std::string group, from, to, height = "std", object, suite = "all";
  long level = 1, bound = 2;
  std::vector<long> window{0, 6};

  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("group", group, "cyclic:n, dihedral:n, tetra, octa or icosa")->required();
    sub->add_option("--format", formats[sub], "json, dot or text")->default_val(default_format);
  };

  auto* c_group = app.add_subcommand("group", "group order, classes and character table");
  add_common(c_group, "json");
  auto* c_mckay = app.add_subcommand("mckay", "McKay graph, affine type and imaginary root");
  add_common(c_mckay, "dot");
  auto* c_roots = app.add_subcommand("roots", "real and imaginary roots in a box");
  add_common(c_roots, "json");
  c_roots->add_option("--level", level, "largest |delta-level|")->default_val(1)->check(CLI::NonNegativeNumber);
  c_roots->add_option("--bound", bound, "largest |coordinate|")->default_val(2)->check(CLI::NonNegativeNumber);
  auto* c_heights = app.add_subcommand("heights", "reversal sequence between two height functions");
  add_common(c_heights, "json");
  c_heights->add_option("--from", from, "height function: std, i0=0,i1=1,... or 0,1,...")->required();
  c_heights->add_option("--to", to, "height function")->required();
  auto* c_arq = app.add_subcommand("arquiver", "window of the AR quiver");
  add_common(c_arq, "dot");
  c_arq->add_option("--window", window, "lowest and highest level")->expected(2);
  auto* c_hom = app.add_subcommand("homdims", "Hom and Ext^1 dimensions over a window");
  add_common(c_hom, "json");
  c_hom->add_option("--window", window, "lowest and highest level")->expected(2);
  auto* c_rphi = app.add_subcommand("rphi", "images of the basis [X_i(h_i)] in the root lattice");
  add_common(c_rphi, "json");
  c_rphi->add_option("--height", height, "height function")->default_val("std");
  auto* c_phi = app.add_subcommand("phi", "quiver representation Phi_h(X_q)");
  add_common(c_phi, "json");
  c_phi->add_option("--height", height, "height function")->default_val("std");
  c_phi->add_option("--object", object, "i,n")->required();
  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  add_common(c_verify, "json");
  c_verify->add_option("--suite", suite, "characters, mckay, mesh, ktheory, coxeter, cg, an or all")
      ->default_val("all")
      ->check(CLI::IsMember({"characters", "mckay", "mesh", "ktheory", "coxeter", "cg", "an", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (window.size() != 2 || window[1] < window[0]) throw UsageError("--window needs a <= b");
    std::string format;
    for (auto& [sub, f] : formats)
      if (sub->parsed()) format = f;
    auto p = make_pipeline(group);
    const auto& g = p->graph;

    if (c_group->parsed()) {
      require_format(format, {"json", "text"});
      if (format == "json") {
        print_json(group_json(p->group, p->table));
      } else {
        std::cout << group << ": order " << p->group.order() << ", " << p->table.size() << " classes\n";
        for (std::size_t i = 0; i < p->table.size(); ++i) {
          std::cout << "chi" << i << " (dim " << p->table[i].dim << ", parity " << p->table[i].parity << "):";
          for (const auto& v : p->table[i].values) std::cout << " " << cyclo_text(v);
          std::cout << "\n";
        }
      }
    } else if (c_mckay->parsed()) {
      require_format(format, {"json", "dot", "text"});
      if (format == "json") print_json(mckay_json(g));
      else if (format == "dot") std::cout << mckay_dot(g);
      else std::cout << group << ": " << g.affine_type().to_string() << ", delta " << g.delta().to_string() << "\n";
    } else if (c_roots->parsed()) {
      require_format(format, {"json"});
      print_json(roots_json(g, enumerate_roots(BilinearForm(g), g.delta(), level, bound), level, bound));
    } else if (c_heights->parsed()) {
      require_format(format, {"json"});
      auto a = parse_height(g, from), b = parse_height(g, to);
      print_json(heights_json(a, b, connect_heights(g, a, b)));
    } else if (c_arq->parsed()) {
      require_format(format, {"dot"});
      std::cout << ar_window_dot(ar_window(g, window[0], window[1]));
    } else if (c_hom->parsed()) {
      require_format(format, {"json"});
      print_json(hom_table_json(hom_table(p->engine, window[0], window[1])));
    } else if (c_rphi->parsed()) {
      require_format(format, {"json"});
      auto h = parse_height(g, height);
      print_json(rphi_json(h, rphi_basis_images(p->engine, h)));
    } else if (c_phi->parsed()) {
      require_format(format, {"json"});
      auto h = parse_height(g, height);
      auto q = parse_object(g, object);
      auto m = phi_object(g, h, q);
      Json j = rep_json(m);
      j["object"] = {q.i, q.n};
      j["indecomposable"] = is_indecomposable(m);
      j["dim_vector"] = root_json(dim_vector(m));
      print_json(j);
    } else if (c_verify->parsed()) {
      require_format(format, {"json", "text"});
      std::vector<SuiteReport> reports;
      if (suite == "all") {
        for (const auto& s : suite_names()) reports.push_back(run_suite(*p, s, true));
      } else {
        reports.push_back(run_suite(*p, suite));
      }
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.ok();
      if (format == "json") {
        print_json(report_json(p->spec, reports));
      } else {
        for (const auto& r : reports) {
          std::cout << r.suite << ": " << (r.skipped ? "skipped" : r.ok() ? "pass" : "FAIL") << " (" << r.checks
                    << " checks)\n";
          for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
      }
      return ok ? 0 : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Parse) {
      std::cerr << app.help();
      return kUsage;
    }
    return kFailed;
  }
  return 0;
}
