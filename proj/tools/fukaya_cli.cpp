// Command-line front end over the C API.

#include <fukaya/fukaya.h>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

int report_error(fk_status s) {
  std::cerr << "error: " << fk_last_error_message() << "\n";
  return s == FK_OK ? kPass : kInvalid;
}

int print_string(fk_status s, char* text) {
  if (s != FK_OK) return report_error(s);
  std::cout << text;
  fk_string_free(text);
  return kPass;
}

int print_report(fk_status s, fk_report* r, bool tsv) {
  if (s != FK_OK) return report_error(s);
  char* text = nullptr;
  const fk_status t = tsv ? fk_report_tsv(r, &text) : fk_report_text(r, &text);
  if (t != FK_OK) {
    fk_report_free(r);
    return report_error(t);
  }
  std::cout << text;
  fk_string_free(text);
  const int code = fk_report_exit_code(r) == 0 ? kPass : kFail;
  fk_report_free(r);
  return code;
}

// Loads the graph, runs `body` on it, frees it.
template <typename F>
int with_graph(const std::string& path, F&& body) {
  fk_graph* g = nullptr;
  if (const fk_status s = fk_graph_load_file(path.c_str(), &g); s != FK_OK) return report_error(s);
  const int code = body(g);
  fk_graph_free(g);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Framed ribbon graphs: state sums, surface homology and local matrix factorizations"};
  app.require_subcommand(1);
  std::string file, coeff = "z", edge, vertices, walk, format = "text", dir;
  bool periodic = false, parallel = false;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Report rendering")->check(CLI::IsMember({"text", "tsv"}));
  };

  auto* info = app.add_subcommand("info", "Surface invariants of a graph");
  info->add_option("file", file, "Graph file")->required();

  auto* homology = app.add_subcommand("homology", "State-sum homology");
  homology->add_option("file", file, "Graph file")->required();
  homology->add_option("--coeff", coeff, "z, q or f<p>");
  homology->add_flag("--periodic", periodic, "Fold degrees mod 2");

  auto* verify = app.add_subcommand("verify", "Verification checks");
  verify->require_subcommand(1);
  auto* vmain = verify->add_subcommand("main", "State sum against relative homology");
  vmain->add_option("file", file, "Graph file")->required();
  vmain->add_option("--coeff", coeff, "z, q or f<p>");
  add_format(vmain);
  auto* vcontract = verify->add_subcommand("contract", "Homology before and after contracting an edge");
  vcontract->add_option("file", file, "Graph file")->required();
  vcontract->add_option("--edge", edge, "Edge id or one of its half-edges")->required();
  vcontract->add_option("--coeff", coeff, "z, q or f<p>");
  add_format(vcontract);
  auto* vlocal = verify->add_subcommand("localize", "Localization sequence for an open subgraph");
  vlocal->add_option("file", file, "Graph file")->required();
  vlocal->add_option("--vertices", vertices, "Comma-separated vertex ids")->required();
  vlocal->add_option("--coeff", coeff, "z, q or f<p>");
  add_format(vlocal);

  auto* winding = app.add_subcommand("winding", "Winding number of a closed walk");
  winding->add_option("file", file, "Graph file")->required();
  winding->add_option("--walk", walk, "Comma-separated half-edge ids")->required();

  std::string grading, source, target;
  int n = 0;
  long long field = 0;
  auto* mf = app.add_subcommand("mf", "Local matrix factorization model");
  mf->require_subcommand(1);
  auto* hom = mf->add_subcommand("hom", "Hom cohomology between scalar factorizations");
  hom->add_option("--grading", grading, "z or z2")->required();
  hom->add_option("--n", n, "Rank parameter")->required()->check(CLI::NonNegativeNumber);
  hom->add_option("--source", source, "i,j, i,j,l|r or [i,j]_l")->required();
  hom->add_option("--target", target, "i,j, i,j,l|r or [i,j]_l")->required();
  hom->add_option("--field", field, "0 for Q or a prime");

  auto* corpus = app.add_subcommand("corpus", "Corpus runner");
  corpus->require_subcommand(1);
  auto* cverify = corpus->add_subcommand("verify", "Run every check on every graph file of a directory");
  cverify->add_option("dir", dir, "Directory of graph files")->required();
  cverify->add_flag("--parallel", parallel, "One task per file");
  add_format(cverify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInvalid;
  }
  const bool tsv = format == "tsv";
  const char* c = coeff.c_str();

  if (info->parsed())
    return with_graph(file, [](fk_graph* g) {
      char* out = nullptr;
      const fk_status s = fk_info(g, &out);
      return print_string(s, out);
    });
  if (homology->parsed())
    return with_graph(file, [&](fk_graph* g) {
      char* out = nullptr;
      const fk_status s = fk_homology(g, c, periodic ? 1 : 0, &out);
      return print_string(s, out);
    });
  if (vmain->parsed())
    return with_graph(file, [&](fk_graph* g) {
      fk_report* r = nullptr;
      const fk_status s = fk_verify_main(g, c, &r);
      return print_report(s, r, tsv);
    });
  if (vcontract->parsed())
    return with_graph(file, [&](fk_graph* g) {
      fk_report* r = nullptr;
      const fk_status s = fk_verify_contract(g, edge.c_str(), c, &r);
      return print_report(s, r, tsv);
    });
  if (vlocal->parsed())
    return with_graph(file, [&](fk_graph* g) {
      fk_report* r = nullptr;
      const fk_status s = fk_verify_localize(g, vertices.c_str(), c, &r);
      return print_report(s, r, tsv);
    });
  if (winding->parsed())
    return with_graph(file, [&](fk_graph* g) {
      long long w = 0;
      if (const fk_status s = fk_winding(g, walk.c_str(), &w); s != FK_OK) return report_error(s);
      std::cout << w << "\n";
      return kPass;
    });
  if (hom->parsed()) {
    char* out = nullptr;
    const fk_status s = fk_mf_hom(grading.c_str(), n, source.c_str(), target.c_str(), field, &out);
    return print_string(s, out);
  }
  if (cverify->parsed()) {
    fk_report* r = nullptr;
    const fk_status s = fk_corpus_verify(dir.c_str(), parallel ? 1 : 0, &r);
    return print_report(s, r, tsv);
  }
  std::cerr << app.help();
  return kInvalid;
}
