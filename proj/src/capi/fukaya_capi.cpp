#include "fukaya/fukaya.h"

#include "error.hpp"
#include "graph/winding.hpp"
#include "io/commands.hpp"
#include "io/corpus.hpp"
#include "io/graph_file.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct fk_graph {
  fukaya::graph::FramedGraph graph;
};

struct fk_report {
  fukaya::io::Report report;
};

namespace {

thread_local std::string last_error;

fk_status record(fk_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
fk_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FK_OK;
  } catch (const fukaya::Error& e) {
    return record(static_cast<fk_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(FK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(FK_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fukaya::algebra::RingSpec coefficients_of(const char* c) {
  return c ? fukaya::io::parse_coefficients(c) : fukaya::algebra::RingSpec::integers();
}

void need(const void* p, const char* what) {
  if (!p) fukaya::fail(fukaya::ErrorCode::NullArgument, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* fk_last_error_message(void) { return last_error.c_str(); }

const char* fk_status_name(fk_status status) {
  switch (status) {
    case FK_OK: return "ok";
    case FK_ERR_INVALID_INPUT: return "invalid input";
    case FK_ERR_INVALID_RING: return "invalid ring";
    case FK_ERR_INVALID_COMPLEX: return "invalid complex";
    case FK_ERR_INVALID_GRAPH: return "invalid graph";
    case FK_ERR_LOOP_CONTRACTION: return "loop contraction";
    case FK_ERR_DEGENERATE_RESULT: return "degenerate result";
    case FK_ERR_NOT_CLOSED: return "not closed";
    case FK_ERR_IO: return "io error";
    case FK_ERR_INTERNAL: return "internal error";
    case FK_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

void fk_string_free(char* s) { std::free(s); }

fk_status fk_graph_parse_json(const char* text, fk_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    *out = new fk_graph{fukaya::io::parse_graph(text)};
  });
}

fk_status fk_graph_load_file(const char* path, fk_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = nullptr;
    *out = new fk_graph{fukaya::io::load_graph(path)};
  });
}

void fk_graph_free(fk_graph* g) { delete g; }

fk_status fk_graph_to_json(const fk_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(fukaya::io::serialize_graph(g->graph));
  });
}

fk_status fk_graph_name(const fk_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(g->graph.name());
  });
}

fk_status fk_info(const fk_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(fukaya::io::info_text(g->graph));
  });
}

fk_status fk_homology(const fk_graph* g, const char* coefficients, int periodic, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(fukaya::io::homology_text(g->graph, coefficients_of(coefficients), periodic != 0));
  });
}

fk_status fk_verify_main(const fk_graph* g, const char* coefficients, fk_report** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new fk_report{fukaya::io::verify_main_report(g->graph, coefficients_of(coefficients))};
  });
}

fk_status fk_verify_contract(const fk_graph* g, const char* edge, const char* coefficients, fk_report** out) {
  return guarded([&] {
    need(g, "graph");
    need(edge, "edge");
    need(out, "out");
    *out = new fk_report{fukaya::io::verify_contract_report(g->graph, edge, coefficients_of(coefficients))};
  });
}

fk_status fk_verify_localize(const fk_graph* g, const char* vertices, const char* coefficients, fk_report** out) {
  return guarded([&] {
    need(g, "graph");
    need(vertices, "vertices");
    need(out, "out");
    *out = new fk_report{fukaya::io::verify_localize_report(g->graph, fukaya::io::split_ids(vertices),
                                                            coefficients_of(coefficients))};
  });
}

fk_status fk_winding(const fk_graph* g, const char* walk, long long* out) {
  return guarded([&] {
    need(g, "graph");
    need(walk, "walk");
    need(out, "out");
    *out = fukaya::graph::winding_number(g->graph, fukaya::io::split_ids(walk));
  });
}

fk_status fk_mf_hom(const char* grading, int n, const char* source, const char* target, long long field,
                    char** out) {
  return guarded([&] {
    need(grading, "grading");
    need(source, "source");
    need(target, "target");
    need(out, "out");
    const auto gr = fukaya::io::parse_grading(grading);
    const auto x = fukaya::io::parse_scalar(gr, n, source);
    const auto y = fukaya::io::parse_scalar(gr, n, target);
    *out = copy_out(fukaya::io::mf_hom_text(gr, n, x, y, field));
  });
}

fk_status fk_corpus_verify(const char* directory, int parallel, fk_report** out) {
  return guarded([&] {
    need(directory, "directory");
    need(out, "out");
    *out = new fk_report{fukaya::io::corpus_verify(directory, parallel != 0)};
  });
}

void fk_report_free(fk_report* r) { delete r; }

size_t fk_report_rows(const fk_report* r) { return r ? r->report.rows().size() : 0; }

const char* fk_report_cell(const fk_report* r, size_t row, int column) {
  if (!r || row >= r->report.rows().size()) return nullptr;
  const auto& x = r->report.rows()[row];
  switch (column) {
    case 0: return x.graph.c_str();
    case 1: return x.check.c_str();
    case 2: return x.side_a.c_str();
    case 3: return x.side_b.c_str();
    default: return nullptr;
  }
}

fk_verdict fk_report_verdict(const fk_report* r, size_t row) {
  if (!r || row >= r->report.rows().size()) return FK_FAIL;
  switch (r->report.rows()[row].verdict) {
    case fukaya::statesum::Verdict::Pass: return FK_PASS;
    case fukaya::statesum::Verdict::SkipUnstable: return FK_SKIP_UNSTABLE;
    case fukaya::statesum::Verdict::Fail: break;
  }
  return FK_FAIL;
}

int fk_report_exit_code(const fk_report* r) { return r ? r->report.exit_code() : 1; }

fk_status fk_report_tsv(const fk_report* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = copy_out(r->report.to_tsv());
  });
}

fk_status fk_report_text(const fk_report* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = copy_out(r->report.to_text());
  });
}

}  // extern "C"
