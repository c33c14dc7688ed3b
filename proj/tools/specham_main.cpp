// specham: certify Hamiltonian cycles/paths from certified spectral bounds,
// build the extremal families, and run the tightness scans.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specham/acceptance.hpp"
#include "specham/certifier.hpp"
#include "specham/closure.hpp"
#include "specham/families.hpp"
#include "specham/graph_io.hpp"
#include "specham/oracle.hpp"
#include "specham/parallel.hpp"
#include "specham/tightness.hpp"

using namespace specham;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInputError = 2;

struct AnalyzeOptions {
  std::string input;
  std::string format = "graph6";
  std::optional<int> k;
  std::string mode = "both";
  std::string theorem = "all";
  std::string tol = "1e-12";
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> load_graphs(const AnalyzeOptions& opt) {
  std::string text = read_file(opt.input);
  std::vector<Graph> graphs;
  if (opt.format == "graph6") {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        graphs.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(opt.input + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  } else if (opt.format == "edgelist") {
    graphs.push_back(parse_edge_list(text));
  } else {
    throw ParseError("unknown format: " + opt.format);
  }
  if (graphs.empty()) throw ParseError("no graphs in input");
  return graphs;
}

Verdict ore_verdict(const Graph& g, int k) {
  Verdict v;
  v.theorem = "ore";
  v.premises.k = k;
  v.premises.n = g.n();
  v.premises.threshold_lo = make_rational(g.n());
  v.premises.threshold_hi = make_rational(g.n());
  if (g.n() < 3) {
    v.kind = VerdictKind::Inconclusive;
    v.premises.failed = "n-bound";
    return v;
  }
  v.premises.n_bound_ok = true;
  if (ore_cycle_check(g)) {
    v.kind = VerdictKind::CertifiedHamiltonianCycle;
    attach_hamiltonian_certificate(g, v, HamMode::Cycle);
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.premises.failed = "degree-sum";
  }
  return v;
}

Verdict chvatal_verdict(const Graph& g, int k, HamMode mode) {
  Verdict v;
  v.theorem = mode == HamMode::Cycle ? "chvatal-cycle" : "chvatal-path";
  v.premises.k = k;
  v.premises.n = g.n();
  if ((mode == HamMode::Cycle && g.n() < 3) || (mode == HamMode::Path && g.n() < 2)) {
    v.kind = VerdictKind::Inconclusive;
    v.premises.failed = "n-bound";
    return v;
  }
  v.premises.n_bound_ok = true;
  auto witness =
      mode == HamMode::Cycle ? chvatal_cycle_witness(g) : chvatal_path_witness(g);
  if (!witness) {
    v.kind = mode == HamMode::Cycle ? VerdictKind::CertifiedHamiltonianCycle
                                    : VerdictKind::CertifiedHamiltonianPath;
    attach_hamiltonian_certificate(g, v, mode);
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.premises.failed = "degree-witness s=" + std::to_string(witness->s);
  }
  return v;
}

int run_analyze(const AnalyzeOptions& opt) {
  std::vector<Graph> graphs;
  Rational tol;
  try {
    graphs = load_graphs(opt);
    tol = parse_rational(opt.tol);
    if (tol <= 0) throw ParseError("tolerance must be positive");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  bool want_cycle = opt.mode == "cycle" || opt.mode == "both";
  bool want_path = opt.mode == "path" || opt.mode == "both";
  if (!want_cycle && !want_path) {
    std::cerr << "error: unknown mode: " << opt.mode << "\n";
    return kExitInputError;
  }
  struct Job {
    std::string theorem;
    HamMode mode;
  };
  std::vector<Job> jobs;
  auto add = [&](const std::string& name, HamMode m) { jobs.push_back({name, m}); };
  bool all = opt.theorem == "all";
  if ((all || opt.theorem == "mtc") && want_cycle) add("mtc", HamMode::Cycle);
  if ((all || opt.theorem == "mtp") && want_path) add("mtp", HamMode::Path);
  if (all || opt.theorem == "li-ning") {
    if (want_cycle) add("li-ning", HamMode::Cycle);
    if (want_path) add("li-ning", HamMode::Path);
  }
  if ((all || opt.theorem == "ore") && want_cycle) add("ore", HamMode::Cycle);
  if (all || opt.theorem == "chvatal") {
    if (want_cycle) add("chvatal", HamMode::Cycle);
    if (want_path) add("chvatal", HamMode::Path);
  }
  if (jobs.empty()) {
    std::cerr << "error: theorem '" << opt.theorem << "' has no variant for mode '" << opt.mode
              << "'\n";
    return kExitInputError;
  }

  struct RowResult {
    std::vector<std::string> lines;
    bool inconclusive = false;
    std::string error;
  };
  std::vector<RowResult> rows(graphs.size());

  parallel_for(graphs.size(), [&](std::size_t gi) {
    const Graph& g = graphs[gi];
    RowResult& row = rows[gi];
    int k_default = g.min_degree();
    int k = opt.k.value_or(k_default);
    if (k > g.min_degree()) {
      row.error = "k=" + std::to_string(k) + " exceeds the minimum degree " +
                  std::to_string(g.min_degree());
      return;
    }
    for (const Job& job : jobs) {
      Verdict v;
      try {
        if (job.theorem == "mtc")
          v = certify_cycle(g, k, tol);
        else if (job.theorem == "mtp")
          v = certify_path(g, k, tol);
        else if (job.theorem == "li-ning")
          v = certify_li_ning(g, k, job.mode, tol);
        else if (job.theorem == "ore")
          v = ore_verdict(g, k);
        else
          v = chvatal_verdict(g, k, job.mode);
      } catch (const std::exception& e) {
        // premise rejections (e.g. k = 0 in a cycle engine) are inconclusive
        v.kind = VerdictKind::Inconclusive;
        v.theorem = job.theorem == "li-ning"
                        ? (job.mode == HamMode::Cycle ? "li-ning-cycle" : "li-ning-path")
                        : job.theorem;
        if (job.theorem == "chvatal")
          v.theorem = job.mode == HamMode::Cycle ? "chvatal-cycle" : "chvatal-path";
        v.premises.k = k;
        v.premises.n = g.n();
        v.premises.failed = e.what();
      }
      if (v.kind == VerdictKind::Inconclusive) row.inconclusive = true;
      if (opt.json) {
        row.lines.push_back(verdict_to_json(v));
      } else {
        std::ostringstream line;
        line << "graph " << gi << " " << v.theorem << ": " << verdict_kind_name(v.kind);
        if (v.exceptional) line << " (" << family_name(v.exceptional->family) << ")";
        if (!v.premises.failed.empty()) line << " [" << v.premises.failed << "]";
        if (v.certificate) {
          line << " certificate:";
          for (int u : *v.certificate) line << " " << u;
        }
        row.lines.push_back(line.str());
      }
    }
  });

  bool any_inconclusive = false;
  for (std::size_t gi = 0; gi < rows.size(); ++gi) {
    if (!rows[gi].error.empty()) {
      std::cerr << "error: graph " << gi << ": " << rows[gi].error << "\n";
      return kExitInputError;
    }
    for (const std::string& line : rows[gi].lines) std::cout << line << "\n";
    any_inconclusive = any_inconclusive || rows[gi].inconclusive;
  }
  return any_inconclusive ? kExitInconclusive : kExitOk;
}

std::string partition_json(const ExtremalSpec& spec, const Partition& p,
                           std::optional<std::pair<int, int>> deleted) {
  std::ostringstream out;
  auto list = [&](const std::vector<int>& vs) {
    out << "[";
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << "]";
  };
  out << "{\"family\":\"" << family_name(spec.family) << "\",\"k\":" << spec.k
      << ",\"n\":" << spec.n << ",\"X\":";
  list(p.X);
  out << ",\"Y\":";
  list(p.Y);
  out << ",\"Z\":";
  list(p.Z);
  out << ",\"deleted_edge\":";
  if (deleted)
    out << "[" << deleted->first << "," << deleted->second << "]";
  else
    out << "null";
  out << "}";
  return out.str();
}

int run_construct(const std::string& family, int k, int n, const std::string& delete_edge,
                  const std::string& format, const std::string& out_path) {
  auto fam = family_from_name(family);
  if (!fam) {
    std::cerr << "error: unknown family: " << family << "\n";
    return kExitInputError;
  }
  ExtremalSpec spec{*fam, k, n};
  ExtremalGraph built;
  try {
    built = build_extremal(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::optional<std::pair<int, int>> deleted;
  if (!delete_edge.empty()) {
    auto cls = edge_class_from_name(delete_edge);
    if (!cls) {
      std::cerr << "error: unknown edge class: " << delete_edge << " (use YY, YZ or ZZ)\n";
      return kExitInputError;
    }
    deleted = class_edge_representative(spec, built.partition, *cls);
    if (!deleted) {
      std::cerr << "error: the " << delete_edge << " orbit is empty for this family\n";
      return kExitInputError;
    }
    built.graph.remove_edge(deleted->first, deleted->second);
  }
  std::string payload =
      format == "edgelist" ? write_edge_list(built.graph) : write_graph6(built.graph) + "\n";
  if (format != "edgelist" && format != "graph6") {
    std::cerr << "error: unknown format: " << format << "\n";
    return kExitInputError;
  }
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitInputError;
    }
    out << payload;
    std::ofstream side(out_path + ".json", std::ios::binary);
    side << partition_json(spec, built.partition, deleted) << "\n";
  }
  return kExitOk;
}

int run_scan(const std::string& family, int k, int n_min, int n_max, const std::string& out_path,
             bool json) {
  auto fam = family_from_name(family);
  if (!fam || (*fam != Family::M && *fam != Family::N)) {
    std::cerr << "error: scan supports families M and N\n";
    return kExitInputError;
  }
  ScanResult scan;
  try {
    scan = threshold_scan(*fam, k, n_min, n_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::string csv = scan_to_csv(scan);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitInputError;
    }
    out << csv;
  }
  if (json) {
    std::cout << scan_to_json(scan) << "\n";
  } else {
    std::cout << "theorem_bound_n=" << scan.theorem_bound_n;
    if (scan.last_prop_n) std::cout << " last_proposition_n=" << *scan.last_prop_n;
    if (scan.first_theorem_n) std::cout << " crossover_n=" << *scan.first_theorem_n;
    if (scan.gap) std::cout << " gap=" << *scan.gap;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_reproduce(const std::string& suite, std::uint64_t seed) {
  if (suite != "paper") {
    std::cerr << "error: unknown suite: " << suite << "\n";
    return kExitInputError;
  }
  auto summary = acceptance::run_all(seed, std::cout);
  std::cout << acceptance::summary_json(summary) << "\n";
  return summary.all_passed() ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity certification from certified spectral bounds"};
  app.require_subcommand(1);

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "certify graphs from a file");
  analyze->add_option("input", an.input, "input file")->required();
  analyze->add_option("--format", an.format, "graph6|edgelist (default graph6)");
  int k_flag = -1;
  analyze->add_option("--k", k_flag, "theorem parameter k (default: minimum degree)");
  analyze->add_option("--mode", an.mode, "cycle|path|both (default both)");
  analyze->add_option("--theorem", an.theorem, "mtc|mtp|li-ning|ore|chvatal|all (default all)");
  analyze->add_option("--tol", an.tol, "certified interval width (default 1e-12)");
  analyze->add_flag("--json", an.json, "one JSON object per verdict");

  std::string family, delete_edge, cformat = "graph6", out_path;
  int k = 1, n = 0, n_min = 0, n_max = 0;
  auto* construct = app.add_subcommand("construct", "build an extremal family graph");
  construct->add_option("--family", family, "L|M|N|split")->required();
  construct->add_option("--k", k, "family parameter k")->required();
  construct->add_option("--n", n, "order n")->required();
  construct->add_option("--delete-edge", delete_edge, "delete one YY|YZ|ZZ orbit edge");
  construct->add_option("--format", cformat, "graph6|edgelist (default graph6)");
  construct->add_option("-o,--output", out_path, "output file (partition sidecar: FILE.json)");

  std::string sfamily, scan_out;
  int sk = 1;
  bool scan_json = false;
  auto* scan = app.add_subcommand("scan", "one-edge-deletion threshold scan");
  scan->add_option("--family", sfamily, "M|N")->required();
  scan->add_option("--k", sk, "family parameter k")->required();
  scan->add_option("--n-min", n_min, "first order")->required();
  scan->add_option("--n-max", n_max, "last order")->required();
  scan->add_option("--out", scan_out, "CSV output file (default stdout)");
  scan->add_flag("--json", scan_json, "print the scan as JSON too");

  std::string suite = "paper";
  std::uint64_t seed = 12345;
  auto* reproduce = app.add_subcommand("reproduce", "run the verification suite");
  reproduce->add_option("--suite", suite, "suite name (paper)");
  reproduce->add_option("--seed", seed, "seed for the randomized sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (analyze->parsed()) {
    if (k_flag >= 0) an.k = k_flag;
    return run_analyze(an);
  }
  if (construct->parsed()) return run_construct(family, k, n, delete_edge, cformat, out_path);
  if (scan->parsed()) return run_scan(sfamily, sk, n_min, n_max, scan_out, scan_json);
  if (reproduce->parsed()) return run_reproduce(suite, seed);
  return kExitInputError;
}
