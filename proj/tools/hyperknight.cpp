// hyperknight: classify boards, build and check knight tours.
//
// Exit codes: 0 success or tourable, 1 not tourable or violation,
// 2 usage, 3 search budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperknight/block_library.hpp"
#include "hyperknight/constructor.hpp"
#include "hyperknight/feasibility.hpp"
#include "hyperknight/sites.hpp"
#include "hyperknight/solver.hpp"
#include "hyperknight/tour_io.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    if (part.empty()) throw UsageError("empty number in '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + part + "'");
    }
    if (used != part.size()) throw UsageError("not a number: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

// "6x6x2", "6 6 2" and "6x6 2" all give {6, 6, 2}.
std::vector<int> parse_dims(const std::vector<std::string>& args) {
  std::vector<int> dims;
  for (const auto& a : args) {
    for (int d : parse_list(a, 'x')) dims.push_back(d);
  }
  if (dims.empty()) throw UsageError("no dimensions given");
  return dims;
}

hk::Cell parse_cell(const std::string& text) { return parse_list(text, ','); }

hk::CellEdge parse_edge(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("edge must look like 1,1:2,3");
  return {parse_cell(text.substr(0, colon)), parse_cell(text.substr(colon + 1))};
}

json cell_json(const hk::BoardSpec& b, hk::CellId id) { return b.cell_at(id); }

json verdict_json(const hk::Verdict& v) {
  return {{"tourable", v.tourable},
          {"reason", std::string(hk::to_string(v.reason))},
          {"theorem", std::string(hk::to_string(v.theorem))}};
}

json site_json(const hk::Tour& t, const hk::Site& s) {
  json support = json::array();
  for (hk::CellId c : s.support) support.push_back(cell_json(t.board(), c));
  return {{"kind", std::string(hk::to_string(s.kind))},
          {"orientation", std::string(hk::to_string(s.orientation))},
          {"edge_n", s.pos_n + 1},
          {"edge_m", s.pos_m + 1},
          {"axis", s.axis + 1},
          {"magnitude", s.magnitude},
          {"support", support}};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    hk::write_text_file(path, text);
  }
}

// Renders a verified tour; nothing is written for a tour that fails verify.
std::string render(const hk::Tour& t, const std::string& format, const json& meta) {
  if (auto v = hk::verify(t)) {
    throw hk::Error(hk::ErrorCode::Verification, "refusing to write tour: " + v->detail);
  }
  if (format == "grid") return hk::export_grid(t);
  return hk::export_json(t, meta);
}

int cmd_classify(const std::vector<int>& dims, int alpha, int beta) {
  const hk::MoveParams mp(alpha, beta);
  const hk::BoardSpec b(dims);
  json out = {{"dims", dims}, {"alpha", alpha}, {"beta", beta}};
  bool yes = false;
  if (mp.classical()) {
    const hk::Verdict v = hk::classify_nd(b);
    out["verdict"] = verdict_json(v);
    yes = v.tourable;
  } else {
    const bool coprime = hk::coprime_necessity(mp);
    const bool connected = hk::is_connected(b, mp);
    out["coprime_condition"] = coprime;
    out["connected"] = connected;
    if (b.rank() == 2) out["knuth_connected"] = hk::knuth_connectivity_2d(dims[0], dims[1], mp);
    out["note"] = "necessary conditions only; use solve for a witness";
    yes = coprime && connected;
  }
  std::cout << out.dump(2) << '\n';
  return yes ? kOk : kNo;
}

int cmd_construct(const std::vector<int>& dims, const std::string& path,
                  const std::string& format) {
  const hk::BoardSpec b(dims);
  hk::Constructor c;
  try {
    const hk::SitedTour st = c.build(b);
    json meta = {{"generator", "hyperknight construct"}, {"trace", c.trace()}};
    emit(render(st.tour, format, meta), path);
    return kOk;
  } catch (const hk::NotTourableError& e) {
    std::cout << json{{"dims", dims}, {"verdict", verdict_json(e.verdict())}}.dump(2) << '\n';
    return kNo;
  }
}

int cmd_verify(const std::string& path) {
  const hk::TourDocument doc = hk::import_json(hk::read_text_file(path), false);
  if (auto v = hk::verify(doc.tour)) {
    std::cout << "violation: " << hk::to_string(v->kind) << ": " << v->detail << '\n';
    return kNo;
  }
  std::cout << "ok: " << doc.tour.size() << " cells, " << (doc.tour.closed() ? "closed" : "open")
            << '\n';
  return kOk;
}

int cmd_sites(const std::string& path, bool disjoint) {
  const hk::TourDocument doc = hk::import_json(hk::read_text_file(path));
  const hk::Tour& t = doc.tour;
  json out = json::array();
  if (disjoint) {
    const auto sites = hk::find_sites(t, t.moves().alpha());
    auto pair = hk::disjoint_site_pair(sites);
    if (!pair) {
      std::cout << out.dump() << '\n';
      return kNo;
    }
    out.push_back(site_json(t, pair->first));
    out.push_back(site_json(t, pair->second));
  } else {
    for (const auto& s : hk::find_sites(t)) out.push_back(site_json(t, s));
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

struct SolveOptions {
  int alpha = 2;
  int beta = 1;
  bool open = false;
  std::string start;
  std::string end;
  std::vector<std::string> required;
  long budget_ms = 60'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string output;
  std::string format = "json";
};

int cmd_solve(const std::vector<int>& dims, const SolveOptions& o) {
  const hk::BoardSpec b(dims);
  const hk::MoveParams mp(o.alpha, o.beta);
  hk::SearchConstraints c;
  c.closed = !o.open;
  if (!o.start.empty()) c.start = parse_cell(o.start);
  if (!o.end.empty()) c.end = parse_cell(o.end);
  for (const auto& e : o.required) c.required_edges.push_back(parse_edge(e));
  hk::SearchBudget budget;
  budget.time_limit = std::chrono::milliseconds(o.budget_ms);
  budget.seed = o.seed;
  budget.workers = o.workers;
  const auto t0 = std::chrono::steady_clock::now();
  const hk::SearchResult r = hk::solve(b, mp, c, budget);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json out = {{"dims", dims},
              {"status", std::string(hk::to_string(r.status))},
              {"nodes", r.nodes},
              {"seconds", secs}};
  json certs = json::array();
  for (const auto& cert : r.certificates) {
    json j = {{"kind", std::string(hk::to_string(cert.kind))}, {"detail", cert.detail}};
    if (cert.cell) j["cell"] = *cert.cell;
    certs.push_back(j);
  }
  if (!certs.empty()) out["certificates"] = certs;
  if (r.tour) {
    json meta = {{"generator", "hyperknight solve"}, {"seed", o.seed}, {"nodes", r.nodes}};
    const std::string text = render(*r.tour, o.format, meta);
    if (o.output.empty()) {
      out["tour"] = o.format == "grid" ? json(text) : json::parse(text);
    } else {
      hk::write_text_file(o.output, text);
      out["written"] = o.output;
    }
  }
  std::cout << out.dump(2) << '\n';
  switch (r.status) {
    case hk::SearchStatus::Found: return kOk;
    case hk::SearchStatus::ProvedNone: return kNo;
    case hk::SearchStatus::Exhausted: return kExhausted;
  }
  return kExhausted;
}

int cmd_regenerate(const std::string& dir, const std::string& only) {
  const auto names = hk::BaseBlockLibrary::regenerate(
      dir, only.empty() ? std::nullopt : std::optional<std::string>(only));
  for (const auto& n : names) std::cout << "wrote " << n << '\n';
  return kOk;
}

int cmd_bench(long max_cells) {
  static const std::vector<std::vector<int>> boards = {
      {8, 8},       {30, 30},        {100, 100},        {6, 6, 6},      {10, 10, 10},
      {6, 6, 6, 6}, {8, 8, 8, 8},    {8, 8, 8, 8, 8},   {4, 5, 6, 7, 8}, {10, 10, 10, 10, 10},
      {8, 8, 8, 8, 8, 32}};
  std::printf("%-22s %10s %10s %10s %12s\n", "board", "cells", "build_ms", "verify_ms",
              "cells/s");
  int status = kOk;
  for (const auto& d : boards) {
    const hk::BoardSpec b(d);
    if (b.cell_count() > static_cast<std::uint64_t>(max_cells)) continue;
    hk::Constructor c;
    const auto t0 = std::chrono::steady_clock::now();
    const hk::SitedTour st = c.build(b);
    const auto t1 = std::chrono::steady_clock::now();
    const bool ok = !hk::verify(st.tour);
    const auto t2 = std::chrono::steady_clock::now();
    const double build = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double check = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::string name;
    for (std::size_t i = 0; i < d.size(); ++i) name += (i ? "x" : "") + std::to_string(d[i]);
    std::printf("%-22s %10u %10.1f %10.1f %12.0f%s\n", name.c_str(), b.cell_count(), build,
                check, b.cell_count() / ((build + check) / 1000.0 + 1e-9), ok ? "" : "  FAILED");
    if (!ok) status = kNo;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knight tours on n-dimensional boards"};
  app.require_subcommand(1);

  std::vector<std::string> dims_args;
  int alpha = 2;
  int beta = 1;

  auto* classify = app.add_subcommand("classify", "Decide whether a closed tour exists");
  classify->add_option("dims", dims_args, "Board dimensions, e.g. 6x6x2")->required();
  classify->add_option("--alpha", alpha, "Long leg of the move")->check(CLI::PositiveNumber);
  classify->add_option("--beta", beta, "Short leg of the move")->check(CLI::PositiveNumber);

  std::string output;
  std::string format = "json";
  auto* construct = app.add_subcommand("construct", "Build a verified closed tour");
  construct->add_option("dims", dims_args, "Board dimensions")->required();
  construct->add_option("-o,--output", output, "Output file (default stdout)");
  construct->add_option("--format", format, "json or grid")
      ->check(CLI::IsMember({"json", "grid"}));

  std::string file;
  auto* verify = app.add_subcommand("verify", "Check a tour file");
  verify->add_option("file", file, "Tour JSON")->required();

  bool disjoint = false;
  auto* sites = app.add_subcommand("sites", "List the sites of a closed tour");
  sites->add_option("file", file, "Tour JSON")->required();
  sites->add_flag("--disjoint", disjoint, "Only the first pair with disjoint supports");

  SolveOptions so;
  bool closed_flag = false;
  auto* solve = app.add_subcommand("solve", "Exhaustive search for a tour");
  solve->add_option("dims", dims_args, "Board dimensions")->required();
  solve->add_option("--alpha", so.alpha)->check(CLI::PositiveNumber);
  solve->add_option("--beta", so.beta)->check(CLI::PositiveNumber);
  auto* closed_opt = solve->add_flag("--closed", closed_flag, "Closed tour (default)");
  solve->add_flag("--open", so.open, "Open tour")->excludes(closed_opt);
  solve->add_option("--start", so.start, "Start cell, e.g. 1,1");
  solve->add_option("--end", so.end, "End cell");
  solve->add_option("--require-edge", so.required, "Edge that must be used, e.g. 1,1:2,3");
  solve->add_option("--budget-ms", so.budget_ms, "Time budget")->check(CLI::PositiveNumber);
  solve->add_option("--seed", so.seed, "Tie-break seed");
  solve->add_option("--workers", so.workers, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", so.output, "Write the tour here");
  solve->add_option("--format", so.format)->check(CLI::IsMember({"json", "grid"}));

  std::string only;
  std::string dir;
  auto* blocks = app.add_subcommand("blocks", "Base block library");
  blocks->require_subcommand(1);
  auto* regen = blocks->add_subcommand("regenerate", "Re-derive blocks into the block directory");
  regen->add_option("--only", only, "Single block name");
  regen->add_option("--dir", dir, "Directory (default $HYPERKNIGHT_BLOCK_DIR or ./blocks)");

  long max_cells = 40'000;
  auto* bench = app.add_subcommand("bench", "Construction and verification timings");
  bench->add_option("--max-cells", max_cells, "Skip larger boards")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(parse_dims(dims_args), alpha, beta);
    if (*construct) return cmd_construct(parse_dims(dims_args), output, format);
    if (*verify) return cmd_verify(file);
    if (*sites) return cmd_sites(file, disjoint);
    if (*solve) return cmd_solve(parse_dims(dims_args), so);
    if (*regen) {
      if (dir.empty()) {
        const char* env = std::getenv("HYPERKNIGHT_BLOCK_DIR");
        dir = env && *env ? env : "blocks";
      }
      return cmd_regenerate(dir, only);
    }
    if (*bench) return cmd_bench(max_cells);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hk::Error& e) {
    std::cerr << "error (" << hk::to_string(e.code()) << "): " << e.what() << '\n';
    switch (e.code()) {
      case hk::ErrorCode::InvalidBoard:
      case hk::ErrorCode::InvalidMoves:
      case hk::ErrorCode::DimensionTooSmall:
      case hk::ErrorCode::Shape:
      case hk::ErrorCode::OutOfBounds:
      case hk::ErrorCode::UnsupportedInput:
      case hk::ErrorCode::ConstraintConflict:
        return kUsage;
      default:
        return kNo;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNo;
  }
  return kUsage;
}
