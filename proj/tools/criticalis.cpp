// criticalis: command-line front end for critical ideals and algebraic co-rank.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "criticalis/criticalis.hpp"

namespace {

using namespace criticalis;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kBudget = 3, kAllSkipped = 4 };

struct RunConfig {
  std::string ring = "Z";
  std::string order = "degrevlex";
  std::size_t max_pairs = 5'000'000;
  std::uint32_t max_degree = 64;
  std::size_t jobs = 1;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t point_budget = 4000;
  bool no_certificates = false;
  bool timing = false;

  Ring parsed_ring() const { return Ring::parse(ring); }

  CorankOptions corank() const {
    CorankOptions o;
    o.gb.order = MonomialOrder::parse(order);
    o.gb.max_pairs = max_pairs;
    o.gb.max_degree = max_degree;
    o.point_budget = point_budget;
    o.certificates = !no_certificates;
    o.seed = seed;
    return o;
  }

  bool as_json() const { return format == "json"; }
};

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    if (!on_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::size_t to_size(const std::string& s) {
  try {
    std::size_t pos = 0;
    auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("expected a nonnegative integer, got '" + s + "'");
  }
}

Graph family_graph(const std::string& desc) {
  auto parts = split(desc, ':');
  if (parts.empty()) throw ParseError("empty family description");
  const auto& name = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw ParseError("family:" + name + " needs more parameters");
    return to_size(parts[i]);
  };
  if (name == "path") return family::path(arg(1));
  if (name == "cycle") return family::cycle(arg(1));
  if (name == "complete") return family::complete(arg(1));
  if (name == "trivial") return family::trivial(arg(1));
  if (name == "threshold") return family::threshold(arg(1));
  if (name == "hypercube3") return family::hypercube3();
  if (name == "bipartite") return complete_bipartite(arg(1), arg(2));
  throw ParseError("unknown family '" + name + "'");
}

bool looks_like_graph6(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.starts_with(">>graph6<<")) return true;
    return line.find_first_of(" \t") == std::string::npos && !std::isdigit(static_cast<unsigned char>(line[0])) &&
           line.rfind("n", 0) != 0;
  }
  return false;
}

/// builtin:NAME, family:NAME:ARGS, g6:STRING, '-' for stdin, or a file path.
Graph load_graph(const std::string& source, const std::string& format) {
  if (source.starts_with("builtin:")) return builtin::by_name(source);
  if (source.starts_with("family:")) return family_graph(source.substr(7));
  if (source.starts_with("g6:")) return parse_graph6(source.substr(3));
  std::string text;
  if (source == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open graph file '" + source + "'");
    text = read_all(in);
  }
  bool g6 = format == "graph6" || (format == "auto" && (source.ends_with(".g6") || looks_like_graph6(text)));
  if (g6) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#') return parse_graph6(line);
    throw ParseError("no graph6 line in '" + source + "'");
  }
  return parse_edgelist(text);
}

std::map<std::size_t, std::int64_t> parse_evaluation(const Graph& g, const std::string& text) {
  std::map<std::size_t, std::int64_t> fixed;
  for (auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("evaluation item '" + item + "' lacks '='");
    auto v = g.index_of(parse_vertex(item.substr(0, eq)));
    try {
      fixed[v] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("bad value in evaluation item '" + item + "'");
    }
  }
  return fixed;
}

json generators_json(const Ideal& ideal) {
  json arr = json::array();
  for (const auto& p : ideal.generators) arr.push_back(p.to_string());
  return arr;
}

void print_generators(const Ideal& ideal) {
  if (ideal.generators.empty()) std::cout << "  0\n";
  for (const auto& p : ideal.generators) std::cout << "  " << p.to_string() << "\n";
}

void emit_ideal_record(const RunConfig& cfg, const std::string& id, std::size_t index, const Ideal& ideal, bool trivial,
                       std::optional<std::size_t> gamma, long long ms) {
  if (cfg.as_json()) {
    json j;
    j["graph"] = id;
    j["ring"] = ideal.ring.to_string();
    j["index"] = index;
    j["generators"] = generators_json(ideal);
    j["trivial"] = trivial;
    if (gamma) j["gamma"] = *gamma;
    j["timing_ms"] = ms;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "graph=" << id << "\nring=" << ideal.ring.to_string() << "\nindex=" << index
            << "\ntrivial=" << (trivial ? "true" : "false") << "\n";
  if (gamma) std::cout << "gamma=" << *gamma << "\n";
  std::cout << "generators:\n";
  print_generators(ideal);
}

// ------------------------------------------------------------- commands

int cmd_corank(const RunConfig& cfg, const std::string& source, const std::string& format, const std::string& twin,
               bool check, bool generators) {
  Stopwatch sw(cfg.timing);
  Graph g = load_graph(source, format);
  Ring ring = cfg.parsed_ring();
  auto opt = cfg.corank();
  CorankReport rep;
  std::map<std::size_t, std::int64_t> fixed;
  if (!twin.empty()) {
    auto d = parse_twin_vector(twin);
    fixed = phi(g, d);
    rep = corank_blowup(g, d, ring, opt, check);
  } else {
    rep = corank(g, ring, opt);
  }
  Ideal ideal = Ideal::zero(ring);
  if (generators && rep.first_nontrivial)
    ideal = minors_ideal(LaplacianForm::of(g, ring).evaluate(fixed), *rep.first_nontrivial);
  if (cfg.as_json()) {
    json j;
    j["graph"] = source;
    j["ring"] = ring.to_string();
    j["index"] = rep.first_nontrivial ? json(*rep.first_nontrivial) : json(nullptr);
    j["generators"] = generators_json(ideal);
    j["trivial"] = false;
    j["gamma"] = rep.gamma;
    if (!twin.empty()) j["twin"] = parse_twin_vector(twin).to_string();
    j["evidence"] = to_string(rep.nontrivial_evidence);
    j["timing_ms"] = sw.ms();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "gamma=" << rep.gamma << "\n";
    if (rep.first_nontrivial) std::cout << "first_nontrivial=" << *rep.first_nontrivial << "\n";
    else std::cout << "first_nontrivial=none\n";
    std::cout << "ring=" << ring.to_string() << "\nevidence=" << to_string(rep.nontrivial_evidence) << "\n";
    if (generators && rep.first_nontrivial) {
      std::cout << "generators:\n";
      print_generators(ideal);
    }
  }
  return kOk;
}

int cmd_ideal(const RunConfig& cfg, const std::string& source, const std::string& format, std::size_t index,
              const std::string& eval) {
  Stopwatch sw(cfg.timing);
  Graph g = load_graph(source, format);
  Ring ring = cfg.parsed_ring();
  if (index < 1) throw InvalidArgument("critical ideal index must be at least 1");
  LaplacianForm L = LaplacianForm::of(g, ring);
  if (!eval.empty()) L = L.evaluate(parse_evaluation(g, eval));
  Ideal ideal = minors_ideal(L, index);
  bool trivial = is_trivial_ideal(ideal, cfg.corank().gb);
  emit_ideal_record(cfg, source, index, ideal, trivial, std::nullopt, sw.ms());
  return kOk;
}

int cmd_blowup(const RunConfig& cfg, const std::string& source, const std::string& format, const std::string& twin,
               std::size_t superset, const std::string& emit) {
  Stopwatch sw(cfg.timing);
  Graph g = load_graph(source, format);
  auto d = parse_twin_vector(twin);
  if (superset > 0) {
    Ring ring = cfg.parsed_ring();
    Ideal ideal = blowup_ideal_superset(g, d, superset, ring);
    emit_ideal_record(cfg, source, superset, ideal, is_trivial_ideal(ideal, cfg.corank().gb), std::nullopt, sw.ms());
    return kOk;
  }
  Graph labelled = blowup(g, d);
  Graph b(labelled.size());
  std::string legend;
  for (std::size_t u = 0; u < b.size(); ++u) {
    legend += "# v" + std::to_string(u + 1) + " = " + to_string(labelled.vertex(u)) + "\n";
    for (std::size_t w = 0; w < b.size(); ++w)
      if (w != u && labelled.weight(u, w) != 0) b.set_weight(u, w, labelled.weight(u, w));
  }
  if (cfg.as_json()) {
    json j;
    j["graph"] = source;
    j["twin"] = d.to_string();
    j["vertices"] = b.size();
    j["edgelist"] = to_edgelist(b);
    if (b.is_simple()) j["graph6"] = to_graph6(b);
    j["timing_ms"] = sw.ms();
    std::cout << j.dump() << "\n";
  } else if (emit == "graph6") {
    if (!b.is_simple()) throw InvalidArgument("graph6 output needs a simple graph");
    std::cout << to_graph6(b) << "\n";
  } else {
    std::cout << legend << to_edgelist(b);
  }
  return kOk;
}

int cmd_twin(const RunConfig& cfg, const std::string& source, const std::string& format, const std::string& vertex,
             const std::string& kind_name, const std::string& mode, std::size_t copies, std::size_t index, std::size_t k,
             std::size_t i) {
  Stopwatch sw(cfg.timing);
  Graph g = load_graph(source, format);
  Ring ring = cfg.parsed_ring();
  auto opt = cfg.corank();
  std::size_t v = g.index_of(parse_vertex(vertex));
  TwinKind kind;
  if (kind_name == "dup" || kind_name == "duplicate") kind = TwinKind::duplicate;
  else if (kind_name == "rep" || kind_name == "replicate") kind = TwinKind::replicate;
  else throw ParseError("twin kind must be dup or rep");
  Ideal ideal;
  std::size_t idx = 0;
  json extra;
  if (mode == "expanded") {
    ideal = dup_rep_expanded_ideal(g, v, copies, index, kind, ring);
    idx = index;
  } else if (mode == "stabilized") {
    auto s = stabilization_constants(g, v, kind, ring, opt);
    ideal = stabilized_twin_ideal(g, v, k, i, kind, s, ring);
    idx = s.gamma_twin + k;
    extra = {{"gamma", s.gamma}, {"gamma_twin", s.gamma_twin}, {"gamma_removed", s.gamma_removed},
             {"lambda", s.lambda}, {"copies", k + s.lambda + i}};
  } else {
    throw ParseError("twin mode must be expanded or stabilized");
  }
  bool trivial = is_trivial_ideal(ideal, opt.gb);
  if (cfg.as_json()) {
    json j;
    j["graph"] = source;
    j["ring"] = ring.to_string();
    j["index"] = idx;
    j["generators"] = generators_json(ideal);
    j["trivial"] = trivial;
    if (!extra.is_null()) j["constants"] = extra;
    j["timing_ms"] = sw.ms();
    std::cout << j.dump() << "\n";
  } else {
    if (!extra.is_null())
      for (auto& [key, val] : extra.items()) std::cout << key << "=" << val.dump() << "\n";
    std::cout << "index=" << idx << "\ntrivial=" << (trivial ? "true" : "false") << "\ngenerators:\n";
    print_generators(ideal);
  }
  return kOk;
}

int cmd_closed(const RunConfig& cfg, const std::vector<std::string>& desc, bool compare) {
  Stopwatch sw(cfg.timing);
  Ring ring = cfg.parsed_ring();
  if (desc.empty()) throw ParseError("closed needs a form: complete N J | bipartite N M J | trivial K L");
  auto need = [&](std::size_t count) {
    if (desc.size() != count) throw ParseError("closed " + desc[0] + " takes " + std::to_string(count - 1) + " numbers");
  };
  Ideal ideal;
  Graph g;
  std::size_t j = 0;
  if (desc[0] == "complete") {
    need(3);
    std::size_t n = to_size(desc[1]);
    j = to_size(desc[2]);
    ideal = complete_graph_ideal(n, j, ring);
    if (compare) g = family::complete(n);
  } else if (desc[0] == "bipartite") {
    need(4);
    std::size_t n = to_size(desc[1]), m = to_size(desc[2]);
    j = to_size(desc[3]);
    ideal = bipartite_ideal(n, m, j, ring);
    if (compare) g = complete_bipartite(n, m);
  } else if (desc[0] == "trivial") {
    need(3);
    std::size_t k = to_size(desc[1]);
    j = to_size(desc[2]);
    ideal = trivial_graph_ideal(k, j, ring);
    if (compare) g = family::trivial(k);
  } else {
    throw ParseError("unknown closed form '" + desc[0] + "'");
  }
  std::optional<bool> matches;
  if (compare) matches = ideal_equal(ideal, critical_ideal_generators(g, j, ring), cfg.corank().gb);
  if (cfg.as_json()) {
    json out;
    out["graph"] = desc[0];
    out["ring"] = ring.to_string();
    out["index"] = j;
    out["generators"] = generators_json(ideal);
    out["trivial"] = is_trivial_ideal(ideal, cfg.corank().gb);
    if (matches) out["matches_direct"] = *matches;
    out["timing_ms"] = sw.ms();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "index=" << j << "\ngenerators:\n";
    print_generators(ideal);
    if (matches) std::cout << "matches_direct=" << (*matches ? "true" : "false") << "\n";
  }
  return matches && !*matches ? kFailure : kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  verify::Config vc;
  vc.corank = cfg.corank();
  vc.seed = cfg.seed;
  vc.jobs = cfg.jobs;
  vc.ring = cfg.parsed_ring();
  std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  json summary = json::array();
  for (const auto& name : names) {
    Stopwatch sw(cfg.timing);
    for (const auto& r : verify::run_suite(name, vc)) {
      ok = ok && r.passed();
      if (cfg.as_json()) {
        summary.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()},
                           {"messages", r.messages}, {"timing_ms", sw.ms()}});
      } else {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " failures=" << r.failures
                  << "\n";
        for (const auto& m : r.messages) std::cout << "  " << m << "\n";
      }
    }
  }
  if (cfg.as_json()) std::cout << json{{"ring", vc.ring.to_string()}, {"passed", ok}, {"suites", summary}}.dump() << "\n";
  return ok ? kOk : kFailure;
}

int cmd_scan(const RunConfig& cfg, const std::string& conjecture, const std::string& input, const std::string& output) {
  scan::ScanOptions so;
  so.conjecture = scan::parse_conjecture(conjecture);
  so.corank = cfg.corank();
  so.ring = cfg.parsed_ring();
  so.jobs = cfg.jobs;
  std::ofstream out;
  if (!output.empty()) {
    if (std::filesystem::exists(output)) {
      std::ifstream prev(output);
      std::string line;
      while (std::getline(prev, line)) {
        if (line.empty()) continue;
        try {
          auto j = json::parse(line);
          if (j.contains("graph6")) so.done.insert(j["graph6"].get<std::string>());
        } catch (const json::exception&) {
          std::cerr << "warning: ignoring unreadable line in " << output << "\n";
        }
      }
    }
    out.open(output, std::ios::app);
    if (!out) throw ParseError("cannot open output file '" + output + "'");
  }
  std::vector<std::string> lines;
  {
    std::string text;
    if (input.empty() || input == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream in(input);
      if (!in) throw ParseError("cannot open input file '" + input + "'");
      text = read_all(in);
    }
    lines = split(text, '\n');
  }
  auto emit = [&](const scan::ScanRecord& r) {
    json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["twin_free"] = r.twin_free;
    j["gamma"] = r.gamma;
    j["threshold"] = r.threshold;
    j["applicable"] = r.applicable;
    j["verdict"] = r.pass ? "pass" : "violation";
    if (out.is_open()) {
      out << j.dump() << "\n";
      out.flush();
    }
    if (cfg.as_json()) std::cout << j.dump() << "\n";
    else
      std::cout << r.graph6 << " n=" << r.n << " twin_free=" << (r.twin_free ? "true" : "false") << " gamma=" << r.gamma
                << " threshold=" << r.threshold << " " << (r.applicable ? (r.pass ? "pass" : "VIOLATION") : "n/a")
                << "\n";
  };
  auto s = scan::run(lines, so, emit);
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
  std::string claim = s.violations == 0
                          ? "no counterexample among " + std::to_string(s.applicable) + " applicable graphs"
                          : std::to_string(s.violations) + " counterexample(s) found";
  if (cfg.as_json()) {
    std::cout << json{{"conjecture", scan::to_string(so.conjecture)}, {"records", s.records}, {"resumed", s.resumed},
                      {"skipped", s.skipped}, {"applicable", s.applicable}, {"violations", s.violations},
                      {"summary", claim}}
                     .dump()
              << "\n";
  } else {
    std::cout << "records=" << s.records << " resumed=" << s.resumed << " skipped=" << s.skipped
              << " applicable=" << s.applicable << " violations=" << s.violations << "\n"
              << claim << "\n";
  }
  if (s.records == 0 && s.resumed == 0 && s.skipped > 0) return kAllSkipped;
  return s.violations == 0 ? kOk : kFailure;
}

int cmd_cotree(const RunConfig& cfg, const std::string& source, const std::string& format, bool with_gamma) {
  Stopwatch sw(cfg.timing);
  Graph g = load_graph(source, format);
  auto t = cotree(g);
  if (!t) {
    if (cfg.as_json()) std::cout << json{{"graph", source}, {"cograph", false}}.dump() << "\n";
    else std::cout << "cograph=false\n";
    return kFailure;
  }
  auto b = cograph_lower_bound(*t);
  std::optional<std::size_t> gamma;
  if (with_gamma) gamma = corank(g, cfg.parsed_ring(), cfg.corank()).gamma;
  if (cfg.as_json()) {
    json j{{"graph", source},           {"cograph", true},          {"cotree", t->to_string()},
           {"height", t->height()},     {"certified", b.certified}, {"from_paths", b.from_paths},
           {"recursive", b.recursive}, {"conjectured", b.conjectured}};
    if (gamma) j["gamma"] = *gamma;
    j["timing_ms"] = sw.ms();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "cotree=" << t->to_string() << "\nheight=" << t->height() << "\ncertified=" << b.certified
              << "\nconjectured=" << b.conjectured << " (conjectural, not asserted)\n";
    if (gamma) std::cout << "gamma=" << *gamma << "\n";
  }
  if (gamma && *gamma < b.certified) {
    std::cerr << "error: certified bound exceeds the computed co-rank\n";
    return kFailure;
  }
  return kOk;
}

int cmd_graphs(std::size_t n, bool connected, bool twin_free, bool trees) {
  std::vector<Graph> gs = trees ? enumerate::trees(n) : enumerate::simple_graphs(n, connected);
  for (const auto& g : gs)
    if (!twin_free || is_twin_free(g)) std::cout << to_graph6(g) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical ideals and algebraic co-rank of signed multidigraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");
  RunConfig cfg;
  app.add_option("--ring", cfg.ring, "Coefficient ring: Z or Z/p");
  app.add_option("--order", cfg.order, "Monomial order: degrevlex, lex or grlex");
  app.add_option("--max-pairs", cfg.max_pairs, "Groebner pair budget")->envname("CRITICALIS_MAX_PAIRS")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "Groebner degree budget")->envname("CRITICALIS_MAX_DEGREE")->check(CLI::Range(1, 127));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->envname("CRITICALIS_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized suites and point searches");
  app.add_option("--point-budget", cfg.point_budget, "Points per prime in the rank-deficiency search");
  app.add_flag("--no-certificates", cfg.no_certificates, "Decide every index by Groebner bases only");
  app.add_flag("--timing", cfg.timing, "Report wall-clock timing_ms (otherwise 0)");

  std::string source, format = "auto", twin, eval, emit = "edgelist", vertex, kind = "dup", mode = "expanded";
  std::string conjecture, input, output, suite;
  std::size_t index = 0, superset = 0, copies = 1, k = 1, i = 0, n = 0;
  bool check = false, generators = false, with_gamma = false, connected = false, twin_free = false, trees = false;
  bool compare = false;
  std::vector<std::string> closed_form;

  auto add_graph = [&](CLI::App* c) {
    c->add_option("graph", source, "builtin:NAME, family:NAME:ARGS, g6:STRING, a file, or - for stdin")->required();
    c->add_option("--input-format", format, "auto, edgelist or graph6")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  };

  auto* c_corank = app.add_subcommand("corank", "Algebraic co-rank, optionally of a blowup G^d");
  add_graph(c_corank);
  c_corank->add_option("--twin", twin, "Twin vector, e.g. v1:-1,v3:2");
  c_corank->add_flag("--check", check, "Also build the blowup and require agreement");
  c_corank->add_flag("--generators", generators, "Print the first nontrivial ideal");

  auto* c_ideal = app.add_subcommand("ideal", "Critical ideal I_i");
  add_graph(c_ideal);
  c_ideal->add_option("index", index, "Index i >= 1")->required();
  c_ideal->add_option("--eval", eval, "Diagonal evaluation, e.g. v1=0,v2=-1");

  auto* c_blowup = app.add_subcommand("blowup", "Build G^d, or the superset ideal of I_j(G^d)");
  add_graph(c_blowup);
  c_blowup->add_option("--twin", twin, "Twin vector")->required();
  c_blowup->add_option("--superset", superset, "Print the superset ideal for index j");
  c_blowup->add_option("--emit", emit, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));

  auto* c_twin = app.add_subcommand("twin", "Twin-vertex ideals: expanded generator families or stabilized forms");
  add_graph(c_twin);
  c_twin->add_option("--vertex", vertex, "Vertex label, e.g. v1")->required();
  c_twin->add_option("--kind", kind, "dup or rep");
  c_twin->add_option("--mode", mode, "expanded or stabilized");
  c_twin->add_option("--copies", copies, "Copies for the expanded mode");
  c_twin->add_option("--index", index, "Index j for the expanded mode");
  c_twin->add_option("--k", k, "k for the stabilized mode");
  c_twin->add_option("--i", i, "i for the stabilized mode");

  auto* c_closed = app.add_subcommand("closed", "Closed forms: complete N J | bipartite N M J | trivial K L");
  c_closed->add_option("form", closed_form, "Form name and parameters")->required();
  c_closed->add_flag("--compare", compare, "Compare with direct minor enumeration");

  auto* c_verify = app.add_subcommand("verify", "Run an invariant suite (or all)");
  c_verify->add_option("suite", suite, "Suite name or all")->required();

  auto* c_scan = app.add_subcommand("scan", "Conjecture scan over graph6 lines");
  c_scan->add_option("conjecture", conjecture, "twinfree-bound or tree-bound")->required();
  c_scan->add_option("--input", input, "graph6 file (default stdin)");
  c_scan->add_option("--output", output, "Append JSON lines here; existing records are skipped");

  auto* c_cotree = app.add_subcommand("cotree", "Cotree and co-rank lower bounds of a cograph");
  add_graph(c_cotree);
  c_cotree->add_flag("--gamma", with_gamma, "Also compute gamma and check the certified bound");

  auto* c_graphs = app.add_subcommand("graphs", "List graphs up to isomorphism in graph6");
  c_graphs->add_option("n", n, "Vertex count")->required();
  c_graphs->add_flag("--connected", connected, "Connected graphs only");
  c_graphs->add_flag("--twin-free", twin_free, "Twin-free graphs only");
  c_graphs->add_flag("--trees", trees, "Trees only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*c_corank) return cmd_corank(cfg, source, format, twin, check, generators);
    if (*c_ideal) return cmd_ideal(cfg, source, format, index, eval);
    if (*c_blowup) return cmd_blowup(cfg, source, format, twin, superset, emit);
    if (*c_twin) return cmd_twin(cfg, source, format, vertex, kind, mode, copies, index, k, i);
    if (*c_closed) return cmd_closed(cfg, closed_form, compare);
    if (*c_verify) return cmd_verify(cfg, suite);
    if (*c_scan) return cmd_scan(cfg, conjecture, input, output);
    if (*c_cotree) return cmd_cotree(cfg, source, format, with_gamma);
    if (*c_graphs) return cmd_graphs(n, connected, twin_free, trees);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
