// Command-line front end: recognize, enumerate, convert, check, solve, bound, gen.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tkit/tkit.hpp"

namespace {

using namespace tkit;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kOracleMismatch = 3 };

struct Input {
  std::string path = "-";
  std::string text() const {
    if (path == "-") {
      std::ostringstream s;
      s << std::cin.rdbuf();
      return s.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }
};

io::TextInput read_text(const Input& in) {
  std::istringstream s(in.text());
  return io::parse_text_input(s);
}

DkpInstance read_instance(const Input& in) { return io::parse_instance(in.text()); }

void print_witness_json(const DkpInstance& inst, const std::string& message, const std::vector<int>& witness) {
  io::Json ids = io::Json::array();
  for (int v : witness) ids.push_back(inst.items.at(static_cast<std::size_t>(v - 1)).id);
  std::cout << io::Json{{"error", message}, {"witness", ids}}.dump(2) << '\n';
}

// ---- recognize ----

struct RecognizeArgs {
  Input in;
  bool witness = false;
  bool split = false;
};

int cmd_recognize(const RecognizeArgs& a) {
  const io::TextInput input = read_text(a.in);
  if (std::holds_alternative<ThresholdCover>(input)) throw ParseError("recognize expects a graph, not a cover");
  const Graph g = std::holds_alternative<Graph>(input) ? std::get<Graph>(input)
                                                       : creation_sequence_to_graph(std::get<CreationSequence>(input));
  const RecognizeOptions opts{a.witness};
  auto print_witness = [](const std::optional<ForbiddenSubgraph>& w) {
    if (!w) return;
    std::cout << "witness " << to_string(w->tag);
    for (Vertex v : w->vertices) std::cout << ' ' << v;
    std::cout << '\n';
  };
  if (a.split) {
    auto r = recognize_split(g, opts);
    if (auto* p = std::get_if<SplitPartition>(&r)) {
      std::cout << "K";
      for (Vertex v : p->clique) std::cout << ' ' << v;
      std::cout << "\nS";
      for (Vertex v : p->independent) std::cout << ' ' << v;
      std::cout << '\n';
      return kOk;
    }
    std::cout << "not split\n";
    print_witness(std::get<SplitFailure>(r).witness);
    return kNegative;
  }
  auto r = recognize_threshold(g, opts);
  if (auto* cs = std::get_if<CreationSequence>(&r)) {
    io::write_sequence(std::cout, *cs);
    return kOk;
  }
  const auto& f = std::get<RecognitionFailure>(r);
  std::cout << "not threshold\nresidual";
  for (Vertex v : f.residual) std::cout << ' ' << v;
  std::cout << '\n';
  print_witness(f.witness);
  return kNegative;
}

// ---- enumerate ----

struct EnumerateArgs {
  std::string kind;
  Input in;
  bool count_only = false;
  bool oracle = false;
  bool two = false;
};

SetFamily brute_family(const std::string& kind, const Graph& g) {
  if (kind == "mis") return oracle::brute_maximal_independent_sets(g);
  if (kind == "im") return oracle::brute_maximum_independent_sets(g);
  if (kind == "is") return oracle::brute_independent_sets(g);
  return oracle::brute_maximal_cliques(g);
}

int finish_enumeration(const EnumerateArgs& a, const SetFamily& family, const Graph& oracle_graph) {
  if (a.oracle && !(family == brute_family(a.kind, oracle_graph))) {
    std::cerr << "oracle mismatch for " << a.kind << '\n';
    return kOracleMismatch;
  }
  if (a.count_only)
    std::cout << family.size() << '\n';
  else
    io::write_family(std::cout, family);
  return kOk;
}

int enumerate_threshold(const EnumerateArgs& a, const CreationSequence& cs) {
  if (a.count_only && !a.oracle) {
    if (a.kind == "mis") std::cout << count_mis(cs) << '\n';
    if (a.kind == "im") std::cout << count_im(cs) << '\n';
    if (a.kind == "is") std::cout << count_is(cs) << '\n';
    if (a.kind == "mc") std::cout << count_mc(cs) << '\n';
    return kOk;
  }
  SetFamily family;
  if (a.kind == "mis") family = enumerate_mis(cs);
  if (a.kind == "im") family = enumerate_im(cs);
  if (a.kind == "is") family = enumerate_is(cs);
  if (a.kind == "mc") family = enumerate_max_cliques(cs);
  return finish_enumeration(a, family, creation_sequence_to_graph(cs));
}

int enumerate_cover(const EnumerateArgs& a, const ThresholdCover& cover) {
  if (cover.k() == 1) return enumerate_threshold(a, cover.member(0));
  SetFamily family;
  if (a.kind == "mis") family = a.two ? enumerate_mis_2t(cover) : enumerate_mis_k(cover);
  if (a.kind == "im") family = enumerate_im_k(cover);
  if (a.kind == "is") family = enumerate_is_k(cover);
  if (a.kind == "mc") family = enumerate_mc_intersection(cover);
  return finish_enumeration(a, family, a.kind == "mc" ? cover.intersection() : cover.covered());
}

int cmd_enumerate(const EnumerateArgs& a) {
  const io::TextInput input = read_text(a.in);
  if (const auto* cover = std::get_if<ThresholdCover>(&input)) return enumerate_cover(a, *cover);
  if (a.two) throw ContractError("--two needs a cover with two members");
  if (const auto* cs = std::get_if<CreationSequence>(&input)) return enumerate_threshold(a, *cs);
  auto r = recognize_threshold(std::get<Graph>(input));
  if (auto* cs = std::get_if<CreationSequence>(&r)) return enumerate_threshold(a, *cs);
  std::cerr << "graph is not threshold; supply a cover file ('k <k>' followed by member blocks)\n";
  return kNegative;
}

// ---- convert ----

struct ConvertArgs {
  std::string direction;
  Input in;
};

int cmd_convert(const ConvertArgs& a) {
  if (a.direction == "graph-to-kp") {
    const io::TextInput input = read_text(a.in);
    if (std::holds_alternative<ThresholdCover>(input)) throw ParseError("graph-to-kp expects a graph or sequence");
    CreationSequence cs;
    if (const auto* g = std::get_if<Graph>(&input)) {
      auto r = recognize_threshold(*g);
      if (!std::holds_alternative<CreationSequence>(r)) {
        std::cerr << "graph is not threshold\n";
        return kNegative;
      }
      cs = std::get<CreationSequence>(r);
    } else {
      cs = std::get<CreationSequence>(input);
    }
    std::cout << io::to_json(threshold_to_kp(cs)).dump(2) << '\n';
    return kOk;
  }
  const DkpInstance inst = read_instance(a.in);
  const EquivalenceReport r = check_equivalence_dkp(inst);
  io::write_graph(std::cout, r.conflict_graph);
  std::cout << (r.equivalent ? "# EQUIVALENT\n" : "# NOT EQUIVALENT\n");
  if (r.witness) {
    std::cout << "# witness";
    for (Vertex v : *r.witness) std::cout << ' ' << inst.items[static_cast<std::size_t>(v - 1)].id;
    std::cout << '\n';
  }
  return r.equivalent ? kOk : kNegative;
}

// ---- check / solve / bound ----

struct InstanceArgs {
  Input in;
  bool oracle = false;
};

int cmd_check(const InstanceArgs& a) {
  const DkpInstance inst = read_instance(a.in);
  const EquivalenceReport r = check_equivalence_dkp(inst);
  if (a.oracle && oracle::brute_check_property_Pd(inst) != r.equivalent) {
    std::cerr << "oracle mismatch: property check disagrees\n";
    return kOracleMismatch;
  }
  std::cout << io::report_to_json(inst, r).dump(2) << '\n';
  return r.equivalent ? kOk : kNegative;
}

int cmd_solve(const InstanceArgs& a) {
  const DkpInstance inst = read_instance(a.in);
  try {
    const Solution s = solve_dkp_equivalent(inst);
    if (a.oracle && oracle::brute_solve_dkp(inst).profit != s.profit) {
      std::cerr << "oracle mismatch: optimum profit differs\n";
      return kOracleMismatch;
    }
    std::cout << io::solution_to_json(inst, s).dump(2) << '\n';
    return kOk;
  } catch (const PreconditionError& e) {
    print_witness_json(inst, e.what(), e.witness());
    return kNegative;
  }
}

struct BoundArgs {
  std::string kind;
  Input in;
};

int cmd_bound(const BoundArgs& a) {
  const DkpInstance inst = read_instance(a.in);
  try {
    std::size_t bound = 0;
    if (a.kind == "bp") {
      if (inst.dimensions() != 1) throw ParseError("bp bound expects a one-dimensional instance");
      if (inst.capacities[0] != 1) throw ParseError("bp bound expects capacity 1");
      BpInstance bp;
      for (const auto& it : inst.items) bp.sizes.push_back(it.sizes[0]);
      try {
        bp.validate();
      } catch (const FormatError& e) {
        throw ParseError(e.what());
      }
      bound = bp_lower_bound(bp);
    } else if (a.kind == "dvp") {
      bound = dvp_lower_bound(inst);
    } else {
      bound = dbp_lower_bound(inst);
    }
    std::cout << bound << '\n';
    return kOk;
  } catch (const PreconditionError& e) {
    print_witness_json(inst, e.what(), e.witness());
    return kNegative;
  }
}

// ---- gen ----

struct GenArgs {
  std::string kind;
  std::size_t n = 8;
  std::uint64_t seed = 1;
  std::size_t k = 2;
  std::size_t d = 1;
};

CreationSequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = i == 0 || (rng() & 1U);
  std::vector<Vertex> vmap(n);
  std::iota(vmap.begin(), vmap.end(), 1);
  for (std::size_t i = n; i > 1; --i) std::swap(vmap[i - 1], vmap[rng() % i]);
  return CreationSequence(std::move(bits), std::move(vmap));
}

int cmd_gen(const GenArgs& a) {
  if (a.n < 1) throw ParseError("--n must be at least 1");
  std::mt19937_64 rng(a.seed);
  if (a.kind == "threshold") {
    io::write_graph(std::cout, creation_sequence_to_graph(random_sequence(rng, a.n)));
  } else if (a.kind == "cover") {
    if (a.k < 1) throw ParseError("--k must be at least 1");
    std::vector<CreationSequence> members;
    for (std::size_t i = 0; i < a.k; ++i) members.push_back(random_sequence(rng, a.n));
    io::write_cover(std::cout, ThresholdCover(std::move(members)));
  } else {
    if (a.d < 1) throw ParseError("--d must be at least 1");
    // Each dimension is an equivalent instance scaled by a random positive rational.
    DkpInstance inst;
    inst.items.resize(a.n);
    for (std::size_t j = 0; j < a.n; ++j) {
      inst.items[j].id = default_item_id(j + 1);
      inst.items[j].profit = Rational(static_cast<long long>(1 + rng() % 10));
    }
    for (std::size_t dim = 0; dim < a.d; ++dim) {
      const KpInstance kp = threshold_to_kp(random_sequence(rng, a.n));
      const Rational scale(static_cast<long long>(1 + rng() % 9), static_cast<long long>(1 + rng() % 9));
      inst.capacities.push_back(kp.capacity * scale);
      for (std::size_t j = 0; j < a.n; ++j) inst.items[j].sizes.push_back(kp.items[j].size * scale);
    }
    if (a.d == 1)
      std::cout << io::to_json(dimension_view(inst, 0)).dump(2) << '\n';
    else
      std::cout << io::to_json(inst).dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold graph and knapsack toolkit"};
  app.require_subcommand(1);

  RecognizeArgs rec;
  auto* recognize = app.add_subcommand("recognize", "Recognize a threshold (or split) graph");
  recognize->add_option("input", rec.in.path, "Graph file, '-' for stdin");
  recognize->add_flag("--witness", rec.witness, "Report a forbidden induced subgraph on failure");
  recognize->add_flag("--split", rec.split, "Recognize a split graph instead");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List maximal/maximum/all independent sets or maximal cliques");
  enumerate->add_option("kind", en.kind, "mis | im | is | mc")->required()->check(CLI::IsMember({"mis", "im", "is", "mc"}));
  enumerate->add_option("input", en.in.path, "Graph, sequence or cover file, '-' for stdin");
  enumerate->add_flag("--count-only", en.count_only, "Print only the number of sets");
  enumerate->add_flag("--oracle", en.oracle, "Cross-check against brute force (exit 3 on mismatch)");
  enumerate->add_flag("--two", en.two, "Use the 2-threshold algorithm for a two-member cover");

  ConvertArgs conv;
  auto* convert = app.add_subcommand("convert", "Convert between threshold graphs and knapsack instances");
  convert->add_option("direction", conv.direction, "graph-to-kp | kp-to-graph")
      ->required()
      ->check(CLI::IsMember({"graph-to-kp", "kp-to-graph"}));
  convert->add_option("input", conv.in.path, "Input file, '-' for stdin");

  InstanceArgs chk;
  auto* check = app.add_subcommand("check", "Check whether an instance has an equivalent graph");
  check->add_option("input", chk.in.path, "Instance JSON, '-' for stdin");
  check->add_flag("--oracle", chk.oracle, "Cross-check against brute force (exit 3 on mismatch)");

  InstanceArgs sol;
  auto* solve = app.add_subcommand("solve", "Solve an equivalent knapsack instance exactly");
  solve->add_option("input", sol.in.path, "Instance JSON, '-' for stdin");
  solve->add_flag("--oracle", sol.oracle, "Cross-check against brute force (exit 3 on mismatch)");

  BoundArgs bnd;
  auto* bound = app.add_subcommand("bound", "Clique-number lower bound for bin/vector packing");
  bound->add_option("kind", bnd.kind, "bp | dvp | dbp")->required()->check(CLI::IsMember({"bp", "dvp", "dbp"}));
  bound->add_option("input", bnd.in.path, "Instance JSON, '-' for stdin");

  GenArgs gen;
  auto* generate = app.add_subcommand("gen", "Generate a random threshold graph, cover or knapsack instance");
  generate->add_option("kind", gen.kind, "threshold | cover | kp")
      ->required()
      ->check(CLI::IsMember({"threshold", "cover", "kp"}));
  generate->add_option("--n", gen.n, "Number of vertices or items")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--k", gen.k, "Cover members")->capture_default_str();
  generate->add_option("--d", gen.d, "Knapsack dimensions")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*recognize) return cmd_recognize(rec);
    if (*enumerate) return cmd_enumerate(en);
    if (*convert) return cmd_convert(conv);
    if (*check) return cmd_check(chk);
    if (*solve) return cmd_solve(sol);
    if (*bound) return cmd_bound(bnd);
    return cmd_gen(gen);
  } catch (const tkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
