#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/instance.hpp"
#include "tkit/knapsack.hpp"
#include "tkit/kthreshold.hpp"
#include "tkit/rational.hpp"
#include "tkit/threshold.hpp"

namespace tkit::io {

using Json = nlohmann::json;

/// Non-blank, non-comment lines with their 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) {
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines_.emplace_back(no, line.substr(first));
    }
  }

  bool done() const noexcept { return pos_ >= lines_.size(); }
  const std::string& peek() const { return lines_.at(pos_).second; }
  std::size_t line_number() const { return done() ? last_line() : lines_[pos_].first; }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().first; }

  std::pair<std::size_t, std::istringstream> next() {
    const auto& [no, text] = lines_.at(pos_++);
    return {no, std::istringstream(text)};
  }

  /// First whitespace-separated token of the next line, or "".
  std::string peek_token() const {
    if (done()) return {};
    std::istringstream s(peek());
    std::string t;
    s >> t;
    return t;
  }

 private:
  std::vector<std::pair<std::size_t, std::string>> lines_;
  std::size_t pos_ = 0;
};

namespace detail {

inline long long read_int(std::istringstream& s, std::size_t line, const char* what) {
  long long v;
  if (!(s >> v)) throw ParseError(std::string("expected ") + what, line);
  return v;
}

inline void expect_end(std::istringstream& s, std::size_t line) {
  std::string extra;
  if (s >> extra) throw ParseError("unexpected token '" + extra + "'", line);
}

}  // namespace detail

/// Reads `p <n> <m>` followed by exactly m lines `e <u> <v>` with 1 <= u < v <= n.
inline Graph read_graph(LineReader& r) {
  if (r.done()) throw ParseError("missing 'p <n> <m>' header", r.last_line() + 1);
  auto [hl, header] = r.next();
  std::string tag;
  header >> tag;
  if (tag != "p") throw ParseError("expected 'p <n> <m>' header", hl);
  const long long n = detail::read_int(header, hl, "vertex count");
  const long long m = detail::read_int(header, hl, "edge count");
  detail::expect_end(header, hl);
  if (n < 0 || m < 0) throw ParseError("negative count in header", hl);
  if (m > n * (n - 1) / 2) throw ParseError("more edges than vertex pairs", hl);

  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (r.done() || r.peek_token() != "e")
      throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i), r.line_number());
    auto [el, edge] = r.next();
    edge >> tag;
    const long long u = detail::read_int(edge, el, "edge endpoint");
    const long long v = detail::read_int(edge, el, "edge endpoint");
    detail::expect_end(edge, el);
    if (!(1 <= u && u < v && v <= n)) throw ParseError("edge must satisfy 1 <= u < v <= " + std::to_string(n), el);
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) throw ParseError("duplicate edge", el);
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

inline Graph parse_graph(std::istream& in) {
  LineReader r(in);
  Graph g = read_graph(r);
  if (!r.done()) throw ParseError("trailing content after graph", r.line_number());
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

inline bool is_bit_string(const std::string& token) {
  return !token.empty() && token.find_first_not_of("01") == std::string::npos;
}

/// A bit-string line, optionally followed by `v <v(1)> ... <v(n)>`.
inline CreationSequence read_sequence(LineReader& r) {
  if (r.done()) throw ParseError("missing creation sequence", r.last_line() + 1);
  auto [bl, bits_line] = r.next();
  std::string bits;
  bits_line >> bits;
  if (!is_bit_string(bits)) throw ParseError("expected a 0/1 creation sequence", bl);
  detail::expect_end(bits_line, bl);
  std::vector<Vertex> vmap;
  if (r.peek_token() == "v") {
    auto [vl, vline] = r.next();
    std::string tag;
    vline >> tag;
    long long v;
    while (vline >> v) vmap.push_back(static_cast<Vertex>(v));
    detail::expect_end(vline, vl);
    try {
      return CreationSequence(bits, std::move(vmap));
    } catch (const FormatError& e) {
      throw ParseError(e.what(), vl);
    }
  }
  try {
    return CreationSequence(bits);
  } catch (const FormatError& e) {
    throw ParseError(e.what(), bl);
  }
}

inline CreationSequence parse_sequence(std::istream& in) {
  LineReader r(in);
  CreationSequence cs = read_sequence(r);
  if (!r.done()) throw ParseError("trailing content after creation sequence", r.line_number());
  return cs;
}

inline void write_sequence(std::ostream& out, const CreationSequence& cs) {
  out << cs.bit_string() << "\nv";
  for (Vertex v : cs.vmap()) out << ' ' << v;
  out << '\n';
}

/// `k <k>` followed by k blocks, each a creation sequence or a graph that
/// must be threshold.
inline ThresholdCover read_cover(LineReader& r) {
  if (r.done()) throw ParseError("missing 'k <k>' header", r.last_line() + 1);
  auto [kl, header] = r.next();
  std::string tag;
  header >> tag;
  if (tag != "k") throw ParseError("expected 'k <k>' header", kl);
  const long long k = detail::read_int(header, kl, "member count");
  detail::expect_end(header, kl);
  if (k < 1) throw ParseError("cover needs at least one member", kl);

  std::vector<CreationSequence> members;
  std::optional<std::size_t> n;
  for (long long i = 0; i < k; ++i) {
    const std::size_t at = r.line_number();
    CreationSequence cs;
    if (r.peek_token() == "p") {
      const Graph g = read_graph(r);
      auto rec = recognize_threshold(g);
      if (!std::holds_alternative<CreationSequence>(rec))
        throw ParseError("cover member " + std::to_string(i + 1) + " is not a threshold graph", at);
      cs = std::get<CreationSequence>(std::move(rec));
    } else {
      cs = read_sequence(r);
    }
    if (n && *n != cs.size())
      throw ParseError("cover member " + std::to_string(i + 1) + " has " + std::to_string(cs.size()) +
                           " vertices, expected " + std::to_string(*n),
                       at);
    n = cs.size();
    members.push_back(std::move(cs));
  }
  return ThresholdCover(*n, std::move(members));
}

inline ThresholdCover parse_cover(std::istream& in) {
  LineReader r(in);
  ThresholdCover c = read_cover(r);
  if (!r.done()) throw ParseError("trailing content after cover", r.line_number());
  return c;
}

inline void write_cover(std::ostream& out, const ThresholdCover& cover) {
  out << "k " << cover.k() << '\n';
  for (const auto& m : cover.members()) write_sequence(out, m);
}

/// Any of the three text inputs, told apart by the first token.
using TextInput = std::variant<Graph, CreationSequence, ThresholdCover>;

inline TextInput parse_text_input(std::istream& in) {
  LineReader r(in);
  const std::string token = r.peek_token();
  TextInput result;
  if (token == "p")
    result = read_graph(r);
  else if (token == "k")
    result = read_cover(r);
  else if (is_bit_string(token))
    result = read_sequence(r);
  else
    throw ParseError("expected a graph ('p'), a cover ('k') or a creation sequence", r.line_number());
  if (!r.done()) throw ParseError("trailing content", r.line_number());
  return result;
}

inline void write_set(std::ostream& out, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '\n';
}

inline void write_family(std::ostream& out, const SetFamily& f) {
  for (const auto& s : f) write_set(out, s);
}

// ---- JSON ----

namespace detail {

inline Rational json_rational(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return parse_rational(j.dump());
  } catch (const FormatError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number or a decimal string");
}

inline const Json& field(const Json& obj, const char* a, const char* b, const std::string& where) {
  if (obj.contains(a)) return obj.at(a);
  if (obj.contains(b)) return obj.at(b);
  throw ParseError(where + ": missing \"" + a + "\" (or \"" + b + "\")");
}

}  // namespace detail

inline Json parse_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

/// Instance JSON. Plural forms ("capacities", "sizes") give d dimensions;
/// singular forms ("capacity", "size") give one. Missing ids default to a<j>
/// and missing profits to 1.
inline DkpInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  DkpInstance inst;
  const Json& caps = detail::field(j, "capacities", "capacity", "instance");
  if (caps.is_array()) {
    for (std::size_t i = 0; i < caps.size(); ++i)
      inst.capacities.push_back(detail::json_rational(caps[i], "capacities[" + std::to_string(i) + "]"));
  } else {
    inst.capacities.push_back(detail::json_rational(caps, "capacity"));
  }
  if (!j.contains("items") || !j.at("items").is_array()) throw ParseError("instance: missing \"items\" array");
  const Json& items = j.at("items");
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Json& it = items[k];
    const std::string where = "items[" + std::to_string(k) + "]";
    if (!it.is_object()) throw ParseError(where + ": expected an object");
    DkpItem item;
    item.id = it.contains("id") ? it.at("id").get<std::string>() : default_item_id(k + 1);
    item.profit = it.contains("profit") ? detail::json_rational(it.at("profit"), where + ".profit") : Rational(1);
    const Json& sizes = detail::field(it, "sizes", "size", where);
    if (sizes.is_array()) {
      for (std::size_t i = 0; i < sizes.size(); ++i)
        item.sizes.push_back(detail::json_rational(sizes[i], where + ".sizes[" + std::to_string(i) + "]"));
    } else {
      item.sizes.push_back(detail::json_rational(sizes, where + ".size"));
    }
    inst.items.push_back(std::move(item));
  }
  try {
    inst.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return inst;
}

inline DkpInstance parse_instance(std::istream& in) { return instance_from_json(parse_json(in)); }

inline DkpInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline KpInstance kp_from_json(const Json& j) {
  const DkpInstance d = instance_from_json(j);
  if (d.dimensions() != 1) throw ParseError("expected a one-dimensional instance");
  return dimension_view(d, 0);
}

inline Json to_json(const KpInstance& inst) {
  Json items = Json::array();
  for (const auto& it : inst.items)
    items.push_back({{"id", it.id}, {"profit", to_string(it.profit)}, {"size", to_string(it.size)}});
  return {{"capacity", to_string(inst.capacity)}, {"items", items}};
}

inline Json to_json(const DkpInstance& inst) {
  Json caps = Json::array();
  for (const auto& c : inst.capacities) caps.push_back(to_string(c));
  Json items = Json::array();
  for (const auto& it : inst.items) {
    Json sizes = Json::array();
    for (const auto& s : it.sizes) sizes.push_back(to_string(s));
    items.push_back({{"id", it.id}, {"profit", to_string(it.profit)}, {"sizes", sizes}});
  }
  return {{"capacities", caps}, {"items", items}};
}

namespace detail {

template <typename Instance>
Json id_list(const Instance& inst, const VertexSet& s) {
  Json ids = Json::array();
  for (Vertex v : s) ids.push_back(inst.items.at(static_cast<std::size_t>(v - 1)).id);
  return ids;
}

}  // namespace detail

template <typename Instance>
Json solution_to_json(const Instance& inst, const Solution& sol) {
  Json totals = Json::array();
  for (const auto& t : sol.dimension_totals) totals.push_back(to_string(t));
  return {{"chosen", detail::id_list(inst, sol.chosen)}, {"profit", to_string(sol.profit)}, {"dimension_totals", totals}};
}

template <typename Instance>
Json report_to_json(const Instance& inst, const EquivalenceReport& r) {
  Json j{{"equivalent", r.equivalent}, {"conflict_graph", graph_to_string(r.conflict_graph)}};
  j["witness"] = r.witness ? detail::id_list(inst, *r.witness) : Json(nullptr);
  return j;
}

}  // namespace tkit::io
