#include <fstream>
#include <sstream>

#include <json.hpp>

#include "degmc/instance.hpp"

namespace degmc {

using nlohmann::json;

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, std::string("malformed instance JSON: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    Instance inst;
    if (kind == "degree") {
      inst = DegreeInstance{j.at("d").get<std::vector<int>>()};
    } else if (kind == "bipartite") {
      inst = BipartiteInstance{j.at("r").get<std::vector<int>>(), j.at("c").get<std::vector<int>>()};
    } else if (kind == "pam") {
      PamInstance p;
      const auto classes = j.at("classes").get<std::vector<int>>();
      const auto matrix = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
      if (classes.size() != 2 || matrix.size() != 2 || matrix[0].size() != 2 || matrix[1].size() != 2)
        throw Error(ErrorKind::Input, "pam instances need two classes and a 2x2 matrix");
      if (matrix[0][1] != matrix[1][0]) throw Error(ErrorKind::Input, "matrix must be symmetric");
      p.n1 = classes[0];
      p.n2 = classes[1];
      p.c11 = matrix[0][0];
      p.c12 = matrix[0][1];
      p.c22 = matrix[1][1];
      p.d = j.at("d").get<std::vector<int>>();
      inst = p;
    } else {
      throw Error(ErrorKind::Input, "unknown instance kind: " + kind);
    }
    validate(inst);
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, std::string("instance field error: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string instance_to_json(const Instance& inst) {
  json j;
  std::visit(
      [&j](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DegreeInstance>) {
          j["kind"] = "degree";
          j["d"] = x.d;
        } else if constexpr (std::is_same_v<T, BipartiteInstance>) {
          j["kind"] = "bipartite";
          j["r"] = x.r;
          j["c"] = x.c;
        } else {
          j["kind"] = "pam";
          j["classes"] = {x.n1, x.n2};
          j["matrix"] = {{x.c11, x.c12}, {x.c12, x.c22}};
          j["d"] = x.d;
        }
      },
      inst);
  return j.dump();
}

std::uint64_t instance_hash(const Instance& inst) {
  // FNV-1a over the canonical JSON form
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : instance_to_json(inst)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

LabeledGraph read_graph(std::istream& in) {
  long n = -1;
  long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::Input, "graph header must be \"n m\"");
  LabeledGraph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long a = 0;
    long b = 0;
    if (!(in >> a >> b)) throw Error(ErrorKind::Input, "graph file has fewer edges than declared");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw Error(ErrorKind::Input, "invalid edge in graph file");
    if (g.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
      throw Error(ErrorKind::Input, "duplicate edge in graph file");
    g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return g;
}

LabeledGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.sorted_edges()) out << e.u << ' ' << e.v << '\n';
}

void save_graph(const std::string& path, const LabeledGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  write_graph(out, g);
}

}  // namespace degmc
