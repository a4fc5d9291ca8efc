#include "brickforge/textio.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace brickforge {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) return true;
  }
  return false;
}

}  // namespace

Multigraph read_graph_text(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) raise(ErrorCode::ParseError, "missing header line");
  std::istringstream header(line);
  long long n = 0, m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0)
    raise(ErrorCode::ParseError, "header must be `n m`");
  std::string extra;
  if (header >> extra) raise(ErrorCode::ParseError, "trailing tokens in header");
  std::vector<std::pair<int, int>> edge_list;
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      raise(ErrorCode::ParseError, "expected " + std::to_string(m) + " edge lines");
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v)) raise(ErrorCode::ParseError, "edge line must be `u v`");
    if (row >> extra) raise(ErrorCode::ParseError, "trailing tokens in edge line");
    if (u < 0 || u >= n || v < 0 || v >= n)
      raise(ErrorCode::ParseError, "edge endpoint out of range");
    if (u == v) raise(ErrorCode::ParseError, "loops are not allowed");
    edge_list.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_data_line(in, line)) raise(ErrorCode::ParseError, "unexpected trailing data");
  return Multigraph::build(static_cast<int>(n), edge_list);
}

Multigraph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph_text(in);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open " + path);
  return read_graph_text(in);
}

std::string graph_to_text(const Multigraph& g) {
  std::map<int, int> index;
  for (int v : g.vertices()) {
    int k = static_cast<int>(index.size());
    index[v] = k;
  }
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << index[e.u] << ' ' << index[e.v] << '\n';
  return out.str();
}

void write_graph_file(const Multigraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::ParseError, "cannot open " + path + " for writing");
  out << graph_to_text(g);
}

}  // namespace brickforge
