#include "edge_list.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "trd/error.hpp"

namespace trd::cli {

namespace {

[[noreturn]] void malformed(int line, const std::string& what) {
  throw Error(Errc::MalformedEdgeList, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string text;
  int line_no = 0;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream row(text);
    long a = 0, b = 0;
    if (!(row >> a)) continue;
    if (!(row >> b)) malformed(line_no, "expected two integers");
    std::string extra;
    if (row >> extra) malformed(line_no, "trailing text '" + extra + "'");
    if (n < 0) {
      if (a < 1 || b < 0) malformed(line_no, "header needs n >= 1 and m >= 0");
      if (a > kMaxOrder) malformed(line_no, "order above " + std::to_string(kMaxOrder));
      n = a;
      m = b;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) malformed(line_no, "vertex out of range");
    if (a == b) malformed(line_no, "self loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw Error(Errc::MalformedEdgeList, "missing 'n m' header");
  if (static_cast<long>(edges.size()) != m)
    throw Error(Errc::MalformedEdgeList,
                "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(Errc::MalformedEdgeList, e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedEdgeList, "cannot open '" + path + "'");
  return read_edge_list(in);
}

}  // namespace trd::cli
