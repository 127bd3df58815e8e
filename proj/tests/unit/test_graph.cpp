#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "trd/error.hpp"
#include "trd/graph.hpp"
#include "trd/graph6.hpp"

using namespace trd;

namespace {

Graph make(int n, std::initializer_list<Edge> edges) { return build_graph(n, std::vector<Edge>(edges)); }

template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no trd::Error thrown");
  return Errc::InvalidSpec;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("build_graph") {
    const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(c4.size() == 4);
    CHECK(c4.min_degree() == 2);
    CHECK(c4.max_degree() == 2);
    CHECK(is_connected(c4));

    const Graph k2 = make(2, {{0, 1}});
    CHECK(k2.is_complete());

    const Graph dup = make(3, {{0, 1}, {0, 1}});
    CHECK(dup.size() == 1);
    CHECK(dup.isolated_vertices() == VertexSet::single(2));
  }

  TEST_CASE("build_graph errors") {
    CHECK(error_of([] { Graph(0); }) == Errc::TooSmall);
    CHECK(error_of([] { Graph(kMaxOrder + 1); }) == Errc::TooLarge);
    CHECK(error_of([] { make(3, {{1, 1}}); }) == Errc::SelfLoop);
    CHECK(error_of([] { make(3, {{0, 3}}); }) == Errc::OutOfRange);
  }

  TEST_CASE("complement") {
    const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(complement(c4) == make(4, {{0, 2}, {1, 3}}));

    Graph k5(5);
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v) k5 = k5.with_edge(u, v);
    CHECK(complement(k5).size() == 0);

    const Graph p4 = make(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(complement(p4) == make(4, {{1, 3}, {3, 0}, {0, 2}}));
  }

  TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 20), 0.4);
      CHECK(complement(complement(g)) == g);
      CHECK(g.size() + complement(g).size() == g.order() * (g.order() - 1) / 2);
    }
  }

  TEST_CASE("add_edge") {
    const Graph p4 = make(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(add_edge(p4, 0, 3) == make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));

    const Graph k2k3 = make(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
    const Graph joined = add_edge(k2k3, 1, 2);
    CHECK(is_connected(joined));
    CHECK(joined.size() == 5);

    const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const Graph diamond = add_edge(c4, 0, 2);
    CHECK(diamond.size() == 5);
    CHECK(diamond.degree(0) == 3);
    CHECK(diamond.degree(2) == 3);

    CHECK(error_of([&] { add_edge(c4, 0, 1); }) == Errc::EdgeExists);
    CHECK(error_of([&] { add_edge(c4, 2, 2); }) == Errc::SelfLoop);
    CHECK(error_of([&] { add_edge(c4, 0, 9); }) == Errc::OutOfRange);
  }

  TEST_CASE("edge lists are lexicographic") {
    const Graph g = make(4, {{2, 3}, {0, 2}, {1, 0}});
    const auto edges = g.edges();
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == Edge(0, 1));
    CHECK(edges[1] == Edge(0, 2));
    CHECK(edges[2] == Edge(2, 3));
    const auto non = g.non_edges();
    REQUIRE(non.size() == 3);
    CHECK(non[0] == Edge(0, 3));
    CHECK(non[1] == Edge(1, 2));
    CHECK(non[2] == Edge(1, 3));
  }

  TEST_CASE("metrics") {
    const Graph star = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const GraphMetrics s = metrics(star);
    CHECK(s.universal_vertex == 0);
    CHECK(s.diameter == 2);

    // K3 box K3, v_ij = 3i + j.
    std::vector<Edge> rook;
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b)
        if (a / 3 == b / 3 || a % 3 == b % 3) rook.emplace_back(a, b);
    const GraphMetrics r = metrics(build_graph(9, rook));
    CHECK_FALSE(r.universal_vertex.has_value());
    CHECK(r.diameter == 2);

    const GraphMetrics u = metrics(make(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(u.components.size() == 2);
    CHECK(u.isolated_vertices.empty());
    CHECK_FALSE(u.diameter.has_value());
    CHECK(u.component_diameters == std::vector<int>{1, 1});
  }

  TEST_CASE("induced subgraph relabels in order") {
    const Graph p4 = make(4, {{0, 1}, {1, 2}, {2, 3}});
    VertexSet keep;
    keep.insert(1);
    keep.insert(2);
    keep.insert(3);
    CHECK(p4.induced(keep) == make(3, {{0, 1}, {1, 2}}));
  }

  TEST_CASE("graph6 fixed strings") {
    CHECK(graph6_decode("A_") == make(2, {{0, 1}}));
    CHECK(graph6_decode("A?") == Graph(2));
    CHECK(graph6_encode(make(2, {{0, 1}})) == "A_");
    CHECK(graph6_encode(Graph(2)) == "A?");
    // The worked example of the format description.
    const Graph ex = make(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
    CHECK(graph6_encode(ex) == "DQc");
    CHECK(graph6_decode("DQc") == ex);
    CHECK(graph6_decode(">>graph6<<DQc\n") == ex);
    CHECK(graph6_encode(Graph(1)) == "@");
  }

  TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const int n = 1 + static_cast<int>(rng() % kMaxOrder);
      const Graph g = oracle::random_graph(rng, n, 0.3);
      const std::string text = graph6_encode(g);
      CHECK(text.size() == 1 + (n * (n - 1) / 2 + 5) / 6);
      CHECK(graph6_decode(text) == g);
    }
  }

  TEST_CASE("graph6 rejects malformed input") {
    CHECK(error_of([] { graph6_decode(""); }) == Errc::MalformedGraph6);
    CHECK(error_of([] { graph6_decode("A"); }) == Errc::MalformedGraph6);
    CHECK(error_of([] { graph6_decode("A__"); }) == Errc::MalformedGraph6);
    CHECK(error_of([] { graph6_decode("A "); }) == Errc::MalformedGraph6);
    CHECK(error_of([] { graph6_decode("Aa"); }) == Errc::MalformedGraph6);  // padding bit set
    CHECK(error_of([] { graph6_decode("~?@~"); }) == Errc::MalformedGraph6);
  }
}
