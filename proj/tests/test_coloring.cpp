#include "support.hpp"

using namespace polysym;
using namespace polysym::test;

namespace {

using Classes = std::vector<std::vector<int>>;

EdgeGraph cycle4() { return EdgeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

PolytopeStructure structure(const std::string& name) { return analyze_structure(fixture(name)); }

}  // namespace

TEST_CASE("quantize") {
  SUBCASE("sub-tolerance jitter merges") {
    const std::vector<double> v{2.0, 2.0, 2.0 + 1e-13};
    const auto c = quantize(v, {}, 1e-9);
    CHECK(c.vertex_classes() == 1);
    CHECK(c.vertex == std::vector<int>{0, 0, 0});
  }
  SUBCASE("opposite values split, numbered ascending") {
    const std::vector<double> e{3.0, -3.0};
    const auto c = quantize({}, e, 1e-8);
    CHECK(c.edge_classes() == 2);
    CHECK(c.edge == std::vector<int>{1, 0});
    CHECK(c.edge_reps[0][0] == -3.0);
    CHECK(c.edge_gap == doctest::Approx(6.0));
  }
  SUBCASE("gap rule chains across sub-threshold steps") {
    const double eps = 1e-8;
    const std::vector<double> chained{0.0, 0.5 * eps, 1.0 * eps, 1.4 * eps};
    CHECK(quantize(chained, {}, eps).vertex == std::vector<int>{0, 0, 0, 0});
    const std::vector<double> split{0.0, 0.5 * eps, 1.6 * eps};
    CHECK(quantize(split, {}, eps).vertex == std::vector<int>{0, 0, 1});
    // boundary case: 1.5*eps - 0.5*eps rounds to just above eps
    const std::vector<double> boundary{0.0, 0.5 * eps, 1.5 * eps};
    CHECK(1.5 * eps - 0.5 * eps > eps);
    CHECK(quantize(boundary, {}, eps).vertex == std::vector<int>{0, 0, 1});
    // the same gap written as literals rounds below eps and chains
    const std::vector<double> literal{0.0, 0.5e-8, 1.5e-8};
    CHECK(1.5e-8 - 0.5e-8 < eps);
    CHECK(quantize(literal, {}, eps).vertex == std::vector<int>{0, 0, 0});
  }
  SUBCASE("threshold scales with the largest magnitude") {
    const std::vector<double> v{1000.0, 1000.0 + 5e-6};
    CHECK(quantize(v, {}, 1e-8).vertex_classes() == 1);
    const std::vector<double> w{1000.0, 1000.0 + 2e-5};
    CHECK(quantize(w, {}, 1e-8).vertex_classes() == 2);
  }
  SUBCASE("vertices and edges are quantized separately") {
    const std::vector<double> v{1.0, 1.0};
    const std::vector<double> e{1.0};
    const auto c = quantize(v, e, 1e-8);
    CHECK(c.vertex == std::vector<int>{0, 0});
    CHECK(c.edge == std::vector<int>{0});
    CHECK(c.vertex_classes() == 1);
    CHECK(c.edge_classes() == 1);
  }
}

TEST_CASE("metric coloring") {
  SUBCASE("square") {
    const auto s = structure("square");
    CHECK(s.metric_coloring.vertex_classes() == 1);
    CHECK(s.metric_coloring.edge_classes() == 1);
    CHECK(s.metric_coloring.vertex_reps[0][0] == doctest::Approx(2.0));
    CHECK(s.metric_coloring.edge_reps[0][0] == doctest::Approx(0.0));
  }
  SUBCASE("rectangle") {
    const auto s = structure("rectangle");
    CHECK(s.metric_coloring.vertex_classes() == 1);
    CHECK(s.metric_coloring.vertex_reps[0][0] == doctest::Approx(5.0));
    REQUIRE(s.metric_coloring.edge_classes() == 2);
    CHECK(s.metric_coloring.edge_reps[0][0] == doctest::Approx(-3.0));
    CHECK(s.metric_coloring.edge_reps[1][0] == doctest::Approx(3.0));
  }
  SUBCASE("regular hexagon") {
    const auto s = structure("hexagon");
    CHECK(s.metric_coloring.vertex_classes() == 1);
    CHECK(s.metric_coloring.edge_classes() == 1);
  }
}

TEST_CASE("Izmestiev coloring") {
  SUBCASE("rectangle is coarser than its metric coloring") {
    const auto s = structure("rectangle");
    CHECK(s.izmestiev_coloring.vertex_classes() == 1);
    CHECK(s.izmestiev_coloring.edge_classes() == 1);
    CHECK(s.izmestiev_coloring.vertex_reps[0][0] == doctest::Approx(0.0));
    CHECK(s.izmestiev_coloring.edge_reps[0][0] == doctest::Approx(-0.25));
  }
  SUBCASE("cube") {
    const auto s = structure("cube");
    CHECK(s.izmestiev_coloring.vertex_classes() == 1);
    CHECK(s.izmestiev_coloring.edge_classes() == 1);
    CHECK(s.izmestiev_coloring.vertex_reps[0][0] == doctest::Approx(0.5));
    CHECK(s.izmestiev_coloring.edge_reps[0][0] == doctest::Approx(-0.5));
  }
  SUBCASE("square") {
    const auto s = structure("square");
    CHECK(s.izmestiev_coloring.vertex_classes() == 1);
    CHECK(s.izmestiev_coloring.edge_classes() == 1);
  }
  SUBCASE("colored adjacency reproduces the matrix up to quantization") {
    for (const auto& name : fixture_names()) {
      CAPTURE(name);
      const auto s = structure(name);
      const auto& c = s.izmestiev_coloring;
      const auto& m = s.izmestiev.entries;
      for (int i = 0; i < m.rows(); ++i)
        CHECK(c.vertex_reps[c.vertex[i]][0] == doctest::Approx(m(i, i)).epsilon(1e-7));
      for (int k = 0; k < s.graph.edge_count(); ++k) {
        const auto [i, j] = s.graph.edges()[k];
        CHECK(c.edge_reps[c.edge[k]][0] == doctest::Approx(m(i, j)).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("product coloring") {
  const auto s = structure("rectangle");
  const auto& p = s.product_coloring;
  CHECK(p.vertex_classes() == 1);
  REQUIRE(p.edge_classes() == 2);
  CHECK(p.edge_reps[0] == std::vector<double>{s.izmestiev_coloring.edge_reps[0][0],
                                              s.metric_coloring.edge_reps[0][0]});
  CHECK(p.edge_reps[0][1] == doctest::Approx(-3.0));
  CHECK(p.edge_reps[1][1] == doctest::Approx(3.0));

  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto t = structure(name);
    const auto& m = t.metric_coloring;
    const auto self = product_coloring(m, m);
    CHECK(self.vertex_partition() == m.vertex_partition());
    CHECK(self.edge_partition(t.graph) == m.edge_partition(t.graph));
    const auto with_flat = product_coloring(m, constant_coloring(t.graph));
    CHECK(with_flat.vertex_partition() == m.vertex_partition());
    CHECK(with_flat.edge_partition(t.graph) == m.edge_partition(t.graph));
    CHECK(is_finer(t.product_coloring, t.metric_coloring));
    CHECK(is_finer(t.product_coloring, t.izmestiev_coloring));
  }
  CHECK_THROWS_AS(product_coloring(s.metric_coloring, constant_coloring(EdgeGraph::complete(3))), Error);
}

TEST_CASE("complete metric colorings") {
  SUBCASE("square, orthogonal") {
    const auto lg = complete_metric(fixture("square"), CompleteVariant::Orthogonal);
    CHECK(lg.graph == EdgeGraph::complete(4));
    CHECK(lg.coloring.vertex_classes() == 1);
    CHECK(lg.coloring.vertex_reps[0][0] == doctest::Approx(2.0));
    REQUIRE(lg.coloring.edge_classes() == 2);
    CHECK(lg.coloring.edge_reps[0][0] == doctest::Approx(-2.0));
    CHECK(lg.coloring.edge_reps[1][0] == doctest::Approx(0.0));
  }
  SUBCASE("square, linear has the same partition") {
    const auto o = complete_metric(fixture("square"), CompleteVariant::Orthogonal);
    const auto l = complete_metric(fixture("square"), CompleteVariant::Linear);
    CHECK(l.coloring.vertex == o.coloring.vertex);
    CHECK(l.coloring.edge == o.coloring.edge);
    CHECK(l.coloring.vertex_reps[0][0] == doctest::Approx(0.5));
  }
  SUBCASE("rectangle and square agree in the linear variant") {
    const auto r = complete_metric(fixture("rectangle"), CompleteVariant::Linear);
    const auto s = complete_metric(fixture("square"), CompleteVariant::Linear);
    CHECK(r.coloring.vertex == s.coloring.vertex);
    CHECK(r.coloring.edge == s.coloring.edge);
    const auto ro = complete_metric(fixture("rectangle"), CompleteVariant::Orthogonal);
    CHECK(ro.coloring.edge_classes() == 3);
  }
}

TEST_CASE("orbit coloring") {
  const auto g = cycle4();
  SUBCASE("dihedral group") {
    const auto c = orbit_coloring(g, automorphisms(g));
    CHECK(c.vertex_classes() == 1);
    CHECK(c.edge_classes() == 1);
  }
  SUBCASE("Klein group") {
    const PermutationSet klein({Permutation::identity(4), Permutation({2, 1, 0, 3}),
                                Permutation({0, 3, 2, 1}), Permutation({2, 3, 0, 1})});
    const auto c = orbit_coloring(g, klein);
    CHECK(c.vertex_partition() == Classes{{0, 2}, {1, 3}});
    CHECK(c.edge_classes() == 1);
  }
  SUBCASE("trivial group") {
    const auto c = orbit_coloring(g, PermutationSet::trivial(4));
    CHECK(c.vertex_classes() == 4);
    CHECK(c.edge_classes() == 4);
  }
  SUBCASE("non-automorphisms are refused") {
    const PermutationSet swap({Permutation::identity(4), Permutation({1, 0, 2, 3})});
    CHECK_THROWS_AS(orbit_coloring(g, swap), Error);
  }
}

TEST_CASE("is_finer") {
  const auto s = structure("rectangle");
  CHECK(is_finer(s.metric_coloring, s.izmestiev_coloring));
  CHECK_FALSE(is_finer(s.izmestiev_coloring, s.metric_coloring));
  CHECK(is_finer(s.metric_coloring, s.metric_coloring));
}

TEST_CASE("LabeledGraph checks its domain") {
  CHECK_THROWS_AS(LabeledGraph(EdgeGraph::complete(4), constant_coloring(cycle4())), Error);
  const LabeledGraph lg(cycle4(), constant_coloring(cycle4()));
  const auto a = lg.colored_adjacency();
  CHECK(a(0, 0) == 1);
  CHECK(a(0, 1) == a(1, 2));
  CHECK(a(0, 1) != a(0, 0));
  CHECK(a(0, 2) == 0);
}

TEST_CASE("product automorphisms are the intersection of the factors'") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto s = structure(name);
    const auto a = automorphisms(LabeledGraph(s.graph, s.izmestiev_coloring));
    const auto b = automorphisms(LabeledGraph(s.graph, s.metric_coloring));
    const auto both = automorphisms(LabeledGraph(s.graph, s.product_coloring));
    std::vector<Permutation> meet;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
    CHECK(both.elements() == meet);
  }
}

TEST_CASE("finer colorings have fewer automorphisms") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto s = structure(name);
    const std::vector<Coloring> colorings{s.metric_coloring, s.izmestiev_coloring, s.product_coloring,
                                          constant_coloring(s.graph)};
    for (const auto& c1 : colorings)
      for (const auto& c2 : colorings) {
        if (!is_finer(c1, c2)) continue;
        const auto a1 = automorphisms(LabeledGraph(s.graph, c1));
        const auto a2 = automorphisms(LabeledGraph(s.graph, c2));
        CHECK(std::includes(a2.begin(), a2.end(), a1.begin(), a1.end()));
      }
  }
}

TEST_CASE("orthogonal symmetries preserve the metric coloring") {
  for (const auto& name : fixture_names()) {
    const auto p = fixture(name);
    if (p.size() > 8) continue;
    CAPTURE(name);
    const auto s = analyze_structure(p);
    const LabeledGraph lg(s.graph, s.metric_coloring);
    for (const auto& e : brute_force_group(p.vertices, Flavor::Orthogonal).elements)
      CHECK(is_automorphism(lg, e.perm));
  }
}

TEST_CASE("DOT export") {
  SUBCASE("square metric coloring uses one node and one edge color") {
    const auto s = structure("square");
    const auto dot = to_dot(LabeledGraph(s.graph, s.metric_coloring), "square");
    CHECK(dot.find("graph \"square\"") == 0);
    CHECK(dot.find("class=1") == std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
  }
  SUBCASE("rectangle product coloring uses two edge colors") {
    const auto s = structure("rectangle");
    const auto dot = to_dot(LabeledGraph(s.graph, s.product_coloring));
    std::set<std::string> edge_colors;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);)
      if (line.find(" -- ") != std::string::npos)
        edge_colors.insert(line.substr(line.find("color=")));
    CHECK(edge_colors.size() == 2);
  }
}
