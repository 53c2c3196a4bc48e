#include "support.hpp"

using namespace polysym;
using namespace polysym::test;

TEST_CASE("brute force over Sym(V)") {
  SUBCASE("rectangle") {
    const auto p = fixture("rectangle");
    CHECK(brute_force_group(p.vertices, Flavor::Linear).order() == 8);
    CHECK(brute_force_group(p.vertices, Flavor::Orthogonal).order() == 4);
  }
  SUBCASE("regular simplices realize every permutation") {
    for (const auto& [name, order] : std::vector<std::pair<std::string, long>>{
             {"simplex2", 6}, {"simplex3", 24}, {"simplex4", 120}}) {
      CAPTURE(name);
      const auto p = fixture(name);
      CHECK(brute_force_group(p.vertices, Flavor::Linear).order() == order);
      CHECK(brute_force_group(p.vertices, Flavor::Orthogonal).order() == order);
    }
  }
  SUBCASE("cyclic polytope is strictly less symmetric than its graph") {
    const auto p = fixture("cyclic_6_4");
    const auto g = brute_force_group(p.vertices, Flavor::Linear);
    CHECK(g.order() < 720);
    CHECK(g.order() == 2);
  }
  SUBCASE("output is sorted and contains the identity") {
    const auto g = brute_force_group(fixture("cube").vertices, Flavor::Linear);
    CHECK(g.elements.front().perm.is_identity());
    CHECK(std::is_sorted(g.elements.begin(), g.elements.end(),
                         [](const auto& a, const auto& b) { return a.perm < b.perm; }));
  }
}

TEST_CASE("too many candidates") {
  Matrix big(2, 10);
  for (int j = 0; j < 10; ++j) big.col(j) << std::cos(0.6283185307179586 * j), std::sin(0.6283185307179586 * j);
  try {
    brute_force_group(big, Flavor::Linear);
    FAIL("expected TooManyCandidates");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyCandidates);
  }
  CHECK_THROWS_AS(brute_force_group_serial(big, Flavor::Linear), Error);
  // supplied candidates lift the bound
  const EdgeGraph cycle(10, [] {
    std::vector<Edge> e;
    for (int i = 0; i < 10; ++i) e.push_back(make_edge(i, (i + 1) % 10));
    return e;
  }());
  CHECK(brute_force_group(big, automorphisms(cycle), Flavor::Orthogonal).order() == 20);
}

TEST_CASE("parallel scan matches the serial reference exactly") {
  for (const auto& name : fixture_names()) {
    const auto p = fixture(name);
    if (p.size() > 8) continue;
    CAPTURE(name);
    for (auto flavor : {Flavor::Linear, Flavor::Orthogonal}) {
      const auto par = brute_force_group(p.vertices, flavor);
      const auto ser = brute_force_group_serial(p.vertices, flavor);
      REQUIRE(par.order() == ser.order());
      for (long k = 0; k < par.order(); ++k) {
        CHECK(par.elements[k].perm == ser.elements[k].perm);
        CHECK(par.elements[k].matrix == ser.elements[k].matrix);
        CHECK(par.elements[k].orthogonal == ser.elements[k].orthogonal);
      }
    }
  }
}

TEST_CASE("pipeline groups equal the oracle on small fixtures") {
  for (const auto& name : fixture_names()) {
    const auto p = fixture(name);
    if (p.size() > 8) continue;
    CAPTURE(name);
    const auto s = analyze_structure(p);
    const auto lin = compare_groups(linear_group(s), brute_force_group(p.vertices, Flavor::Linear));
    CHECK(lin.equal);
    CHECK(lin.matrices_agree);
    const auto orth = compare_groups(orthogonal_group(s), brute_force_group(p.vertices, Flavor::Orthogonal));
    CHECK(orth.equal);
    CHECK(orth.matrices_agree);
  }
}

TEST_CASE("filtering graph automorphisms loses nothing") {
  for (const auto& name : fixture_names()) {
    const auto p = fixture(name);
    if (p.size() > 8) continue;
    CAPTURE(name);
    const auto graph_auts = automorphisms(analyze_structure(p).graph);
    for (auto flavor : {Flavor::Linear, Flavor::Orthogonal}) {
      const auto pruned = brute_force_group(p.vertices, graph_auts, flavor);
      CHECK(compare_groups(pruned, brute_force_group(p.vertices, flavor)).equal);
    }
  }
}

TEST_CASE("K44 embedding") {
  const auto e = load_embedding_file(fixture_path("k44_embedding"));
  REQUIRE(e.graph.edge_count() == 16);
  const auto auts = automorphisms(e.graph);
  CHECK(auts.order() == 1152);
  const auto g = embedding_group(e, CandidateSource::GraphAutomorphisms, Flavor::Linear);
  CHECK(g.order() < 1152);
  const auto perms = g.permutations();
  CHECK_FALSE(perms.contains(Permutation::from_cycles(8, {{0, 1}})));
  // its symmetries still act transitively on vertices and on edges
  const auto o = orbits(perms, e.graph);
  CHECK(o.vertices.size() == 1);
  CHECK(o.edges.size() == 1);
  CHECK(compare_groups(g, embedding_group(e, auts, Flavor::Linear)).equal);
}

TEST_CASE("square as an embedding of C4") {
  const auto p = fixture("square");
  const Embedding e{"c4", EdgeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), p.vertices};
  const auto cmp = compare_groups(embedding_group(e, CandidateSource::GraphAutomorphisms, Flavor::Linear),
                                  linear_group(p));
  CHECK(cmp.equal);
  CHECK(cmp.matrices_agree);
  CHECK(compare_groups(embedding_group(e, CandidateSource::Symmetric, Flavor::Orthogonal),
                       orthogonal_group(p))
            .equal);
}

TEST_CASE("identity is always accepted") {
  std::mt19937 rng(31);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 3, n = d + 1 + trial % 4;
    Matrix x(d, n);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = g(rng);
    const Embedding e{"random", EdgeGraph(n, {}), x};
    const auto grp = embedding_group(e, PermutationSet::trivial(n), Flavor::Orthogonal);
    REQUIRE(grp.order() == 1);
    CHECK(grp.elements[0].perm.is_identity());
  }
}

TEST_CASE("embeddings that do not span are restricted to their span") {
  // square placed in the plane z = 0 of R^3
  const auto p = fixture("square");
  Matrix x = Matrix::Zero(3, 4);
  x.topRows(2) = p.vertices;
  const Embedding e{"flat", EdgeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), x};
  const auto g = embedding_group(e, CandidateSource::Symmetric, Flavor::Orthogonal);
  CHECK(g.order() == 8);
  CHECK(g.elements[0].matrix.rows() == 2);
}

TEST_CASE("compare_groups") {
  const auto p = fixture("rectangle");
  const auto lin = linear_group(p);
  const auto orth = orthogonal_group(p);
  const auto self = compare_groups(lin, lin);
  CHECK(self.equal);
  CHECK(self.matrices_agree);
  CHECK(self.max_matrix_diff == 0.0);
  const auto cmp = compare_groups(lin, orth);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.order_a == 8);
  CHECK(cmp.order_b == 4);
  CHECK(cmp.only_in_a.size() == 4);
  CHECK(cmp.only_in_b.empty());
  CHECK(cmp.matrices_agree);

  auto bent = lin;
  bent.elements[1].matrix(0, 0) += 1e-3;
  const auto off = compare_groups(lin, bent);
  CHECK(off.equal);
  CHECK_FALSE(off.matrices_agree);
  CHECK(off.max_matrix_diff == doctest::Approx(1e-3));

  const auto perms = compare_permutations(lin.permutations(), orth.permutations());
  CHECK(perms.only_in_a == cmp.only_in_a);
}

TEST_CASE("embedding documents") {
  const auto e = load_embedding(R"({"dimension": 2, "vertices": [[1,0],[0,1],[5,5]], "edges": [[0,2]]})");
  CHECK(e.coordinates.cols() == 3);
  CHECK(e.graph.edge_count() == 1);
  CHECK_THROWS_AS(load_embedding(R"({"dimension": 2, "vertices": [[1,0]], "edges": [[0,1]]})"), Error);
  CHECK_THROWS_AS(load_embedding(R"({"dimension": 2, "vertices": [[1,0]], "edges": 3})"), Error);
  CHECK_THROWS_AS(load_embedding("nope"), Error);
}
