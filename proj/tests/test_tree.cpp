#include "arborflow/tree.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace arborflow;

TEST_SUITE("tree") {

TEST_CASE("construction accepts trees and rejects everything else") {
    CHECK_NOTHROW(Tree(1, {}));
    CHECK_NOTHROW(Tree(2, {{1, 2}}));
    CHECK_NOTHROW(Tree(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK_THROWS_AS(Tree(3, {{1, 2}}), std::invalid_argument);                   // too few
    CHECK_THROWS_AS(Tree(3, {{1, 2}, {2, 3}, {1, 3}}), std::invalid_argument);   // cycle
    CHECK_THROWS_AS(Tree(4, {{1, 2}, {1, 2}, {3, 4}}), std::invalid_argument);   // dup
    CHECK_THROWS_AS(Tree(4, {{1, 2}, {3, 4}, {3, 4}}), std::invalid_argument);   // disconnected
    CHECK_THROWS_AS(Tree(3, {{1, 2}, {2, 4}}), std::invalid_argument);           // range
    CHECK_THROWS_AS(Tree(3, {{1, 2}, {3, 3}}), std::invalid_argument);           // loop
}

TEST_CASE("edges, adjacency and indices are sorted and consistent") {
    Tree t(4, {{3, 4}, {1, 2}, {2, 3}});
    CHECK(t.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(t.neighbors(2) == std::vector<int>{1, 3});
    CHECK(t.degree(3) == 2);
    CHECK(t.has_edge(4, 3));
    CHECK_FALSE(t.has_edge(1, 3));
    CHECK(t.edge_index({2, 3}) == 1);
    CHECK_THROWS_AS(t.edge_index({1, 3}), std::invalid_argument);
    std::vector<Arc> arcs = t.arcs();
    REQUIRE(arcs.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(t.arc_index(arcs[i]) == i);
    CHECK(arcs[0] == Arc{1, 2});
    CHECK(arcs[1] == Arc{2, 1});
}

TEST_CASE("paths and distances on the 3-path") {
    Tree t(3, {{1, 2}, {2, 3}});
    CHECK(t.path_between(1, 3).vertices == std::vector<int>{1, 2, 3});
    CHECK(t.path_between(3, 1).vertices == std::vector<int>{3, 2, 1});
    CHECK(t.path_between(1, 2).vertices == std::vector<int>{1, 2});
    CHECK(t.path_between(2, 2).vertices == std::vector<int>{2});
    CHECK(t.distance(1, 3) == 2);
    CHECK(t.distance(2, 2) == 0);
}

TEST_CASE("paths on the 9-vertex running example") {
    Tree t(9, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {4, 7}, {4, 8}, {4, 9}});
    CHECK(t.path_between(5, 9).vertices == std::vector<int>{5, 2, 1, 4, 9});
    CHECK(t.path_between(3, 8).vertices == std::vector<int>{3, 1, 4, 8});
    CHECK(t.distance(5, 6) == 2);
    CHECK(t.distance(7, 8) == 2);
    // Path endpoints adjacent along the way.
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 9; ++j) {
            TreePath p = t.path_between(i, j);
            CHECK(p.source() == i);
            CHECK(p.target() == j);
            for (int k = 0; k < p.length(); ++k)
                CHECK(t.has_edge(p.vertices[k], p.vertices[k + 1]));
            // Reverse path is the reversed vertex list.
            TreePath q = t.path_between(j, i);
            std::vector<int> rev(p.vertices.rbegin(), p.vertices.rend());
            CHECK(q.vertices == rev);
        }
}

TEST_CASE("prufer decode fixtures") {
    CHECK(from_prufer({}).edges() == std::vector<Edge>{{1, 2}});
    // Code "1,1" is the star centered at 1.
    CHECK(from_prufer({1, 1}).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});
    // Code (2, 3) decodes to the labeled path 1-2-3-4.
    CHECK(from_prufer({2, 3}).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(from_prufer({0}), std::invalid_argument);
    CHECK_THROWS_AS(from_prufer({4}), std::invalid_argument);
}

TEST_CASE("prufer encode inverts decode exhaustively at n = 5") {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c) {
                std::vector<int> code{a, b, c};
                CHECK(to_prufer(from_prufer(code)) == code);
            }
}

TEST_CASE("decode inverts encode on random trees at n = 20") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        Tree t = random_tree(20, rng);
        CHECK(from_prufer(to_prufer(t)) == t);
    }
}

TEST_CASE("tree enumeration hits the Cayley counts") {
    std::size_t expected[] = {1, 3, 16, 125, 1296};
    for (int n = 2; n <= 6; ++n) {
        std::size_t count = 0;
        std::set<std::vector<Edge>> seen;
        for_each_tree(n, [&](const Tree& t) {
            ++count;
            seen.insert(t.edges());
        });
        CHECK(count == expected[n - 2]);
        CHECK(seen.size() == expected[n - 2]); // all distinct
    }
    CHECK(all_trees(3).size() == 3);
    CHECK_THROWS_AS(for_each_tree(9, [](const Tree&) {}), std::invalid_argument);
}

TEST_CASE("random trees are deterministic per seed") {
    std::mt19937_64 a(99), b(99), c(100);
    Tree ta = random_tree(12, a), tb = random_tree(12, b), tc = random_tree(12, c);
    CHECK(ta == tb);
    CHECK_FALSE(ta == tc); // different stream (12^10 trees; collision implausible)
}

TEST_CASE("text format round-trips and validates") {
    Tree t(4, {{1, 2}, {1, 3}, {3, 4}});
    CHECK(format_tree(t) == "4\n1 2\n1 3\n3 4\n");
    CHECK(parse_tree(format_tree(t)) == t);
    CHECK(format_tree(Tree(2, {{1, 2}})) == "2\n1 2\n");
    CHECK(parse_tree("# comment\n3\n1 2\n# mid\n2 3\n") == Tree(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(parse_tree(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("3\n1 2\n"), std::invalid_argument);       // missing edge
    CHECK_THROWS_AS(parse_tree("3\n1 2\n2 3\n9 9\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("two\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("3\n1 2\n1 2\n"), std::invalid_argument);  // not a tree
}

TEST_CASE("arcs toward an edge: fixtures") {
    Tree path3(3, {{1, 2}, {2, 3}});
    CHECK(path3.arcs_toward_edge({1, 2}) == std::vector<Arc>{{3, 2}});
    CHECK(path3.arcs_toward_edge({2, 3}) == std::vector<Arc>{{1, 2}});
    Tree star4(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(star4.arcs_toward_edge({1, 2}) == std::vector<Arc>{{3, 1}, {4, 1}});
    Tree path4(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(path4.arcs_toward_edge({2, 3}) == std::vector<Arc>{{1, 2}, {4, 3}});
}

TEST_CASE("arcs toward an edge: one orientation per other edge, pointing closer") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        Tree t = random_tree(8, rng);
        for (const Edge& e : t.edges()) {
            std::vector<Arc> toward = t.arcs_toward_edge(e);
            CHECK(toward.size() == 6); // n - 2
            std::set<Edge> covered;
            for (const Arc& g : toward) {
                covered.insert(Edge(g));
                CHECK_FALSE(Edge(g) == e);
                // The head is strictly closer to the edge than the tail.
                int dt = std::min(t.distance(g.tail, e.lo), t.distance(g.tail, e.hi));
                int dh = std::min(t.distance(g.head, e.lo), t.distance(g.head, e.hi));
                CHECK(dh == dt - 1);
            }
            CHECK(covered.size() == 6);
        }
    }
}

} // TEST_SUITE
