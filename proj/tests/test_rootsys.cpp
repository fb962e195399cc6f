#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bgmu/rootsys.hpp"
#include "test_util.hpp"

using namespace bgmu;

namespace {

Mat mat_from(int r, int c, std::initializer_list<long> entries) {
  Mat m(r, c);
  int k = 0;
  for (long e : entries) {
    m(k / c, k % c) = Rat(e);
    ++k;
  }
  return m;
}

}  // namespace

TEST_CASE("cartan matrices match the frozen tables") {
  // Simply laced chain.
  RootDatum a3 = make_root_datum({{'A', 3}});
  CHECK(mat_eq(a3.cartan, mat_from(3, 3, {2, -1, 0, -1, 2, -1, 0, -1, 2})));

  // Short last root: the (n-1, n) entry stays -1, the transpose drops to -2.
  RootDatum b3 = make_root_datum({{'B', 3}});
  CHECK(mat_eq(b3.cartan, mat_from(3, 3, {2, -1, 0, -1, 2, -1, 0, -2, 2})));

  // Long last root: mirror image of the B table.
  RootDatum c3 = make_root_datum({{'C', 3}});
  CHECK(mat_eq(c3.cartan, mat_from(3, 3, {2, -1, 0, -1, 2, -2, 0, -1, 2})));

  // Central node 2 connects to 1, 3, 4.
  RootDatum d4 = make_root_datum({{'D', 4}});
  CHECK(mat_eq(d4.cartan,
               mat_from(4, 4, {2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2, 0, 0, -1, 0, 2})));

  // GL realization uses the A_{n-1} chain.
  RootDatum gl3 = make_gl_datum(3);
  CHECK(mat_eq(gl3.cartan, mat_from(2, 2, {2, -1, -1, 2})));
}

TEST_CASE("positive root counts match the closed forms") {
  CHECK(make_root_datum({{'A', 1}}).npos() == 1);
  CHECK(make_root_datum({{'A', 3}}).npos() == 6);
  CHECK(make_root_datum({{'A', 5}}).npos() == 15);
  CHECK(make_root_datum({{'B', 2}}).npos() == 4);
  CHECK(make_root_datum({{'B', 3}}).npos() == 9);
  CHECK(make_root_datum({{'C', 3}}).npos() == 9);
  CHECK(make_root_datum({{'D', 4}}).npos() == 12);
  CHECK(make_root_datum({{'D', 5}}).npos() == 20);
  CHECK(make_root_datum({{'G', 2}}).npos() == 6);
  CHECK(make_root_datum({{'F', 4}}).npos() == 24);
  CHECK(make_root_datum({{'E', 6}}).npos() == 36);
  CHECK(make_root_datum({{'E', 7}}).npos() == 63);
  CHECK(make_gl_datum(8).npos() == 28);
}

TEST_CASE("pairing duality between weights and coroots") {
  for (const RootDatum& rd :
       {make_root_datum({{'B', 3}}), make_root_datum({{'F', 4}}), make_gl_datum(4)}) {
    for (int i = 0; i < rd.rank; ++i)
      for (int j = 0; j < rd.rank; ++j) {
        Rat wc = dot(Vec(rd.weights.col(j)), Vec(rd.simple_coroots.col(i)));
        Rat cw = dot(Vec(rd.coweights.col(j)), Vec(rd.simple_roots.col(i)));
        CHECK(wc == (i == j ? 1 : 0));
        CHECK(cw == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("frozen coweights in the orthogonal realization") {
  RootDatum a3 = make_root_datum({{'A', 3}});
  CHECK(vec_eq(Vec(a3.coweights.col(0)), tvec({Rat(3, 4), Rat(-1, 4), Rat(-1, 4), Rat(-1, 4)})));
  RootDatum b2 = make_root_datum({{'B', 2}});
  CHECK(vec_eq(Vec(b2.coweights.col(0)), tveci({1, 0})));
  CHECK(vec_eq(Vec(b2.coweights.col(1)), tveci({1, 1})));
}

TEST_CASE("two_rho is the positive root sum and has height two on simples") {
  for (const RootDatum& rd : {make_root_datum({{'A', 3}}), make_root_datum({{'C', 3}}),
                              make_root_datum({{'D', 4}}), make_root_datum({{'G', 2}})}) {
    Vec sum = Vec::Zero(rd.dim);
    for (int k = 0; k < rd.npos(); ++k) sum += Vec(rd.pos_roots.col(k));
    CHECK(vec_eq(rd.two_rho, sum));
    for (int i = 0; i < rd.rank; ++i)
      CHECK(dot(rd.two_rho, Vec(rd.simple_coroots.col(i))) == 2);
  }
  CHECK(vec_eq(make_root_datum({{'A', 3}}).two_rho, tveci({3, 1, -1, -3})));
  CHECK(vec_eq(make_root_datum({{'B', 2}}).two_rho, tveci({3, 1})));
}

TEST_CASE("theta dominates every root coefficientwise") {
  for (const RootDatum& rd : {make_root_datum({{'B', 3}}), make_root_datum({{'G', 2}}),
                              make_root_datum({{'D', 4}})}) {
    REQUIRE(rd.theta.size() == 1);
    const Vec& th = rd.theta[0];
    CHECK(is_dominant(rd, th));
    int idx = 0, sign = 0;
    REQUIRE(rd.root_lookup(th, &idx, &sign));
    CHECK(sign == 1);
    for (int k = 0; k < rd.npos(); ++k)
      for (int i = 0; i < rd.rank; ++i)
        CHECK(rd.pos_coeffs(i, k) <= rd.pos_coeffs(i, idx));
    // The coroot is the root rescaled by 2 / (root, root).
    CHECK(vec_eq(rd.theta_coroot[0], Vec(th * (Rat(2) / dot(th, th)))));
  }
}

TEST_CASE("root_lookup inverts the positive root table") {
  RootDatum rd = make_root_datum({{'C', 3}});
  for (int k = 0; k < rd.npos(); ++k) {
    int idx = -1, sign = 0;
    CHECK(rd.root_lookup(Vec(rd.pos_roots.col(k)), &idx, &sign));
    CHECK(idx == k);
    CHECK(sign == 1);
    CHECK(rd.root_lookup(Vec(-rd.pos_roots.col(k)), &idx, &sign));
    CHECK(idx == k);
    CHECK(sign == -1);
  }
  int idx = 0, sign = 0;
  CHECK_FALSE(rd.root_lookup(Vec(2 * rd.theta[0]), &idx, &sign));
  CHECK_FALSE(rd.root_lookup(Vec::Zero(3), &idx, &sign));
}

TEST_CASE("reflections are involutions fixing the orthogonal complement") {
  RootDatum rd = make_root_datum({{'B', 3}});
  for (int k = 0; k < rd.npos(); ++k) {
    Vec root = Vec(rd.pos_roots.col(k));
    Mat s = reflect_root_matrix(rd.dim, root);
    CHECK(mat_eq(Mat(s * s), Mat(Mat::Identity(rd.dim, rd.dim))));
    CHECK(vec_eq(Vec(s * root), Vec(-root)));
    CHECK(vec_eq(reflect_root(root, rd.two_rho), Vec(s * rd.two_rho)));
  }
  for (int i = 0; i < rd.rank; ++i) {
    Vec alpha = Vec(rd.simple_roots.col(i));
    CHECK(vec_eq(reflect_simple(rd, i, alpha), Vec(-alpha)));
  }
}

TEST_CASE("dominantize returns the dominant orbit representative") {
  RootDatum rd = make_root_datum({{'B', 2}});
  Vec reg = tveci({2, 1});
  std::vector<Vec> orbit = weyl_orbit(rd, reg);
  CHECK(orbit.size() == 8);
  for (const Vec& v : orbit) {
    Dominantized d = dominantize(rd, v);
    CHECK(is_dominant(rd, d.v));
    CHECK(vec_eq(d.v, reg));
    CHECK(vec_eq(Vec(d.w * v), d.v));
    // Replay the word: entries are applied to the input left to right.
    Mat m = Mat::Identity(rd.dim, rd.dim);
    for (int s : d.word) {
      Vec alpha = Vec(rd.simple_roots.col(s));
      m = Mat(reflect_root_matrix(rd.dim, alpha) * m);
    }
    CHECK(mat_eq(m, d.w));
  }
}

TEST_CASE("weyl orbit sizes for known vectors") {
  CHECK(weyl_orbit(make_root_datum({{'A', 2}}),
                   Vec(make_root_datum({{'A', 2}}).coweights.col(0)))
            .size() == 3);
  RootDatum a2 = make_root_datum({{'A', 2}});
  CHECK(weyl_orbit(a2, Vec(a2.coweights.col(0) + a2.coweights.col(1))).size() == 6);
  RootDatum d4 = make_root_datum({{'D', 4}});
  CHECK(weyl_orbit(d4, Vec(d4.coweights.col(0))).size() == 8);
  RootDatum g2 = make_root_datum({{'G', 2}});
  CHECK(weyl_orbit(g2, Vec(g2.coweights.col(0) + g2.coweights.col(1))).size() == 12);
}

TEST_CASE("dominance order on dominant vectors") {
  RootDatum rd = make_gl_datum(4);
  Vec mu = tveci({1, 1, 0, 0});
  Vec lower = tvec({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(dominance_leq(rd, lower, mu));
  CHECK_FALSE(dominance_leq(rd, mu, lower));
  CHECK(dominance_leq(rd, mu, mu));
  // Different totals are incomparable: the residual off the coroot span.
  CHECK_FALSE(dominance_leq(rd, tveci({0, 0, 0, 0}), mu));
  CHECK_THROWS_AS(dominance_leq(rd, tveci({0, 1, 0, 0}), mu), std::invalid_argument);
}

TEST_CASE("wall sets list the vanishing simple pairings") {
  RootDatum rd = make_gl_datum(4);
  CHECK(wall_set(rd, tveci({2, 1, 0, -1})).empty());
  CHECK(wall_set(rd, tveci({1, 1, 0, 0})) == std::vector<int>{0, 2});
  CHECK(wall_set(rd, tveci({0, 0, 0, 0})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("longest element negates the dominant chamber") {
  RootDatum rd = make_root_datum({{'B', 2}});
  std::vector<int> all = {0, 1};
  WeylElement w0 = longest_element(rd, all);
  CHECK(static_cast<int>(w0.word.size()) == rd.npos());
  CHECK(mat_eq(Mat(w0.w * w0.w), Mat(Mat::Identity(rd.dim, rd.dim))));
  CHECK(vec_eq(Vec(w0.w * rd.two_rho), Vec(-rd.two_rho)));
  // Parabolic longest element only negates the A1 on node 0.
  WeylElement s0 = longest_element(rd, {0});
  CHECK(s0.word == std::vector<int>{0});
  CHECK(vec_eq(Vec(s0.w * rd.simple_roots.col(0)), Vec(-rd.simple_roots.col(0))));
}

TEST_CASE("pos_roots_in restricts the support") {
  RootDatum rd = make_root_datum({{'A', 3}});
  std::vector<int> idx = pos_roots_in(rd, {0, 1});
  CHECK(idx.size() == 3);  // the A2 inside
  for (int k : idx) CHECK(rd.pos_coeffs(2, k) == 0);
  CHECK(pos_roots_in(rd, {0, 2}).size() == 2);
}

TEST_CASE("subsystem recognition on embedded diagrams") {
  RootDatum d5 = make_root_datum({{'D', 5}});
  std::vector<Component> comps = recognize_subsystem(d5, {2, 3, 4});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == 'A');
  CHECK(comps[0].rank == 3);

  comps = recognize_subsystem(d5, {1, 2, 3, 4});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == 'D');
  CHECK(comps[0].rank == 4);

  RootDatum b3 = make_root_datum({{'B', 3}});
  comps = recognize_subsystem(b3, {1, 2});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == 'B');
  CHECK(comps[0].rank == 2);

  RootDatum c3 = make_root_datum({{'C', 3}});
  comps = recognize_subsystem(c3, {0, 1});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == 'A');
  CHECK(comps[0].rank == 2);

  RootDatum a5 = make_root_datum({{'A', 5}});
  comps = recognize_subsystem(a5, {0, 2, 4});
  CHECK(comps.size() == 3);
  for (const Component& c : comps) {
    CHECK(c.type == 'A');
    CHECK(c.rank == 1);
  }
}

TEST_CASE("sub data keep ambient coordinates and node maps") {
  RootDatum d5 = make_root_datum({{'D', 5}});
  SubDatum sub = make_sub_datum(d5, {2, 3, 4});
  CHECK(sub.rd.dim == d5.dim);
  CHECK(sub.rd.rank == 3);
  CHECK(sub.rd.npos() == 6);
  std::set<int> back(sub.nodes.begin(), sub.nodes.end());
  CHECK(back == std::set<int>{2, 3, 4});
  for (int j = 0; j < sub.rd.rank; ++j) {
    int idx = -1, sign = 0;
    CHECK(d5.root_lookup(Vec(sub.rd.simple_roots.col(j)), &idx, &sign));
    CHECK(sign == 1);
  }
}

TEST_CASE("type labels") {
  CHECK(datum_type_label(make_root_datum({{'A', 3}})) == "A3");
  CHECK(datum_type_label(make_root_datum({{'B', 2}, {'A', 1}})) == "B2 x A1");
  CHECK(datum_type_label(make_gl_datum(4)) == "GL4");
}

TEST_CASE("lattice membership and coordinates") {
  RootDatum a3 = make_root_datum({{'A', 3}});
  Vec w2 = Vec(a3.lattice.col(1));
  CHECK(lattice_member(a3, w2));
  IVec coords = lattice_coords(a3, w2);
  CHECK(coords(0) == 0);
  CHECK(coords(1) == 1);
  CHECK(coords(2) == 0);
  CHECK(lattice_member(a3, Vec(a3.simple_coroots.col(0))));
  CHECK_FALSE(lattice_member(a3, tveci({1, 0, 0, 0})));
  CHECK_THROWS_AS(lattice_coords(a3, tveci({1, 0, 0, 0})), std::invalid_argument);

  RootDatum gl4 = make_gl_datum(4);
  CHECK(lattice_member(gl4, tveci({1, 0, 0, 0})));
  CHECK_FALSE(lattice_member(gl4, tvec({Rat(1, 2), Rat(1, 2), 0, 0})));
}

TEST_CASE("GL realization") {
  RootDatum gl4 = make_gl_datum(4);
  CHECK(gl4.gl_mode);
  CHECK(gl4.dim == 4);
  CHECK(gl4.rank == 3);
  for (int i = 0; i < gl4.rank; ++i) {
    Vec alpha = Vec::Zero(4);
    alpha(i) = 1;
    alpha(i + 1) = -1;
    CHECK(vec_eq(Vec(gl4.simple_roots.col(i)), alpha));
    CHECK(vec_eq(Vec(gl4.simple_coroots.col(i)), alpha));
  }
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(make_root_datum({{'A', 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_root_datum({{'B', 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_root_datum({{'D', 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_root_datum({{'E', 5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_root_datum({{'Q', 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_root_datum({}), std::invalid_argument);
  CHECK_THROWS_AS(make_gl_datum(1), std::invalid_argument);
  RootDatum a3 = make_root_datum({{'A', 3}});
  CHECK_THROWS_AS(make_sub_datum(a3, {0, 7}), std::invalid_argument);
}
