#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "bgmu/classifier.hpp"
#include "bgmu/essgap.hpp"
#include "bgmu/hodgenewton.hpp"
#include "test_util.hpp"

using namespace bgmu;

namespace {

CoxeterDatum gl_datum(int n, std::initializer_list<long> mu) {
  RootDatum rd = make_gl_datum(n);
  return make_coxeter_datum(rd, identity_perm(rd), TauSpec::identity(), tveci(mu));
}

CoxeterDatum a3_flip_w2() {
  RootDatum rd = make_root_datum({{'A', 3}});
  return make_coxeter_datum(rd, flip_perm(rd), TauSpec::identity(), Vec(rd.lattice.col(1)));
}

CoxeterDatum gl6_rot2_e1() {
  RootDatum rd = make_gl_datum(6);
  return make_coxeter_datum(rd, identity_perm(rd), TauSpec::rotate(2),
                            tveci({1, 0, 0, 0, 0, 0}));
}

std::vector<int> full_nodes(const CoxeterDatum& d) {
  std::vector<int> J(static_cast<std::size_t>(d.rd.rank));
  for (int i = 0; i < d.rd.rank; ++i) J[static_cast<std::size_t>(i)] = i;
  return J;
}

bool stable_under_twist(const CoxeterDatum& d, const std::vector<int>& J) {
  std::set<int> in(J.begin(), J.end());
  for (int j : J)
    if (!in.count(d.sigma0[static_cast<std::size_t>(j)])) return false;
  return true;
}

}  // namespace

TEST_CASE("decomposability is exactly containment of the minimal support") {
  std::vector<CoxeterDatum> data;
  data.push_back(a3_flip_w2());
  data.push_back(gl_datum(4, {1, 1, 0, 0}));
  data.push_back(gl_datum(4, {2, 0, 0, 0}));
  RootDatum a3 = make_root_datum({{'A', 3}});
  data.push_back(make_coxeter_datum(a3, identity_perm(a3), TauSpec::node(1),
                                    Vec(a3.lattice.col(0))));
  for (const CoxeterDatum& d : data) {
    BGMuPoset p = enumerate_bg_mu(d);
    for (const SigmaClass& c : p.elements) {
      std::vector<int> jmin = minimal_J(d, c);
      std::set<int> jset(jmin.begin(), jmin.end());
      for (int mask = 0; mask < (1 << d.rd.rank); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < d.rd.rank; ++i)
          if (mask & (1 << i)) J.push_back(i);
        if (!stable_under_twist(d, J)) {
          CHECK_THROWS_AS(is_hn_decomposable(d, c, J), std::invalid_argument);
          continue;
        }
        bool contains = true;
        for (int j : jmin)
          if (!(mask & (1 << j))) contains = false;
        CHECK(is_hn_decomposable(d, c, J) == contains);
      }
    }
  }
}

TEST_CASE("frozen minimal supports and indecomposable maximum for GL4") {
  CoxeterDatum d = gl_datum(4, {2, 0, 0, 0});
  BGMuPoset p = enumerate_bg_mu(d);
  REQUIRE(p.size() == 6);
  std::vector<std::vector<int>> expected = {{1, 2}, {0, 2}, {0, 1}, {0, 1}, {0, 1, 2}, {0, 1, 2}};
  for (int i = 0; i < 6; ++i)
    CHECK(minimal_J(d, p.elements[static_cast<std::size_t>(i)]) ==
          expected[static_cast<std::size_t>(i)]);
  CHECK(p.indec_index == 4);
  CHECK(vec_eq(indec_max(d, p).nu, tvec({1, Rat(1, 3), Rat(1, 3), Rat(1, 3)})));
}

TEST_CASE("indecomposable maxima across twists") {
  CoxeterDatum f = a3_flip_w2();
  BGMuPoset pf = enumerate_bg_mu(f);
  CHECK(vec_eq(indec_max(f, pf).nu, Vec(Vec::Zero(4))));

  RootDatum gl4 = make_gl_datum(4);
  CoxeterDatum rot = make_coxeter_datum(gl4, identity_perm(gl4), TauSpec::rotate(2),
                                        tveci({1, 0, 0, 0}));
  BGMuPoset pr = enumerate_bg_mu(rot);
  REQUIRE(pr.size() == 3);
  CHECK(vec_eq(pr.elements[0].nu, tvec({Rat(1, 2), Rat(1, 2), 0, 0})));
  CHECK(vec_eq(pr.elements[1].nu, tvec({Rat(1, 2), Rat(1, 6), Rat(1, 6), Rat(1, 6)})));
  CHECK(vec_eq(pr.elements[2].nu, tvec({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)})));
  CHECK(pr.indec_index == 1);
  CHECK(vec_eq(indec_max(rot, pr).nu, pr.elements[1].nu));
}

TEST_CASE("levi datum on a single fixed node") {
  CoxeterDatum d = a3_flip_w2();
  BGMuPoset p = enumerate_bg_mu(d);
  LeviDatum lv = build_levi_datum(d, {1});
  CHECK(lv.z.word.empty());
  CHECK(lv.inner.label == "A1");
  CHECK(lv.nodes == std::vector<int>{1});
  CHECK(vec_eq(lv.mu_P, d.mu));
  CHECK(vec_eq(lv.inner.mu, d.mu));

  SigmaClass rc = restrict_class(d, lv, p.elements[1]);
  CHECK(vec_eq(rc.nu, p.elements[1].nu));
  BGMuPoset lp = enumerate_bg_mu(lv.inner);
  CHECK(lp.size() == 2);
  CHECK(is_basic(lv.inner, rc));
  GapReport gp = ess_gap(d, p.elements[1], p.max());
  GapReport gl = ess_gap(lv.inner, rc, lp.max());
  CHECK(gp.ess_gap == gl.ess_gap);
  CHECK(gp.length == gl.length);

  // The top class has walls outside {1}.
  CHECK_THROWS_AS(restrict_class(d, lv, p.max()), std::invalid_argument);
  // Unstable node sets are rejected up front.
  CHECK_THROWS_AS(build_levi_datum(d, {0}), std::invalid_argument);
  CHECK_THROWS_AS(build_levi_datum(d, {0, 1}), std::invalid_argument);
}

TEST_CASE("levi datum needing a nontrivial transporter") {
  CoxeterDatum d = gl6_rot2_e1();
  BGMuPoset p = enumerate_bg_mu(d);
  std::vector<int> J = minimal_J(d, p.max());
  CHECK(J == std::vector<int>{0, 1, 3, 4});
  LeviDatum lv = build_levi_datum(d, J);
  CHECK(lv.z.word.size() == 3);
  CHECK(lv.inner.label == "A2 x A2");
  CHECK(vec_eq(lv.mu_P, d.mu));
  CHECK(vec_eq(lv.tau_J.t, tveci({1, 0, 0, 1, 0, 0})));

  BGMuPoset lp = enumerate_bg_mu(lv.inner);
  CHECK(lp.size() == 2);
  for (int i : {0, 1}) {
    SigmaClass rc = restrict_class(d, lv, p.elements[static_cast<std::size_t>(i)]);
    CHECK(vec_eq(rc.nu, p.elements[static_cast<std::size_t>(i)].nu));
    CHECK(lp.index_of(rc.nu) >= 0);
  }
  SigmaClass rc1 = restrict_class(d, lv, p.elements[1]);
  GapReport gp = ess_gap(d, p.elements[1], p.max());
  GapReport gl = ess_gap(lv.inner, rc1, lp.max());
  CHECK(gp.ess_gap == gl.ess_gap);
  CHECK(gp.length == gl.length);
}

TEST_CASE("two slope class lands in a product levi") {
  CoxeterDatum d = gl_datum(5, {2, 1, 0, -1, -1});
  SigmaClass c = make_class(d, tvec({Rat(3, 2), Rat(3, 2), Rat(-2, 3), Rat(-2, 3), Rat(-2, 3)}));
  std::vector<int> J = minimal_J(d, c);
  CHECK(J == std::vector<int>{0, 2, 3});
  LeviDatum lv = build_levi_datum(d, J);
  CHECK(lv.inner.label == "A1 x A2");
  CHECK(lv.inner.rd.components.size() == 2);
  SigmaClass rc = restrict_class(d, lv, c);
  CHECK(vec_eq(rc.nu, c.nu));
  CHECK(is_basic(lv.inner, rc));
  BGMuPoset p = enumerate_bg_mu(d);
  BGMuPoset lp = enumerate_bg_mu(lv.inner);
  GapReport gp = ess_gap(d, c, p.max());
  GapReport gl = ess_gap(lv.inner, rc, lp.max());
  CHECK(gp.ess_gap == 0);
  CHECK(gl.ess_gap == 0);
  CHECK(gp.length == gl.length);
}

TEST_CASE("full node set reproduces the parent datum") {
  // GL data restrict to their finite subsystem, so the label drops to the
  // A-type name while every derived invariant must survive.
  const char* labels[] = {"A3", "A4", "A5"};
  int k = 0;
  for (const CoxeterDatum& d : {a3_flip_w2(), gl_datum(5, {2, 1, 0, -1, -1}), gl6_rot2_e1()}) {
    LeviDatum whole = build_levi_datum(d, full_nodes(d));
    CHECK(whole.inner.label == labels[k++]);
    CHECK(vec_eq(whole.inner.mu_diamond, d.mu_diamond));
    CHECK(vec_eq(whole.inner.nu_tau, d.nu_tau));
    CHECK(whole.inner.kq.group_str() == d.kq.group_str());
    BGMuPoset a = enumerate_bg_mu(d);
    BGMuPoset b = enumerate_bg_mu(whole.inner);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i)
      CHECK(vec_eq(a.elements[static_cast<std::size_t>(i)].nu,
                   b.elements[static_cast<std::size_t>(i)].nu));
  }
}

TEST_CASE("restriction preserves gap and length to the top") {
  std::vector<CoxeterDatum> data;
  data.push_back(a3_flip_w2());
  data.push_back(gl_datum(4, {1, 1, 0, 0}));
  data.push_back(gl_datum(4, {2, 0, 0, 0}));
  data.push_back(gl_datum(5, {2, 1, 0, -1, -1}));
  for (const CoxeterDatum& d : data) {
    BGMuPoset p = enumerate_bg_mu(d);
    REQUIRE(is_mu_ordinary_max(d, p));
    for (const SigmaClass& c : p.elements) {
      std::vector<int> J = minimal_J(d, c);
      if (static_cast<int>(J.size()) == d.rd.rank) continue;
      LeviDatum lv = build_levi_datum(d, J);
      SigmaClass rc = restrict_class(d, lv, c);
      CHECK(vec_eq(rc.nu, c.nu));
      BGMuPoset lp = enumerate_bg_mu(lv.inner);
      GapReport gp = ess_gap(d, c, p.max());
      GapReport gl = ess_gap(lv.inner, rc, lp.max());
      CHECK(gp.ess_gap == gl.ess_gap);
      CHECK(gp.length == gl.length);
    }
  }
}

TEST_CASE("direct sub datum construction") {
  RootDatum a3 = make_root_datum({{'A', 3}});
  CoxeterDatum d = a3_flip_w2();
  // The flip stabilizes the middle node's subsystem.
  SubDatum mid = make_sub_datum(a3, {1});
  CoxeterDatum inner = make_twisted_sub_datum(mid.rd, d.sigma_aff(), d.mu);
  CHECK(inner.label == "A1");
  BGMuPoset lp = enumerate_bg_mu(inner);
  CHECK(lp.size() == 2);

  // A subsystem the twist moves cannot be normalized.
  SubDatum edge = make_sub_datum(a3, {0});
  CHECK_THROWS(make_twisted_sub_datum(edge.rd, d.sigma_aff(), Vec(Vec::Zero(4))));
}
