#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "bgmu/classifier.hpp"
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

void check_factor(const FactorSummary& f, const std::string& type, int dd,
                  const std::string& mu_label, bool pass) {
  CHECK(f.type == type);
  CHECK(f.d == dd);
  CHECK(f.mu_label == mu_label);
  CHECK(f.pass == pass);
}

}  // namespace

TEST_CASE("verdicts for the flip chain") {
  CoxeterDatum d = a3_flip_w2();
  std::vector<Verdict> vs = classify(d);
  BGMuPoset p = enumerate_bg_mu(d);
  REQUIRE(vs.size() == 3);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    CHECK(vec_eq(vs[i].class_id.nu, p.elements[i].nu));
    CHECK(vs[i].agree);
    CHECK(vs[i].cond2 == vs[i].cond3);
  }
  CHECK(vs[0].cond3);
  CHECK(vs[1].cond3);
  CHECK_FALSE(vs[2].cond3);
  CHECK(vs[0].minimal_J == std::vector<int>{0, 2});
  CHECK(vs[1].minimal_J == std::vector<int>{1});
  CHECK(vs[2].minimal_J == std::vector<int>{0, 1, 2});
  REQUIRE(vs[0].levi_summary.size() == 1);
  check_factor(vs[0].levi_summary[0], "A1xA1", 2, "central", true);
  REQUIRE(vs[1].levi_summary.size() == 1);
  check_factor(vs[1].levi_summary[0], "A1", 1, "w1", true);
  REQUIRE(vs[2].levi_summary.size() == 1);
  check_factor(vs[2].levi_summary[0], "A3", 1, "other", false);
  CHECK(vs[0].dim_lower_bound == 0);
  CHECK(vs[1].dim_lower_bound == 0);
  CHECK(vs[2].dim_lower_bound == 2);
  CHECK(saturation_check(d, vs));
}

TEST_CASE("verdicts for the split inner twist") {
  RootDatum a3 = make_root_datum({{'A', 3}});
  CoxeterDatum d = make_coxeter_datum(a3, identity_perm(a3), TauSpec::node(2),
                                      Vec(a3.lattice.col(1)));
  std::vector<Verdict> vs = classify(d);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].cond3);
  CHECK_FALSE(vs[1].cond3);
  CHECK(vs[0].agree);
  CHECK(vs[1].agree);
  REQUIRE(vs[0].levi_summary.size() == 2);
  check_factor(vs[0].levi_summary[0], "A1", 1, "central", true);
  check_factor(vs[0].levi_summary[1], "A1", 1, "central", true);
  CHECK(vs[1].dim_lower_bound == 3);
  BGMuPoset p = enumerate_bg_mu(d);
  CHECK(is_mu_ordinary_max(d, p));
  CHECK_FALSE(is_extended_lubin_tate(d));
  CHECK(is_extended_lubin_tate(build_levi_datum(d, vs[0].minimal_J)));
  CHECK(saturation_check(d, vs));
}

TEST_CASE("verdicts for GL4") {
  CoxeterDatum d = gl_datum(4, {1, 1, 0, 0});
  std::vector<Verdict> vs = classify(d);
  REQUIRE(vs.size() == 5);
  bool zero[] = {true, true, true, true, false};
  for (int i = 0; i < 5; ++i) {
    CHECK(vs[static_cast<std::size_t>(i)].cond3 == zero[i]);
    CHECK(vs[static_cast<std::size_t>(i)].agree);
  }
  REQUIRE(vs[0].levi_summary.size() == 2);
  check_factor(vs[0].levi_summary[0], "A1", 1, "central", true);
  check_factor(vs[0].levi_summary[1], "A1", 1, "central", true);
  REQUIRE(vs[1].levi_summary.size() == 1);
  check_factor(vs[1].levi_summary[0], "A1", 1, "w1", true);
  REQUIRE(vs[2].levi_summary.size() == 1);
  check_factor(vs[2].levi_summary[0], "A2", 1, "wn", true);
  REQUIRE(vs[3].levi_summary.size() == 1);
  check_factor(vs[3].levi_summary[0], "A2", 1, "w1", true);
  REQUIRE(vs[4].levi_summary.size() == 1);
  check_factor(vs[4].levi_summary[0], "A3", 1, "other", false);
  CHECK(vs[4].dim_lower_bound == 1);
  CHECK(saturation_check(d, vs));
}

TEST_CASE("verdicts for a coarse two slope datum") {
  CoxeterDatum d = gl_datum(5, {2, 1, 0, -1, -1});
  std::vector<Verdict> vs = classify(d);
  REQUIRE(vs.size() == 26);
  for (const Verdict& v : vs) CHECK(v.agree);
  int zero_dim = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i].cond3) {
      ++zero_dim;
      CHECK(i <= 6);
    }
  CHECK(zero_dim == 7);

  // The designated two-slope class plays out as a product of two passing
  // chain-end factors.
  CHECK(vec_eq(vs[6].class_id.nu,
               tvec({Rat(3, 2), Rat(3, 2), Rat(-2, 3), Rat(-2, 3), Rat(-2, 3)})));
  REQUIRE(vs[6].levi_summary.size() == 2);
  check_factor(vs[6].levi_summary[0], "A1", 1, "w1", true);
  check_factor(vs[6].levi_summary[1], "A2", 1, "w1", true);

  // A class that fails through decomposability rather than the basic test.
  CHECK(vec_eq(vs[9].class_id.nu, tvec({2, 0, 0, Rat(-1, 2), Rat(-1, 2)})));
  REQUIRE(vs[9].levi_summary.size() == 1);
  CHECK_FALSE(vs[9].levi_summary[0].fully_hn_dec);
  CHECK(vs[9].levi_summary[0].basic_superbasic);
  CHECK_FALSE(vs[9].levi_summary[0].pass);

  CHECK(vs[0].dim_lower_bound == 0);
  CHECK(vs[7].dim_lower_bound == 2);
  CHECK(vs[10].dim_lower_bound == 3);
  CHECK(vs[20].dim_lower_bound == 4);
  CHECK(vs[25].dim_lower_bound == 6);
  CHECK(saturation_check(d, vs));
}

TEST_CASE("rotation chain of the fork type") {
  RootDatum d5 = make_root_datum({{'D', 5}});
  CoxeterDatum d = make_coxeter_datum(d5, identity_perm(d5), TauSpec::node(1),
                                      Vec(d5.lattice.col(0)));
  std::vector<Verdict> vs = classify(d);
  REQUIRE(vs.size() == 4);
  int zero_dim = 0;
  for (const Verdict& v : vs) {
    CHECK(v.agree);
    if (v.cond3) ++zero_dim;
  }
  CHECK(zero_dim == 3);
  CHECK_FALSE(vs[3].cond3);
  CHECK(vs[3].dim_lower_bound > 0);

  // Each zero-dimensional class below the top restricts to exactly one
  // noncentral chain-end factor; its type grows down the chain.
  const std::string noncentral_type[] = {"", "A1", "A2"};
  for (int i : {1, 2}) {
    const Verdict& v = vs[static_cast<std::size_t>(i)];
    int noncentral = 0;
    for (const FactorSummary& f : v.levi_summary) {
      CHECK(f.pass);
      if (f.mu_label == "central") continue;
      ++noncentral;
      CHECK(f.type == noncentral_type[i]);
      CHECK(f.d == 1);
      CHECK((f.mu_label == "w1" || f.mu_label == "wn"));
    }
    CHECK(noncentral == 1);
  }
}

TEST_CASE("ordinariness of the rotated GL4") {
  RootDatum gl4 = make_gl_datum(4);
  struct Case {
    std::initializer_list<long> mu;
    bool ordinary;
  };
  for (const Case& c : {Case{{1, 0, 0, 0}, false}, Case{{1, 1, 0, 0}, true},
                        Case{{2, 1, 1, 0}, false}, Case{{2, 2, 0, 0}, true},
                        Case{{1, 1, 1, 0}, false}, Case{{2, 1, 0, 0}, false}}) {
    CoxeterDatum d = make_coxeter_datum(gl4, identity_perm(gl4), TauSpec::rotate(2),
                                        tveci(c.mu));
    BGMuPoset p = enumerate_bg_mu(d);
    CHECK(is_mu_ordinary_max(d, p) == c.ordinary);
  }
}

TEST_CASE("no gap below the ordinary top of cyclic twists") {
  CHECK(no_gap_in_twisted_A(4, 2, tveci({1, 1, 0, 0})));
  CHECK(no_gap_in_twisted_A(4, 2, tveci({2, 2, 0, 0})));
  CHECK(no_gap_in_twisted_A(6, 2, tveci({1, 1, 1, 0, 0, 0})));
  CHECK(no_gap_in_twisted_A(3, 1, tveci({1, 1, 1})));

  CHECK_THROWS_AS(no_gap_in_twisted_A(1, 1, tveci({1})), std::invalid_argument);
  CHECK_THROWS_AS(no_gap_in_twisted_A(4, 0, tveci({1, 1, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(no_gap_in_twisted_A(4, 4, tveci({1, 1, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(no_gap_in_twisted_A(4, 2, tveci({1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("wall condition table") {
  std::vector<TableEntry> t2 = mu_ordinary_table(2);
  CHECK(t2.size() == 6);

  std::vector<TableEntry> t = mu_ordinary_table(3);
  REQUIRE(t.size() == 14);
  for (const TableEntry& e : t) CHECK(e.row_matches);

  CHECK(t[0].label == "A2");
  CHECK(t[0].sigma0_name == "id");
  CHECK(t[0].tau_name == "tau[1]");
  CHECK(t[0].bad_nodes == std::vector<int>{1, 2});
  CHECK(t[0].row == 1);

  CHECK(t[2].label == "A2");
  CHECK(t[2].sigma0_name == "flip");
  CHECK(t[2].bad_nodes.empty());
  CHECK(t[2].row == 0);

  CHECK(t[4].label == "B2");
  CHECK(t[4].tau_name == "tau[1]");
  CHECK(t[4].bad_nodes == std::vector<int>{2});
  CHECK(t[4].row == 3);

  CHECK(t[5].label == "C2");
  CHECK(t[5].tau_name == "tau[2]");
  CHECK(t[5].bad_nodes == std::vector<int>{1});
  CHECK(t[5].row == 4);

  CHECK(t[7].label == "A3");
  CHECK(t[7].sigma0_name == "id");
  CHECK(t[7].tau_name == "tau[2]");
  CHECK(t[7].bad_nodes == std::vector<int>{1, 3});
  CHECK(t[7].row == 1);

  CHECK(t[9].label == "A3");
  CHECK(t[9].sigma0_name == "flip");
  CHECK(t[9].tau_name == "tau[1]");
  CHECK(t[9].bad_nodes == std::vector<int>{2});
  CHECK(t[9].row == 2);

  CHECK(t[10].label == "A3");
  CHECK(t[10].sigma0_name == "flip");
  CHECK(t[10].tau_name == "tau[2]");
  CHECK(t[10].bad_nodes.empty());
  CHECK(t[10].row == 0);
}

TEST_CASE("saturation check detects a broken zero dimensional locus") {
  CoxeterDatum d = gl_datum(4, {1, 1, 0, 0});
  std::vector<Verdict> vs = classify(d);
  REQUIRE(saturation_check(d, vs));
  // Marking the top class negative while keeping a lower one positive breaks
  // upward closure.
  vs[0].cond3 = false;
  CHECK_FALSE(saturation_check(d, vs));
}
