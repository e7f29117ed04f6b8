#include "doctest.h"

#include <numeric>

#include "dunkl/decompose.hpp"
#include "dunkl/group.hpp"
#include "dunkl/rng.hpp"

using namespace dunkl;

TEST_CASE("build_group: S_3") {
  GroupModel g = GroupModel::symmetric(3);
  CHECK(g.reflections.size() == 3);
  CHECK(g.degrees == std::vector<int>{2, 3});
  CHECK(g.coxeter_number == 3);
  CHECK(g.class_count == 1);
  CHECK(g.order == 6);
  CHECK(g.invariant_generators.size() == 2);
  CHECK(g.invariant_generators[0].degree() == 2);
  CHECK(g.invariant_generators[1].degree() == 3);
}

TEST_CASE("build_group: I_2(4) has two reflection classes") {
  GroupModel g = GroupModel::dihedral(4);
  CHECK(g.reflections.size() == 4);
  CHECK(g.class_count == 2);
  CHECK(g.degrees == std::vector<int>{2, 4});
  CHECK(g.coxeter_number == 4);
  int even = 0, odd = 0;
  for (const auto& s : g.reflections) (s.class_index == 0 ? even : odd)++;
  CHECK(even == 2);
  CHECK(odd == 2);
}

TEST_CASE("dihedral(3) matches symmetric(3) structurally") {
  GroupModel d = GroupModel::dihedral(3);
  GroupModel s = GroupModel::symmetric(3);
  CHECK(d.reflections.size() == s.reflections.size());
  CHECK(d.degrees == s.degrees);
  CHECK(d.coxeter_number == s.coxeter_number);
  CHECK(d.order == s.order);
}

TEST_CASE("actions: s_0 on z, transposition on v_1, invariance of e_2") {
  GroupModel g = GroupModel::dihedral(5);
  auto z = MPoly<Cyclo>::variable(g.vars, 0);
  auto zb = MPoly<Cyclo>::variable(g.vars, 1);
  CHECK(act_dihedral(g, true, 0, z) == -zb);
  auto e2 = lift_to_cyclo(g.invariant_generators[0]);
  for (const auto& s : g.reflections) CHECK(act_reflection(g, s, e2) == e2);

  GroupModel s3 = GroupModel::symmetric(3);
  auto v1 = MPoly<Rat>::variable(s3.vars, 0);
  auto v2 = MPoly<Rat>::variable(s3.vars, 1);
  CHECK(act_perm(s3, {2, 1, 3}, v1) == v2);  // (12): v1 = x1 - x3 -> x2 - x3 = v2
}

TEST_CASE("reflection actions are involutions and degree-preserving") {
  for (auto g : {GroupModel::symmetric(4), GroupModel::dihedral(5)}) {
    ProbeRng rng(3);
    MPoly<Cyclo> p(g.vars);
    for (int t = 0; t < 5; ++t) {
      Exp e(g.vars->size());
      for (auto& x : e) x = static_cast<int>(rng.uint(4));
      p.add_term(e, Cyclo(rng.rational()));
    }
    for (const auto& s : g.reflections) {
      auto sp = act_reflection(g, s, p);
      CHECK(act_reflection(g, s, sp) == p);
      CHECK(sp.degree() == p.degree());
    }
  }
}

TEST_CASE("S_n permutation action composes and fixes invariants") {
  GroupModel g = GroupModel::symmetric(4);
  ProbeRng rng(5);
  MPoly<Rat> p(g.vars);
  for (int t = 0; t < 6; ++t) {
    Exp e(g.vars->size());
    for (auto& x : e) x = static_cast<int>(rng.uint(3));
    p.add_term(e, rng.rational());
  }
  auto perms = all_permutations(4);
  const auto& w1 = perms[5];
  const auto& w2 = perms[17];
  std::vector<int> prod(4);
  for (int i = 1; i <= 4; ++i) prod[i - 1] = w1[static_cast<size_t>(w2[i - 1] - 1)];
  CHECK(act_perm(g, prod, p) == act_perm(g, w1, act_perm(g, w2, p)));
  for (const auto& gen : g.invariant_generators)
    for (const auto& s : g.reflections)
      CHECK(act_reflection(g, s, gen) == gen);
}

TEST_CASE("class sum of transpositions is central (acts by a scalar-compat op)") {
  GroupModel g = GroupModel::symmetric(4);
  ProbeRng rng(7);
  MPoly<Rat> p(g.vars);
  for (int t = 0; t < 5; ++t) {
    Exp e(g.vars->size());
    for (auto& x : e) x = static_cast<int>(rng.uint(3));
    p.add_term(e, rng.rational());
  }
  auto class_sum = [&](const MPoly<Rat>& q) {
    MPoly<Rat> acc(g.vars);
    for (const auto& s : g.reflections) acc += act_reflection(g, s, q);
    return acc;
  };
  // Centrality: the class sum commutes with every group element.
  for (const auto& w : {transposition(4, 1, 2), transposition(4, 2, 4)})
    CHECK(act_perm(g, w, class_sum(p)) == class_sum(act_perm(g, w, p)));
}

TEST_CASE("invariant_basis") {
  GroupModel i5 = GroupModel::dihedral(5);
  auto b1 = i5.invariant_basis(4);
  REQUIRE(b1.size() == 1);  // {e2^2}
  CHECK(b1[0] == i5.invariant_generators[0] * i5.invariant_generators[0]);

  GroupModel s4 = GroupModel::symmetric(4);
  CHECK(s4.invariant_basis(4).size() == 2);  // {e2^2, e4}

  GroupModel i4 = GroupModel::dihedral(4);
  CHECK(i4.invariant_basis(4).size() == 2);  // {e2^2, e4}

  CHECK(s4.invariant_basis(0).size() == 1);
  CHECK(s4.invariant_basis(1).empty());
}

TEST_CASE("S_n character tables via Murnaghan-Nakayama") {
  const SymCharTable& t3 = sym_char_table(3);
  // Known table of S_3: irreps [3], [2,1], [1,1,1].
  CHECK(t3.irrep_dims == std::vector<long>{1, 2, 1});
  for (int n = 3; n <= 6; ++n) {
    const SymCharTable& t = sym_char_table(n);
    long sumsq = 0, order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    for (long d : t.irrep_dims) sumsq += d * d;
    CHECK(sumsq == order);
    // First orthogonality for a couple of irreps.
    for (size_t a = 0; a < t.chi.size(); ++a) {
      long acc = 0;
      for (size_t c = 0; c < t.classes.size(); ++c)
        acc += t.classes[c].size * t.chi[a][c] * t.chi[a][c];
      CHECK(acc == order);
    }
  }
}

TEST_CASE("dihedral tables have the right irreducible count") {
  for (int m : {3, 4, 5, 6}) {
    const DihCharTable& t = dih_char_table(m);
    size_t onedims = (m % 2 == 0) ? 4 : 2;
    CHECK(t.irrep_names.size() == onedims + static_cast<size_t>((m - 1) / 2));
    long sumsq = 0;
    for (int d : t.irrep_dims) sumsq += d * d;
    CHECK(sumsq == 2 * m);
  }
}

TEST_CASE("decompose_module: trivial span and defining spans") {
  GroupModel i5 = GroupModel::dihedral(5);
  std::vector<MPoly<Rat>> ones{MPoly<Rat>::constant(i5.vars, Rat(1))};
  auto m1 = decompose_module(i5, ones);
  CHECK(m1 == std::map<std::string, long>{{"triv", 1}});

  // Degree-1 component of C[z,zb] is the defining module Z_1.
  std::vector<MPoly<Rat>> deg1{MPoly<Rat>::variable(i5.vars, 0),
                               MPoly<Rat>::variable(i5.vars, 1)};
  auto m2 = decompose_module(i5, deg1);
  CHECK(m2 == std::map<std::string, long>{{"Z1", 1}});

  GroupModel s4 = GroupModel::symmetric(4);
  std::vector<MPoly<Rat>> vbasis;
  for (size_t i = 0; i < 3; ++i) vbasis.push_back(MPoly<Rat>::variable(s4.vars, i));
  auto m3 = decompose_module(s4, vbasis);
  CHECK(m3 == std::map<std::string, long>{{"[3,1]", 1}});
}

TEST_CASE("decompose_module: multiplicities reproduce dimensions") {
  // Full degree-2 component of S_4: dim 6.
  GroupModel s4 = GroupModel::symmetric(4);
  std::vector<MPoly<Rat>> basis;
  for (const auto& e : s4.monomials_of_degree(2))
    basis.push_back(MPoly<Rat>::monomial(s4.vars, e, Rat(1)));
  auto mult = decompose_module(s4, basis);
  long total = 0;
  for (const auto& [label, m] : mult) total += m * irrep_dim(s4, label);
  CHECK(total == 6);

  GroupModel i6 = GroupModel::dihedral(6);
  std::vector<MPoly<Rat>> basis2;
  for (const auto& e : i6.monomials_of_degree(3))
    basis2.push_back(MPoly<Rat>::monomial(i6.vars, e, Rat(1)));
  auto mult2 = decompose_module(i6, basis2);
  long total2 = 0;
  for (const auto& [label, m] : mult2) total2 += m * irrep_dim(i6, label);
  CHECK(total2 == 4);
}

TEST_CASE("non-stable span is rejected") {
  GroupModel s3 = GroupModel::symmetric(3);
  std::vector<MPoly<Rat>> bad{MPoly<Rat>::variable(s3.vars, 0)};
  CHECK_THROWS_AS(decompose_module(s3, bad), NotStable);
}

TEST_CASE("isotypic_basis extracts unique copies") {
  // In degree 1 of S_4 the defining component is everything.
  GroupModel s4 = GroupModel::symmetric(4);
  std::vector<MPoly<Rat>> vbasis;
  for (size_t i = 0; i < 3; ++i) vbasis.push_back(MPoly<Rat>::variable(s4.vars, i));
  auto comp = isotypic_basis(s4, vbasis, "[3,1]");
  CHECK(comp.size() == 3);
  CHECK(isotypic_basis(s4, vbasis, "[4]").empty());

  GroupModel i4 = GroupModel::dihedral(4);
  std::vector<MPoly<Rat>> deg2;
  for (const auto& e : i4.monomials_of_degree(2))
    deg2.push_back(MPoly<Rat>::monomial(i4.vars, e, Rat(1)));
  // z^2, zb^2 form Z_2; z zb is trivial.
  CHECK(isotypic_basis(i4, deg2, "Z2").size() == 2);
  CHECK(isotypic_basis(i4, deg2, "triv").size() == 1);
  CHECK(isotypic_basis(i4, deg2, "eps").empty());
}

TEST_CASE("group descriptors parse") {
  CHECK(GroupModel::from_descriptor("Sn:4").is_symmetric());
  CHECK(GroupModel::from_descriptor("I2:5").is_dihedral());
  CHECK_THROWS_AS(GroupModel::from_descriptor("E8:1"), AlgebraError);
}
