#include <gtest/gtest.h>

#include "support.hpp"

using namespace swlab;
using swlab::gen::corpus_complex;

namespace {

Cochain unit(const SimplicialComplex& x) { return Cochain::all_ones(x, 0); }

int trials_for(const SimplicialComplex& x) { return x.dim() >= 3 ? 12 : 25; }

}  // namespace

TEST(Cup, UnitIsIdentity) {
  auto g = gen::rng(51);
  const auto x = corpus_complex("t2-7");
  const auto order = VertexOrder::numeric(x);
  for (int d = 0; d <= 2; ++d) {
    const auto b = gen::random_cochain(x, d, g);
    EXPECT_EQ(cup(unit(x), b, order), b);
    EXPECT_EQ(cup(b, unit(x), order), b);
  }
  EXPECT_THROW(cup(Cochain(x, 2), Cochain(x, 1), order), Error);
}

TEST(Cup, ProjectivePlaneSquareNonzero) {
  const auto x = corpus_complex("rp2-6");
  const CohomologySummary h(x);
  const auto order = VertexOrder::numeric(x);
  ASSERT_EQ(h.betti(1), 1u);
  const Cochain& a = h.basis(1)[0];
  EXPECT_FALSE(h.is_zero_class(cup(a, a, order)));
  EXPECT_TRUE(evaluate(cup(a, a, order), fundamental_cycle(x)));
}

TEST(Cup, TorusIntersectionForm) {
  const auto x = corpus_complex("t2-7");
  const CohomologySummary h(x);
  const auto order = VertexOrder::numeric(x);
  const auto gamma = fundamental_cycle(x);
  ASSERT_EQ(h.betti(1), 2u);
  const Cochain& a = h.basis(1)[0];
  const Cochain& b = h.basis(1)[1];
  EXPECT_TRUE(evaluate(cup(a, b, order), gamma));
  EXPECT_FALSE(evaluate(cup(a, a, order), gamma));
  EXPECT_FALSE(evaluate(cup(b, b, order), gamma));
}

TEST(Cap, UnitAndDuality) {
  const auto x = corpus_complex("rp2-6");
  const auto order = VertexOrder::numeric(x);
  const auto gamma = fundamental_cycle(x);
  EXPECT_EQ(cap(unit(x), gamma, order), gamma);
  const CohomologySummary h(x);
  const Chain pd = cap(h.basis(1)[0], gamma, order);
  EXPECT_TRUE(is_cycle(pd));
  EXPECT_FALSE(homology(x).is_boundary(pd));
  EXPECT_THROW(cap(Cochain(x, 2), Chain(x, 1), order), Error);
}

TEST(CupI, CupZeroIsCup) {
  auto g = gen::rng(52);
  const auto x = gen::sphere(2);
  const auto order = VertexOrder::numeric(x);
  for (int t = 0; t < 20; ++t) {
    const auto a = gen::random_cochain(x, 1, g), b = gen::random_cochain(x, 1, g);
    EXPECT_EQ(cup_i(a, b, 0, order), cup(a, b, order));
  }
  const auto a = gen::random_cochain(x, 1, g);
  EXPECT_THROW(cup_i(a, a, 2, order), Error);
  EXPECT_THROW(cup_i(a, a, -1, order), Error);
}

TEST(CupI, ProjectivePlaneCupOne) {
  const auto x = corpus_complex("rp2-6");
  const CohomologySummary h(x);
  const auto order = VertexOrder::numeric(x);
  const Cochain& a = h.basis(1)[0];
  // a ∪₁ a represents Sq⁰ a = a
  EXPECT_TRUE(h.same_class(cup_i(a, a, 1, order), a));
}

TEST(Sq, Axioms) {
  const auto x = corpus_complex("rp2-6");
  const CohomologySummary h(x);
  const auto order = VertexOrder::numeric(x);
  const Cochain& a = h.basis(1)[0];
  EXPECT_TRUE(h.same_class(steenrod_sq(a, 0, order), a));
  EXPECT_FALSE(h.is_zero_class(steenrod_sq(a, 1, order)));
  EXPECT_TRUE(h.same_class(steenrod_sq(a, 1, order), cup(a, a, order)));
  const auto y = corpus_complex("rp3");
  const CohomologySummary hy(y);
  const auto oy = VertexOrder::numeric(y);
  EXPECT_TRUE(steenrod_sq(hy.basis(1)[0], 2, oy).is_zero());
  EXPECT_THROW(steenrod_sq(a, 2, order), Error);
  Cochain broken(x, 1);
  broken.set(x.skeleton(1)[0]);
  try {
    steenrod_sq(broken, 0, order);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACocycle);
  }
}

TEST(FundamentalCycle, Examples) {
  EXPECT_EQ(fundamental_cycle(gen::sphere(2)).weight(), 4u);
  const auto rp2 = corpus_complex("rp2-6");
  const auto g = fundamental_cycle(rp2);
  EXPECT_EQ(g.weight(), 10u);
  EXPECT_FALSE(homology(rp2).is_boundary(g));
  const auto two = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
  try {
    fundamental_cycle(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPseudomanifold);
  }
}

TEST(Wu, KnownValues) {
  auto check = [](const std::string& name, std::vector<bool> v_nonzero, std::vector<bool> w_nonzero) {
    const auto x = corpus_complex(name);
    const auto wu = wu_classes(x, VertexOrder::numeric(x));
    for (std::size_t k = 0; k < v_nonzero.size(); ++k) EXPECT_EQ(!wu.v[k].is_zero(), v_nonzero[k]) << name << " v" << k;
    for (std::size_t k = 0; k < w_nonzero.size(); ++k) EXPECT_EQ(!wu.w[k].is_zero(), w_nonzero[k]) << name << " w" << k;
  };
  check("s2", {true, false, false}, {true, false, false});
  check("rp2-6", {true, true, false}, {true, true, true});
  check("klein", {true, true, false}, {true, true, false});
  check("t2-7", {true, false, false}, {true, false, false});
  check("s3", {true, false, false, false}, {true, false, false, false});
  check("rp3", {true, false, false, false}, {true, false, false, false});
}

TEST(Wu, RejectsNonManifoldPairing) {
  // wedge of two circles: b0 = 1, b1 = 2 in dimension 1, pairing cannot be perfect
  const auto x = build_complex({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  EXPECT_THROW(wu_classes(x, VertexOrder::numeric(x)), Error);
}

TEST(PoincareDual, UnitAndProjectivePlane) {
  const auto x = corpus_complex("rp2-6");
  const auto order = VertexOrder::numeric(x);
  EXPECT_EQ(poincare_dual_of_cocycle(unit(x), order), fundamental_cycle(x));
  const auto wu = wu_classes(x, order);
  const Chain pd = poincare_dual_of_cocycle(wu.w[1].representative, order);
  EXPECT_TRUE(is_cycle(pd));
  EXPECT_FALSE(homology(x).is_boundary(pd));
}

// Randomized identities over the corpus.

TEST(OracleProperty, CupLeibniz) {
  auto g = gen::rng(61);
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const auto order = VertexOrder::numeric(x);
    const int n = x.dim();
    for (int t = 0; t < trials_for(x); ++t)
      for (int p = 0; p < n; ++p)
        for (int q = 0; p + q + 1 <= n; ++q) {
          const auto a = gen::random_cochain(x, p, g), b = gen::random_cochain(x, q, g);
          const Cochain rhs = cup(coboundary(a), b, order) + cup(a, coboundary(b), order);
          EXPECT_EQ(coboundary(cup(a, b, order)), rhs) << name;
        }
  }
}

TEST(OracleProperty, CapLeibniz) {
  auto g = gen::rng(62);
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const auto order = VertexOrder::numeric(x);
    const int n = x.dim();
    for (int t = 0; t < trials_for(x); ++t)
      for (int d = 1; d <= n; ++d)
        for (int p = 0; d - p >= 1; ++p) {
          const auto a = gen::random_cochain(x, p, g);
          const auto c = gen::random_chain(x, d, g);
          Chain rhs = cap(coboundary(a), c, order);
          if (d - 1 >= p) rhs += cap(a, boundary(c), order);
          EXPECT_EQ(boundary(cap(a, c, order)), rhs) << name;
        }
  }
}

TEST(OracleProperty, CupICoboundaryIdentity) {
  // δ(a ∪ᵢ b) = a ∪ᵢ₋₁ b + b ∪ᵢ₋₁ a + δa ∪ᵢ b + a ∪ᵢ δb  (mod 2)
  auto g = gen::rng(63);
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const auto order = VertexOrder::numeric(x);
    const int n = x.dim();
    for (int t = 0; t < trials_for(x); ++t)
      for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
          for (int i = 1; i <= std::min(p, q); ++i) {
            const int m = p + q - i;
            if (m + 1 > n) continue;
            const auto a = gen::random_cochain(x, p, g), b = gen::random_cochain(x, q, g);
            Cochain rhs = cup_i(a, b, i - 1, order) + cup_i(b, a, i - 1, order);
            if (p + 1 <= n && i <= std::min(p + 1, q)) rhs += cup_i(coboundary(a), b, i, order);
            if (q + 1 <= n && i <= std::min(p, q + 1)) rhs += cup_i(a, coboundary(b), i, order);
            EXPECT_EQ(coboundary(cup_i(a, b, i, order)), rhs) << name << " p" << p << " q" << q << " i" << i;
          }
  }
}

TEST(OracleProperty, SqAxiomsAtClassLevel) {
  auto g = gen::rng(64);
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const CohomologySummary h(x);
    const auto order = gen::shuffled_order(x, g);
    const int n = x.dim();
    for (int t = 0; t < trials_for(x); ++t)
      for (int p = 0; p <= n; ++p) {
        const auto a = gen::random_cocycle(x, h, p, g);
        EXPECT_TRUE(h.same_class(steenrod_sq(a, 0, order), a)) << name;
        if (2 * p <= n) {
          const auto sq = steenrod_sq(a, p, order);
          EXPECT_TRUE(is_cocycle(sq));
          EXPECT_TRUE(h.same_class(sq, cup(a, a, order))) << name;
        }
        for (int k = p + 1; p + k <= n; ++k) EXPECT_TRUE(steenrod_sq(a, k, order).is_zero());
        for (int k = 0; k <= p && p + k <= n; ++k) EXPECT_TRUE(is_cocycle(steenrod_sq(a, k, order)));
      }
  }
}

TEST(OracleProperty, SqClassDependsOnlyOnClass) {
  auto g = gen::rng(65);
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const CohomologySummary h(x);
    const auto order = VertexOrder::numeric(x);
    for (int p = 1; p <= x.dim(); ++p)
      for (int k = 0; k <= p && p + k <= x.dim(); ++k) {
        const auto a = gen::random_cocycle(x, h, p, g);
        const auto b = a + coboundary(gen::random_cochain(x, p - 1, g));
        EXPECT_TRUE(h.same_class(steenrod_sq(a, k, order), steenrod_sq(b, k, order))) << name;
      }
  }
}

TEST(OracleProperty, WuVanishingAndUnit) {
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const CohomologySummary h(x);
    const auto wu = wu_classes(x, VertexOrder::numeric(x), h);
    const int n = x.dim();
    EXPECT_TRUE(h.same_class(wu.v[0].representative, unit(x)));
    EXPECT_TRUE(h.same_class(wu.w[0].representative, unit(x)));
    for (int k = 0; k <= n; ++k)
      if (2 * k > n) EXPECT_TRUE(wu.v[static_cast<std::size_t>(k)].is_zero()) << name << " v" << k;
    for (const auto& c : wu.w) EXPECT_TRUE(is_cocycle(c.representative));
  }
}

TEST(OracleProperty, OrderIndependence) {
  auto g = gen::rng(66);
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const CohomologySummary h(x);
    const auto a = wu_classes(x, VertexOrder::numeric(x), h);
    const auto b = wu_classes(x, VertexOrder::reversed(x), h);
    const auto c = wu_classes(x, gen::shuffled_order(x, g), h);
    for (std::size_t i = 0; i < a.w.size(); ++i) {
      EXPECT_EQ(a.w[i].coordinates, b.w[i].coordinates) << name << " w" << i;
      EXPECT_EQ(a.w[i].coordinates, c.w[i].coordinates) << name << " w" << i;
    }
  }
}

TEST(OracleProperty, PoincareDualIsClassInvariant) {
  auto g = gen::rng(67);
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const CohomologySummary h(x);
    const HomologySummary hh(x);
    const auto order = VertexOrder::numeric(x);
    for (int p = 1; p <= x.dim(); ++p) {
      const auto a = gen::random_cocycle(x, h, p, g);
      const auto b = a + coboundary(gen::random_cochain(x, p - 1, g));
      EXPECT_TRUE(hh.same_class(poincare_dual_of_cocycle(a, order), poincare_dual_of_cocycle(b, order)));
    }
  }
}

TEST(OracleProperty, NaturalUnderSubdivision) {
  for (const auto& name : gen::corpus_list()) {
    const auto x = corpus_complex(name);
    const SubdividedComplex s(x);
    const auto& y = s.derived();
    const auto ox = VertexOrder::numeric(x);
    const auto oy = VertexOrder::numeric(y);  // derived ids already follow decreasing dimension
    const auto wx = wu_classes(x, ox);
    const auto wy = wu_classes(y, oy);
    const HomologySummary hy(y);
    const auto gx = fundamental_cycle(x);
    const auto gy = fundamental_cycle(y);
    for (int i = 0; i <= x.dim(); ++i) {
      const Chain pushed = subdivide_chain(s, cap(wx.w[static_cast<std::size_t>(i)].representative, gx, ox));
      const Chain direct = cap(wy.w[static_cast<std::size_t>(i)].representative, gy, oy);
      EXPECT_TRUE(hy.same_class(pushed, direct)) << name << " w" << i;
    }
  }
}
