#include <gtest/gtest.h>

#include <random>

#include "logchern/arrangements.hpp"
#include "logchern/bundled.hpp"
#include "logchern/errors.hpp"
#include "oracles.hpp"

using namespace logchern;

namespace {

PoincarePoly pp(std::vector<long> b) {
  PoincarePoly p;
  for (long x : b) p.b.emplace_back(x);
  return p;
}

oracle::Hyperplanes to_oracle(const Arrangement& a) { return {a.normals, a.constants}; }

PoincarePoly oracle_pi(const Arrangement& a) {
  PoincarePoly p;
  for (const auto& x : oracle::poincare(to_oracle(a))) p.b.push_back(x);
  return p;
}

PoincarePoly times_one_plus_t(const PoincarePoly& p) {
  PoincarePoly q;
  q.b.assign(p.b.size() + 1, Integer(0));
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    q.b[i] += p.b[i];
    q.b[i + 1] += p.b[i];
  }
  return q;
}

Arrangement boolean(std::size_t l) {
  std::vector<std::vector<long>> v;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<long> e(l, 0);
    e[i] = 1;
    v.push_back(e);
  }
  return make_central(l, v);
}

Arrangement eight_planes() { return bundled_arrangement("eight-planes-p3"); }

std::vector<Arrangement> random_arrangements(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<Arrangement> out;
  for (int k = 0; k < count; ++k) {
    std::size_t l = 2 + rng() % 3;
    std::size_t n = 1 + rng() % 8;
    out.push_back(make_central(l, oracle::random_central(rng, l, n)));
  }
  return out;
}

void expect_lattice_matches_oracle(const Arrangement& a) {
  auto lat = build_lattice(a);
  auto ref = oracle::lattice(to_oracle(a));
  ASSERT_EQ(static_cast<std::size_t>(lat.rank() + 1), ref.size());
  for (int c = 0; c <= lat.rank(); ++c) {
    std::set<std::vector<std::size_t>> got;
    for (const auto& x : lat.flats(c)) {
      got.insert(x.hyperplanes);
      EXPECT_EQ(x.codim, c);
    }
    EXPECT_EQ(got, ref[c]) << "codim " << c;
  }
}

}  // namespace

TEST(Parse, BooleanPlane) {
  auto a = parse_arrangement(R"({"l": 2, "hyperplanes": [[1,0],[0,1]]})");
  EXPECT_EQ(a.dim, 2u);
  EXPECT_EQ(a.normals, (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
}

TEST(Parse, NormalizesToPrimitive) {
  auto a = parse_arrangement(R"({"l": 2, "hyperplanes": [[2,0],[0,1]]})");
  EXPECT_EQ(a.normals, (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
  auto b = parse_arrangement(R"({"l": 3, "hyperplanes": [[-2,4,6]]})");
  EXPECT_EQ(b.normals.front(), (std::vector<long>{1, -2, -3}));
}

TEST(Parse, EightPlanesHasDegreeEight) {
  auto a = eight_planes();
  EXPECT_EQ(a.dim, 4u);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(a.normals[7], (std::vector<long>{1, -1, 1, 0}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_arrangement(R"({"l": 2, "hyperplanes": [[0,0]]})"), InputError);
  EXPECT_THROW(parse_arrangement(R"({"l": 2, "hyperplanes": [[1,1],[-2,-2]]})"), InputError);
  EXPECT_THROW(parse_arrangement(R"({"l": 3, "hyperplanes": [[1,1]]})"), InputError);
  EXPECT_THROW(parse_arrangement(R"({"l": 2, "hyperplanes": [[1,1]], "labels": ["a","b"]})"), InputError);
  EXPECT_THROW(parse_arrangement("{not json"), InputError);
  EXPECT_THROW(parse_arrangement(R"({"hyperplanes": []})"), InputError);
  EXPECT_THROW(parse_arrangement(R"({"l": 2, "hyperplanes": [["a", 1]]})"), InputError);
}

TEST(Parse, RoundTrip) {
  for (const auto& e : bundled_examples()) {
    auto a = parse_arrangement(e.json);
    EXPECT_EQ(parse_arrangement(arrangement_to_json(a)), a) << e.name;
  }
}

TEST(Bundled, FilesMatchEmbeddedCopies) {
  for (const auto& e : bundled_examples()) {
    auto a = load_arrangement(std::string(LOGCHERN_DATA_DIR) + "/" + e.name + ".json");
    EXPECT_EQ(a, parse_arrangement(e.json)) << e.name;
  }
}

TEST(Bundled, RequiredExamplesPresent) {
  for (const char* name : {"eight-planes-p3", "boolean-2", "boolean-3", "boolean-4", "boolean-5", "generic-3-lines",
                           "rank2-triple", "generic-4-in-c3", "generic-5-in-c4"})
    EXPECT_NO_THROW(bundled_arrangement(name)) << name;
  EXPECT_EQ(bundled_arrangement("boolean-2").normals, (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(bundled_arrangement("generic-4-in-c3").normals,
            (std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  EXPECT_THROW(bundled_arrangement("nope"), InputError);
}

TEST(Lattice, SmallCounts) {
  EXPECT_EQ(build_lattice(boolean(2)).size(), 4u);
  EXPECT_EQ(build_lattice(bundled_arrangement("generic-3-lines")).size(), 5u);
}

TEST(Lattice, EightPlanesMatchesSubsetEnumeration) { expect_lattice_matches_oracle(eight_planes()); }

TEST(Lattice, RandomArrangementsMatchSubsetEnumeration) {
  for (const auto& a : random_arrangements(17, 12)) expect_lattice_matches_oracle(a);
}

TEST(Lattice, DeconedEightPlanesMatchesSubsetEnumeration) { expect_lattice_matches_oracle(decone(eight_planes(), 3)); }

TEST(Mobius, Basics) {
  auto lat = mobius(build_lattice(boolean(3)));
  EXPECT_EQ(lat.flats(0).front().mu, 1);
  for (int c = 0; c <= 3; ++c)
    for (const auto& x : lat.flats(c)) EXPECT_EQ(x.mu, c % 2 ? -1 : 1);
  auto lines = mobius(build_lattice(bundled_arrangement("generic-3-lines")));
  EXPECT_EQ(lines.flats(2).front().mu, 2);
}

TEST(Mobius, IntervalSumsVanish) {
  auto all = random_arrangements(5, 10);
  all.push_back(eight_planes());
  all.push_back(decone(eight_planes(), 0));
  for (const auto& a : all) {
    auto lat = mobius(build_lattice(a));
    for (int c = 1; c <= lat.rank(); ++c)
      for (const auto& x : lat.flats(c)) {
        long sum = 0;
        for (int k = 0; k <= c; ++k)
          for (const auto& y : lat.flats(k))
            if (IntersectionLattice::below(y, x)) sum += y.mu;
        EXPECT_EQ(sum, 0);
      }
  }
}

TEST(Poincare, Affine) {
  EXPECT_EQ(poincare_affine(boolean(3)), pp({1, 3, 3, 1}));
  EXPECT_EQ(poincare_affine(bundled_arrangement("generic-3-lines")), pp({1, 3, 2}));
  EXPECT_EQ(poincare_affine(bundled_arrangement("rank2-triple")), pp({1, 3, 2}));
  EXPECT_EQ(poincare_affine(boolean(3)).factored_string(), "(1+t)^3");
}

TEST(Poincare, Projective) {
  EXPECT_EQ(poincare_projective(boolean(4)), pp({1, 3, 3, 1}));
  EXPECT_EQ(poincare_projective(make_central(2, {{1, 0}})), pp({1}));
  EXPECT_EQ(poincare_projective(eight_planes()), pp({1, 7, 18, 17}));
  EXPECT_THROW(poincare_projective(make_central(2, {})), InputError);
}

TEST(Poincare, MatchesWhitneyFormula) {
  auto all = random_arrangements(23, 10);
  all.push_back(eight_planes());
  for (const auto& a : all) {
    EXPECT_EQ(poincare_affine(a), oracle_pi(a));
    EXPECT_EQ(poincare_affine(a).b[1], Integer(static_cast<long>(a.size())));
  }
}

TEST(Poincare, ProjectiveDivisionIsExactAndRejectsGarbage) {
  EXPECT_THROW(poincare_projective(pp({1, 1, 1})), std::domain_error);
}

TEST(Decone, Examples) {
  auto d = decone(boolean(2), 0);
  EXPECT_EQ(d.dim, 1u);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(poincare_affine(d), pp({1, 1}));
  EXPECT_EQ(poincare_affine(decone(bundled_arrangement("generic-3-lines"), 2)), pp({1, 2}));
  auto e = decone(eight_planes(), 3);
  EXPECT_TRUE(e.affine);
  EXPECT_EQ(e.dim, 3u);
  EXPECT_EQ(e.size(), 7u);
  EXPECT_EQ(poincare_affine(e), pp({1, 7, 18, 17}));
  EXPECT_EQ(poincare_affine(e), oracle_pi(e));
  EXPECT_THROW(decone(boolean(2), 2), InputError);
}

TEST(Decone, IdentityForEveryHyperplane) {
  auto all = random_arrangements(41, 10);
  all.push_back(eight_planes());
  for (const auto& a : all) {
    auto pi = poincare_affine(a);
    for (std::size_t h = 0; h < a.size(); ++h) {
      auto dpi = poincare_affine(decone(a, h));
      EXPECT_EQ(times_one_plus_t(dpi), pi);
      EXPECT_EQ(dpi, poincare_projective(a));
    }
  }
}

TEST(Localize, Examples) {
  auto b3 = boolean(3);
  auto lat = build_lattice(b3);
  EXPECT_EQ(localize(b3, lat.flats(0).front()).size(), 0u);
  const Flat* xy = lat.find({0, 1});
  ASSERT_NE(xy, nullptr);
  auto loc = localize(b3, *xy);
  EXPECT_EQ(loc.normals, (std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}}));
  Flat bogus;
  bogus.hyperplanes = {0, 1};
  auto g = bundled_arrangement("generic-3-lines");
  EXPECT_THROW(localize(g, bogus), InputError);
}

TEST(Localize, CodimThreeFlatsOfEightPlanes) {
  auto a = eight_planes();
  auto lat = build_lattice(a);
  for (const auto& x : lat.flats(3)) {
    auto loc = localize(a, x);
    ASSERT_EQ(loc.size(), x.hyperplanes.size());
    for (std::size_t i = 0; i < loc.size(); ++i) EXPECT_EQ(loc.normals[i], a.normals[x.hyperplanes[i]]);
    EXPECT_EQ(arrangement_rank(loc), 3);
  }
}

TEST(Essentialize, Examples) {
  auto b3 = boolean(3);
  EXPECT_EQ(essentialize(b3), b3);
  auto xy = essentialize(make_central(3, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(xy.dim, 2u);
  EXPECT_EQ(xy.normals, (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
  auto t = essentialize(bundled_arrangement("rank2-triple"));
  EXPECT_EQ(t.dim, 2u);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(poincare_affine(t), pp({1, 3, 2}));
}

TEST(Essentialize, PreservesPoincare) {
  auto all = random_arrangements(77, 10);
  all.push_back(bundled_arrangement("cylinder-generic-4"));
  for (const auto& a : all) {
    auto e = essentialize(a);
    EXPECT_EQ(static_cast<int>(e.dim), arrangement_rank(a));
    EXPECT_EQ(poincare_affine(e), poincare_affine(a));
  }
}
