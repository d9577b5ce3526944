#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankvc/errors.hpp"
#include "rankvc/matroid.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace rankvc;

namespace {

std::vector<Element> subset(const std::vector<Element>& ground, std::uint64_t mask) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1) out.push_back(ground[i]);
  }
  return out;
}

std::vector<std::size_t> columns(const LinearMatroid& x, const std::vector<Element>& elems) {
  std::vector<std::size_t> out;
  for (Element e : elems) out.push_back(x.column_of(e));
  return out;
}

const ScalarDomain kQ = ScalarDomain::rational();

}  // namespace

TEST_CASE("rank_of") {
  const auto i4 = LinearMatroid::identity(kQ, {1, 2, 3, 4});
  const std::vector<Element> two{2, 4};
  CHECK(i4.rank_of(two) == 2);
  const std::vector<Element> unknown{9};
  CHECK_THROWS_AS(i4.rank_of(unknown), InputError);

  const LinearMatroid z(ExactMatrix::from_columns(kQ, 2, {{0, 0}, {1, 0}}), {5, 6});
  const std::vector<Element> loop{5};
  CHECK(z.rank_of(loop) == 0);

  Rng rng = derive_stream(21, 1);
  const auto f7 = ScalarDomain::prime_field(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = gen::matroid(rng, f7, 3, 6, 3);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      const auto s = subset(x.labels(), mask);
      REQUIRE(x.rank_of(s) == oracle::rank_by_combinations(x.representation(), columns(x, s)));
    }
  }
}

TEST_CASE("labels must match columns") {
  CHECK_THROWS_AS(LinearMatroid(ExactMatrix::identity(kQ, 2), {1}), InputError);
  CHECK_THROWS_AS(LinearMatroid(ExactMatrix::identity(kQ, 2), {1, 1}), InputError);
}

TEST_CASE("is_loop") {
  const LinearMatroid x(ExactMatrix::from_columns(kQ, 2, {{0, 0}, {1, 0}, {7, 14}}), {1, 2, 3});
  CHECK(x.is_loop(1));
  CHECK_FALSE(x.is_loop(2));
  CHECK_FALSE(x.is_loop(3));
  const auto reduced = x.with_representation(x.representation().mod_reduce(7));
  CHECK(reduced.is_loop(3));
  CHECK_THROWS_AS(x.is_loop(4), InputError);
}

TEST_CASE("is_coloop") {
  const auto i3 = LinearMatroid::identity(kQ, {1, 2, 3});
  for (Element e : i3.labels()) CHECK(i3.is_coloop(e));
  const LinearMatroid t(ExactMatrix::from_columns(kQ, 2, {{1, 0}, {0, 1}, {1, 1}}), {1, 2, 3});
  CHECK_FALSE(t.is_coloop(3));

  // A co-loop lies in every basis.
  Rng rng = derive_stream(21, 2);
  const auto f5 = ScalarDomain::prime_field(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = gen::matroid(rng, f5, 4, 5, 2, 40);
    const std::size_t r = x.rank();
    std::vector<std::uint64_t> bases;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      const auto s = subset(x.labels(), mask);
      if (s.size() == r && oracle::independent_by_combinations(x.representation(), columns(x, s))) {
        bases.push_back(mask);
      }
    }
    for (std::size_t i = 0; i < 5; ++i) {
      bool in_all = true;
      for (auto b : bases) in_all = in_all && (b >> i & 1);
      CHECK(x.is_coloop(x.labels()[i]) == in_all);
    }
  }
}

TEST_CASE("delete_element") {
  const auto i3 = LinearMatroid::identity(kQ, {1, 2, 3});
  const auto d = i3.delete_element(2);
  CHECK(d.size() == 2);
  CHECK(d.rank() == 2);
  CHECK(d.labels() == std::vector<Element>{1, 3});

  const LinearMatroid z(ExactMatrix::from_columns(kQ, 2, {{0, 0}, {1, 0}}), {1, 2});
  CHECK(z.delete_element(1).rank() == z.rank());
  CHECK_THROWS_AS(z.delete_element(7), InputError);

  Rng rng = derive_stream(21, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = gen::matroid(rng, kQ, 3, 6, 3);
    const auto y = x.delete_element(4);
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      const auto s = subset(y.labels(), mask);
      CHECK(y.rank_of(s) == x.rank_of(s));
    }
  }
}

TEST_CASE("contract examples") {
  const auto i2 = LinearMatroid::identity(kQ, {1, 2});
  const auto c = i2.contract(1);
  CHECK(c.size() == 1);
  CHECK(c.rank() == 1);
  CHECK(c.is_coloop(2));

  const LinearMatroid t(ExactMatrix::from_columns(kQ, 2, {{1, 0}, {0, 1}, {1, 1}}), {1, 2, 3});
  const auto tc = t.contract(1);
  CHECK(tc.rank() == 1);
  const std::vector<Element> two{2}, three{3};
  CHECK(tc.in_span(2, three));
  CHECK(tc.in_span(3, two));

  const LinearMatroid z(ExactMatrix::from_columns(kQ, 2, {{0, 0}, {1, 0}}), {1, 2});
  CHECK_THROWS_AS(z.contract(1), ContractLoopError);
}

TEST_CASE("contraction subset-rank identity, exhaustive up to 10 elements") {
  Rng rng = derive_stream(21, 4);
  for (int trial = 0; trial < 12; ++trial) {
    const auto d = trial % 2 ? kQ : ScalarDomain::prime_field(13);
    const std::size_t n = gen::between(rng, 3, 10);
    const auto x = gen::matroid(rng, d, gen::between(rng, 2, 5), n, 3);
    Element e = 0;
    for (Element l : x.labels()) {
      if (!x.is_loop(l)) e = l;
    }
    if (e == 0) continue;
    const auto c = x.contract(e);
    CHECK(c.representation().rows() == c.rank());
    CHECK(c.rank() + 1 == x.rank());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask) {
      auto t = subset(c.labels(), mask);
      const std::size_t rc = c.rank_of(t);
      t.push_back(e);
      REQUIRE(rc == x.rank_of(t) - 1);
    }
  }
}

TEST_CASE("rank through a spanned element") {
  // v in the closure of T: rank(T) = rank_{X/v}(T - v) + 1.
  Rng rng = derive_stream(21, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = gen::matroid(rng, ScalarDomain::prime_field(7), 3, 7, 3);
    for (Element v : x.labels()) {
      if (x.is_loop(v)) continue;
      const auto c = x.contract(v);
      for (std::uint64_t mask = 0; mask < 128; ++mask) {
        const auto t = subset(x.labels(), mask);
        if (!x.in_span(v, t)) continue;
        std::vector<Element> rest;
        for (Element u : t) {
          if (u != v) rest.push_back(u);
        }
        REQUIRE(x.rank_of(t) == c.rank_of(rest) + 1);
      }
    }
  }
}

TEST_CASE("contraction keeps other co-loops and labels") {
  Rng rng = derive_stream(21, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = gen::matroid(rng, kQ, 4, 6, 2, 40);
    for (Element e : x.labels()) {
      if (x.is_loop(e)) continue;
      const auto c = x.contract(e);
      for (Element v : c.labels()) {
        if (x.is_coloop(v)) CHECK(c.is_coloop(v));
      }
      auto expected = x.labels();
      expected.erase(std::find(expected.begin(), expected.end(), e));
      CHECK(c.labels() == expected);
    }
  }
}

TEST_CASE("deletion and contraction commute") {
  Rng rng = derive_stream(21, 7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = gen::matroid(rng, ScalarDomain::prime_field(11), 3, 6, 4, 20);
    const Element a = 1 + static_cast<Element>(uniform_below(rng, 6));
    Element b = 1 + static_cast<Element>(uniform_below(rng, 6));
    if (b == a) b = a % 6 + 1;
    if (x.is_loop(a) || x.delete_element(b).is_loop(a)) continue;
    const auto one = x.contract(a).delete_element(b);
    const auto two = x.delete_element(b).contract(a);
    CHECK(one.labels() == two.labels());
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      const auto s = subset(one.labels(), mask);
      CHECK(one.rank_of(s) == two.rank_of(s));
    }
  }
}

TEST_CASE("move_column") {
  const auto i3 = LinearMatroid::identity(kQ, {1, 2, 3});
  CHECK(i3.move_column(2, i3.column(2)).representation() == i3.representation());
  const auto moved = i3.move_column(3, ScalarVector{1, 1, 0});
  CHECK(moved.rank() == 2);
  CHECK(moved.labels() == i3.labels());
  CHECK_THROWS_AS(i3.move_column(3, ScalarVector{1, 1}), InputError);
}

TEST_CASE("moving a co-loop into a span keeps other co-loops") {
  Rng rng = derive_stream(21, 8);
  const auto f = ScalarDomain::prime_field(101);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = gen::matroid(rng, f, 5 + trial % 2, 6, 5, 30);
    std::vector<Element> coloops;
    for (Element e : x.labels()) {
      if (x.is_coloop(e)) coloops.push_back(e);
    }
    if (coloops.size() < 2) continue;
    const Element u = coloops[0], v = coloops[1];
    std::vector<Element> w;
    for (Element e : x.labels()) {
      if (e != u && e != v && uniform_below(rng, 2)) w.push_back(e);
    }
    if (w.empty()) continue;
    ScalarVector coeffs;
    for (std::size_t i = 0; i < w.size(); ++i) coeffs.push_back(mpq_class(uniform_below(rng, 101)));
    std::vector<std::size_t> cols;
    for (Element e : w) cols.push_back(x.column_of(e));
    const auto target = x.representation().linear_combination(cols, coeffs);
    CHECK(x.move_column(u, target).is_coloop(v));
    ++checked;
  }
  CHECK(checked > 20);
}
