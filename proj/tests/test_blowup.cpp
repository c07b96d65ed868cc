#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "ruled/blowup.hpp"
#include "ruled/errors.hpp"
#include "ruled/graph_json.hpp"

using namespace ruled;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Chain chain(std::vector<const char*> hs, std::vector<std::uint64_t> ls = {}) {
  std::vector<Rational> out;
  for (auto h : hs) out.push_back(q(h));
  return Chain(std::move(out), std::move(ls));
}

DecoratedGraph graph(const char* bottom, const char* top, const char* height, std::vector<Chain> cs = {}) {
  return DecoratedGraph(FatVertex{q(bottom), 1}, FatVertex{q(top), 1}, q(height), std::move(cs));
}

Rational fat_total(const DecoratedGraph& g) { return g.bottom().area + g.top().area; }

}  // namespace

TEST_CASE("fat blowups") {
  auto r = blowup_fat(graph("1", "1", "1"), FatSide::Bottom, q("1/4"));
  REQUIRE(r);
  CHECK(r->bottom().area == q("3/4"));
  CHECK(r->top().area == q("1"));
  REQUIRE(r->chain_count() == 1);
  CHECK(r->chains()[0] == chain({"1/4"}));

  auto t = blowup_fat(graph("1", "1", "1"), FatSide::Top, q("1/4"));
  REQUIRE(t);
  CHECK(t->top().area == q("3/4"));
  CHECK(t->chains()[0] == chain({"3/4"}));

  CHECK_FALSE(blowup_fat(graph("2", "2", "12"), FatSide::Bottom, q("3")));
  CHECK_FALSE(blowup_fat(graph("11/2", "3/2", "2"), FatSide::Top, q("3/2")));
  // delta must also stay below the height
  CHECK_FALSE(blowup_fat(graph("5", "5", "1"), FatSide::Bottom, q("1")));
  CHECK_THROWS_AS(blowup_fat(graph("1", "1", "1"), FatSide::Bottom, q("0")), PreconditionError);
}

TEST_CASE("interior blowups") {
  auto g = graph("3/4", "1", "1", {chain({"1/4"})});
  auto a = blowup_interior(g, 0, 0, q("1/16"));
  REQUIRE(a);
  CHECK(a->chains()[0] == chain({"3/16", "5/16"}, {2}));
  CHECK(a->bottom().area == q("3/4"));

  auto b = blowup_interior(*a, 0, 1, q("1/32"));
  REQUIRE(b);
  CHECK(b->chains()[0] == chain({"3/16", "1/4", "11/32"}, {2, 3}));

  CHECK_FALSE(blowup_interior(*a, 0, 1, q("1/16")));
  // would reach the bottom fat vertex
  CHECK_FALSE(blowup_interior(g, 0, 0, q("1/4")));
  CHECK_THROWS_AS(blowup_interior(g, 1, 0, q("1/16")), PreconditionError);
  CHECK_THROWS_AS(blowup_interior(g, 0, 1, q("1/16")), PreconditionError);
}

TEST_CASE("blowup_at dispatches on the site") {
  auto g = graph("3/4", "1", "1", {chain({"1/4"})});
  CHECK(canonical_string(*blowup_at(g, BottomFat{}, q("1/16"))) ==
        canonical_string(*blowup_fat(g, FatSide::Bottom, q("1/16"))));
  CHECK(canonical_string(*blowup_at(g, TopFat{}, q("1/16"))) ==
        canonical_string(*blowup_fat(g, FatSide::Top, q("1/16"))));
  CHECK(canonical_string(*blowup_at(g, Interior{0, 0}, q("1/16"))) ==
        canonical_string(*blowup_interior(g, 0, 0, q("1/16"))));
}

TEST_CASE("all_blowups examples") {
  auto first = all_blowups(graph("1", "1", "1"), q("1/4"));
  REQUIRE(first.size() == 2);
  CHECK(are_equivalent(first[0], first[1]));

  auto second = all_blowups(graph("3/4", "1", "1", {chain({"1/4"})}), q("1/16"));
  REQUIRE(second.size() == 3);
  CHECK(second[0].bottom().area == q("11/16"));
  CHECK(second[1].top().area == q("15/16"));
  CHECK(second[2].chains()[0] == chain({"3/16", "5/16"}, {2}));

  CHECK(all_blowups(graph("2", "2", "12"), q("3")).empty());
}

TEST_CASE("blowup invariants on random graphs") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen.graph(4);
    const Rational delta = g.height() * gen.unit(40) / Rational(4);
    const auto out = all_blowups(g, delta);
    for (const auto& h : out) {
      CHECK(validate(h).valid);
      CHECK(h.height() == g.height());
      CHECK(h.interior_vertex_count() == g.interior_vertex_count() + 1);
      const bool fat = h.chain_count() == g.chain_count() + 1;
      if (fat)
        CHECK(fat_total(h) == fat_total(g) - delta);
      else
        CHECK(fat_total(h) == fat_total(g));
    }

    // flip commutes with blowing up
    const auto flipped = all_blowups(flip(g), delta);
    REQUIRE(flipped.size() == out.size());
    for (const auto& h : out) {
      bool found = false;
      const auto fh = flip(h);
      for (const auto& x : flipped)
        if (key(x) == key(fh) && x.bottom().area == fh.bottom().area && are_same(x, fh)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("interior blowup keeps adjacent labels coprime") {
  oracle::Gen gen(22);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen.graph(3);
    if (g.chain_count() == 0) continue;
    const std::size_t c = static_cast<std::size_t>(gen.integer(0, static_cast<long>(g.chain_count()) - 1));
    const auto& ch = g.chains()[c];
    const std::size_t v = static_cast<std::size_t>(gen.integer(0, static_cast<long>(ch.vertex_count()) - 1));
    const Rational delta = g.height() * gen.unit(60) / Rational(8);
    auto h = blowup_interior(g, c, v, delta);
    if (!h) continue;
    const auto m = ch.label_below(v), n = ch.label_above(v);
    const auto& nc = h->chains()[c];
    CHECK(nc.label_above(v) == m + n);
    CHECK(std::gcd(nc.label_below(v), nc.label_above(v)) == 1);
    CHECK(std::gcd(nc.label_below(v + 1), nc.label_above(v + 1)) == 1);
    CHECK(nc.height(v) == ch.height(v) - Rational(static_cast<long>(m)) * delta);
    CHECK(nc.height(v + 1) == ch.height(v) + Rational(static_cast<long>(n)) * delta);
  }
}
