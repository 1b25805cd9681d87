#include "seff/json_io.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace seff;

namespace {

Kernel k_fix(const SpacePtr& s) {
  return Kernel(s, s,
                {SubProb(s, {Rational(1, 2), Rational(1, 4)}),
                 SubProb(s, {Rational(0), Rational(1)})});
}

template <typename T>
const T& as(const ModelDoc& doc) {
  return std::get<T>(doc);
}

}  // namespace

TEST_CASE("kernel round trip is byte exact") {
  const auto s = make_space({"a", "b"});
  const auto k = k_fix(s);
  const std::string text = save_kernel(k);
  const auto loaded = as<Kernel>(parse_model(text));
  CHECK(loaded == k);
  CHECK(save_kernel(loaded) == text);
}

TEST_CASE("effectivity with valuation round trips") {
  const auto s = make_space({"a", "b"});
  EffectivityDoc doc{lift_kernel(k_fix(s)), {{"p", Subset(s, {"b"})}}};
  const std::string text = save_effectivity(doc);
  const auto loaded = as<EffectivityDoc>(parse_model(text));
  CHECK(save_effectivity(loaded) == text);
  CHECK(loaded.valuation.at("p") == Subset(loaded.eff.dom(), {"b"}));
}

TEST_CASE("random models round trip byte exact") {
  testgen::Rng rng(91);
  for (int i = 0; i < 25; ++i) {
    const auto dom = testgen::small_space(1 + rng.index(3));
    const auto cod = testgen::small_space(1 + rng.index(3), "t");

    const auto k = rng.kernel(dom, cod, 8);
    CHECK(save_kernel(as<Kernel>(parse_model(save_kernel(k)))) == save_kernel(k));

    EffectivityDoc doc{rng.eff_fn(dom, cod, 6, 3, 3), {}};
    CHECK(save_effectivity(as<EffectivityDoc>(parse_model(save_effectivity(doc)))) ==
          save_effectivity(doc));

    const auto mu = rng.subprob(dom, 8);
    const auto r = canonical_charrel(mu);
    CHECK(save_charrel(as<CharRel>(parse_model(save_charrel(r)))) == save_charrel(r));
  }
}

TEST_CASE("space, congruence, nbhd, ts, nlmp docs") {
  const auto s = make_space({"a", "b", "c"});
  const std::string sp = save_space(s);
  CHECK(same_space(as<SpacePtr>(parse_model(sp)), s));
  CHECK(save_space(as<SpacePtr>(parse_model(sp))) == sp);

  const CongruenceDoc c{s, s,
                        Congruence{Partition(s, {{"a", "b"}, {"c"}}), Partition::discrete(s)}};
  const std::string ct = save_congruence(c);
  const auto cl = as<CongruenceDoc>(parse_model(ct));
  CHECK(cl.congruence.alpha == c.congruence.alpha);
  CHECK(save_congruence(cl) == ct);

  std::map<std::string, std::vector<std::vector<Subset>>> prims;
  prims["g"] = {{Subset(s, {"a"})}, {}, {Subset(s, {"b", "c"}), Subset(s, {"a"})}};
  const NeighborhoodModel m(s, std::move(prims));
  const std::string mt = save_nbhd_model(m);
  CHECK(save_nbhd_model(as<NeighborhoodModel>(parse_model(mt))) == mt);

  const TransitionSystemDoc ts{s, {{"a", "b"}, {"b", "b"}}};
  const std::string tst = save_transition_system(ts);
  CHECK(save_transition_system(as<TransitionSystemDoc>(parse_model(tst))) == tst);

  const NlmpDoc nl{s, s,
                   {Generator::hull({SubProb::zero(s)}), Generator::points({SubProb::unit(s, 1)}),
                    Generator::hull({SubProb::zero(s), SubProb::unit(s, 2)})}};
  const std::string nt = save_nlmp(nl);
  CHECK(save_nlmp(as<NlmpDoc>(parse_model(nt))) == nt);
}

TEST_CASE("format errors carry useful messages") {
  CHECK_THROWS_WITH_AS(parse_model("{"), doctest::Contains("malformed"), Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"kind":"kernel"})"), doctest::Contains("format"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_model(R"({"format":1,"kind":"wat"})"),
                       doctest::Contains("unknown model kind"), Error);

  // The bad-weight document names the offending state.
  const std::string bad = R"({
    "format": 1,
    "kind": "kernel",
    "dom": ["a", "b"],
    "cod": ["a", "b"],
    "rows": {"a": ["9/8", "0/1"], "b": ["0/1", "0/1"]}
  })";
  CHECK_THROWS_WITH_AS(parse_model(bad), doctest::Contains("state 'a'"), Error);
  CHECK_THROWS_WITH_AS(parse_model(bad), doctest::Contains("9/8"), Error);
}

TEST_CASE("rational string format") {
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Rational(4, 8)) == "1/2");
  CHECK(parse_rational("3/9") == Rational(1, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
}
