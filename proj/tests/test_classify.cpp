#include <filesystem>

#include "catalog_fixture.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "qmut/canonical.hpp"
#include "qmut/io.hpp"
#include "qmut/linalg.hpp"

#ifndef QMUT_SOURCE_DIR
#define QMUT_SOURCE_DIR "."
#endif

using namespace qmut;

namespace {

std::size_t edge_count(const Quiver& q) { return q.arrows().size(); }

std::size_t double_edge_count(const Quiver& q) {
  std::size_t out = 0;
  for (const auto& a : q.arrows()) out += a.weight == 2;
  return out;
}

Quiver square() {
  return Quiver::from_arrows(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
}

}  // namespace

TEST_CASE("seed shapes") {
  const auto e6 = *seeds::by_name("E6");
  CHECK(e6.size() == 6);
  CHECK(edge_count(e6) == 5);
  CHECK(is_connected(e6));
  CHECK(is_simply_laced(e6));

  for (auto [name, n] : {std::pair{"E7", 7}, {"E8", 8}, {"E6^(1)", 7}, {"E7^(1)", 8}, {"E8^(1)", 9}}) {
    CAPTURE(name);
    const auto q = *seeds::by_name(name);
    CHECK(q.size() == static_cast<std::size_t>(n));
    CHECK(edge_count(q) == q.size() - 1);
    CHECK(is_connected(q));
    CHECK(is_simply_laced(q));
  }

  const auto x6 = *seeds::by_name("X6");
  CHECK(x6.size() == 6);
  CHECK(double_edge_count(x6) == 2);
  const auto x7 = *seeds::by_name("X7");
  CHECK(x7.size() == 7);
  CHECK(double_edge_count(x7) == 3);

  for (auto [name, n] : {std::pair{"E6^(1,1)", 8}, {"E7^(1,1)", 9}, {"E8^(1,1)", 10}}) {
    CAPTURE(name);
    const auto q = *seeds::by_name(name);
    CHECK(q.size() == static_cast<std::size_t>(n));
    CHECK(double_edge_count(q) == 1);
    CHECK(max_weight(q) == 2);
    CHECK(is_connected(q));
  }

  CHECK(seeds::exceptional_names().size() == 11);
  CHECK_FALSE(seeds::by_name("E9").has_value());
  CHECK_FALSE(seeds::by_name("A0").has_value());
  CHECK(seeds::by_name("A4") == seeds::dynkin_a(4));
  CHECK(seeds::by_name("D5") == seeds::dynkin_d(5));
  CHECK(seeds::by_name("C5") == seeds::oriented_cycle(5));
}

TEST_CASE("slugs") {
  CHECK(seeds::slug("E6^(1,1)") == "E6-1-1");
  CHECK(seeds::slug("E7^(1)") == "E7-1");
  CHECK(seeds::slug("X6") == "X6");
}

TEST_CASE("seed files in data/seeds match the built-in seeds") {
  const std::filesystem::path dir = std::filesystem::path(QMUT_SOURCE_DIR) / "data" / "seeds";
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".quiver") continue;
    const auto q = io::read_file(entry.path());
    const auto stem = entry.path().stem().string();
    bool matched = false;
    for (const auto& name : seeds::exceptional_names()) {
      if (seeds::slug(name) == stem) {
        CHECK_MESSAGE(q == *seeds::by_name(name), name);
        matched = true;
      }
    }
    if (!matched) {
      CAPTURE(stem);
      REQUIRE(seeds::by_name(stem).has_value());
      CHECK(q == *seeds::by_name(stem));
    }
    ++seen;
  }
  CHECK(seen >= seeds::exceptional_names().size());
}

TEST_CASE("catalog contents") {
  const auto& cat = shared_catalog();
  for (const auto& name : seeds::exceptional_names()) {
    CAPTURE(name);
    REQUIRE(cat.has(name));
    const auto& e = cat.entry(name);
    CHECK(e.exceptional);
    CHECK(e.mutation_class.status == ClassStatus::Complete);
    CHECK(e.mutation_class.contains(canonical_form(e.seed)));
    CHECK(cat.exceptional_class_of(canonical_form(e.seed)) == name);
  }
  CHECK(cat.has("A3"));
  CHECK_FALSE(cat.entry("A3").exceptional);
  CHECK(cat.entry("A3").mutation_class.size() == 4);
  CHECK(cat.entry("D4").mutation_class.size() == 6);
  CHECK(cat.entry("E6").mutation_class.size() == 67);
  CHECK(cat.entry("E7").mutation_class.size() == 416);
  CHECK(cat.entry("E8").mutation_class.size() == 1574);
  CHECK_THROWS_AS(cat.entry("nope"), Error);
  CHECK_FALSE(cat.exceptional_class_of(canonical_form(seeds::dynkin_a(6))).has_value());
}

TEST_CASE("small exceptional classes agree with the oracle") {
  const auto& cat = shared_catalog();
  for (const char* name : {"E6", "X6", "X7", "E7"}) {
    CAPTURE(name);
    const auto ref = oracle::mutation_class(cat.entry(name).seed);
    CHECK_FALSE(ref.heavy);
    CHECK(cat.entry(name).mutation_class.size() == ref.keys.size());
  }
}

TEST_CASE("exceptional classes are pairwise disjoint") {
  const auto& cat = shared_catalog();
  std::map<CanonicalForm, std::string> owner;
  for (const auto& name : seeds::exceptional_names()) {
    for (const auto& f : cat.entry(name).mutation_class.members) {
      auto [it, fresh] = owner.emplace(f, name);
      CHECK_MESSAGE(fresh, name << " shares a member with " << it->second);
    }
  }
}

TEST_CASE("mutation equivalence") {
  const auto a4 = seeds::dynkin_a(4);
  CHECK(mutation_equivalent(a4, mutate_sequence(a4, std::vector<Vertex>{1, 3, 0, 2})));
  CHECK(mutation_equivalent(seeds::dynkin_a(3), seeds::oriented_cycle(3)));
  CHECK(mutation_equivalent(seeds::dynkin_d(4), seeds::oriented_cycle(4)));
  CHECK_FALSE(mutation_equivalent(seeds::dynkin_a(4), seeds::dynkin_d(4)));
  CHECK_FALSE(mutation_equivalent(seeds::dynkin_a(3), seeds::dynkin_a(4)));
  const auto e6 = *seeds::by_name("E6");
  oracle::RandomQuivers gen(17);
  CHECK(mutation_equivalent(e6, permute(e6, gen.permutation(6))));
}

TEST_CASE("subquivers from a reference class") {
  const auto& cat = shared_catalog();
  const auto e7 = *seeds::by_name("E7");
  const auto hit = contains_class_subquiver(e7, cat.entry("E6"));
  REQUIRE(hit.has_value());
  CHECK(hit->size() == 6);
  CHECK(cat.entry("E6").mutation_class.contains(canonical_form(induced_subquiver(e7, *hit).quiver)));

  const auto x7 = *seeds::by_name("X7");
  const auto x6_hit = contains_class_subquiver(x7, cat.entry("X6"));
  REQUIRE(x6_hit.has_value());
  CHECK(cat.entry("X6").mutation_class.contains(canonical_form(induced_subquiver(x7, *x6_hit).quiver)));

  CHECK_FALSE(contains_class_subquiver(seeds::dynkin_a(8), cat.entry("E6")).has_value());
  CHECK_FALSE(contains_class_subquiver(seeds::dynkin_a(3), cat.entry("E6")).has_value());
  CHECK_FALSE(contains_class_subquiver(*seeds::by_name("E8"), cat.entry("X6")).has_value());
  CHECK_THROWS_AS(contains_class_subquiver(seeds::dynkin_a(30), cat.entry("E6"), 1000), Error);
}

TEST_CASE("E6 characterization") {
  const auto& cat = shared_catalog();
  for (const auto& q : cat.entry("E6").mutation_class.representatives) {
    bool hypotheses = true;
    for (const auto& c : induced_cycles(q)) hypotheses = hypotheses && c.kind != PatternKind::NonOrientedCycle;
    if (!hypotheses || !is_simply_laced(q)) continue;
    const auto r = e6_characterization(q, cat);
    CHECK(r.a == true);
    CHECK(r.b);
    CHECK(r.c);
    CHECK(r.d);
  }
  const auto a6 = e6_characterization(seeds::dynkin_a(6), cat);
  CHECK(a6.a == false);
  CHECK_FALSE(a6.b);
  CHECK_FALSE(a6.c);
  CHECK_FALSE(a6.d);
  const auto d6 = e6_characterization(seeds::dynkin_d(6), cat);
  CHECK(d6.a == false);
  CHECK_FALSE(d6.b);

  auto code_of = [&](const Quiver& q) {
    try {
      e6_characterization(q, cat);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of(seeds::dynkin_a(5)) == ErrorCode::HypothesisViolation);
  CHECK(code_of(*seeds::by_name("X6")) == ErrorCode::HypothesisViolation);
  CHECK(code_of(Quiver::from_arrows(6, {{0, 1, 1}, {2, 3, 1}, {4, 5, 1}})) == ErrorCode::HypothesisViolation);
  const auto with_square = Quiver::from_arrows(6, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 2, 1}, {2, 4, 1}, {4, 5, 1}});
  CHECK(code_of(with_square) == ErrorCode::HypothesisViolation);
}

TEST_CASE("basic radical test") {
  const auto sq = surface_by_basic_radical(square());
  REQUIRE(sq.evidence.size() == 1);
  CHECK(sq.passes);
  CHECK(sq.evidence[0].basic.kind == PatternKind::BasicOrientedCycle);
  REQUIRE(sq.evidence[0].radical.has_value());
  CHECK(multiply(square(), *sq.evidence[0].radical).is_zero());
  CHECK(*sq.evidence[0].radical == IntVector{1, 1, 1, 1});

  const auto d4 = surface_by_basic_radical(seeds::dynkin_d(4));
  REQUIRE(d4.evidence.size() == 1);
  CHECK(d4.passes);
  REQUIRE(d4.evidence[0].radical.has_value());
  CHECK(support(*d4.evidence[0].radical).size() == 2);

  const auto e6 = surface_by_basic_radical(*seeds::by_name("E6"));
  CHECK_FALSE(e6.passes);
  CHECK_FALSE(e6.evidence.empty());

  CHECK(surface_by_basic_radical(seeds::dynkin_a(5)).evidence.empty());
  CHECK(surface_by_basic_radical(seeds::dynkin_a(5)).passes);

  auto code_of = [](const Quiver& q) {
    try {
      surface_by_basic_radical(q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of(Quiver::from_arrows(3, {{0, 1, 3}, {1, 2, 1}})) == ErrorCode::NotFiniteType);
  CHECK(code_of(seeds::dynkin_a(2)) == ErrorCode::InvalidArgument);
}

TEST_CASE("classification of seeds") {
  const auto& cat = shared_catalog();
  for (const auto& name : seeds::exceptional_names()) {
    CAPTURE(name);
    const auto c = classify_quiver(*seeds::by_name(name), cat);
    CHECK(c.verdict == (name[0] == 'X' ? Verdict::ExceptionalX : Verdict::ExceptionalE));
    CHECK(c.name == name);
    CHECK(c.class_size == cat.entry(name).mutation_class.size());
  }
  CHECK(classify_quiver(*seeds::by_name("E6^(1,1)"), cat).label() == "ExceptionalE(E6^(1,1))");
  CHECK(classify_quiver(*seeds::by_name("X6"), cat).label() == "ExceptionalX(X6)");
  for (const char* name : {"A3", "A7", "D4", "D7", "C3", "C5"}) {
    CAPTURE(name);
    CHECK(classify_quiver(*seeds::by_name(name), cat).verdict == Verdict::Surface);
  }
  CHECK(classify_quiver(seeds::oriented_cycle(3), cat).label() == "Surface");
}

TEST_CASE("classification edge cases") {
  const auto& cat = shared_catalog();
  CHECK(classify_quiver(seeds::dynkin_a(1), cat).verdict == Verdict::TooSmall);
  const auto kronecker = Quiver::from_arrows(2, {{0, 1, 5}});
  CHECK(classify_quiver(kronecker, cat).verdict == Verdict::TooSmall);

  const auto markov = Quiver::from_arrows(3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}});
  const auto m = classify_quiver(markov, cat);
  CHECK(m.verdict == Verdict::Surface);
  CHECK(m.class_size == 1);

  const auto heavy = Quiver::from_arrows(3, {{0, 1, 3}, {1, 2, 1}});
  const auto h = classify_quiver(heavy, cat);
  CHECK(h.verdict == Verdict::Infinite);
  CHECK(h.certificate.has_value());

  // Acyclic triangle with one double edge: infinite, found by mutation or certificate.
  const auto acyclic = Quiver::from_arrows(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 1}});
  const auto ac = classify_quiver(acyclic, cat);
  CHECK(ac.verdict == Verdict::Infinite);
  CHECK((ac.certificate.has_value() || ac.witness.has_value()));

  const auto split = Quiver::from_arrows(4, {{0, 1, 1}, {2, 3, 1}});
  try {
    classify_quiver(split, cat);
    FAIL("disconnected input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }

  EnumerationCaps tiny;
  tiny.max_size = 3;
  try {
    classify_quiver(seeds::dynkin_a(7), cat, tiny);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapsExceeded);
  }
}

TEST_CASE("classification is invariant under mutation and relabeling") {
  const auto& cat = shared_catalog();
  oracle::RandomQuivers gen(91);
  for (const char* name : {"E7", "X7", "E6^(1)", "D6", "C4"}) {
    CAPTURE(name);
    const auto q = *seeds::by_name(name);
    const auto base = classify_quiver(q, cat).label();
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Vertex> ks;
      for (int i = 0; i < 5; ++i) ks.push_back(gen.permutation(q.size())[0]);
      const auto moved = permute(mutate_sequence(q, ks), gen.permutation(q.size()));
      CHECK(classify_quiver(moved, cat).label() == base);
    }
  }
}

TEST_CASE("random connected quivers classify consistently with the oracle") {
  const auto& cat = shared_catalog();
  oracle::RandomQuivers gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto q = gen.next_connected(3 + trial % 4, 2, 0.5);
    const auto ref = oracle::mutation_class(q, 20000);
    if (ref.capped) continue;
    const auto c = classify_quiver(q, cat);
    CHECK((c.verdict == Verdict::Infinite) == ref.heavy);
    if (!ref.heavy) CHECK(c.class_size == ref.keys.size());
  }
}

TEST_CASE("E6 and X6 subquivers never occur together") {
  const auto& cat = shared_catalog();
  for (const char* name : {"E6", "E7", "E8", "X6", "X7", "E6^(1)", "A6", "D6"}) {
    CAPTURE(name);
    CHECK(e6_x6_exclusion(*seeds::by_name(name), cat));
  }
  for (const auto& q : cat.entry("X7").mutation_class.representatives) CHECK(e6_x6_exclusion(q, cat));
  for (const auto& q : cat.entry("E7").mutation_class.representatives) CHECK(e6_x6_exclusion(q, cat));
}
