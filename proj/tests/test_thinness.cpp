#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "thinset/constructions.hpp"
#include "thinset/errors.hpp"
#include "thinset/parser.hpp"
#include "thinset/thinness.hpp"

using namespace thinset;

TEST_CASE("run statistic basics") {
  CHECK(run_statistic(Prefix(20, {2, 3, 4, 10, 11, 20}), 1) == 3);
  CHECK(run_statistic(Prefix(16, {2, 4, 8, 16}), 1) == 1);
  CHECK(run_statistic(Prefix(16, {2, 4, 8, 16}), 4) == 3);
  CHECK_THROWS_AS(run_statistic(Prefix(5, {}), 1), DomainError);

  const Prefix a_frak =
      enumerate_upto(parse_set_expr("union(pow(2),pow2plus1)"), 1 << 10);
  CHECK(run_statistic(a_frak, 1) == 4);  // the run {2,3,4,5}

  // run lengths follow the fully materialized block once the initial
  // merged run {2,...,6} is overtaken (k >= 4)
  for (i64 k = 4; k <= 10; ++k) {
    const Prefix prefix =
        enumerate_upto(parse_set_expr("pow2run"), i64{1} << (k + 1));
    CHECK(run_statistic(prefix, 1) == k + 1);
  }
  // below that the merged initial blocks win
  CHECK(run_statistic(enumerate_upto(parse_set_expr("pow2run"), 1 << 3), 1) == 5);
}

TEST_CASE("run statistic and greedy blocks match brute force") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<i64> elems = oracles::random_sorted_set(rng, 200, 10000);
    const Prefix prefix(10000, elems);
    std::uniform_int_distribution<i64> m_dist(1, 12);
    const i64 m = m_dist(rng);
    CHECK(run_statistic(prefix, m) == oracles::brute_longest_run(elems, m));
    const BlockDecomposition decomposition =
        greedy_block_decomposition(prefix, m);
    CHECK(decomposition.blocks == oracles::brute_blocks(elems, m));
    CHECK(decomposition.flatten() == elems);
  }
}

TEST_CASE("run statistic is monotone in threshold and horizon") {
  const Prefix prefix = enumerate_upto(parse_set_expr("primes"), 5000);
  i64 previous = 0;
  for (i64 m = 1; m <= 10; ++m) {
    const i64 value = run_statistic(prefix, m);
    CHECK(value >= previous);
    previous = value;
  }
  i64 at_smaller = 0;
  for (i64 horizon : {500, 1000, 2000, 5000}) {
    const i64 value = run_statistic(prefix.clipped(horizon), 2);
    CHECK(value >= at_smaller);
    at_smaller = value;
  }
}

TEST_CASE("greedy block decomposition examples") {
  const BlockDecomposition d1 = greedy_block_decomposition(
      Prefix(33, {2, 3, 4, 5, 8, 9, 16, 17, 32, 33}), 1);
  CHECK(d1.blocks == std::vector<std::vector<i64>>{
                         {2, 3, 4, 5}, {8, 9}, {16, 17}, {32, 33}});
  CHECK(d1.inter_block_gaps == std::vector<i64>{3, 7, 15});
  CHECK(d1.block_size_max == 4);

  const BlockDecomposition d2 =
      greedy_block_decomposition(Prefix(16, {2, 4, 8, 16}), 1);
  CHECK(d2.blocks == std::vector<std::vector<i64>>{{2}, {4}, {8}, {16}});
  CHECK(d2.inter_block_gaps == std::vector<i64>{2, 4, 8});

  // maximal runs of pow2pair at threshold 6 to 70: everything up to 20 glues
  // together (all internal gaps <= 6), then {32,37} and {64,70}
  const Prefix pair = enumerate_upto(parse_set_expr("pow2pair"), 70);
  CHECK(pair.elements() ==
        std::vector<i64>{2, 3, 4, 6, 8, 11, 16, 20, 32, 37, 64, 70});
  const BlockDecomposition d3 = greedy_block_decomposition(pair, 6);
  CHECK(d3.blocks == std::vector<std::vector<i64>>{
                         {2, 3, 4, 6, 8, 11, 16, 20}, {32, 37}, {64, 70}});
  for (const auto& block : d3.blocks)
    for (std::size_t i = 1; i < block.size(); ++i)
      CHECK(block[i] - block[i - 1] <= 6);
  for (i64 gap : d3.inter_block_gaps) CHECK(gap > 6);
}

TEST_CASE("reciprocal gap partial sums") {
  CHECK(reciprocal_gap_partial_sums(GapSequence{{2, 4, 8}}) ==
        std::vector<Rational>{ratio(1, 2), ratio(3, 4), ratio(7, 8)});
  const GapSequence tri_gaps =
      gap_sequence(enumerate_upto(parse_set_expr("tri"), 21));
  CHECK(reciprocal_gap_partial_sums(tri_gaps).back() == ratio(29, 20));
  CHECK_THROWS_AS(reciprocal_gap_partial_sums(GapSequence{{}}), DomainError);

  // pow2pair gap sums dominate a harmonic series: they pass 3 within 31 gaps
  const GapSequence pair_gaps =
      gap_sequence(enumerate_upto(parse_set_expr("pow2pair"), i64{1} << 20));
  const auto sums = reciprocal_gap_partial_sums(pair_gaps);
  REQUIRE(sums.size() >= 31);
  CHECK(sums[30] > Rational(3));
}

TEST_CASE("symbolic facts for catalog sets") {
  const SymbolicFacts pow2 = derive_facts(parse_set_expr("pow(2)"));
  CHECK(pow2.of(ThinnessClass::SuperThin) == Fact::Yes);
  CHECK(pow2.of(ThinnessClass::SuperSuperThin) == Fact::Yes);
  CHECK(pow2.of(ThinnessClass::VeryThin) == Fact::Yes);
  CHECK(pow2.of(ThinnessClass::UniformlyThin) == Fact::Yes);
  CHECK(pow2.of(ThinnessClass::Thin) == Fact::Yes);

  const SymbolicFacts evens = derive_facts(parse_set_expr("ap(2,2)"));
  for (ThinnessClass cls : kAllClasses) CHECK(evens.of(cls) == Fact::No);

  const SymbolicFacts finite = derive_facts(parse_set_expr("{5,7,9}"));
  for (ThinnessClass cls : kAllClasses) CHECK(finite.of(cls) == Fact::Yes);

  const SymbolicFacts tri = derive_facts(parse_set_expr("tri"));
  CHECK(tri.of(ThinnessClass::SuperThin) == Fact::Yes);
  CHECK(tri.of(ThinnessClass::SuperSuperThin) == Fact::No);
  CHECK(tri.of(ThinnessClass::VeryVeryThin) == Fact::No);
  CHECK(tri.of(ThinnessClass::VeryThin) == Fact::Yes);
}

TEST_CASE("certificate contradictions are flagged") {
  Certificate cert;
  cert.gap_lower_bound = [](i64) { return Int(1); };
  cert.gap_lower_tends_to_infinity = true;
  cert.gap_at_most_infinitely_often = 3;
  const SetExpr expr = parse_set_expr("pow(3)").with_certificate(cert);
  CHECK_THROWS_AS(derive_facts(expr), CertificateError);
}

TEST_CASE("classify: proved, refuted, and empirical paths") {
  // declared gap growth proves gap divergence
  const Verdict proved =
      classify(parse_set_expr("pow(2)"), ThinnessClass::SuperThin, 1 << 12);
  CHECK(proved.status == VerdictStatus::ProvedSymbolic);

  // runs grow with the horizon for every threshold
  const Verdict runs_grow = classify(parse_set_expr("pow2run"),
                                     ThinnessClass::VeryThin, i64{1} << 20);
  CHECK(runs_grow.status == VerdictStatus::InconsistentUpTo);

  // and the ever-longer runs also push the half-coverage scale upward
  const Verdict windows_full = classify(parse_set_expr("pow2run"),
                                        ThinnessClass::UniformlyThin,
                                        i64{1} << 16);
  CHECK(windows_full.status == VerdictStatus::InconsistentUpTo);

  const Verdict tri_vvt =
      classify(parse_set_expr("tri"), ThinnessClass::VeryVeryThin, 1 << 12);
  CHECK(tri_vvt.status == VerdictStatus::RefutedSymbolic);

  // windows of length 1 + (1^3 + ... + n^3) hold at most n+1 elements
  const Verdict cubic_ut = classify(parse_set_expr("cubicgap"),
                                    ThinnessClass::UniformlyThin, 1631);
  CHECK(cubic_ut.status == VerdictStatus::ConsistentUpTo);
  const Verdict cubic_vt = classify(parse_set_expr("cubicgap"),
                                    ThinnessClass::VeryThin, i64{1} << 16);
  CHECK(cubic_vt.status == VerdictStatus::InconsistentUpTo);
}

TEST_CASE("classify_all on the gallery pair examples") {
  const auto a_frak = classify_all(gallery("A_frak"), i64{1} << 16);
  CHECK(a_frak.at(ThinnessClass::VeryThin).status ==
        VerdictStatus::ProvedSymbolic);
  CHECK(a_frak.at(ThinnessClass::SuperThin).status ==
        VerdictStatus::RefutedSymbolic);
  CHECK(a_frak.at(ThinnessClass::Thin).status == VerdictStatus::ProvedSymbolic);

  const auto pair = classify_all(gallery("pow2pair"), i64{1} << 16);
  CHECK(pair.at(ThinnessClass::SuperThin).status ==
        VerdictStatus::ProvedSymbolic);
  CHECK(pair.at(ThinnessClass::VeryVeryThin).status ==
        VerdictStatus::ProvedSymbolic);
  CHECK(pair.at(ThinnessClass::SuperSuperThin).status ==
        VerdictStatus::RefutedSymbolic);

  // advisory-only classes for the primes still produce a full table
  const auto primes = classify_all(parse_set_expr("primes"), 1000000);
  CHECK(primes.at(ThinnessClass::SuperThin).status ==
        VerdictStatus::InconsistentUpTo);
  CHECK(primes.at(ThinnessClass::Thin).status == VerdictStatus::ConsistentUpTo);
  const auto very_thin = primes.at(ThinnessClass::VeryThin).status;
  CHECK((very_thin == VerdictStatus::ConsistentUpTo ||
         very_thin == VerdictStatus::InconsistentUpTo));
  // certificate-free inputs can never reach a symbolic verdict
  for (ThinnessClass cls : kAllClasses) {
    const auto status = primes.at(cls).status;
    CHECK((status == VerdictStatus::ConsistentUpTo ||
           status == VerdictStatus::InconsistentUpTo));
  }
}

TEST_CASE("parsed union proves very thin through the merge rules") {
  const auto verdicts =
      classify_all(parse_set_expr("union(pow(2),pow2plus1)"), i64{1} << 16);
  CHECK(verdicts.at(ThinnessClass::VeryThin).status ==
        VerdictStatus::ProvedSymbolic);
  CHECK(verdicts.at(ThinnessClass::Thin).status ==
        VerdictStatus::ProvedSymbolic);
  CHECK(verdicts.at(ThinnessClass::SuperThin).status ==
        VerdictStatus::InconsistentUpTo);
}

TEST_CASE("quantitative chain: mean reciprocal gap dominates k over n_{k+1}") {
  for (const char* text : {"pow(2)", "tri", "pow2pair", "primes", "geo(3,2)"}) {
    const Prefix prefix = enumerate_upto(parse_set_expr(text), 4096);
    const auto& elems = prefix.elements();
    if (elems.size() < 2) continue;
    const auto sums =
        reciprocal_gap_partial_sums(gap_sequence(prefix));
    for (std::size_t k = 1; k <= sums.size(); ++k)
      CHECK(sums[k - 1] * elems[k] >= Rational(static_cast<i64>(k) * static_cast<i64>(k)) / Rational(1));
  }
}

TEST_CASE("am-hm inequality for gap sequences") {
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<i64> elems = oracles::random_sorted_set(rng, 50, 2000);
    if (elems.size() < 2) continue;
    const Prefix prefix(2000, elems);
    const GapSequence gaps = gap_sequence(prefix);
    Int total = 0;
    Rational reciprocal_total(0);
    i64 k = 0;
    for (i64 gap : gaps.gaps) {
      total += gap;
      reciprocal_total += ratio(1, gap);
      ++k;
      CHECK(Rational(total) * reciprocal_total >= Rational(Int(k) * Int(k)));
    }
  }
}

TEST_CASE("hierarchy coherence on random certified expressions") {
  std::mt19937_64 rng(0x1DEA);
  const auto random_atom = [&]() -> SetExpr {
    switch (rng() % 8) {
      case 0: return SetExpr::catalog("pow", {2 + static_cast<i64>(rng() % 5)});
      case 1: return SetExpr::catalog("poly", {1 + static_cast<i64>(rng() % 6),
                                               2 + static_cast<i64>(rng() % 3)});
      case 2: return SetExpr::catalog("geo", {2 + static_cast<i64>(rng() % 4),
                                              1 + static_cast<i64>(rng() % 6)});
      case 3: return SetExpr::catalog("tri");
      case 4: return SetExpr::catalog("pow2pair");
      case 5: return SetExpr::catalog("pow2run");
      case 6: return SetExpr::catalog("ap", {1 + static_cast<i64>(rng() % 10),
                                             1});
      default:
        return SetExpr::explicit_set(oracles::random_sorted_set(rng, 10, 500));
    }
  };
  const auto random_expr = [&]() -> SetExpr {
    switch (rng() % 4) {
      case 0: return SetExpr::union_of({random_atom(), random_atom()});
      case 1: return SetExpr::intersection(random_atom(), random_atom());
      case 2: return SetExpr::difference(random_atom(), random_atom());
      default: return random_atom();
    }
  };
  const struct { ThinnessClass from, to; } edges[] = {
      {ThinnessClass::SuperSuperThin, ThinnessClass::SuperThin},
      {ThinnessClass::VeryVeryThin, ThinnessClass::VeryThin},
      {ThinnessClass::VeryThin, ThinnessClass::Thin},
      {ThinnessClass::VeryThin, ThinnessClass::UniformlyThin},
  };
  for (int trial = 0; trial < 60; ++trial) {
    const SetExpr expr = random_expr();
    const auto verdicts = classify_all(expr, 1 << 12);
    for (const auto& edge : edges) {
      if (verdicts.at(edge.from).status == VerdictStatus::ProvedSymbolic) {
        const auto downstream = verdicts.at(edge.to).status;
        CHECK((downstream == VerdictStatus::ProvedSymbolic ||
               downstream == VerdictStatus::ConsistentUpTo));
      }
      if (verdicts.at(edge.to).status == VerdictStatus::RefutedSymbolic)
        CHECK(verdicts.at(edge.from).status == VerdictStatus::RefutedSymbolic);
    }
  }
}

TEST_CASE("degenerate inputs classify as consistent everywhere") {
  const auto sparse = classify_all(parse_set_expr("ap(1000000,3)"), 100);
  CHECK(sparse.at(ThinnessClass::Thin).status == VerdictStatus::RefutedSymbolic);
  const auto one = classify_all(parse_set_expr("geo(1000,1000)"), 1 << 16);
  for (ThinnessClass cls : kAllClasses) {
    const auto status = one.at(cls).status;
    CHECK((status == VerdictStatus::ConsistentUpTo ||
           status == VerdictStatus::ProvedSymbolic));
  }
}
