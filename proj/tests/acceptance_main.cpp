// Acceptance suite: exercises the advertised guarantees end to end and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "thinset/bw.hpp"
#include "thinset/constructions.hpp"
#include "thinset/convergence.hpp"
#include "thinset/density.hpp"
#include "thinset/parser.hpp"

using namespace thinset;

namespace {

int failures = 0;
std::vector<std::string> current_notes;

void note(const std::string& text) { current_notes.push_back(text); }

void criterion(const std::string& id, bool pass) {
  std::cout << (pass ? "PASS " : "FAIL ") << id;
  if (!pass && !current_notes.empty()) {
    std::cout << "  [";
    for (std::size_t i = 0; i < current_notes.size(); ++i) {
      if (i) std::cout << "; ";
      std::cout << current_notes[i];
    }
    std::cout << "]";
  }
  std::cout << "\n";
  if (!pass) ++failures;
  current_notes.clear();
}

bool expect(bool condition, const std::string& what) {
  if (!condition) note(what);
  return condition;
}

VerdictStatus status_of(const std::map<ThinnessClass, Verdict>& verdicts,
                        ThinnessClass cls) {
  return verdicts.at(cls).status;
}

// ---------------------------------------------------------------------------
// 1. Gallery verdict table at horizon 2^20
// ---------------------------------------------------------------------------

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const i64 horizon = i64{1} << 20;
  bool pass = true;

  {  // pairs {2^k, 2^k + 1}
    const SetExpr a_frak = gallery("A_frak");
    const auto verdicts = classify_all(a_frak, horizon);
    pass &= expect(status_of(verdicts, ThinnessClass::VeryThin) ==
                       VerdictStatus::ProvedSymbolic,
                   "A_frak VeryThin not proved");
    pass &= expect(status_of(verdicts, ThinnessClass::SuperThin) ==
                       VerdictStatus::RefutedSymbolic,
                   "A_frak SuperThin not refuted");
    const auto thin = status_of(verdicts, ThinnessClass::Thin);
    pass &= expect(thin == VerdictStatus::ProvedSymbolic ||
                       thin == VerdictStatus::ConsistentUpTo,
                   "A_frak Thin contradicted");
    const Prefix prefix = enumerate_upto(a_frak, horizon);
    const i64 log = floor_log2(horizon);
    pass &= expect(
        ratio(prefix.size(), horizon) <= ratio(2 * (log + 1), horizon),
        "A_frak density ratio above 2(log2 N + 1)/N");
    pass &= expect(prefix.size() == 39, "A_frak exact count at 2^20");
  }

  {  // runs {2^k, ..., 2^k + k}
    const SetExpr runs = gallery("pow2run");
    const auto verdicts = classify_all(runs, horizon);
    pass &= expect(status_of(verdicts, ThinnessClass::VeryThin) ==
                       VerdictStatus::InconsistentUpTo,
                   "pow2run VeryThin not inconsistent");
    for (i64 k = 4; k <= 19; ++k) {
      const Prefix prefix = enumerate_upto(runs, i64{1} << (k + 1));
      if (!expect(run_statistic(prefix, 1) == k + 1,
                  "pow2run run length at 2^" + std::to_string(k + 1))) {
        pass = false;
        break;
      }
    }
    const Prefix prefix = enumerate_upto(runs, horizon);
    const auto& elems = prefix.elements();
    std::size_t idx = 0;
    i64 violations = 0;
    for (i64 n = 1; n < horizon; ++n) {
      while (idx < elems.size() && elems[idx] <= n) ++idx;
      const i64 k = floor_log2(n);
      if (static_cast<i64>(idx) * (i64{1} << k) > (k + 1) * (k + 2) * n)
        ++violations;
    }
    pass &= expect(violations == 0, "pow2run density bound violated");
  }

  {  // pairs {2^k, 2^k + k}
    const auto verdicts = classify_all(gallery("pow2pair"), horizon);
    pass &= expect(status_of(verdicts, ThinnessClass::SuperThin) ==
                       VerdictStatus::ProvedSymbolic,
                   "pow2pair SuperThin not proved");
    pass &= expect(status_of(verdicts, ThinnessClass::VeryVeryThin) ==
                       VerdictStatus::ProvedSymbolic,
                   "pow2pair VeryVeryThin not proved");
    pass &= expect(status_of(verdicts, ThinnessClass::SuperSuperThin) ==
                       VerdictStatus::RefutedSymbolic,
                   "pow2pair SuperSuperThin not refuted");
    const auto sums = reciprocal_gap_partial_sums(
        gap_sequence(enumerate_upto(gallery("pow2pair"), horizon)));
    pass &= expect(sums.size() >= 31 && sums[30] > Rational(3),
                   "pow2pair partial gap sums fail to pass 3 by index 31");
  }

  {  // triangular numbers and their companion variant
    const auto tri = classify_all(gallery("tri"), horizon);
    pass &= expect(status_of(tri, ThinnessClass::SuperThin) ==
                       VerdictStatus::ProvedSymbolic,
                   "tri SuperThin not proved");
    pass &= expect(status_of(tri, ThinnessClass::VeryVeryThin) ==
                       VerdictStatus::RefutedSymbolic,
                   "tri VeryVeryThin not refuted");
    const auto y = classify_all(gallery("triY"), horizon);
    pass &= expect(status_of(y, ThinnessClass::VeryThin) ==
                       VerdictStatus::ProvedSymbolic,
                   "triY VeryThin not proved");
    pass &= expect(status_of(y, ThinnessClass::VeryVeryThin) ==
                       VerdictStatus::RefutedSymbolic,
                   "triY VeryVeryThin not refuted");
  }

  {  // blocks with cubic internal gaps
    const SetExpr cubic = gallery("cubicgap");
    const auto verdicts = classify_all(cubic, horizon);
    pass &= expect(status_of(verdicts, ThinnessClass::VeryThin) ==
                       VerdictStatus::InconsistentUpTo,
                   "cubicgap VeryThin not inconsistent");
    pass &= expect(status_of(verdicts, ThinnessClass::UniformlyThin) ==
                       VerdictStatus::ConsistentUpTo,
                   "cubicgap UniformlyThin not consistent");
    const Prefix prefix = enumerate_upto(cubic, horizon);
    const i64 a[] = {0, 1, 4, 23, 96, 297};
    const i64 b[] = {0, 1, 9, 36, 100, 225};
    for (i64 n : {3, 4, 5}) {
      pass &= expect(max_window_count(prefix, b[n] + 1, a[n]) <= n + 1,
                     "cubicgap window bound at n=" + std::to_string(n));
    }
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  pass &= expect(elapsed < 60, "gallery table exceeded 60 s");
  criterion("1 gallery-verdict-table", pass);
}

// ---------------------------------------------------------------------------
// 2. Oracle equivalence for the run statistic and greedy blocks
// ---------------------------------------------------------------------------

void criterion_2() {
  std::mt19937_64 rng(0xACCE55);
  bool pass = true;
  i64 mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<i64> elems = oracles::random_sorted_set(rng, 200, 10000);
    const Prefix prefix(10000, elems);
    std::uniform_int_distribution<i64> m_dist(1, 10);
    const i64 m = m_dist(rng);
    if (run_statistic(prefix, m) != oracles::brute_longest_run(elems, m))
      ++mismatches;
    const BlockDecomposition decomposition =
        greedy_block_decomposition(prefix, m);
    if (decomposition.blocks != oracles::brute_blocks(elems, m)) ++mismatches;
    if (decomposition.flatten() != elems) ++mismatches;
  }
  pass &= expect(mismatches == 0,
                 std::to_string(mismatches) + " brute-force mismatches");
  criterion("2 oracle-equivalence", pass);
}

// ---------------------------------------------------------------------------
// 3. Constructive merges over random certified generators
// ---------------------------------------------------------------------------

SetExpr random_gap_divergent(std::mt19937_64& rng) {
  switch (rng() % 5) {
    case 0: return SetExpr::catalog("pow", {2 + static_cast<i64>(rng() % 8)});
    case 1:
      return SetExpr::catalog("poly", {1 + static_cast<i64>(rng() % 9),
                                       2 + static_cast<i64>(rng() % 3)});
    case 2:
      return SetExpr::catalog("geo", {2 + static_cast<i64>(rng() % 5),
                                      1 + static_cast<i64>(rng() % 9)});
    case 3: return SetExpr::catalog("tri");
    default: return SetExpr::catalog("pow2pair");
  }
}

void criterion_3() {
  std::mt19937_64 rng(0x3E4D);
  const i64 horizon = 100000;
  bool pass = true;
  i64 violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const SetExpr se = random_gap_divergent(rng);
    const SetExpr te = random_gap_divergent(rng);
    const SymbolicFacts sf = derive_facts(se);
    const SymbolicFacts tf = derive_facts(te);
    if (sf.of(ThinnessClass::SuperThin) != Fact::Yes ||
        tf.of(ThinnessClass::SuperThin) != Fact::Yes)
      ++violations;  // generators must come certified

    const Prefix s = enumerate_upto(se, horizon);
    const Prefix t = enumerate_upto(te, horizon);
    const BlockDecomposition merged = merge_super_thin(s, t, horizon);
    if (merged.block_size_max > 3) ++violations;
    if (merged.flatten() != Prefix::merged(s, t).elements()) ++violations;

    // second rule: bounded blocks from the first set's greedy decomposition
    if (s.empty() || t.empty()) continue;
    const BlockDecomposition s_blocks = greedy_block_decomposition(s, 2);
    const BlockDecomposition both =
        merge_very_thin_super_thin(s_blocks, t, horizon);
    if (both.block_size_max > 2 * s_blocks.block_size_max + 1) ++violations;
    if (both.flatten() != Prefix::merged(s, t).elements()) ++violations;
  }
  pass &= expect(violations == 0,
                 std::to_string(violations) + " merge violations");
  criterion("3 constructive-merges", pass);
}

// ---------------------------------------------------------------------------
// 4. Split-after-decomposition round trip
// ---------------------------------------------------------------------------

void criterion_4() {
  bool pass = true;
  const auto round_trips = [&](const BlockDecomposition& decomposition,
                               const std::vector<i64>& expected) {
    std::vector<i64> joined;
    for (const Prefix& part : split_into_super_thin(decomposition))
      joined.insert(joined.end(), part.elements().begin(),
                    part.elements().end());
    std::sort(joined.begin(), joined.end());
    joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
    return joined == expected;
  };

  for (const char* name : {"A_frak", "pow2pair", "tri", "triY", "pow2",
                           "pow2plus1"}) {
    const Prefix prefix = enumerate_upto(gallery(name), i64{1} << 16);
    const BlockDecomposition decomposition =
        greedy_block_decomposition(prefix, 1);
    pass &= expect(round_trips(decomposition, prefix.elements()),
                   std::string("round trip failed for ") + name);
  }

  std::mt19937_64 rng(0x59117);
  for (int trial = 0; trial < 100; ++trial) {
    const auto blocks = oracles::random_certified_blocks(rng, 40, 6, 20000);
    if (blocks.empty()) continue;
    const BlockDecomposition decomposition =
        decomposition_from_blocks(blocks, 20000);
    pass &= expect(round_trips(decomposition, decomposition.flatten()),
                   "round trip failed for a random block family");
  }
  criterion("4 split-round-trip", pass);
}

// ---------------------------------------------------------------------------
// 5. Intersection cover for the powers of two
// ---------------------------------------------------------------------------

void criterion_5() {
  const i64 horizon = i64{1} << 15;
  const Prefix s = enumerate_upto(gallery("pow2"), horizon);
  const CoverResult cover = thin_intersection_cover(s, horizon);
  bool pass = true;
  pass &= expect(Prefix::intersected(cover.a_prime, cover.b_prime).elements() ==
                     s.elements(),
                 "intersection is not exactly the base set");
  pass &= expect(run_statistic(cover.a_prime, 1) >= 4,
                 "no run of length 4 in the first superset");
  pass &= expect(run_statistic(cover.b_prime, 1) >= 4,
                 "no run of length 4 in the second superset");
  criterion("5 intersection-cover", pass);
}

// ---------------------------------------------------------------------------
// 6. Convergence separation across horizons
// ---------------------------------------------------------------------------

void criterion_6() {
  bool pass = true;
  for (const i64 horizon : {i64{1} << 10, i64{1} << 14, i64{1} << 18}) {
    const auto x_reports =
        convergence_report(SequenceDef::catalog("paper_x"), Rational(1),
                           {ratio(1, 2)}, horizon,
                           {ConvergenceMode::VeryThinIdeal});
    const auto& x = x_reports.front();
    const i64 k = floor_log2(horizon);
    pass &= expect(ratio(x.exceedance.size(), horizon) <=
                       ratio((k + 1) * (k + 2), i64{1} << k),
                   "paper_x exceedance density above the block bound");
    pass &= expect(x.modes[0].second == ModeStatus::InconsistentUpTo,
                   "paper_x very-thin mode not inconsistent at " +
                       std::to_string(horizon));

    const auto y_reports =
        convergence_report(SequenceDef::catalog("paper_y"), Rational(1),
                           {ratio(1, 2)}, horizon,
                           {ConvergenceMode::SuperThinIdeal,
                            ConvergenceMode::VeryThinIdeal});
    const auto& y = y_reports.front();
    pass &= expect(y.modes[0].second == ModeStatus::Convergent ||
                       y.modes[0].second == ModeStatus::ConsistentUpTo,
                   "paper_y super-thin mode contradicted");
    const auto gaps = gap_sequence(y.exceedance).gaps;
    pass &= expect(gaps.back() == (i64{1} << (k - 1)),
                   "paper_y tail gap is not 2^(k-1) at " +
                       std::to_string(horizon));
    pass &= expect(x.modes[0].second != y.modes[1].second,
                   "the sequences agree on the very-thin mode at " +
                       std::to_string(horizon));
  }
  criterion("6 convergence-separation", pass);
}

// ---------------------------------------------------------------------------
// 7. Splitting tree family checks and ar-set diagnostics
// ---------------------------------------------------------------------------

void criterion_7() {
  bool pass = true;
  const TreeConditionReport report =
      verify_tree_conditions(dyadic_family(), 10, 100000);
  pass &= expect(report.all_pass, "tree conditions violated");

  for (const char* bits : {"0000000000", "1111111111", "0101010101"}) {
    const BitString x = BitString::parse(bits);
    const auto chain = branch_chain(x);
    for (std::size_t i = 0; i < chain.size() && pass; ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        const Prefix a = enumerate_upto(chain[i].difference, 100000);
        const Prefix b = enumerate_upto(chain[j].difference, 100000);
        if (!Prefix::intersected(a, b).empty()) {
          pass = expect(false, "branch differences overlap");
          break;
        }
      }

    const Prefix ar = build_ar_set(x, {1, 2, 4, 8, 16, 32}, 100000);
    // super-thin diagnostic: the suffix-minimum gap curve is nondecreasing
    // by construction; require the density ratio to halve (within a factor
    // of two) across doubling checkpoints once the set has materialized
    i64 previous = count_upto(ar, 64);
    for (i64 n = 128; n <= 65536; n *= 2) {
      const i64 count = count_upto(ar, n);
      if (!(count <= 2 * previous)) {
        pass = expect(false, "ar-set ratio fails to halve within factor 2");
        break;
      }
      previous = count;
    }
    const auto gaps = gap_sequence(ar).gaps;
    std::vector<i64> suffix(gaps.size());
    i64 running = gaps.back();
    for (std::size_t i = gaps.size(); i-- > 0;)
      suffix[i] = running = std::min(running, gaps[i]);
    pass &= expect(std::is_sorted(suffix.begin(), suffix.end()),
                   "ar-set tail min gap decreases");
  }
  criterion("7 tree-family", pass);
}

// ---------------------------------------------------------------------------
// 8. Hierarchy invariants across gallery and random certified expressions
// ---------------------------------------------------------------------------

void criterion_8() {
  std::mt19937_64 rng(0x8108);
  bool pass = true;

  const auto check_verdicts = [&](const std::map<ThinnessClass, Verdict>& v,
                                  const std::string& label) {
    const struct { ThinnessClass from, to; } edges[] = {
        {ThinnessClass::SuperSuperThin, ThinnessClass::SuperThin},
        {ThinnessClass::VeryVeryThin, ThinnessClass::VeryThin},
        {ThinnessClass::VeryThin, ThinnessClass::Thin},
        {ThinnessClass::VeryThin, ThinnessClass::UniformlyThin},
    };
    for (const auto& edge : edges) {
      const auto from = v.at(edge.from).status;
      const auto to = v.at(edge.to).status;
      if (from == VerdictStatus::ProvedSymbolic &&
          (to == VerdictStatus::RefutedSymbolic ||
           to == VerdictStatus::InconsistentUpTo))
        return expect(false, label + ": proved class with contradicted "
                                     "implied class");
      if (to == VerdictStatus::RefutedSymbolic &&
          from != VerdictStatus::RefutedSymbolic)
        return expect(false, label + ": refuted implied class without "
                                     "refuted stronger class");
    }
    return true;
  };

  for (const auto& [name, description] : gallery_entries()) {
    (void)description;
    for (const i64 horizon : {i64{1} << 12, i64{1} << 16})
      pass &= check_verdicts(classify_all(gallery(name), horizon), name);
  }

  const auto random_atom = [&]() -> SetExpr {
    switch (rng() % 8) {
      case 0: return SetExpr::catalog("pow", {2 + static_cast<i64>(rng() % 6)});
      case 1:
        return SetExpr::catalog("poly", {1 + static_cast<i64>(rng() % 8),
                                         2 + static_cast<i64>(rng() % 3)});
      case 2:
        return SetExpr::catalog("geo", {2 + static_cast<i64>(rng() % 4),
                                        1 + static_cast<i64>(rng() % 8)});
      case 3: return SetExpr::catalog("tri");
      case 4: return SetExpr::catalog("pow2pair");
      case 5: return SetExpr::catalog("pow2run");
      case 6: {
        const i64 modulus = 1 + static_cast<i64>(rng() % 12);
        return SetExpr::catalog(
            "ap", {modulus, 1 + static_cast<i64>(rng() % modulus)});
      }
      default:
        return SetExpr::explicit_set(oracles::random_sorted_set(rng, 12, 2000));
    }
  };
  for (int trial = 0; trial < 100; ++trial) {
    SetExpr expr = random_atom();
    switch (rng() % 4) {
      case 0: expr = SetExpr::union_of({expr, random_atom()}); break;
      case 1: expr = SetExpr::intersection(expr, random_atom()); break;
      case 2: expr = SetExpr::difference(expr, random_atom()); break;
      default: break;
    }
    pass &= check_verdicts(classify_all(expr, i64{1} << 13),
                           "random expression " + expr.to_string());
  }
  criterion("8 hierarchy-invariants", pass);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria failed\n";
  return failures;
}
