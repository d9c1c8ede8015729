#include <doctest.h>

#include <algorithm>

#include "thinset/bw.hpp"
#include "thinset/errors.hpp"
#include "thinset/parser.hpp"
#include "thinset/thinness.hpp"

using namespace thinset;

TEST_CASE("tree nodes are the expected residue classes") {
  CHECK(enumerate_upto(tree_node(BitString::parse("01")), 14).elements() ==
        std::vector<i64>{2, 6, 10, 14});
  CHECK(enumerate_upto(tree_node(BitString{}), 5).elements() ==
        std::vector<i64>{1, 2, 3, 4, 5});
  CHECK(enumerate_upto(tree_node(BitString::parse("111")), 17).elements() ==
        std::vector<i64>{1, 9, 17});
  CHECK(enumerate_upto(tree_node(BitString::parse("0")), 8).elements() ==
        std::vector<i64>{2, 4, 6, 8});
  CHECK(enumerate_upto(tree_node(BitString::parse("1")), 7).elements() ==
        std::vector<i64>{1, 3, 5, 7});
}

TEST_CASE("children partition the parent on every tested horizon") {
  for (const char* bits : {"", "0", "1", "01", "110", "0101"}) {
    const BitString s = BitString::parse(bits);
    const Prefix parent = enumerate_upto(tree_node(s), 500);
    const Prefix left = enumerate_upto(tree_node(s.extended(0)), 500);
    const Prefix right = enumerate_upto(tree_node(s.extended(1)), 500);
    CHECK(Prefix::merged(left, right).elements() == parent.elements());
    CHECK(Prefix::intersected(left, right).empty());
  }
}

TEST_CASE("verify_tree_conditions passes for the splitting family") {
  const TreeConditionReport small =
      verify_tree_conditions(dyadic_family(), 3, 100);
  CHECK(small.all_pass);
  CHECK(small.violations.empty());

  const TreeConditionReport deep =
      verify_tree_conditions(dyadic_family(), 6, 1 << 12);
  CHECK(deep.all_pass);
}

TEST_CASE("verify_tree_conditions reports violations with witnesses") {
  // both children equal to the evens: 1 is in the parent but no child
  TreeFamily broken;
  broken.node = [](const BitString& s) -> SetExpr {
    if (s.size() == 0) return SetExpr::residue_class(1, 1);
    return SetExpr::residue_class(2, 2);
  };
  const TreeConditionReport report = verify_tree_conditions(broken, 1, 10);
  CHECK(!report.all_pass);
  REQUIRE(!report.violations.empty());
  bool found_cover = false;
  for (const TreeViolation& violation : report.violations) {
    if (violation.condition == "children-cover") {
      CHECK(violation.witness == 1);
      found_cover = true;
    }
  }
  CHECK(found_cover);
}

TEST_CASE("branch chain differences are disjoint residue classes") {
  const auto chain = branch_chain(BitString::parse("00"));
  REQUIRE(chain.size() == 2);
  CHECK(enumerate_upto(chain[0].difference, 9).elements() ==
        std::vector<i64>{1, 3, 5, 7, 9});
  CHECK(enumerate_upto(chain[1].difference, 14).elements() ==
        std::vector<i64>{2, 6, 10, 14});

  const auto single = branch_chain(BitString::parse("1"));
  CHECK(enumerate_upto(single[0].difference, 8).elements() ==
        std::vector<i64>{2, 4, 6, 8});

  // differences along any branch are pairwise disjoint and each is a class
  // modulo 2^{j+1}
  const auto longer = branch_chain(BitString::parse("010"));
  for (std::size_t i = 0; i < longer.size(); ++i) {
    CHECK(longer[i].difference.modulus() == (i64{1} << (i + 1)));
    for (std::size_t j = i + 1; j < longer.size(); ++j) {
      const Prefix a = enumerate_upto(longer[i].difference, 10000);
      const Prefix b = enumerate_upto(longer[j].difference, 10000);
      CHECK(Prefix::intersected(a, b).empty());
    }
  }

  // differences plus the final node cover the parent chain
  const Prefix whole = enumerate_upto(tree_node(BitString{}), 4096);
  Prefix assembled = enumerate_upto(tree_node(BitString::parse("010")), 4096);
  for (const BranchStep& step : longer)
    assembled = Prefix::merged(assembled, enumerate_upto(step.difference, 4096));
  CHECK(assembled.elements() == whole.elements());
}

TEST_CASE("ar-sets take initial segments of the branch differences") {
  CHECK(build_ar_set(BitString::parse("00"), {1, 2}, 50).elements() ==
        std::vector<i64>{1, 2, 6});
  CHECK(build_ar_set(BitString::parse("0"), {1}, 10).elements() ==
        std::vector<i64>{1});

  const Prefix bigger = build_ar_set(BitString::parse("000"), {2, 3, 4}, 200);
  CHECK(bigger.size() == 9);

  CHECK_THROWS_AS(build_ar_set(BitString::parse("0"), {1, 2}, 100), DomainError);
  CHECK_THROWS_AS(build_ar_set(BitString::parse("00"), {2, 2}, 100), DomainError);
  CHECK_THROWS_AS(build_ar_set(BitString::parse("00"), {1, 50}, 100), DomainError);
}

TEST_CASE("ar-sets thin out on doubling checkpoints") {
  const Prefix ar = build_ar_set(BitString::parse("00000"), {2, 4, 8, 16, 32},
                                 1 << 12);
  // finite set: the density ratio halves exactly once the set is exhausted
  i64 previous_count = -1;
  for (i64 n = 256; n <= (1 << 12); n *= 2) {
    const i64 count = count_upto(ar, n);
    if (previous_count >= 0) CHECK(count <= 2 * previous_count);
    previous_count = count;
  }
  // the five segments contribute 2 + 4 + 8 + 16 + 32 pairwise disjoint values
  CHECK(ar.size() == 62);
  CHECK(ar.elements().back() == 16 + 31 * 32);
}

TEST_CASE("case1 witness on the constant family") {
  TreeFamily omega;
  omega.node = [](const BitString&) { return SetExpr::residue_class(1, 1); };
  const Case1Result result =
      case1_witness(omega, BitString::parse("000"), 1, 100);
  CHECK(result.runs == std::vector<std::vector<i64>>{
                           {1}, {2}, {3, 4}, {5, 6, 7}});
  CHECK(result.witness.elements() == std::vector<i64>{1, 2, 3, 4, 5, 6, 7});
  CHECK(run_statistic(result.witness, 1) >= 3);
}

TEST_CASE("case1 witness fails on the splitting family") {
  CHECK_THROWS_AS(
      case1_witness(dyadic_family(), BitString::parse("000"), 1, 100000),
      DomainError);
}

TEST_CASE("case1 witness inside a run-rich family") {
  // every node contains the runs {2^k, ..., 2^k + k}
  TreeFamily rich;
  rich.node = [](const BitString& s) -> SetExpr {
    if (s.size() == 0) return SetExpr::residue_class(1, 1);
    return SetExpr::union_of(
        {SetExpr::catalog("pow2run"), tree_node(s)});
  };
  const BitString x = BitString::parse("0000");
  const Case1Result result = case1_witness(rich, x, 1, 1 << 7);
  CHECK(run_statistic(result.witness, 1) >= 4);
  // everything the witness takes beyond a node lies in earlier runs
  for (i64 j = 1; j <= x.size(); ++j) {
    const Prefix node = enumerate_upto(rich.node(x.prefix(j)), 1 << 7);
    const Prefix outside = Prefix::subtracted(result.witness, node);
    std::vector<i64> earlier;
    for (i64 i = 0; i < j; ++i)
      earlier.insert(earlier.end(), result.runs[static_cast<std::size_t>(i)].begin(),
                     result.runs[static_cast<std::size_t>(i)].end());
    std::sort(earlier.begin(), earlier.end());
    for (i64 e : outside.elements())
      CHECK(std::binary_search(earlier.begin(), earlier.end(), e));
  }
}

TEST_CASE("bit string parsing") {
  CHECK(BitString::parse("0101").to_string() == "0101");
  CHECK(BitString::parse("").size() == 0);
  CHECK(BitString::parse("01").offset_value() == 2);
  CHECK(BitString::parse("111").offset_value() == 7);
  CHECK_THROWS_AS(BitString::parse("012"), DomainError);
}
