#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thinset/numeric.hpp"
#include "thinset/prefix.hpp"

namespace thinset {

// Declared growth metadata attached to a set expression. Claims are trusted
// inputs, but every materialization cross-checks them against the observed
// elements; a conflict raises CertificateError.
struct Certificate {
  // Monotone lower bound g(k) <= n_{k+1} - n_k on consecutive gaps (k >= 1).
  std::function<Int(i64)> gap_lower_bound;
  // The declared limit of the gap sequence is infinity.
  bool gap_lower_tends_to_infinity = false;
  // Some bound c with n_{k+1} - n_k <= c for infinitely many k.
  std::optional<i64> gap_at_most_infinitely_often;
  // Declared behavior of the series sum 1/(n_{k+1} - n_k).
  std::optional<bool> reciprocal_gap_sum_converges;

  // A bounded-block decomposition witness: ordered finite blocks covering the
  // set, sizes <= size_bound, with declared inter-block gap behavior.
  struct BlockWitness {
    std::function<std::vector<i64>(i64)> block;  // k >= 1; sorted, nonempty
    i64 size_bound = 1;
    // Lower bound on min(block(k+1)) - max(block(k)), indexed by k.
    std::function<Int(i64)> inter_gap_lower_bound;
    bool inter_gap_tends_to_infinity = false;
    std::optional<bool> inter_gap_reciprocal_sum_converges;
  };
  std::optional<BlockWitness> block_witness;

  // Declared exact asymptotic density.
  std::optional<Rational> density;

  // Set-specific refutation arguments (recorded as reasons).
  std::optional<std::string> refutes_very_thin;
  std::optional<std::string> refutes_very_very_thin;

  bool empty() const;
};

namespace detail {
struct ExprAccess;
}

// Symbolic description of a subset of {1, 2, 3, ...}. Immutable value type;
// copies share structure.
class SetExpr {
public:
  enum class Kind {
    Explicit,
    ResidueClass,
    Generator,
    BlockFamily,
    Union,
    Intersection,
    Difference,
  };

  SetExpr() = delete;

  static SetExpr explicit_set(std::vector<i64> elements);
  // {n >= 1 : n == residue (mod modulus)} with 1 <= residue <= modulus.
  static SetExpr residue_class(i64 modulus, i64 residue);
  // Named catalog entry; see catalog_names().
  static SetExpr catalog(const std::string& name,
                         const std::vector<i64>& params = {});
  static SetExpr union_of(std::vector<SetExpr> members);
  static SetExpr intersection(SetExpr left, SetExpr right);
  static SetExpr difference(SetExpr left, SetExpr right);

  // Copy of this expression carrying the given certificate.
  SetExpr with_certificate(Certificate cert) const;

  Kind kind() const;
  const Certificate* certificate() const;  // nullptr when absent
  std::string to_string() const;

  const std::vector<i64>& explicit_elements() const;  // Kind::Explicit
  i64 modulus() const;                                // Kind::ResidueClass
  i64 residue() const;                                // Kind::ResidueClass
  const std::vector<SetExpr>& children() const;  // Union/Intersection/Difference
  const std::string& catalog_name() const;  // Generator/BlockFamily (display)

private:
  struct Node;
  explicit SetExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;

  friend struct detail::ExprAccess;
};

// Exactly the members of the denoted set that are <= horizon, sorted.
// Validates enumerator monotonicity, block ordering, and certificates.
Prefix enumerate_upto(const SetExpr& expr, i64 horizon);

bool member(const SetExpr& expr, i64 n);

// True when the expression provably denotes a finite set (explicit lists and
// combinations that preserve finiteness).
bool symbolically_finite(const SetExpr& expr);

// Catalog entry names; parser_visible_only excludes internal families.
std::vector<std::string> catalog_names(bool parser_visible_only = true);
bool is_block_family_name(const std::string& name);

// Library-internal escape hatch for block families that have no catalog name.
SetExpr make_block_family(std::string display,
                          std::function<std::vector<i64>(i64)> blocks,
                          Certificate cert);

}  // namespace thinset
