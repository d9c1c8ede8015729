#include "thinset/set_expr.hpp"

#include <algorithm>
#include <sstream>

#include "thinset/errors.hpp"

namespace thinset {

bool Certificate::empty() const {
  return !gap_lower_bound && !gap_at_most_infinitely_often &&
         !reciprocal_gap_sum_converges && !block_witness && !density &&
         !refutes_very_thin && !refutes_very_very_thin;
}

struct SetExpr::Node {
  Kind kind;
  std::vector<i64> elements;                                   // Explicit
  i64 modulus = 0;                                             // ResidueClass
  i64 residue = 0;                                             // ResidueClass
  std::string display;                                         // named kinds
  std::function<void(i64, std::vector<i64>&)> materialize_fn;  // Generator
  std::function<std::vector<i64>(i64)> block_fn;               // BlockFamily
  std::vector<SetExpr> children;
  std::optional<Certificate> cert;
};

namespace detail {
struct ExprAccess {
  using Node = SetExpr::Node;
  static const Node& node(const SetExpr& expr) { return *expr.node_; }
  static SetExpr wrap(std::shared_ptr<const Node> node) {
    return SetExpr(std::move(node));
  }
};
}  // namespace detail

using detail::ExprAccess;
using NodeT = detail::ExprAccess::Node;

SetExpr::SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

SetExpr SetExpr::explicit_set(std::vector<i64> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (!elements.empty() && elements.front() < 1)
    throw DomainError("explicit set elements must be positive");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Explicit;
  node->elements = std::move(elements);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::residue_class(i64 modulus, i64 residue) {
  if (modulus < 1) throw DomainError("residue class modulus must be >= 1");
  if (residue < 1 || residue > modulus)
    throw DomainError("residue must satisfy 1 <= r <= modulus");
  auto node = std::make_shared<Node>();
  node->kind = Kind::ResidueClass;
  node->modulus = modulus;
  node->residue = residue;
  node->display =
      "ap(" + std::to_string(modulus) + "," + std::to_string(residue) + ")";
  return SetExpr(std::move(node));
}

SetExpr SetExpr::union_of(std::vector<SetExpr> members) {
  if (members.size() < 2) throw DomainError("union needs at least two members");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Union;
  node->children = std::move(members);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::intersection(SetExpr left, SetExpr right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Intersection;
  node->children = {std::move(left), std::move(right)};
  return SetExpr(std::move(node));
}

SetExpr SetExpr::difference(SetExpr left, SetExpr right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Difference;
  node->children = {std::move(left), std::move(right)};
  return SetExpr(std::move(node));
}

SetExpr SetExpr::with_certificate(Certificate cert) const {
  auto node = std::make_shared<Node>(*node_);
  node->cert = std::move(cert);
  return SetExpr(std::move(node));
}

SetExpr::Kind SetExpr::kind() const { return node_->kind; }

const Certificate* SetExpr::certificate() const {
  return node_->cert ? &*node_->cert : nullptr;
}

const std::vector<i64>& SetExpr::explicit_elements() const {
  if (node_->kind != Kind::Explicit) throw DomainError("not an explicit set");
  return node_->elements;
}

i64 SetExpr::modulus() const {
  if (node_->kind != Kind::ResidueClass)
    throw DomainError("not a residue class");
  return node_->modulus;
}

i64 SetExpr::residue() const {
  if (node_->kind != Kind::ResidueClass)
    throw DomainError("not a residue class");
  return node_->residue;
}

const std::vector<SetExpr>& SetExpr::children() const {
  return node_->children;
}

const std::string& SetExpr::catalog_name() const { return node_->display; }

std::string SetExpr::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Explicit: {
      std::ostringstream out;
      out << "{";
      for (std::size_t i = 0; i < n.elements.size(); ++i) {
        if (i) out << ",";
        out << n.elements[i];
      }
      out << "}";
      return out.str();
    }
    case Kind::ResidueClass:
    case Kind::Generator:
    case Kind::BlockFamily:
      return n.display;
    case Kind::Union: {
      std::string out = "union(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ",";
        out += n.children[i].to_string();
      }
      return out + ")";
    }
    case Kind::Intersection:
      return "inter(" + n.children[0].to_string() + "," +
             n.children[1].to_string() + ")";
    case Kind::Difference:
      return "diff(" + n.children[0].to_string() + "," +
             n.children[1].to_string() + ")";
  }
  throw DomainError("corrupt expression node");
}

namespace {

// Horizons are bounded to keep element arithmetic safely inside i64 and to
// fail fast on absurd materialization requests.
constexpr i64 kMaxHorizon = 1'000'000'000;

void check_horizon(i64 horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  if (horizon > kMaxHorizon)
    throw DomainError("horizon exceeds supported maximum " +
                      std::to_string(kMaxHorizon));
}

void require_strictly_increasing(const std::vector<i64>& elements,
                                 const std::string& what) {
  i64 prev = 0;
  for (i64 e : elements) {
    if (e <= prev)
      throw DomainError(what + " is not strictly increasing at value " +
                        std::to_string(e));
    prev = e;
  }
}

void validate_certificate(const Certificate& cert,
                          const std::vector<i64>& elems, i64 horizon,
                          const std::string& display) {
  if (cert.gap_lower_bound) {
    for (std::size_t k = 1; k < elems.size(); ++k) {
      const Int observed = elems[k] - elems[k - 1];
      if (cert.gap_lower_bound(static_cast<i64>(k)) > observed)
        throw CertificateError("certificate for " + display +
                               " claims a gap lower bound above the observed "
                               "gap " +
                               observed.str() + " at index " +
                               std::to_string(k));
    }
  }
  if (cert.block_witness) {
    const auto& witness = *cert.block_witness;
    std::vector<i64> covered;
    i64 prev_max = 0;
    for (i64 k = 1;; ++k) {
      const std::vector<i64> block = witness.block(k);
      if (block.empty())
        throw CertificateError("certificate for " + display +
                               " has an empty witness block");
      require_strictly_increasing(block, display + " witness block");
      if (static_cast<i64>(block.size()) > witness.size_bound)
        throw CertificateError("certificate for " + display +
                               " violates its own block size bound");
      if (k > 1) {
        const i64 gap = block.front() - prev_max;
        if (gap <= 0)
          throw CertificateError("certificate for " + display +
                                 " has unordered witness blocks");
        if (witness.inter_gap_lower_bound &&
            witness.inter_gap_lower_bound(k - 1) > Int(gap))
          throw CertificateError("certificate for " + display +
                                 " claims an inter-block gap lower bound "
                                 "above the observed gap " +
                                 std::to_string(gap));
      }
      if (block.front() > horizon) break;
      bool clipped = false;
      for (i64 e : block) {
        if (e > horizon) {
          clipped = true;
          break;
        }
        covered.push_back(e);
      }
      if (clipped) break;
      prev_max = block.back();
    }
    if (covered != elems)
      throw CertificateError("certificate block witness for " + display +
                             " does not reproduce the materialized set");
  }
}

std::vector<i64> materialize_node(const SetExpr& expr, i64 horizon);

std::vector<i64> materialize_kind(const NodeT& node, i64 horizon) {
  using Kind = SetExpr::Kind;
  switch (node.kind) {
    case Kind::Explicit: {
      std::vector<i64> out;
      for (i64 e : node.elements)
        if (e <= horizon) out.push_back(e);
      return out;
    }
    case Kind::ResidueClass: {
      std::vector<i64> out;
      out.reserve(static_cast<std::size_t>(horizon / node.modulus) + 1);
      for (i64 value = node.residue; value <= horizon; value += node.modulus)
        out.push_back(value);
      return out;
    }
    case Kind::Generator: {
      std::vector<i64> out;
      node.materialize_fn(horizon, out);
      require_strictly_increasing(out, "enumerator for " + node.display);
      if (!out.empty() && (out.back() > horizon || out.front() < 1))
        throw DomainError("enumerator for " + node.display +
                          " produced an element outside [1, horizon]");
      return out;
    }
    case Kind::BlockFamily: {
      std::vector<i64> out;
      i64 prev_max = 0;
      for (i64 k = 1;; ++k) {
        const std::vector<i64> block = node.block_fn(k);
        if (block.empty())
          throw DomainError("block family " + node.display +
                            " produced an empty block");
        require_strictly_increasing(block, "block family " + node.display);
        if (block.front() <= prev_max)
          throw DomainError("block family " + node.display +
                            " violates block ordering at block " +
                            std::to_string(k));
        if (block.front() > horizon) break;
        bool clipped = false;
        for (i64 e : block) {
          if (e > horizon) {
            clipped = true;
            break;
          }
          out.push_back(e);
        }
        if (clipped) break;
        prev_max = block.back();
      }
      return out;
    }
    case Kind::Union: {
      std::vector<i64> acc = materialize_node(node.children[0], horizon);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        std::vector<i64> next = materialize_node(node.children[i], horizon);
        std::vector<i64> merged;
        merged.reserve(acc.size() + next.size());
        std::set_union(acc.begin(), acc.end(), next.begin(), next.end(),
                       std::back_inserter(merged));
        acc = std::move(merged);
      }
      return acc;
    }
    case Kind::Intersection: {
      std::vector<i64> left = materialize_node(node.children[0], horizon);
      std::vector<i64> right = materialize_node(node.children[1], horizon);
      std::vector<i64> out;
      std::set_intersection(left.begin(), left.end(), right.begin(),
                            right.end(), std::back_inserter(out));
      return out;
    }
    case Kind::Difference: {
      std::vector<i64> left = materialize_node(node.children[0], horizon);
      std::vector<i64> right = materialize_node(node.children[1], horizon);
      std::vector<i64> out;
      std::set_difference(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(out));
      return out;
    }
  }
  throw DomainError("corrupt expression node");
}

std::vector<i64> materialize_node(const SetExpr& expr, i64 horizon) {
  const NodeT& node = ExprAccess::node(expr);
  std::vector<i64> elems = materialize_kind(node, horizon);
  if (node.cert) validate_certificate(*node.cert, elems, horizon, expr.to_string());
  return elems;
}

bool member_node(const SetExpr& expr, i64 n) {
  const NodeT& node = ExprAccess::node(expr);
  using Kind = SetExpr::Kind;
  switch (node.kind) {
    case Kind::Explicit:
      return std::binary_search(node.elements.begin(), node.elements.end(), n);
    case Kind::ResidueClass:
      return n % node.modulus == node.residue % node.modulus;
    case Kind::Generator: {
      std::vector<i64> out;
      node.materialize_fn(n, out);
      return std::binary_search(out.begin(), out.end(), n);
    }
    case Kind::BlockFamily: {
      i64 prev_max = 0;
      for (i64 k = 1;; ++k) {
        const std::vector<i64> block = node.block_fn(k);
        if (block.empty() || block.front() <= prev_max)
          throw DomainError("block family " + node.display +
                            " violates block ordering");
        if (block.front() > n) return false;
        if (std::binary_search(block.begin(), block.end(), n)) return true;
        prev_max = block.back();
      }
    }
    case Kind::Union:
      for (const auto& child : node.children)
        if (member_node(child, n)) return true;
      return false;
    case Kind::Intersection:
      return member_node(node.children[0], n) &&
             member_node(node.children[1], n);
    case Kind::Difference:
      return member_node(node.children[0], n) &&
             !member_node(node.children[1], n);
  }
  throw DomainError("corrupt expression node");
}

}  // namespace

Prefix enumerate_upto(const SetExpr& expr, i64 horizon) {
  check_horizon(horizon);
  return Prefix(horizon, materialize_node(expr, horizon), expr.to_string());
}

bool member(const SetExpr& expr, i64 n) {
  if (n < 1) throw DomainError("member requires n >= 1");
  return member_node(expr, n);
}

bool symbolically_finite(const SetExpr& expr) {
  const NodeT& node = ExprAccess::node(expr);
  using Kind = SetExpr::Kind;
  switch (node.kind) {
    case Kind::Explicit:
      return true;
    case Kind::ResidueClass:
    case Kind::Generator:
    case Kind::BlockFamily:
      return false;
    case Kind::Union:
      return std::all_of(node.children.begin(), node.children.end(),
                         [](const SetExpr& c) { return symbolically_finite(c); });
    case Kind::Intersection:
      return symbolically_finite(node.children[0]) ||
             symbolically_finite(node.children[1]);
    case Kind::Difference:
      return symbolically_finite(node.children[0]);
  }
  return false;
}

SetExpr make_block_family(std::string display,
                          std::function<std::vector<i64>(i64)> blocks,
                          Certificate cert) {
  auto node = std::make_shared<NodeT>();
  node->kind = SetExpr::Kind::BlockFamily;
  node->display = std::move(display);
  node->block_fn = std::move(blocks);
  if (!cert.empty()) node->cert = std::move(cert);
  return ExprAccess::wrap(std::move(node));
}

namespace {

std::vector<i64> sieve_primes(i64 horizon) {
  std::vector<bool> composite(static_cast<std::size_t>(horizon) + 1, false);
  std::vector<i64> primes;
  for (i64 p = 2; p <= horizon; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    if (p <= horizon / p)
      for (i64 q = p * p; q <= horizon; q += p)
        composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

i64 triangular(i64 k) { return k * (k + 1) / 2; }

// a_1 = 1, a_p = a_{p-1} + 2(1^3 + ... + (p-1)^3) + 1; the p-th block is
// {a_p, a_p + 1^3, a_p + 1^3 + 2^3, ..., a_p + (1^3 + ... + p^3)}.
std::vector<i64> cubicgap_block(i64 p) {
  i64 a = 1;
  i64 cubes = 0;
  for (i64 q = 2; q <= p; ++q) {
    const i64 m = q - 1;
    cubes += m * m * m;
    a += 2 * cubes + 1;
  }
  std::vector<i64> block;
  block.reserve(static_cast<std::size_t>(p) + 1);
  block.push_back(a);
  i64 offset = 0;
  for (i64 j = 1; j <= p; ++j) {
    offset += j * j * j;
    block.push_back(a + offset);
  }
  return block;
}

Certificate zero_density_cert() {
  Certificate cert;
  cert.density = Rational(0);
  return cert;
}

SetExpr make_generator_node(std::string display,
                            std::function<void(i64, std::vector<i64>&)> fn,
                            Certificate cert) {
  auto node = std::make_shared<NodeT>();
  node->kind = SetExpr::Kind::Generator;
  node->display = std::move(display);
  node->materialize_fn = std::move(fn);
  if (!cert.empty()) node->cert = std::move(cert);
  return ExprAccess::wrap(std::move(node));
}

SetExpr with_display(const SetExpr& expr, std::string display) {
  auto node = std::make_shared<NodeT>(ExprAccess::node(expr));
  node->display = std::move(display);
  return ExprAccess::wrap(std::move(node));
}

struct CatalogEntry {
  std::string name;
  int arity = 0;
  bool parser_visible = true;
  bool block_family = false;
  std::string summary;
  std::function<SetExpr(const std::vector<i64>&)> build;
};

const std::vector<CatalogEntry>& catalog_registry() {
  static const std::vector<CatalogEntry>* registry = [] {
    auto* entries = new std::vector<CatalogEntry>;

    entries->push_back(
        {"ap", 2, true, false, "arithmetic progression {r, r+m, r+2m, ...}",
         [](const std::vector<i64>& p) {
           return SetExpr::residue_class(p[0], p[1]);
         }});

    entries->push_back(
        {"dyadic", 2, true, false, "residue class {m*2^n - i : m >= 1}",
         [](const std::vector<i64>& p) {
           const i64 n = p[0], i = p[1];
           if (n < 0 || n > 40) throw DomainError("dyadic: need 0 <= n <= 40");
           const i64 modulus = i64{1} << n;
           if (i < 0 || i >= modulus)
             throw DomainError("dyadic: need 0 <= i < 2^n");
           return with_display(
               SetExpr::residue_class(modulus, modulus - i),
               "dyadic(" + std::to_string(n) + "," + std::to_string(i) + ")");
         }});

    entries->push_back(
        {"pow", 1, true, false, "powers {b^k : k >= 1}, b >= 2",
         [](const std::vector<i64>& p) {
           const i64 base = p[0];
           if (base < 2 || base > 1'000'000)
             throw DomainError("pow: need 2 <= b <= 10^6");
           Certificate cert = zero_density_cert();
           cert.gap_lower_bound = [base](i64 k) {
             return int_pow(Int(base), k - 1);
           };
           cert.gap_lower_tends_to_infinity = true;
           cert.reciprocal_gap_sum_converges = true;
           auto fn = [base](i64 horizon, std::vector<i64>& out) {
             for (i64 value = base; value <= horizon;) {
               out.push_back(value);
               if (value > horizon / base) break;
               value *= base;
             }
           };
           return make_generator_node("pow(" + std::to_string(base) + ")", fn,
                                      std::move(cert));
         }});

    entries->push_back(
        {"pow2plus1", 0, true, false, "{2^k + 1 : k >= 1}",
         [](const std::vector<i64>&) {
           Certificate cert = zero_density_cert();
           cert.gap_lower_bound = [](i64 k) { return int_pow(Int(2), k - 1); };
           cert.gap_lower_tends_to_infinity = true;
           cert.reciprocal_gap_sum_converges = true;
           auto fn = [](i64 horizon, std::vector<i64>& out) {
             for (i64 value = 2; value + 1 <= horizon;) {
               out.push_back(value + 1);
               if (value > horizon / 2) break;
               value *= 2;
             }
           };
           return make_generator_node("pow2plus1", fn, std::move(cert));
         }});

    entries->push_back(
        {"tri", 0, true, false, "triangular numbers {k(k+1)/2 : k >= 1}",
         [](const std::vector<i64>&) {
           Certificate cert = zero_density_cert();
           cert.gap_lower_bound = [](i64 k) { return Int(k + 1); };
           cert.gap_lower_tends_to_infinity = true;
           cert.reciprocal_gap_sum_converges = false;
           cert.refutes_very_very_thin =
               "every decomposition into blocks of size <= M leaves some "
               "inter-block gap <= l+1 with l <= kM, so the reciprocal gap "
               "sum dominates a harmonic series";
           auto fn = [](i64 horizon, std::vector<i64>& out) {
             for (i64 k = 1; triangular(k) <= horizon; ++k)
               out.push_back(triangular(k));
           };
           return make_generator_node("tri", fn, std::move(cert));
         }});

    entries->push_back({"primes", 0, true, false, "prime numbers (sieve)",
                        [](const std::vector<i64>&) {
                          auto fn = [](i64 horizon, std::vector<i64>& out) {
                            out = sieve_primes(horizon);
                          };
                          return make_generator_node("primes", fn,
                                                     Certificate{});
                        }});

    entries->push_back(
        {"poly", 2, true, false, "{c*k^d : k >= 1}, d >= 2",
         [](const std::vector<i64>& p) {
           const i64 c = p[0], d = p[1];
           if (c < 1 || c > 1'000'000)
             throw DomainError("poly: need 1 <= c <= 10^6");
           if (d < 2 || d > 9) throw DomainError("poly: need 2 <= d <= 9");
           Certificate cert = zero_density_cert();
           cert.gap_lower_bound = [c, d](i64 k) {
             return Int(c) * (int_pow(Int(k + 1), d) - int_pow(Int(k), d));
           };
           cert.gap_lower_tends_to_infinity = true;
           cert.reciprocal_gap_sum_converges = (d >= 3);
           auto fn = [c, d](i64 horizon, std::vector<i64>& out) {
             for (i64 k = 1;; ++k) {
               const Int value = Int(c) * int_pow(Int(k), d);
               if (value > horizon) break;
               out.push_back(static_cast<i64>(value));
             }
           };
           return make_generator_node(
               "poly(" + std::to_string(c) + "," + std::to_string(d) + ")", fn,
               std::move(cert));
         }});

    entries->push_back(
        {"geo", 2, true, false, "{c*b^k : k >= 1}, b >= 2",
         [](const std::vector<i64>& p) {
           const i64 base = p[0], c = p[1];
           if (base < 2 || base > 1000)
             throw DomainError("geo: need 2 <= b <= 1000");
           if (c < 1 || c > 1'000'000)
             throw DomainError("geo: need 1 <= c <= 10^6");
           Certificate cert = zero_density_cert();
           cert.gap_lower_bound = [base, c](i64 k) {
             return Int(c) * int_pow(Int(base), k) * (base - 1);
           };
           cert.gap_lower_tends_to_infinity = true;
           cert.reciprocal_gap_sum_converges = true;
           auto fn = [base, c](i64 horizon, std::vector<i64>& out) {
             if (c > horizon / base) return;
             for (i64 value = c * base; value <= horizon;) {
               out.push_back(value);
               if (value > horizon / base) break;
               value *= base;
             }
           };
           return make_generator_node(
               "geo(" + std::to_string(base) + "," + std::to_string(c) + ")",
               fn, std::move(cert));
         }});

    entries->push_back(
        {"pow2run", 0, true, true, "union of runs {2^k, 2^k+1, ..., 2^k+k}",
         [](const std::vector<i64>&) {
           Certificate cert = zero_density_cert();
           cert.gap_at_most_infinitely_often = 1;
           cert.reciprocal_gap_sum_converges = false;
           auto blocks = [](i64 k) {
             std::vector<i64> block;
             const i64 start = i64{1} << std::min<i64>(k, 62);
             for (i64 j = 0; j <= k; ++j) block.push_back(start + j);
             return block;
           };
           return make_block_family("pow2run", blocks, std::move(cert));
         }});

    entries->push_back(
        {"pow2pair", 0, true, true, "union of pairs {2^k, 2^k+k}",
         [](const std::vector<i64>&) {
           Certificate cert = zero_density_cert();
           cert.gap_lower_bound = [](i64 j) { return Int((j + 1) / 2); };
           cert.gap_lower_tends_to_infinity = true;
           cert.reciprocal_gap_sum_converges = false;
           Certificate::BlockWitness witness;
           witness.block = [](i64 k) {
             const i64 start = i64{1} << std::min<i64>(k, 62);
             return std::vector<i64>{start, start + k};
           };
           witness.size_bound = 2;
           witness.inter_gap_lower_bound = [](i64 k) {
             return int_pow(Int(2), k) - k;
           };
           witness.inter_gap_tends_to_infinity = true;
           witness.inter_gap_reciprocal_sum_converges = true;
           auto blocks = witness.block;
           cert.block_witness = std::move(witness);
           return make_block_family("pow2pair", blocks, std::move(cert));
         }});

    entries->push_back(
        {"triY", 0, true, true,
         "triangular numbers, every odd-indexed one paired with its successor",
         [](const std::vector<i64>&) {
           Certificate cert = zero_density_cert();
           cert.gap_at_most_infinitely_often = 1;
           cert.reciprocal_gap_sum_converges = false;
           cert.refutes_very_very_thin =
               "contains the triangular numbers, so every bounded-block "
               "decomposition has a harmonic-type reciprocal gap sum";
           Certificate::BlockWitness witness;
           witness.block = [](i64 k) {
             const i64 b = triangular(k);
             if (k % 2 == 1) return std::vector<i64>{b, b + 1};
             return std::vector<i64>{b};
           };
           witness.size_bound = 2;
           witness.inter_gap_lower_bound = [](i64 k) { return Int(k); };
           witness.inter_gap_tends_to_infinity = true;
           witness.inter_gap_reciprocal_sum_converges = false;
           auto blocks = witness.block;
           cert.block_witness = std::move(witness);
           return make_block_family("triY", blocks, std::move(cert));
         }});

    entries->push_back(
        {"cubicgap", 0, true, true,
         "blocks {a_p, a_p+1^3, a_p+1^3+2^3, ...}, a_p = a_{p-1} + "
         "2(1^3+...+(p-1)^3) + 1",
         [](const std::vector<i64>&) {
           Certificate cert = zero_density_cert();
           cert.gap_at_most_infinitely_often = 1;
           cert.reciprocal_gap_sum_converges = false;
           return make_block_family("cubicgap", cubicgap_block,
                                    std::move(cert));
         }});

    return entries;
  }();
  return *registry;
}

const CatalogEntry& find_catalog_entry(const std::string& name) {
  for (const auto& entry : catalog_registry())
    if (entry.name == name) return entry;
  throw DomainError("unknown catalog name: " + name);
}

}  // namespace

SetExpr SetExpr::catalog(const std::string& name,
                         const std::vector<i64>& params) {
  const CatalogEntry& entry = find_catalog_entry(name);
  if (static_cast<int>(params.size()) != entry.arity)
    throw DomainError("catalog name " + name + " takes " +
                      std::to_string(entry.arity) + " parameter(s), got " +
                      std::to_string(params.size()));
  return entry.build(params);
}

std::vector<std::string> catalog_names(bool parser_visible_only) {
  std::vector<std::string> names;
  for (const auto& entry : catalog_registry())
    if (!parser_visible_only || entry.parser_visible)
      names.push_back(entry.name);
  return names;
}

bool is_block_family_name(const std::string& name) {
  for (const auto& entry : catalog_registry())
    if (entry.name == name) return entry.block_family;
  return false;
}

}  // namespace thinset
