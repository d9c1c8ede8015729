#include "thinset/density.hpp"

#include <algorithm>
#include <cmath>

#include "thinset/errors.hpp"

namespace thinset {

DensityProfile density_profile(const Prefix& prefix,
                               std::vector<i64> checkpoints,
                               double tail_fraction) {
  if (checkpoints.empty()) throw DomainError("empty checkpoint list");
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw DomainError("checkpoints must be sorted");
  if (checkpoints.front() < 1 || checkpoints.back() > prefix.horizon())
    throw DomainError("checkpoints must lie in [1, horizon]");
  if (tail_fraction <= 0.0 || tail_fraction > 1.0)
    throw DomainError("tail fraction must lie in (0, 1]");

  DensityProfile profile;
  profile.checkpoints = std::move(checkpoints);
  profile.ratios.reserve(profile.checkpoints.size());
  for (i64 n : profile.checkpoints)
    profile.ratios.push_back(ratio(count_upto(prefix, n), n));

  const std::size_t len = profile.checkpoints.size();
  const auto tail_count = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(static_cast<double>(len) * tail_fraction)));
  profile.tail_start = len - tail_count;
  profile.running_liminf_estimate = profile.ratios[profile.tail_start];
  profile.running_limsup_estimate = profile.ratios[profile.tail_start];
  for (std::size_t i = profile.tail_start; i < len; ++i) {
    profile.running_liminf_estimate =
        std::min(profile.running_liminf_estimate, profile.ratios[i]);
    profile.running_limsup_estimate =
        std::max(profile.running_limsup_estimate, profile.ratios[i]);
  }
  return profile;
}

std::vector<i64> doubling_checkpoints(i64 horizon, i64 first) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  std::vector<i64> points;
  for (i64 n = first; n < horizon && n > 0; n *= 2) points.push_back(n);
  points.push_back(horizon);
  return points;
}

namespace {

struct ResidueAtom {
  Int modulus;
  Int residue;  // in [1, modulus]
};

Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Int x1, y1;
  const Int g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Intersection of two residue classes: empty or a single residue class.
std::optional<ResidueAtom> crt(const ResidueAtom& a, const ResidueAtom& b) {
  Int x, y;
  const Int g = egcd(a.modulus, b.modulus, x, y);
  if ((b.residue - a.residue) % g != 0) return std::nullopt;
  const Int lcm = a.modulus / g * b.modulus;
  const Int step = (b.residue - a.residue) / g % (b.modulus / g);
  Int r = a.residue + a.modulus * (step * x % (b.modulus / g));
  r %= lcm;
  if (r <= 0) r += lcm;
  return ResidueAtom{lcm, r};
}

// Flattens a union tree into residue atoms, tolerating members of exact
// density zero. Returns false when the union's density is not decidable here.
bool collect_union_atoms(const SetExpr& expr, std::vector<ResidueAtom>& atoms) {
  using Kind = SetExpr::Kind;
  switch (expr.kind()) {
    case Kind::Union:
      for (const auto& child : expr.children())
        if (!collect_union_atoms(child, atoms)) return false;
      return true;
    case Kind::ResidueClass:
      atoms.push_back(ResidueAtom{Int(expr.modulus()), Int(expr.residue())});
      return true;
    default: {
      const auto d = exact_density(expr);
      return d && *d == 0;
    }
  }
}

std::optional<Rational> union_density(const SetExpr& expr) {
  std::vector<ResidueAtom> atoms;
  if (!collect_union_atoms(expr, atoms)) return std::nullopt;
  if (atoms.empty()) return Rational(0);
  if (atoms.size() > 16) return std::nullopt;

  // Inclusion-exclusion over the residue-class members; zero-density members
  // cannot move the total.
  Rational total(0);
  const std::size_t n = atoms.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::optional<ResidueAtom> meet;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      meet = meet ? crt(*meet, atoms[i]) : std::optional<ResidueAtom>(atoms[i]);
      if (!meet) break;
    }
    if (!meet) continue;
    const Rational term = ratio(Int(1), meet->modulus);
    if (__builtin_popcountll(mask) % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace

std::optional<Rational> exact_density(const SetExpr& expr) {
  using Kind = SetExpr::Kind;
  switch (expr.kind()) {
    case Kind::Explicit:
      return Rational(0);
    case Kind::ResidueClass:
      return ratio(1, expr.modulus());
    case Kind::Generator:
    case Kind::BlockFamily:
      if (const Certificate* cert = expr.certificate(); cert && cert->density)
        return cert->density;
      return std::nullopt;
    case Kind::Union:
      return union_density(expr);
    case Kind::Intersection: {
      const auto& left = expr.children()[0];
      const auto& right = expr.children()[1];
      const auto dl = exact_density(left);
      const auto dr = exact_density(right);
      if ((dl && *dl == 0) || (dr && *dr == 0)) return Rational(0);
      if (left.kind() == Kind::ResidueClass &&
          right.kind() == Kind::ResidueClass) {
        const auto meet =
            crt(ResidueAtom{Int(left.modulus()), Int(left.residue())},
                ResidueAtom{Int(right.modulus()), Int(right.residue())});
        if (!meet) return Rational(0);
        return ratio(Int(1), meet->modulus);
      }
      return std::nullopt;
    }
    case Kind::Difference: {
      const auto& left = expr.children()[0];
      const auto& right = expr.children()[1];
      const auto dl = exact_density(left);
      if (!dl) return std::nullopt;
      if (*dl == 0) return Rational(0);
      const auto dr = exact_density(right);
      if (dr && *dr == 0) return dl;
      if (left.kind() == Kind::ResidueClass &&
          right.kind() == Kind::ResidueClass) {
        const auto meet =
            crt(ResidueAtom{Int(left.modulus()), Int(left.residue())},
                ResidueAtom{Int(right.modulus()), Int(right.residue())});
        if (!meet) return dl;
        return *dl - ratio(Int(1), meet->modulus);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

void check_window_args(const Prefix& prefix, i64 k, i64 burn_in) {
  if (k < 1) throw DomainError("window length must be >= 1");
  if (burn_in < 0) throw DomainError("burn-in must be >= 0");
  if (burn_in + k > prefix.horizon())
    throw DomainError("window of length " + std::to_string(k) +
                      " with burn-in " + std::to_string(burn_in) +
                      " exceeds horizon");
}

i64 count_in(const std::vector<i64>& elems, i64 lo, i64 hi) {
  // Elements in (lo, hi].
  const auto a = std::upper_bound(elems.begin(), elems.end(), lo);
  const auto b = std::upper_bound(elems.begin(), elems.end(), hi);
  return b - a;
}

}  // namespace

i64 max_window_count(const Prefix& prefix, i64 k, i64 burn_in) {
  check_window_args(prefix, k, burn_in);
  const auto& elems = prefix.elements();
  const i64 lo = burn_in, hi = prefix.horizon() - k;
  i64 best = count_in(elems, lo, lo + k);
  for (i64 e : elems) {
    if (e < burn_in + k) continue;  // right-aligned window would start early
    const i64 h = std::min(e - k, hi);
    best = std::max(best, count_in(elems, h, h + k));
  }
  return best;
}

i64 min_window_count(const Prefix& prefix, i64 k, i64 burn_in) {
  check_window_args(prefix, k, burn_in);
  const auto& elems = prefix.elements();
  const i64 lo = burn_in, hi = prefix.horizon() - k;
  i64 best = std::min(count_in(elems, lo, lo + k), count_in(elems, hi, hi + k));
  for (i64 e : elems) {
    if (e <= lo || e > hi) continue;
    best = std::min(best, count_in(elems, e, e + k));
  }
  return best;
}

UniformDensityProfile uniform_density_profile(const Prefix& prefix,
                                              std::vector<i64> k_values,
                                              i64 burn_in) {
  if (k_values.empty()) throw DomainError("empty window length list");
  std::sort(k_values.begin(), k_values.end());
  k_values.erase(std::unique(k_values.begin(), k_values.end()), k_values.end());
  check_window_args(prefix, k_values.back(), burn_in);

  UniformDensityProfile profile;
  profile.burn_in = burn_in;
  profile.k_values = std::move(k_values);
  for (i64 k : profile.k_values) {
    profile.sup_window_avg.push_back(ratio(max_window_count(prefix, k, burn_in), k));
    profile.inf_window_avg.push_back(ratio(min_window_count(prefix, k, burn_in), k));
  }
  for (std::size_t i = 1; i < profile.sup_window_avg.size(); ++i)
    if (profile.sup_window_avg[i] > profile.sup_window_avg[i - 1])
      profile.sup_nonincreasing = false;
  return profile;
}

}  // namespace thinset
