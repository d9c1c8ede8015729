#include "thinset/prefix.hpp"

#include <algorithm>

#include "thinset/errors.hpp"

namespace thinset {

Prefix::Prefix(i64 horizon, std::vector<i64> elements, std::string source)
    : horizon_(horizon), elements_(std::move(elements)),
      source_(std::move(source)) {
  if (horizon_ < 1) throw DomainError("prefix horizon must be >= 1");
  i64 prev = 0;
  for (i64 e : elements_) {
    if (e <= prev)
      throw DomainError("prefix elements must be strictly increasing and >= 1");
    if (e > horizon_)
      throw DomainError("prefix element " + std::to_string(e) +
                        " exceeds horizon " + std::to_string(horizon_));
    prev = e;
  }
}

bool Prefix::contains(i64 n) const {
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

Prefix Prefix::clipped(i64 new_horizon) const {
  if (new_horizon > horizon_)
    throw DomainError("clipped horizon exceeds original");
  auto end = std::upper_bound(elements_.begin(), elements_.end(), new_horizon);
  return Prefix(new_horizon, std::vector<i64>(elements_.begin(), end), source_);
}

namespace {

i64 common_horizon(const Prefix& a, const Prefix& b) {
  if (a.horizon() != b.horizon())
    throw DomainError("prefix horizons differ: " + std::to_string(a.horizon()) +
                      " vs " + std::to_string(b.horizon()));
  return a.horizon();
}

}  // namespace

Prefix Prefix::merged(const Prefix& a, const Prefix& b) {
  const i64 horizon = common_horizon(a, b);
  std::vector<i64> out;
  out.reserve(a.elements().size() + b.elements().size());
  std::set_union(a.elements().begin(), a.elements().end(),
                 b.elements().begin(), b.elements().end(),
                 std::back_inserter(out));
  return Prefix(horizon, std::move(out));
}

Prefix Prefix::intersected(const Prefix& a, const Prefix& b) {
  const i64 horizon = common_horizon(a, b);
  std::vector<i64> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Prefix(horizon, std::move(out));
}

Prefix Prefix::subtracted(const Prefix& a, const Prefix& b) {
  const i64 horizon = common_horizon(a, b);
  std::vector<i64> out;
  std::set_difference(a.elements().begin(), a.elements().end(),
                      b.elements().begin(), b.elements().end(),
                      std::back_inserter(out));
  return Prefix(horizon, std::move(out));
}

i64 count_upto(const Prefix& prefix, i64 n) {
  if (n < 1 || n > prefix.horizon())
    throw DomainError("count_upto: n out of range [1, horizon]");
  const auto& elems = prefix.elements();
  return std::upper_bound(elems.begin(), elems.end(), n) - elems.begin();
}

i64 window_count(const Prefix& prefix, i64 h, i64 k) {
  if (h < 0 || k < 1) throw DomainError("window_count: need h >= 0, k >= 1");
  if (h + k > prefix.horizon())
    throw DomainError("window_count: window [h+1, h+k] exceeds horizon");
  const auto& elems = prefix.elements();
  const auto lo = std::upper_bound(elems.begin(), elems.end(), h);
  const auto hi = std::upper_bound(elems.begin(), elems.end(), h + k);
  return hi - lo;
}

GapSequence gap_sequence(const Prefix& prefix) {
  const auto& elems = prefix.elements();
  if (elems.size() < 2)
    throw DomainError("gap_sequence requires at least two elements");
  GapSequence result;
  result.gaps.reserve(elems.size() - 1);
  for (std::size_t i = 1; i < elems.size(); ++i)
    result.gaps.push_back(elems[i] - elems[i - 1]);
  return result;
}

}  // namespace thinset
