#include "thinset/bw.hpp"

#include <algorithm>
#include <optional>

#include "thinset/errors.hpp"

namespace thinset {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw DomainError("bit string entries must be 0 or 1");
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else
      throw DomainError(std::string("bit strings contain only 0/1, got '") +
                        c + "'");
  }
  return BitString(std::move(bits));
}

BitString BitString::prefix(i64 length) const {
  if (length < 0 || length > size())
    throw DomainError("bit string prefix length out of range");
  return BitString(std::vector<std::uint8_t>(
      bits_.begin(), bits_.begin() + static_cast<std::size_t>(length)));
}

BitString BitString::extended(int bit) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.push_back(static_cast<std::uint8_t>(bit));
  return BitString(std::move(bits));
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out.empty() ? "()" : out;
}

i64 BitString::offset_value() const {
  i64 value = 0;
  for (std::size_t j = 0; j < bits_.size(); ++j)
    if (bits_[j]) value += i64{1} << j;
  return value;
}

SetExpr tree_node(const BitString& s) {
  if (s.size() > 40) throw DomainError("tree depth limited to 40");
  const i64 modulus = i64{1} << s.size();
  const i64 offset = s.offset_value();
  return SetExpr::residue_class(modulus, modulus - offset);
}

TreeFamily dyadic_family() {
  return TreeFamily{[](const BitString& s) { return tree_node(s); }};
}

namespace {

void walk_strings(i64 depth, const std::function<void(const BitString&)>& fn) {
  std::vector<BitString> level{BitString{}};
  fn(level.front());
  for (i64 d = 1; d <= depth; ++d) {
    std::vector<BitString> next;
    next.reserve(level.size() * 2);
    for (const BitString& s : level) {
      next.push_back(s.extended(0));
      next.push_back(s.extended(1));
      fn(next[next.size() - 2]);
      fn(next[next.size() - 1]);
    }
    level = std::move(next);
  }
}

std::optional<i64> first_difference(const std::vector<i64>& a,
                                    const std::vector<i64>& b) {
  const auto mismatch = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  if (mismatch.first == a.end() && mismatch.second == b.end())
    return std::nullopt;
  if (mismatch.first == a.end()) return *mismatch.second;
  if (mismatch.second == b.end()) return *mismatch.first;
  return std::min(*mismatch.first, *mismatch.second);
}

}  // namespace

TreeConditionReport verify_tree_conditions(const TreeFamily& family, i64 depth,
                                           i64 horizon) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  if (horizon < (i64{1} << std::min<i64>(depth, 40)))
    throw DomainError("horizon must be at least 2^depth");

  TreeConditionReport report;
  report.depth = depth;
  report.horizon = horizon;

  const Prefix omega = enumerate_upto(SetExpr::residue_class(1, 1), horizon);
  const Prefix root = enumerate_upto(family.node(BitString{}), horizon);
  ++report.nodes_checked;
  if (root.elements() != omega.elements()) {
    report.all_pass = false;
    report.violations.push_back(
        {"root-covers", "()",
         first_difference(root.elements(), omega.elements()).value_or(0)});
  }

  walk_strings(depth - 1, [&](const BitString& s) {
    if (s.size() > depth - 1) return;
    const Prefix parent = enumerate_upto(family.node(s), horizon);
    const Prefix left = enumerate_upto(family.node(s.extended(0)), horizon);
    const Prefix right = enumerate_upto(family.node(s.extended(1)), horizon);
    report.nodes_checked += 2;

    const Prefix joined = Prefix::merged(left, right);
    if (joined.elements() != parent.elements()) {
      report.all_pass = false;
      report.violations.push_back(
          {"children-cover", s.to_string(),
           first_difference(joined.elements(), parent.elements()).value_or(0)});
    }
    const Prefix overlap = Prefix::intersected(left, right);
    if (!overlap.empty()) {
      report.all_pass = false;
      report.violations.push_back(
          {"children-disjoint", s.to_string(), overlap.elements().front()});
    }
  });
  return report;
}

std::vector<BranchStep> branch_chain(const BitString& x) {
  std::vector<BranchStep> steps;
  steps.reserve(static_cast<std::size_t>(x.size()));
  for (i64 j = 0; j < x.size(); ++j) {
    const BitString here = x.prefix(j);
    const int taken = x.bit(j);
    steps.push_back(BranchStep{tree_node(here),
                               tree_node(here.extended(1 - taken))});
  }
  return steps;
}

Prefix build_ar_set(const BitString& x, const std::vector<i64>& segment_lengths,
                    i64 horizon) {
  if (segment_lengths.empty()) throw DomainError("need at least one segment");
  if (static_cast<i64>(segment_lengths.size()) > x.size())
    throw DomainError("more segments than branch depth");
  for (std::size_t i = 0; i < segment_lengths.size(); ++i) {
    if (segment_lengths[i] < 1)
      throw DomainError("segment lengths must be >= 1");
    if (i > 0 && segment_lengths[i] <= segment_lengths[i - 1])
      throw DomainError("segment lengths must be strictly increasing");
  }

  const std::vector<BranchStep> chain = branch_chain(x);
  std::vector<i64> elements;
  for (std::size_t k = 0; k < segment_lengths.size(); ++k) {
    const SetExpr& difference = chain[k].difference;
    const i64 step = difference.modulus();
    const i64 first = difference.residue();
    const i64 want = segment_lengths[k];
    const i64 last = first + (want - 1) * step;
    if (last > horizon)
      throw DomainError("horizon too small: segment " + std::to_string(k) +
                        " needs elements up to " + std::to_string(last));
    for (i64 v = first; v <= last; v += step) elements.push_back(v);
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  return Prefix(horizon, std::move(elements),
                "ar-set along " + x.to_string());
}

Case1Result case1_witness(const TreeFamily& family, const BitString& x,
                          i64 max_gap, i64 horizon) {
  if (max_gap < 1) throw DomainError("max gap must be >= 1");
  if (x.size() < 1) throw DomainError("branch must have positive length");

  Case1Result result;
  result.runs.push_back({1});
  i64 floor = 1;  // runs must start strictly above the previous maximum

  for (i64 j = 1; j <= x.size(); ++j) {
    const Prefix prefix = enumerate_upto(family.node(x.prefix(j)), horizon);
    const auto& elems = prefix.elements();

    const std::size_t base =
        std::upper_bound(elems.begin(), elems.end(), floor) - elems.begin();
    std::optional<std::size_t> end_index;
    std::size_t run_begin = base;
    for (std::size_t i = base; i < elems.size(); ++i) {
      if (i > base && elems[i] - elems[i - 1] > max_gap) run_begin = i;
      if (static_cast<i64>(i - run_begin + 1) >= j) {
        end_index = i;
        break;
      }
    }
    if (!end_index)
      throw DomainError("no run of " + std::to_string(j) +
                        " members of node " + x.prefix(j).to_string() +
                        " with gaps <= " + std::to_string(max_gap) +
                        " fits below horizon " + std::to_string(horizon));

    const std::size_t start = *end_index - static_cast<std::size_t>(j) + 1;
    std::vector<i64> run(elems.begin() + static_cast<std::ptrdiff_t>(start),
                         elems.begin() + static_cast<std::ptrdiff_t>(*end_index + 1));
    floor = run.back();
    result.runs.push_back(std::move(run));
  }

  std::vector<i64> all;
  for (const auto& run : result.runs)
    all.insert(all.end(), run.begin(), run.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  result.witness =
      Prefix(horizon, std::move(all), "case1 witness along " + x.to_string());
  return result;
}

}  // namespace thinset
