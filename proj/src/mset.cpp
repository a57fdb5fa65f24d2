#include "eps0/mset.hpp"

#include <algorithm>

namespace eps0 {

namespace {

bool sorted_non_increasing(const std::vector<HMultiset>& kids) {
  for (std::size_t i = 0; i + 1 < kids.size(); ++i)
    if (mset_compare(kids[i], kids[i + 1]) == Ordering3::Less) return false;
  return true;
}

}  // namespace

HMultiset HMultiset::of(std::vector<HMultiset> children) {
  if (children.empty()) return {};
  std::sort(children.begin(), children.end(), [](const HMultiset& a, const HMultiset& b) {
    return mset_compare(a, b) == Ordering3::Greater;
  });
  return HMultiset(std::make_shared<std::vector<HMultiset>>(std::move(children)));
}

HMultiset HMultiset::from_sorted(std::vector<HMultiset> children) {
  if (children.empty()) return {};
  assert(sorted_non_increasing(children));
  return HMultiset(std::make_shared<std::vector<HMultiset>>(std::move(children)));
}

Ordering3 mset_compare(const HMultiset& a, const HMultiset& b) {
  detail::DepthGuard guard;
  if (a.identical_to(b)) return Ordering3::Equal;
  auto ka = a.children();
  auto kb = b.children();
  std::size_t n = std::min(ka.size(), kb.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering3 c = mset_compare(ka[i], kb[i]);
    if (c != Ordering3::Equal) return c;
  }
  if (ka.size() == kb.size()) return Ordering3::Equal;
  return ka.size() < kb.size() ? Ordering3::Less : Ordering3::Greater;
}

bool mset_lt(const HMultiset& a, const HMultiset& b) {
  return mset_compare(a, b) == Ordering3::Less;
}

bool operator==(const HMultiset& a, const HMultiset& b) {
  return mset_compare(a, b) == Ordering3::Equal;
}

HMultiset mset_cons(const HMultiset& a, const HMultiset& b) {
  auto kb = b.children();
  std::vector<HMultiset> kids(kb.begin(), kb.end());
  // Keep the non-increasing order: a goes after everything >= it.
  auto pos = std::upper_bound(kids.begin(), kids.end(), a,
                              [](const HMultiset& x, const HMultiset& y) {
                                return mset_compare(x, y) == Ordering3::Greater;
                              });
  kids.insert(pos, a);
  return HMultiset::from_sorted(std::move(kids));
}

std::optional<std::pair<HMultiset, HMultiset>> mset_decompose(const HMultiset& x) {
  auto kids = x.children();
  if (kids.empty()) return std::nullopt;
  std::vector<HMultiset> tail(kids.begin() + 1, kids.end());
  return std::make_pair(kids[0], HMultiset::from_sorted(std::move(tail)));
}

}  // namespace eps0
