#include "mmpa/smrsk.hpp"

#include <algorithm>

namespace mmpa {

Biword biword_of(const MultisetPartition& pt) {
  if (!is_restricted(pt)) throw std::invalid_argument("biword_of: partition is not restricted");
  Biword w;
  for (const auto& b : propagating_blocks(pt)) w.push_back({b.part(false), b.part(true).with_underline(false)});
  return sorted(std::move(w));
}

std::pair<Tableau, Tableau> smrsk(const MultisetPartition& pt, int n) {
  Profile prof = profile_of(pt.ground());
  int total = prof.a.total() + prof.b.total();
  if (n < 2 * total) throw std::invalid_argument("smrsk: n must be at least 2(|a|+|b|)");
  auto [p, q] = srsk(biword_of(pt));
  int mu = p.size();
  std::vector<Multiset> top, bottom;
  for (const auto& b : non_propagating_blocks(pt)) {
    if (b.has_underlined())
      bottom.push_back(b.with_underline(false));
    else
      top.push_back(b);
  }
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  auto build = [&](const Tableau& upper, const std::vector<Multiset>& row1_blocks) {
    std::vector<Multiset> row1(n - mu - static_cast<int>(row1_blocks.size()));
    row1.insert(row1.end(), row1_blocks.begin(), row1_blocks.end());
    std::vector<std::vector<Multiset>> rows{row1};
    for (const auto& r : upper.rows()) rows.push_back(r);
    return Tableau(rows);
  };
  // P holds the underlined halves of the propagating blocks, so it takes the
  // underlined-only blocks; Q takes the non-underlined ones.
  return {build(p, bottom), build(q, top)};
}

MultisetPartition smrsk_inverse(const Tableau& p, const Tableau& q, int n) {
  if (p.shape() != q.shape()) throw std::invalid_argument("smrsk_inverse: shapes differ");
  if (p.size() != n) throw std::invalid_argument("smrsk_inverse: shape is not a partition of n");
  if (!classify(p).ssmt || !classify(q).ssmt) throw std::invalid_argument("smrsk_inverse: input is not SSMT");
  auto strip = [](const Tableau& t, std::vector<Multiset>& row1) {
    std::vector<std::vector<Multiset>> rows;
    for (int i = 0; i < t.num_rows(); ++i) {
      if (i == 0) {
        for (const auto& c : t.rows()[0])
          if (!c.empty()) row1.push_back(c);
      } else {
        rows.push_back(t.rows()[i]);
      }
    }
    return Tableau(rows);
  };
  std::vector<Multiset> top, bottom;
  Tableau pu = strip(p, bottom), qu = strip(q, top);
  std::vector<Multiset> blocks = bottom;
  for (auto& b : blocks) b = b.with_underline(true);
  blocks.insert(blocks.end(), top.begin(), top.end());
  for (const auto& bl : srsk_inverse(pu, qu)) blocks.push_back(bl.top + bl.bottom.with_underline(true));
  MultisetPartition pt(blocks);
  if (!is_restricted(pt)) throw std::invalid_argument("smrsk_inverse: result is not restricted");
  return pt;
}

}  // namespace mmpa
