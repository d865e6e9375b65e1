#include "mmpa/super_rsk.hpp"

#include <algorithm>
#include <string>

namespace mmpa {

std::strong_ordering biletter_cmp(const Biletter& x, const Biletter& y) {
  if (auto c = x.top <=> y.top; c != 0) return c;
  int px = x.bottom.parity(), py = y.bottom.parity();
  if (px != py) return px == 1 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (px == 0) return x.bottom <=> y.bottom;
  return y.bottom <=> x.bottom;
}

bool is_ordered(const Biword& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (biletter_cmp(w[i], w[i + 1]) > 0) return false;
  return true;
}

bool is_restricted(const Biword& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if ((w[i].top.parity() + w[i].bottom.parity()) % 2 == 0) continue;
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j]) return false;
  }
  return true;
}

Biword sorted(Biword w) {
  std::stable_sort(w.begin(), w.end(), [](const Biletter& x, const Biletter& y) { return biletter_cmp(x, y) < 0; });
  return w;
}

namespace {

using Rows = std::vector<std::vector<Multiset>>;

// Row letters bump row-wise in mode 0 when even, in mode 1 when odd.
bool row_type(const Multiset& v, int mode) { return ((v.parity() ^ mode) & 1) == 0; }

int col_height(const Rows& t, int c) {
  int h = 0;
  while (h < static_cast<int>(t.size()) && static_cast<int>(t[h].size()) > c) ++h;
  return h;
}

bool bumps(const Multiset& entry, const Multiset& v, int mode) { return mode == 0 ? entry > v : entry >= v; }
bool unbumps(const Multiset& entry, const Multiset& v, int mode) { return mode == 0 ? entry < v : entry <= v; }

}  // namespace

SuperTableau insert(const SuperTableau& t, const SuperLetter& a, int mode, Cell* created) {
  if (a.empty()) throw SrskError("cannot insert an empty letter");
  Rows rows = t.rows();
  Multiset v = a;
  bool in_row = row_type(v, mode);
  int line = 0;
  while (true) {
    if (in_row) {
      if (line == static_cast<int>(rows.size())) rows.emplace_back();
      auto& row = rows[line];
      auto it = std::find_if(row.begin(), row.end(), [&](const Multiset& e) { return bumps(e, v, mode); });
      if (it == row.end()) {
        if (line > 0 && row.size() >= rows[line - 1].size()) throw SrskError("insertion left the shape");
        row.push_back(v);
        if (created) *created = {line, static_cast<int>(row.size()) - 1};
        break;
      }
      int col = static_cast<int>(it - row.begin());
      std::swap(*it, v);
      in_row = row_type(v, mode);
      line = in_row ? line + 1 : col + 1;
    } else {
      int h = col_height(rows, line);
      int i = 0;
      while (i < h && !bumps(rows[i][line], v, mode)) ++i;
      if (i == h) {
        if (h == static_cast<int>(rows.size())) rows.emplace_back();
        if (static_cast<int>(rows[h].size()) != line || (h > 0 && static_cast<int>(rows[h - 1].size()) <= line))
          throw SrskError("insertion left the shape");
        rows[h].push_back(v);
        if (created) *created = {h, line};
        break;
      }
      std::swap(rows[i][line], v);
      int col = line;
      in_row = row_type(v, mode);
      line = in_row ? i + 1 : col + 1;
    }
  }
  return Tableau(rows);
}

std::pair<SuperTableau, SuperLetter> uninsert(const SuperTableau& t, Cell corner, int mode) {
  Rows rows = t.rows();
  int r = corner.row, c = corner.col;
  if (r >= static_cast<int>(rows.size()) || c != static_cast<int>(rows[r].size()) - 1 ||
      (r + 1 < static_cast<int>(rows.size()) && static_cast<int>(rows[r + 1].size()) > c))
    throw SrskError("reverse bump: cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not a corner");
  Multiset v = rows[r][c];
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  bool in_row = row_type(v, mode);
  int line = in_row ? r : c;
  while (line > 0) {
    if (in_row) {
      auto& row = rows[line - 1];
      int j = static_cast<int>(row.size()) - 1;
      while (j >= 0 && !unbumps(row[j], v, mode)) --j;
      if (j < 0)
        throw SrskError("reverse bump: no entry to evict in row " + std::to_string(line));
      std::swap(row[j], v);
      in_row = row_type(v, mode);
      line = in_row ? line - 1 : j;
    } else {
      int h = col_height(rows, line - 1);
      int i = h - 1;
      while (i >= 0 && !unbumps(rows[i][line - 1], v, mode)) --i;
      if (i < 0)
        throw SrskError("reverse bump: no entry to evict in column " + std::to_string(line));
      std::swap(rows[i][line - 1], v);
      int col = line - 1;
      in_row = row_type(v, mode);
      line = in_row ? i : col;
    }
  }
  return {Tableau(rows), v};
}

std::pair<SuperTableau, SuperTableau> srsk(const Biword& w) {
  if (!is_ordered(w)) throw SrskError("srsk: biword is not ordered");
  if (!is_restricted(w)) throw SrskError("srsk: biword repeats a mixed biletter");
  Tableau p, q;
  for (const auto& bl : w) {
    Cell cell;
    p = insert(p, bl.bottom, bl.top.parity(), &cell);
    auto rows = q.rows();
    if (cell.row == static_cast<int>(rows.size())) rows.emplace_back();
    rows[cell.row].push_back(bl.top);
    q = Tableau(rows);
  }
  return {p, q};
}

Biword srsk_inverse(const SuperTableau& p, const SuperTableau& q) {
  if (p.shape() != q.shape()) throw SrskError("srsk_inverse: shapes differ");
  if (!is_ssst(p) || !is_ssst(q)) throw SrskError("srsk_inverse: input is not a pair of supertableaux");
  Biword rev;
  Tableau pp = p;
  Rows qr = q.rows();
  int step = 0;
  while (!qr.empty()) {
    ++step;
    // Last cell added: the largest Q entry, rightmost if even, topmost if odd.
    Multiset mx;
    for (const auto& row : qr)
      for (const auto& e : row) mx = std::max(mx, e);
    Cell cell{-1, -1};
    for (int i = 0; i < static_cast<int>(qr.size()); ++i)
      for (int j = 0; j < static_cast<int>(qr[i].size()); ++j) {
        if (qr[i][j] != mx) continue;
        bool better = cell.row < 0 || (mx.parity() == 0 ? j > cell.col : i > cell.row);
        if (better) cell = {i, j};
      }
    if (cell.col != static_cast<int>(qr[cell.row].size()) - 1 ||
        (cell.row + 1 < static_cast<int>(qr.size()) && static_cast<int>(qr[cell.row + 1].size()) > cell.col))
      throw SrskError("srsk_inverse step " + std::to_string(step) + ": last Q cell is not a corner");
    qr[cell.row].pop_back();
    if (qr[cell.row].empty()) qr.pop_back();
    try {
      auto [np, v] = uninsert(pp, cell, mx.parity());
      pp = np;
      rev.push_back({mx, v});
    } catch (const SrskError& e) {
      throw SrskError("srsk_inverse step " + std::to_string(step) + ": " + e.what());
    }
  }
  Biword w(rev.rbegin(), rev.rend());
  if (!is_ordered(w) || !is_restricted(w) || srsk(w) != std::make_pair(p, q))
    throw SrskError("srsk_inverse: pair is not in the image of srsk");
  return w;
}

}  // namespace mmpa
