#include "mmpa/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "mmpa/linalg.hpp"

namespace mmpa {

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Beta set of lambda with len beads.
std::vector<int> beta_set(const Shape& lambda, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  return beta;
}

std::int64_t mn_beta(std::vector<int> beta, const std::vector<int>& mu, std::size_t k,
                     std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (k == mu.size()) return 1;
  auto key = std::make_pair(beta, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t total = 0;
  int h = mu[k];
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int to = beta[i] - h;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    // Leg length: beads strictly between to and beta[i].
    int between = 0;
    for (int x : beta)
      if (x > to && x < beta[i]) ++between;
    auto next = beta;
    next[i] = to;
    std::sort(next.rbegin(), next.rend());
    std::int64_t v = mn_beta(next, mu, k + 1, memo);
    total += (between % 2 ? -v : v);
  }
  memo.emplace(key, total);
  return total;
}

void check_n(int n) {
  if (n > 8) throw ResourceError("oracle: n > 8");
}

}  // namespace

std::int64_t mn_character(const Shape& lambda, const Shape& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: size mismatch");
  check_n(lambda.size());
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  return mn_beta(beta_set(lambda, lambda.rows()), mu.parts(), 0, memo);
}

std::int64_t class_size(const Shape& mu) {
  std::int64_t z = 1;
  std::map<int, int> counts;
  for (int p : mu.parts()) ++counts[p];
  for (auto [p, m] : counts) {
    for (int i = 0; i < m; ++i) z *= p;
    z *= factorial(m);
  }
  return factorial(mu.size()) / z;
}

std::int64_t hook_dimension(const Shape& lambda) {
  std::int64_t hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int leg = 0;
      while (i + leg + 1 < lambda.rows() && lambda[i + leg + 1] > j) ++leg;
      hooks *= (lambda[i] - j - 1) + leg + 1;
    }
  return factorial(lambda.size()) / hooks;
}

namespace {

void multisets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out, bool strict) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    multisets(n, k - 1, strict ? i + 1 : i, cur, out, strict);
    cur.pop_back();
  }
}

Permutation of_cycle_type(const Shape& mu) {
  std::vector<int> img(mu.size());
  int start = 0;
  for (int p : mu.parts()) {
    for (int i = 0; i < p; ++i) img[start + i] = start + (i + 1) % p;
    start += p;
  }
  return Permutation(img);
}

}  // namespace

std::vector<GradedMonomial> graded_basis(int n, const WeakComposition& a, const WeakComposition& b) {
  std::vector<std::vector<std::vector<int>>> choices;
  for (int k : a.parts()) {
    std::vector<std::vector<int>> opts;
    std::vector<int> cur;
    multisets(n, k, 0, cur, opts, false);
    choices.push_back(opts);
  }
  for (int k : b.parts()) {
    std::vector<std::vector<int>> opts;
    std::vector<int> cur;
    multisets(n, k, 0, cur, opts, true);
    choices.push_back(opts);
  }
  std::vector<GradedMonomial> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) return out;
  while (true) {
    GradedMonomial m;
    for (std::size_t j = 0; j < choices.size(); ++j)
      (j < a.parts().size() ? m.x : m.theta).push_back(choices[j][idx[j]]);
    out.push_back(m);
    if (out.size() > 100000) throw ResourceError("graded_basis: more than 100000 monomials");
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<GradedMonomial, int> act_on_monomial(const Permutation& g, const GradedMonomial& m) {
  GradedMonomial out;
  int sign = 1;
  for (auto col : m.x) {
    for (int& i : col) i = g(i);
    std::sort(col.begin(), col.end());
    out.x.push_back(col);
  }
  for (auto col : m.theta) {
    for (int& i : col) i = g(i);
    for (std::size_t p = 0; p < col.size(); ++p)
      for (std::size_t q = p + 1; q < col.size(); ++q)
        if (col[p] > col[q]) sign = -sign;
    std::sort(col.begin(), col.end());
    out.theta.push_back(col);
  }
  return {out, sign};
}

std::int64_t graded_character(const Permutation& g, int n, const WeakComposition& a, const WeakComposition& b) {
  std::int64_t trace = 0;
  for (const auto& m : graded_basis(n, a, b)) {
    auto [img, s] = act_on_monomial(g, m);
    if (img == m) trace += s;
  }
  return trace;
}

std::map<Shape, std::int64_t> graded_piece_multiplicities(int n, const WeakComposition& a, const WeakComposition& b) {
  check_n(n);
  if (a.total() + b.total() > 3) throw ResourceError("graded_piece_multiplicities: |a|+|b| > 3");
  auto classes = partitions_of(n);
  std::vector<std::int64_t> chi;
  for (const auto& mu : classes) chi.push_back(graded_character(of_cycle_type(mu), n, a, b));
  std::map<Shape, std::int64_t> out;
  for (const auto& lambda : classes) {
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) sum += class_size(classes[c]) * chi[c] * mn_character(lambda, classes[c]);
    if (sum % factorial(n) != 0) throw std::logic_error("graded_piece_multiplicities: non-integral inner product");
    out[lambda] = sum / factorial(n);
  }
  return out;
}

long commutant_dimension(int n, const WeakComposition& a, const WeakComposition& b) {
  check_n(n);
  auto basis = graded_basis(n, a, b);
  long d = static_cast<long>(basis.size());
  if (d > 64) throw ResourceError("commutant_dimension: graded piece dimension above 64");
  std::map<GradedMonomial, int> index;
  for (const auto& m : basis) index.emplace(m, static_cast<int>(index.size()));
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::transposition(n, 0, 1));
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.push_back(Permutation(cyc));
  }
  RowEchelon ech;
  for (const auto& g : gens) {
    // A e_j = s_j e_{g(j)}.
    std::vector<int> img(d), sgn(d), pre(d);
    for (int j = 0; j < d; ++j) {
      auto [m, s] = act_on_monomial(g, basis[j]);
      img[j] = index.at(m);
      sgn[j] = s;
      pre[img[j]] = j;
    }
    // (XA)_{ij} = s_j X_{i,g(j)}, (AX)_{ij} = s_{g^-1 i} X_{g^-1 i, j}.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        SparseRow row;
        row[i * d + img[j]] += sgn[j];
        row[pre[i] * d + j] -= sgn[pre[i]];
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
        if (!row.empty()) ech.insert(row);
      }
  }
  return d * d - ech.rank();
}

}  // namespace mmpa
