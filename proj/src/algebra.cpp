#include "mmpa/algebra.hpp"

#include <deque>
#include <numeric>

namespace mmpa {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> barred_points(const ColoringMap& kappa) {
  std::vector<int> out;
  for (int i = kappa.r(); i < kappa.size(); ++i) out.push_back(i);
  return out;
}

}  // namespace

Composition compose_diagrams(const SetPartition& pi, const SetPartition& nu) {
  int r = pi.size();
  if (nu.size() != r) throw std::invalid_argument("compose_diagrams: size mismatch");
  // Tiers: top 0..r-1, middle r..2r-1, bottom 2r..3r-1.
  UnionFind uf(3 * r);
  auto link = [&](const SetPartition& p, int offset) {
    std::vector<int> first(p.num_blocks(), -1);
    for (int pt = 0; pt < 2 * r; ++pt) {
      int v = offset + pt;
      int b = p.block_of(pt);
      if (first[b] < 0)
        first[b] = v;
      else
        uf.unite(first[b], v);
    }
  };
  link(pi, 0);
  link(nu, r);
  std::vector<int> labels(2 * r);
  std::vector<bool> outer(3 * r, false);
  for (int i = 0; i < r; ++i) {
    labels[i] = uf.find(i);
    labels[r + i] = uf.find(2 * r + i);
    outer[labels[i]] = outer[labels[r + i]] = true;
  }
  int c = 0;
  std::vector<bool> counted(3 * r, false);
  for (int m = r; m < 2 * r; ++m) {
    int root = uf.find(m);
    if (!outer[root] && !counted[root]) {
      counted[root] = true;
      ++c;
    }
  }
  return {SetPartition::from_labels(r, labels), c};
}

PAElement diagram(const SetPartition& pi) { return PAElement(pi, CoeffPoly(1)); }

PAElement pa_multiply(const PAElement& u, const PAElement& v) {
  PAElement out;
  for (const auto& [p, cp] : u.terms())
    for (const auto& [q, cq] : v.terms()) {
      auto comp = compose_diagrams(p, q);
      out.add(comp.diagram, cp * cq * CoeffPoly::x_power(comp.middle_components));
    }
  return out;
}

PAElement idempotent(const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  if (kappa.size() > 5) throw ResourceError("idempotent: |a|+|b| > 5");
  auto group = young_subgroup(kappa);
  mpq_class w(1, static_cast<long>(group.size()));
  PAElement out;
  for (const auto& g : group) out.add(SetPartition::of_permutation(g.perm), CoeffPoly(mpq_class(g.sign * w)));
  return out;
}

int carrier_sign(const SetPartition& pi, const ColoringMap& kappa) {
  auto colored = apply_coloring(kappa, pi);
  if (!colored.valid || !is_restricted(colored.image)) return 0;
  int n = kappa.size();
  SetPartition std_pi = standardize(colored.image, kappa);
  // Match blocks of equal colored type, then letters of equal color in order.
  auto group_blocks = [&](const SetPartition& p) {
    std::map<Multiset, std::vector<std::vector<Letter>>> out;
    for (const auto& b : p.blocks()) {
      Multiset t;
      for (Letter x : b) t.insert(kappa.color(x));
      out[t].push_back(b);
    }
    return out;
  };
  auto gs = group_blocks(std_pi), gp = group_blocks(pi);
  std::vector<int> top(n), bottom(n);
  for (auto& [type, list] : gs) {
    const auto& other = gp.at(type);
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::map<Letter, std::vector<Letter>> xs, ys;
      for (Letter x : list[k]) xs[kappa.color(x)].push_back(x);
      for (Letter y : other[k]) ys[kappa.color(y)].push_back(y);
      for (auto& [c, v] : xs)
        for (std::size_t t = 0; t < v.size(); ++t) {
          auto& m = v[t].underlined ? bottom : top;
          m[v[t].value - 1] = ys[c][t].value - 1;
        }
    }
  }
  Permutation sigma(top), beta(bottom);
  Permutation tau = beta.inverse();
  if (act(sigma, std_pi, tau) != pi) throw std::logic_error("carrier_sign: carrier construction failed");
  auto odd = barred_points(kappa);
  return sigma.sign_on(odd) * tau.sign_on(odd);
}

MPElement project_to_D(const SetPartition& pi, const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  int s = carrier_sign(pi, kappa);
  if (s == 0) return {};
  return MPElement(apply_coloring(kappa, pi).image, CoeffPoly(s));
}

MPElement d_basis(const MultisetPartition& pt) {
  if (!is_restricted(pt)) throw std::invalid_argument("d_basis: partition is not restricted");
  return MPElement(pt, CoeffPoly(1));
}

MPElement mp_unit(const WeakComposition& a, const WeakComposition& b) {
  return project_to_D(SetPartition::identity(a.total() + b.total()), a, b);
}

MPElement mp_multiply(const MPElement& u, const MPElement& v, const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  auto group = young_subgroup(kappa);
  auto id = Permutation::identity(kappa.size());
  mpq_class w(1, static_cast<long>(group.size()));
  MPElement out;
  for (const auto& [pk, cp] : u.terms()) {
    SetPartition pi = standardize(pk, kappa);
    for (const auto& [nk, cn] : v.terms()) {
      SetPartition nu = standardize(nk, kappa);
      CoeffPoly scale = cp * cn;
      for (const auto& g : group) {
        auto comp = compose_diagrams(pi, act(g.perm, nu, id));
        int s = carrier_sign(comp.diagram, kappa);
        if (s == 0) continue;
        out.add(apply_coloring(kappa, comp.diagram).image,
                scale * CoeffPoly::x_power(comp.middle_components, w * g.sign * s));
      }
    }
  }
  return out;
}

PAElement embed(const MultisetPartition& pt, const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  if (!is_restricted(pt)) throw std::invalid_argument("embed: partition is not restricted");
  int n = kappa.size();
  SetPartition start = standardize(pt, kappa);
  // Generators: adjacent transpositions inside each color fiber, on either side.
  std::vector<std::pair<Permutation, int>> gens;
  for (int i = 0; i + 1 < n; ++i)
    if (kappa.color(i + 1) == kappa.color(i + 2))
      gens.push_back({Permutation::transposition(n, i, i + 1), kappa.is_odd(i + 1) ? -1 : 1});
  auto id = Permutation::identity(n);
  std::map<SetPartition, int> orbit{{start, 1}};
  std::deque<SetPartition> queue{start};
  while (!queue.empty()) {
    SetPartition cur = queue.front();
    queue.pop_front();
    int sc = orbit.at(cur);
    for (const auto& [t, sg] : gens) {
      for (const auto& next : {act(t, cur, id), act(id, cur, t)}) {
        auto [it, fresh] = orbit.try_emplace(next, sc * sg);
        if (fresh)
          queue.push_back(next);
        else if (it->second != sc * sg)
          throw std::logic_error("embed: inconsistent orbit sign on a restricted partition");
      }
    }
  }
  mpq_class w(1, static_cast<long>(orbit.size()));
  PAElement out;
  for (const auto& [rho, s] : orbit) out.add(rho, CoeffPoly(mpq_class(w * s)));
  return out;
}

PAElement embed(const MPElement& u, const WeakComposition& a, const WeakComposition& b) {
  PAElement out;
  for (const auto& [k, c] : u.terms()) out.add(embed(k, a, b), c);
  return out;
}

PAElement specialize(const PAElement& u, long n) {
  PAElement out;
  for (const auto& [k, c] : u.terms()) out.add(k, CoeffPoly(c.evaluate(n)));
  return out;
}

MPElement specialize(const MPElement& u, long n) {
  MPElement out;
  for (const auto& [k, c] : u.terms()) out.add(k, CoeffPoly(c.evaluate(n)));
  return out;
}

}  // namespace mmpa
