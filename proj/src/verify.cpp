#include "mmpa/verify.hpp"

#include <functional>
#include <map>

#include "mmpa/algebra.hpp"
#include "mmpa/oracle.hpp"
#include "mmpa/symfun.hpp"
#include "mmpa/text.hpp"

namespace mmpa {

namespace {

void compositions_of(int total, int max_part, std::vector<int>& cur, std::vector<WeakComposition>& out) {
  if (total == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    compositions_of(total - p, max_part, cur, out);
    cur.pop_back();
  }
}

VerifyRow row(bool pass, std::string label, std::string detail) { return {pass, std::move(label), std::move(detail)}; }

std::vector<VerifyRow> smrsk_dims(int max) {
  std::vector<VerifyRow> out;
  for (const auto& [a, b] : profiles_up_to(max)) {
    int n = 2 * (a.total() + b.total());
    long restricted = static_cast<long>(enumerate_restricted(a, b).size());
    long sum = 0;
    for (const auto& [lambda, ts] : ssmt_by_shape(a, b, n)) sum += static_cast<long>(ts.size() * ts.size());
    out.push_back(row(restricted == sum, profile_label(a, b),
                      "restricted=" + std::to_string(restricted) + " sum_sq=" + std::to_string(sum)));
  }
  return out;
}

std::vector<VerifyRow> mp_axioms(int max) {
  std::vector<VerifyRow> out;
  for (const auto& [a, b] : profiles_up_to(max)) {
    auto basis = enumerate_restricted(a, b);
    MPElement unit = mp_unit(a, b);
    long failures = 0, checks = 0;
    for (const auto& p : basis) {
      MPElement u = d_basis(p);
      checks += 2;
      if (!(mp_multiply(unit, u, a, b) == u)) ++failures;
      if (!(mp_multiply(u, unit, a, b) == u)) ++failures;
      for (const auto& q : basis) {
        MPElement uv = mp_multiply(u, d_basis(q), a, b);
        for (const auto& s : basis) {
          ++checks;
          MPElement w = d_basis(s);
          if (!(mp_multiply(uv, w, a, b) == mp_multiply(u, mp_multiply(d_basis(q), w, a, b), a, b))) ++failures;
        }
      }
    }
    PAElement e = idempotent(a, b);
    ++checks;
    if (!(pa_multiply(e, e) == e)) ++failures;
    out.push_back(row(failures == 0, profile_label(a, b),
                      "checks=" + std::to_string(checks) + " failures=" + std::to_string(failures)));
  }
  return out;
}

std::string expansion_string(const SchurExpansion& e) {
  std::string out;
  for (auto it = e.rbegin(); it != e.rend(); ++it)
    out += (out.empty() ? "" : " + ") + std::to_string(it->second) + to_string(it->first);
  return out.empty() ? "0" : out;
}

std::vector<VerifyRow> he_expansion(int max) {
  std::vector<VerifyRow> out;
  for (const auto& [a, b] : profiles_up_to(max, 3)) {
    int n = a.total() + b.total();
    auto lhs = he_expand_tableaux(a, b);
    auto rhs = he_expand_oracle(a, b, n);
    out.push_back(row(lhs == rhs, profile_label(a, b), expansion_string(lhs)));
  }
  return out;
}

std::vector<VerifyRow> sn_decomp(int max) {
  std::vector<VerifyRow> out;
  for (const auto& [a, b] : profiles_up_to(max)) {
    int n = 2 * (a.total() + b.total());
    auto mult = graded_piece_multiplicities(n, a, b);
    auto shapes = ssmt_by_shape(a, b, n);
    bool pass = true;
    std::string detail;
    for (const auto& lambda : partitions_of(n)) {
      auto it = shapes.find(lambda);
      std::int64_t count = it == shapes.end() ? 0 : static_cast<std::int64_t>(it->second.size());
      if (count != mult.at(lambda)) pass = false;
      if (count != 0 || mult.at(lambda) != 0)
        detail += (detail.empty() ? "" : " ") + to_string(lambda) + ":" + std::to_string(mult.at(lambda));
    }
    out.push_back(row(pass, profile_label(a, b) + " n=" + std::to_string(n), detail));
  }
  return out;
}

std::vector<VerifyRow> commutant(int) {
  std::vector<VerifyRow> out;
  const std::vector<std::pair<WeakComposition, WeakComposition>> cases = {{{1}, {}}, {{}, {2}}, {{1}, {1}}};
  for (const auto& [a, b] : cases) {
    long dim = commutant_dimension(4, a, b);
    long restricted = static_cast<long>(enumerate_restricted(a, b).size());
    out.push_back(row(dim == restricted, profile_label(a, b) + " n=4",
                      "commutant=" + std::to_string(dim) + " restricted=" + std::to_string(restricted)));
  }
  return out;
}

const std::vector<std::pair<std::string, std::function<std::vector<VerifyRow>(int)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<std::vector<VerifyRow>(int)>>> table = {
      {"smrsk-dims", smrsk_dims}, {"mp-axioms", mp_axioms}, {"he-expansion", he_expansion},
      {"sn-decomp", sn_decomp},   {"commutant", commutant},
  };
  return table;
}

}  // namespace

std::vector<WeakComposition> compositions_up_to(int lo, int hi, int max_part) {
  std::vector<WeakComposition> out;
  for (int t = lo; t <= hi; ++t) {
    std::vector<int> cur;
    compositions_of(t, max_part, cur, out);
  }
  return out;
}

std::vector<std::pair<WeakComposition, WeakComposition>> profiles_up_to(int max, int max_part) {
  std::vector<std::pair<WeakComposition, WeakComposition>> out;
  for (int t = 1; t <= max; ++t)
    for (int ra = t; ra >= 0; --ra)
      for (const auto& a : compositions_up_to(ra, ra, max_part))
        for (const auto& b : compositions_up_to(t - ra, t - ra, max_part)) out.emplace_back(a, b);
  return out;
}

std::string profile_label(const WeakComposition& a, const WeakComposition& b) {
  return "a=(" + to_string(a) + ") b=(" + to_string(b) + ")";
}

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : suites()) out.push_back(name);
  return out;
}

std::vector<VerifyRow> verify_suite(const std::string& name, int max) {
  const std::map<std::string, int> limits = {
      {"smrsk-dims", 4}, {"mp-axioms", 2}, {"he-expansion", 8}, {"sn-decomp", 3}, {"commutant", 1 << 20}};
  for (const auto& [n, f] : suites())
    if (n == name) {
      if (max > limits.at(n)) throw ResourceError(n + ": --max above " + std::to_string(limits.at(n)));
      return f(max);
    }
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace mmpa
