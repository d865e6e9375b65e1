// Command line front end: insertion algorithms, algebra products, module
// actions, dimension tables, Schur expansions, enumeration and verification.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "mmpa/algebra.hpp"
#include "mmpa/representations.hpp"
#include "mmpa/smrsk.hpp"
#include "mmpa/super_rsk.hpp"
#include "mmpa/symfun.hpp"
#include "mmpa/text.hpp"
#include "mmpa/verify.hpp"

using namespace mmpa;
using Record = nlohmann::ordered_json;

namespace {

struct Output {
  std::string command;
  std::vector<std::string> lines;
  std::vector<Record> records;

  void emit(std::string line, Record rec) {
    lines.push_back(std::move(line));
    records.push_back(std::move(rec));
  }

  void print(std::ostream& os, bool as_records) const {
    if (!as_records) {
      for (const auto& l : lines) os << l << "\n";
      return;
    }
    Record doc;
    doc["format"] = 1;
    doc["command"] = command;
    doc["records"] = records;
    os << doc.dump(2) << "\n";
  }
};

struct ProfileFlags {
  std::string a, b;
  WeakComposition wa() const { return parse_composition(a); }
  WeakComposition wb() const { return parse_composition(b); }
};

void add_profile(CLI::App* sub, ProfileFlags& p) {
  sub->add_option("--a", p.a, "even composition, e.g. 2,1")->default_val("");
  sub->add_option("--b", p.b, "odd composition, e.g. 1")->default_val("");
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void tableau_pair(Output& out, const Tableau& p, const Tableau& q) {
  out.emit("P: " + to_string(p), Record{{"role", "P"}, {"tableau", to_string(p)}, {"shape", to_string(p.shape())}});
  out.emit("Q: " + to_string(q), Record{{"role", "Q"}, {"tableau", to_string(q)}, {"shape", to_string(q.shape())}});
}

void check_profile_element(const MPElement& u, const WeakComposition& a, const WeakComposition& b) {
  for (const auto& [k, c] : u.terms()) {
    if (!in_profile(k, a, b)) throw std::invalid_argument("element term " + to_string(k) + " is not in the profile");
    if (!is_restricted(k)) throw std::invalid_argument("element term " + to_string(k) + " is not restricted");
  }
}

PAElement as_pa(const MPElement& u) {
  PAElement out;
  for (const auto& [k, c] : u.terms()) out.add(as_set_partition(k), c);
  return out;
}

void check_limit(std::size_t count, long limit) {
  if (static_cast<long>(count) > limit)
    throw ResourceError("enumeration has " + std::to_string(count) + " items, above --limit " + std::to_string(limit));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed multiset partition algebra toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  Output out;

  std::string s1, s2;
  int n = -1;
  ProfileFlags prof;

  auto* srsk_cmd = app.add_subcommand("srsk", "super RSK of a biword");
  srsk_cmd->add_option("biword", s1, "biword, e.g. [1 1 ~1 / 1 2 1]")->required();

  auto* srsk_inv_cmd = app.add_subcommand("srsk-inv", "inverse super RSK");
  srsk_inv_cmd->add_option("P", s1)->required();
  srsk_inv_cmd->add_option("Q", s2)->required();

  auto* smrsk_cmd = app.add_subcommand("smrsk", "smRSK of a restricted multiset partition");
  add_profile(smrsk_cmd, prof);
  smrsk_cmd->add_option("--n", n, "number of boxes")->required();
  smrsk_cmd->add_option("partition", s1)->required();

  auto* smrsk_inv_cmd = app.add_subcommand("smrsk-inv", "inverse smRSK");
  add_profile(smrsk_inv_cmd, prof);
  smrsk_inv_cmd->add_option("--n", n, "number of boxes")->required();
  smrsk_inv_cmd->add_option("P", s1)->required();
  smrsk_inv_cmd->add_option("Q", s2)->required();

  auto* pa_cmd = app.add_subcommand("pa-mult", "product in the partition algebra");
  pa_cmd->add_option("--n", n, "specialize x to n");
  pa_cmd->add_option("u", s1)->required();
  pa_cmd->add_option("v", s2)->required();

  auto* mp_cmd = app.add_subcommand("mp-mult", "product in the mixed multiset partition algebra");
  add_profile(mp_cmd, prof);
  mp_cmd->add_option("--n", n, "specialize x to n");
  mp_cmd->add_option("u", s1)->required();
  mp_cmd->add_option("v", s2)->required();

  bool partition_module = false;
  auto* act_cmd = app.add_subcommand("act", "act on a module vector and straighten");
  add_profile(act_cmd, prof);
  act_cmd->add_option("--n", n, "number of boxes (checked against the tableaux)");
  act_cmd->add_flag("--partition-algebra", partition_module, "set partition element acting on standard tableaux");
  act_cmd->add_option("element", s1)->required();
  act_cmd->add_option("vector", s2)->required();

  auto* straighten_cmd = app.add_subcommand("straighten", "straighten a module vector");
  straighten_cmd->add_option("vector", s1)->required();

  auto* dims_cmd = app.add_subcommand("dims", "dimensions of the simple modules");
  add_profile(dims_cmd, prof);
  dims_cmd->add_option("--n", n, "specialization")->required();

  std::string h_parts, e_parts;
  bool use_oracle = false;
  auto* schur_cmd = app.add_subcommand("schur-expand", "Schur expansion of h_a e_b");
  schur_cmd->set_help_flag("--help", "Print this help message and exit");
  schur_cmd->add_option("--h", h_parts)->default_val("");
  schur_cmd->add_option("--e", e_parts)->default_val("");
  schur_cmd->add_flag("--oracle", use_oracle, "expand by polynomial peeling instead of tableaux");

  std::string kind, shape_text;
  int r = 0, max_entry = 0;
  long limit = 100000;
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate combinatorial objects");
  enum_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"set-partitions", "restricted", "ssmt", "ssmt-prime", "smt", "syt", "ssyt"}));
  add_profile(enum_cmd, prof);
  enum_cmd->add_option("--n", n);
  enum_cmd->add_option("--r", r);
  enum_cmd->add_option("--shape", shape_text);
  enum_cmd->add_option("--max-entry", max_entry);
  enum_cmd->add_option("--limit", limit, "refuse larger outputs")->default_val(100000);

  std::string suite;
  int max = -1;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(verify_suite_names()));
  verify_cmd->add_option("--max", max, "size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*srsk_cmd) {
      out.command = "srsk";
      auto [p, q] = srsk(parse_biword(s1));
      tableau_pair(out, p, q);
    } else if (*srsk_inv_cmd) {
      out.command = "srsk-inv";
      Biword w = srsk_inverse(parse_tableau(s1), parse_tableau(s2));
      out.emit(to_string(w), Record{{"biword", to_string(w)}});
    } else if (*smrsk_cmd) {
      out.command = "smrsk";
      auto pt = parse_partition(s1);
      if (!in_profile(pt, prof.wa(), prof.wb())) throw std::invalid_argument("partition is not in the given profile");
      auto [p, q] = smrsk(pt, n);
      tableau_pair(out, p, q);
    } else if (*smrsk_inv_cmd) {
      out.command = "smrsk-inv";
      auto pt = smrsk_inverse(parse_tableau(s1), parse_tableau(s2), n);
      if (!in_profile(pt, prof.wa(), prof.wb())) throw std::invalid_argument("tableaux are not in the given profile");
      out.emit(to_string(pt), Record{{"partition", to_string(pt)}});
    } else if (*pa_cmd) {
      out.command = "pa-mult";
      PAElement prod = pa_multiply(as_pa(parse_element(s1)), as_pa(parse_element(s2)));
      if (n >= 0) prod = specialize(prod, n);
      out.emit(to_string(prod), Record{{"element", to_string(prod)}});
    } else if (*mp_cmd) {
      out.command = "mp-mult";
      auto a = prof.wa(), b = prof.wb();
      auto u = parse_element(s1), v = parse_element(s2);
      check_profile_element(u, a, b);
      check_profile_element(v, a, b);
      MPElement prod = mp_multiply(u, v, a, b);
      if (n >= 0) prod = specialize(prod, n);
      out.emit(to_string(prod), Record{{"element", to_string(prod)}});
    } else if (*act_cmd) {
      out.command = "act";
      auto u = parse_element(s1);
      auto v = parse_vector(s2);
      for (const auto& [t, c] : v.terms())
        if (n >= 0 && t.size() != n) throw std::invalid_argument("tableau " + to_string(t) + " does not have n boxes");
      ModuleVector res;
      if (partition_module) {
        for (const auto& [t, c] : v.terms())
          if (!classify(t).smt) throw std::invalid_argument("tableau " + to_string(t) + " is not standard");
        for (const auto& [k, c] : u.terms())
          for (const auto& [t, d] : v.terms())
            res.add(act_smt(as_set_partition(k), ModuleVector(t, d)), c.evaluate(t.size()));
      } else {
        auto a = prof.wa(), b = prof.wb();
        check_profile_element(u, a, b);
        ColoringMap kappa(a, b);
        for (const auto& [t, c] : v.terms()) {
          if (!classify(t).mt || !(coloring_of(t).a().trimmed() == a.trimmed() && coloring_of(t).b().trimmed() == b.trimmed()))
            throw std::invalid_argument("tableau " + to_string(t) + " is not a multiset tableau of the profile");
        }
        res = mp_act(u, v, a, b);
      }
      out.emit(to_string(res), Record{{"vector", to_string(res)}});
    } else if (*straighten_cmd) {
      out.command = "straighten";
      auto v = parse_vector(s1);
      bool standard = !v.is_zero();
      for (const auto& [t, c] : v.terms()) {
        auto content = t.content();
        Multiset all;
        for (const auto& m : content) all = all + m;
        int size = all.size();
        for (int i = 1; i <= size; ++i)
          if (all.multiplicity(plain(i)) != 1) standard = false;
        if (!classify(t).mt) throw std::invalid_argument("tableau " + to_string(t) + " is not a multiset tableau");
      }
      ModuleVector res = standard ? straighten_smt(v) : straighten_ssmt(v);
      out.emit(to_string(res), Record{{"vector", to_string(res)}, {"basis", standard ? "standard" : "semistandard"}});
    } else if (*dims_cmd) {
      out.command = "dims";
      auto shapes = ssmt_by_shape(prof.wa(), prof.wb(), n);
      for (const auto& lambda : partitions_of(n)) {
        auto it = shapes.find(lambda);
        if (it == shapes.end() || it->second.empty()) continue;
        out.emit(pad(to_string(lambda), 14) + std::to_string(it->second.size()),
                 Record{{"lambda", to_string(lambda)}, {"dimension", it->second.size()}});
      }
    } else if (*schur_cmd) {
      out.command = "schur-expand";
      auto a = parse_composition(h_parts), b = parse_composition(e_parts);
      auto expansion = use_oracle ? he_expand_oracle(a, b, a.total() + b.total()) : he_expand_tableaux(a, b);
      for (const auto& lambda : partitions_of(a.total() + b.total())) {
        auto it = expansion.find(lambda);
        if (it == expansion.end()) continue;
        out.emit(std::to_string(it->second) + " " + to_string(lambda),
                 Record{{"coeff", it->second}, {"lambda", to_string(lambda)}});
      }
    } else if (*enum_cmd) {
      out.command = "enumerate";
      auto need_shape = [&] {
        if (shape_text.empty()) throw std::invalid_argument("--shape is required for " + kind);
        return parse_shape(shape_text);
      };
      auto emit_tableaux = [&](const std::vector<Tableau>& ts) {
        check_limit(ts.size(), limit);
        for (const auto& t : ts) out.emit(to_string(t), Record{{"tableau", to_string(t)}});
      };
      if (kind == "set-partitions") {
        if (r > 5) throw ResourceError("set partitions: r > 5");
        auto ps = enumerate_set_partitions(r);
        check_limit(ps.size(), limit);
        for (const auto& p : ps) out.emit(to_string(p), Record{{"partition", to_string(p)}});
      } else if (kind == "restricted") {
        auto ps = enumerate_restricted(prof.wa(), prof.wb());
        check_limit(ps.size(), limit);
        for (const auto& p : ps) out.emit(to_string(p), Record{{"partition", to_string(p)}});
      } else if (kind == "ssmt") {
        if (!shape_text.empty()) {
          emit_tableaux(enumerate_ssmt(need_shape(), prof.wa(), prof.wb()));
        } else {
          if (n < 0) throw std::invalid_argument("ssmt needs --shape or --n");
          std::vector<Tableau> all;
          for (const auto& [lambda, ts] : ssmt_by_shape(prof.wa(), prof.wb(), n)) all.insert(all.end(), ts.begin(), ts.end());
          emit_tableaux(all);
        }
      } else if (kind == "ssmt-prime") {
        emit_tableaux(enumerate_ssmt_prime(need_shape(), prof.wa(), prof.wb()));
      } else if (kind == "smt") {
        emit_tableaux(enumerate_smt(need_shape(), r));
      } else if (kind == "syt") {
        emit_tableaux(enumerate_syt(need_shape()));
      } else {
        emit_tableaux(enumerate_ssyt(need_shape(), max_entry));
      }
    } else if (*verify_cmd) {
      out.command = "verify " + suite;
      const std::map<std::string, int> defaults = {
          {"smrsk-dims", 3}, {"mp-axioms", 2}, {"he-expansion", 6}, {"sn-decomp", 3}, {"commutant", 0}};
      auto rows = verify_suite(suite, max >= 0 ? max : defaults.at(suite));
      bool all = true;
      for (const auto& row : rows) {
        all = all && row.pass;
        out.emit(std::string(row.pass ? "pass  " : "FAIL  ") + pad(row.label, 22) + row.detail,
                 Record{{"pass", row.pass}, {"case", row.label}, {"detail", row.detail}});
      }
      out.print(std::cout, format == "records");
      return all ? 0 : 3;
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  out.print(std::cout, format == "records");
  return 0;
}
