#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gen23/claims.hpp"
#include "gen23/engine.hpp"

using namespace gen23;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_list(bool json_out) {
  json arr = json::array();
  for (const auto& c : claim_registry()) {
    if (json_out) {
      arr.push_back({{"id", c.id}, {"description", c.description}, {"modules", c.modules},
                     {"feasibility", to_string(c.feasibility)}, {"slow", c.slow}});
      continue;
    }
    std::cout << c.id << "  [" << to_string(c.feasibility) << (c.slow ? ", slow" : "") << "]  " << c.description
              << "\n";
  }
  if (json_out) std::cout << arr.dump(2) << "\n";
  return kPass;
}

int cmd_verify(std::vector<std::string> ids, const RunConfig& cfg, const std::string& json_path,
               const std::string& md_path) {
  std::vector<const Claim*> todo;
  if (ids.empty()) ids.push_back("all");
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& c : claim_registry())
        if (!c.slow || cfg.slow) todo.push_back(&c);
      continue;
    }
    const Claim* c = find_claim(id);
    if (!c) throw UsageError("unknown claim id: " + id);
    todo.push_back(c);
  }
  RunReport report;
  report.config = cfg;
  for (const Claim* c : todo) {
    auto r = run_claim(*c, cfg);
    std::cout << (r.verdict ? "PASS " : "FAIL ") << r.id << "  " << r.label;
    if (r.data.value("cap_exceeded", false)) std::cout << "  (cap exceeded)";
    std::cout << "  " << r.seconds << " s" << std::endl;
    report.results.push_back(std::move(r));
  }
  if (!json_path.empty()) write_file(json_path, to_json(report).dump(2) + "\n");
  if (!md_path.empty()) write_file(md_path, to_markdown(report));
  if (report.all_pass()) return kPass;
  // a falsified claim outranks a resource overrun
  for (const auto& r : report.results)
    if (!r.verdict && !r.data.value("cap_exceeded", false)) return kFail;
  return kCap;
}

Field field_for(Target t, u64 q, const std::string& field_text) {
  const TargetGroup g = target_for(t, q);
  if (field_text.empty()) return g.field();
  const Field f = Field::parse(field_text);
  if (f.q() != g.field().q()) throw UsageError("--field " + field_text + " does not match " + g.name());
  return f;
}

int cmd_search(const std::string& target_text, u64 q, const std::string& field_text, std::optional<u64> hint,
               const std::string& json_path, const std::string& x_path, const std::string& y_path) {
  Target t;
  try {
    t = parse_target(target_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  u64 p = 0;
  int m = 0;
  if (!prime_power(q, p, m)) throw UsageError("--q must be a prime power");
  const Field f = field_for(t, q, field_text);
  const auto w = search_params(t, f, hint);
  json out{{"target", target_for(t, q).name()}, {"field", f.to_string()}};
  if (!w) {
    out["result"] = "none";
    std::cout << "none\n";
    if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
    return kFail;
  }
  out["result"] = "found";
  out["param"] = f.format(w->param);
  out["minimal_polynomial"] = minimal_polynomial(f, w->param);
  if (w->param != f.zero()) out["element_order"] = f.order(w->param);
  out["special"] = w->special;
  if (!w->note.empty()) out["note"] = w->note;
  out["x"] = to_json(w->pair.x);
  out["y"] = to_json(w->pair.y);
  out["conditions"] = to_json(w->conditions);
  std::cout << out.dump(2) << "\n";
  if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
  if (!x_path.empty()) write_file(x_path, to_json(w->pair.x).dump() + "\n");
  if (!y_path.empty()) write_file(y_path, to_json(w->pair.y).dump() + "\n");
  return kPass;
}

Matrix parse_matrix(json j, const std::string& field_text, const std::string& origin) {
  if (!j.is_object()) throw UsageError(origin + ": expected a matrix object");
  if (!j.contains("field")) {
    if (field_text.empty()) throw UsageError(origin + ": no field given");
    j["field"] = field_text;
  }
  try {
    return matrix_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(origin + ": " + e.what());
  }
}

int cmd_closure(const std::vector<std::string>& files, u64 cap, const std::string& field_text,
                const std::string& json_path) {
  std::vector<Matrix> gens;
  for (const auto& path : files) {
    const json j = read_json(path);
    if (j.is_array())
      for (std::size_t i = 0; i < j.size(); ++i)
        gens.push_back(parse_matrix(j[i], field_text, path + "[" + std::to_string(i) + "]"));
    else
      gens.push_back(parse_matrix(j, field_text, path));
  }
  if (gens.empty()) throw UsageError("no matrices given");
  for (const auto& g : gens) {
    if (!(g.field() == gens.front().field())) throw UsageError("field mismatch between input matrices");
    if (g.n() != gens.front().n()) throw UsageError("dimension mismatch between input matrices");
  }
  ClosureOptions o;
  o.cap = cap;
  ClosureResult r;
  try {
    r = closure(gens, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const json out = to_json(r);
  std::cout << "order " << (r.truncated ? "> " + std::to_string(cap) : std::to_string(r.order)) << "\n"
            << "scalar subgroup order " << r.scalar_subgroup_order << "\n"
            << "truncated " << (r.truncated ? "true" : "false") << "\n";
  if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
  return r.truncated ? kCap : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit (2,3)-generators of low-dimensional classical groups: claim checks and tools"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string json_path, md_path, field_text;
  app.add_option("--seed", cfg.seed, "recorded in reports; all randomness is seeded from the input");
  app.add_option("--cap", cfg.cap, "largest group enumerated by closure")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads for scans")->check(CLI::Range(1, 256));
  app.add_flag("--slow", cfg.slow, "include slow claims in 'all'");
  app.add_option("--json", json_path, "write a JSON report");
  app.add_option("--md", md_path, "write a markdown report");
  app.add_option("--field", field_text, "field as p^m or p^m/modulus");

  auto* list = app.add_subcommand("list", "list the claim registry");
  bool list_json = false;
  list->add_flag("--as-json", list_json, "print the registry as JSON");

  auto* verify = app.add_subcommand("verify", "run claims by id, or all");
  std::vector<std::string> ids;
  verify->add_option("ids", ids, "claim ids or 'all'");

  auto* search = app.add_subcommand("search", "search a parameter for a target family");
  std::string target;
  u64 q = 0;
  std::optional<u64> hint;
  std::string x_path, y_path;
  search->add_option("--target", target, "sl3, su3, sl5 or su5")->required();
  search->add_option("--q", q, "q (unitary targets live over GF(q^2))")->required();
  search->add_option("--order-hint", hint, "preferred multiplicative order of the parameter");
  search->add_option("--x", x_path, "write x as a matrix file");
  search->add_option("--y", y_path, "write y as a matrix file");

  auto* clos = app.add_subcommand("closure", "order of the group generated by matrix files");
  std::vector<std::string> files;
  clos->add_option("files", files, "matrix JSON files (an object or an array of objects)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*list) return cmd_list(list_json);
    if (*verify) return cmd_verify(ids, cfg, json_path, md_path);
    if (*search) return cmd_search(target, q, field_text, hint, json_path, x_path, y_path);
    if (*clos) return cmd_closure(files, cfg.cap, field_text, json_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
