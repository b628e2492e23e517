// regrade: construct exact group-graded algebras, decide regularity and
// minimality, compute radicals and graded codimension sequences, and run the
// bundled verification suites.
//
// Exit codes: 0 = success (including honest "undecided"), 1 = a mathematical
// verdict is negative (invalid pairing, not regular, not minimal, a failing
// verification suite), 2 = unusable input.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regrade/error.hpp"
#include "regrade/identities.hpp"
#include "regrade/io.hpp"
#include "regrade/regularity.hpp"
#include "regrade/verify.hpp"

namespace {

using regrade::json;

bool g_decimal = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void put_scalar(json& j, const std::string& key, const regrade::Cyclotomic& v) {
  j[key] = v.str();
  if (g_decimal) {
    const auto z = regrade::scalar_approx(v);
    j[key + "_approx"] = json::array({z.real(), z.imag()});
  }
}

json elements_json(const std::vector<regrade::GroupElement>& elems) {
  json arr = json::array();
  for (const auto& e : elems) arr.push_back(regrade::element_to_json(e));
  return arr;
}

json table_json(const regrade::PairingTable& t) {
  const std::size_t n = static_cast<std::size_t>(t.group().order());
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(t.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string tuple_key(const regrade::DegreeTuple& q) {
  std::string s;
  for (const auto& e : q) s += e.str();
  return s;
}

int cmd_group_info(const std::string& spec) {
  const regrade::GroupSpec g = regrade::group_from_spec(spec);
  json j;
  j["group"] = regrade::group_to_json(g);
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["elements"] = elements_json(g.enumerate());
  const regrade::MillerSum m = regrade::miller_sum(g);
  j["miller_sum"] = json{{"sum", regrade::element_to_json(m.sum)},
                         {"order2_count", m.order2_count}};
  emit(j);
  return 0;
}

int cmd_pairing_check(const std::string& spec, bool dump_json) {
  regrade::Pairing p = [&] {
    try {
      return regrade::pairing_from_spec(spec);
    } catch (const regrade::ValidationError& e) {
      json j;
      j["valid"] = false;
      j["violation"] = e.what();
      emit(j);
      std::exit(1);
    }
  }();
  json j;
  j["valid"] = true;
  if (const auto* b = std::get_if<regrade::Bicharacter>(&p)) {
    j["kind"] = "bicharacter";
    j["group"] = regrade::group_to_json(b->group());
    const regrade::MinimalityReport rep = regrade::is_minimal(*b);
    put_scalar(j, "det", rep.det);
    j["minimal"] = rep.minimal();
    j["radical"] = elements_json(regrade::radical(*b));
    if (rep.equal_columns_witness)
      j["equal_columns"] = json::array({regrade::element_to_json(rep.equal_columns_witness->first),
                                        regrade::element_to_json(rep.equal_columns_witness->second)});
    if (dump_json) j["file"] = regrade::bicharacter_to_json(*b);
    j["table"] = table_json(*b);
  } else {
    const auto& c = std::get<regrade::Cocycle>(p);
    j["kind"] = "cocycle";
    j["group"] = regrade::group_to_json(c.group());
    j["regular_elements"] = elements_json(regrade::regular_elements(c));
    const regrade::Bicharacter induced = regrade::induced_bicharacter(c);
    j["induced_minimal"] = regrade::is_minimal(induced).minimal();
    if (dump_json) j["file"] = regrade::cocycle_to_json(c);
    j["table"] = table_json(c);
  }
  emit(j);
  return 0;
}

int cmd_algebra_validate(const std::string& spec, bool dump_json) {
  regrade::GradedAlgebra a = [&] {
    try {
      return regrade::algebra_from_spec(spec);
    } catch (const regrade::ValidationError& e) {
      json j;
      j["valid"] = false;
      j["violation"] = e.what();
      emit(j);
      std::exit(1);
    }
  }();
  json j;
  j["valid"] = true;
  j["dim"] = a.dim();
  j["group"] = regrade::group_to_json(a.group());
  j["conductor"] = a.conductor();
  j["support"] = elements_json(a.support());
  j["full_support"] = a.full_support();
  if (dump_json) j["file"] = regrade::algebra_to_json(a);
  emit(j);
  return 0;
}

int cmd_algebra_radical(const std::string& spec) {
  const regrade::GradedAlgebra a = regrade::algebra_from_spec(spec);
  const regrade::Mat rad = regrade::jacobson_radical(a);
  const regrade::RadicalGradingReport rep = regrade::radical_grading_report(a);
  json j;
  j["dim"] = a.dim();
  j["radical_dim"] = rad.size();
  json basis = json::array();
  for (const auto& row : rad) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    basis.push_back(std::move(r));
  }
  j["radical_basis"] = std::move(basis);
  j["graded"] = rep.is_graded;
  j["j0_dim"] = rep.j0_dim;
  j["zero_part_identity"] = rep.identity_holds;
  emit(j);
  return 0;
}

json condition_i_json(const regrade::ConditionIVerdict& v) {
  json j;
  switch (v.status) {
    case regrade::CondIStatus::Verified: j["status"] = "verified"; break;
    case regrade::CondIStatus::FailsAtTuple: j["status"] = "fails"; break;
    case regrade::CondIStatus::Undecided: j["status"] = "undecided"; break;
  }
  j["states_explored"] = v.states_explored;
  if (!v.witness_tuple.empty()) {
    json t = json::array();
    for (const auto& e : v.witness_tuple) t.push_back(regrade::element_to_json(e));
    j["witness_tuple"] = std::move(t);
  }
  return j;
}

int cmd_regular_check(const std::string& spec, std::size_t state_cap) {
  const regrade::GradedAlgebra a = regrade::algebra_from_spec(spec);
  const regrade::RegularityVerdict v = regrade::is_regular(a, state_cap);
  json j;
  j["full_support"] = v.full_support;
  j["condition_i"] = condition_i_json(v.condition_i);
  json c2;
  c2["holds"] = v.condition_ii.holds;
  if (v.condition_ii.witness)
    c2["witness"] = json::array({a.labels()[v.condition_ii.witness->first],
                                 a.labels()[v.condition_ii.witness->second]});
  if (v.condition_ii.indeterminate_pair)
    c2["indeterminate_pair"] =
        json::array({regrade::element_to_json(v.condition_ii.indeterminate_pair->first),
                     regrade::element_to_json(v.condition_ii.indeterminate_pair->second)});
  if (!v.condition_ii.note.empty()) c2["note"] = v.condition_ii.note;
  j["condition_ii"] = std::move(c2);
  j["regular"] = v.regular();
  if (v.undecided()) j["status"] = "undecided";

  if (v.regular()) {
    const regrade::MinimalityReport mini = regrade::is_minimal(*v.condition_ii.beta);
    j["beta"] = table_json(*v.condition_ii.beta);
    put_scalar(j, "det", mini.det);
    j["minimal"] = mini.minimal();
    j["radical"] = elements_json(regrade::radical(*v.condition_ii.beta));
    if (mini.minimal()) {
      j["exp_prediction"] = a.group().order();
      const regrade::StructureReport rep = regrade::verify_structure_theorem(a, state_cap);
      json s;
      s["a0_commutative"] = rep.a0_commutative;
      s["k"] = rep.k;
      s["dim"] = rep.dim;
      s["dim_a0"] = rep.dim_a0;
      s["dim_j"] = rep.dim_j;
      s["dim_j0"] = rep.dim_j0;
      s["dim_matches"] = rep.dim_matches;
      s["radical_dim_matches"] = rep.radical_dim_matches;
      if (rep.semisimple_case_applicable) s["semisimple_case_holds"] = rep.semisimple_case_holds;
      if (rep.division_case_applicable) s["division_case_holds"] = rep.division_case_holds;
      s["all_hold"] = rep.all_hold();
      j["structure"] = std::move(s);
    } else {
      j["structure"] = nullptr;
    }
  }
  emit(j);
  if (v.undecided()) return 0;
  return v.regular() ? 0 : 1;
}

int cmd_regular_matrix(const std::string& spec) {
  const regrade::GradedAlgebra a = regrade::algebra_from_spec(spec);
  json j;
  try {
    const regrade::DecompositionReport rep = regrade::decomposition_report(a);
    j["beta"] = table_json(rep.matrix);
    put_scalar(j, "det", rep.det);
    j["minimal"] = rep.minimal;
    j["radical"] = elements_json(rep.radical_elements);
    if (rep.exp_prediction) j["exp_prediction"] = *rep.exp_prediction;
    emit(j);
    return rep.minimal ? 0 : 1;
  } catch (const regrade::NotRegularError& e) {
    j["ok"] = false;
    j["reason"] = e.what();
    emit(j);
    return 1;
  }
}

int cmd_codim(const std::string& spec, long max_n, bool ordinary, const std::string& tuples) {
  const regrade::GradedAlgebra a = regrade::algebra_from_spec(spec);
  json j;
  j["spec"] = spec;
  j["group"] = regrade::group_to_json(a.group());
  j["max_n"] = max_n;
  json results = json::array();
  std::vector<std::string> table_lines;
  for (long n = 1; n <= max_n; ++n) {
    const regrade::CodimReport rep = regrade::graded_codimension(a, n);
    json r;
    r["n"] = n;
    r["graded"] = rep.graded;
    std::string line = "n=" + std::to_string(n) + "  graded=" + std::to_string(rep.graded);
    if (ordinary) {
      const long c = regrade::ordinary_codimension(a, n);
      r["ordinary"] = c;
      line += "  ordinary=" + std::to_string(c);
    }
    json per = json::object();
    for (const auto& [q, rank] : rep.per_tuple)
      if (tuples == "all" || rank != 0) per[tuple_key(q)] = rank;
    r["per_tuple"] = std::move(per);
    results.push_back(std::move(r));
    table_lines.push_back(std::move(line));
  }
  j["results"] = std::move(results);
  emit(j);
  for (const auto& line : table_lines) std::cout << line << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& names) {
  std::vector<int> ids;
  for (const auto& name : names) {
    const auto s = regrade::verify::suite(name);
    if (!s) {
      std::cerr << "unknown suite '" << name << "'; available:";
      for (const auto& [id, nm] : regrade::verify::catalog()) std::cerr << " " << nm;
      std::cerr << " all\n";
      return 2;
    }
    ids.insert(ids.end(), s->begin(), s->end());
  }
  int failures = 0;
  for (const auto& r : regrade::verify::run(ids)) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
    if (!r.detail.empty()) std::cout << " :: " << r.detail;
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all suites passed" : std::to_string(failures) + " suite(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with regular gradings on finite dimensional algebras"};
  app.require_subcommand(1);
  app.add_flag("--decimal", g_decimal,
               "add approximate complex values (clearly marked) next to exact scalars");

  // `regrade regular <spec>` reads as `regrade regular check <spec>`
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "regular" && i + 1 < args.size() && args[i + 1] != "check" &&
        args[i + 1] != "matrix") {
      args.insert(args.begin() + static_cast<long>(i) + 1, "check");
      break;
    }
    if (args[i].rfind("--", 0) != 0) break;
  }

  if (const char* cap = std::getenv("REGRADE_MAX_N")) {
    try {
      regrade::set_codim_degree_cap(std::stol(cap));
    } catch (...) {
      std::cerr << "bad REGRADE_MAX_N value '" << cap << "'\n";
      return 2;
    }
  }

  std::string spec, tuples = "nonzero";
  long max_n = 3;
  std::size_t state_cap = regrade::kDefaultStateCap;
  bool dump_json = false, ordinary = false;
  std::vector<std::string> suites;

  auto* group = app.add_subcommand("group", "group utilities");
  auto* group_info = group->add_subcommand("info", "order, exponent, enumeration, miller sum");
  group_info->add_option("spec", spec, "moduli like 2x2, or JSON")->required();

  auto* pairing = app.add_subcommand("pairing", "bicharacter / cocycle utilities");
  auto* pairing_check = pairing->add_subcommand("check", "validate and summarize a pairing");
  pairing_check->add_option("spec", spec, "builtin name, file, or inline JSON")->required();
  pairing_check->add_flag("--json", dump_json, "include the canonical file encoding");

  auto* algebra = app.add_subcommand("algebra", "graded algebra utilities");
  auto* algebra_validate = algebra->add_subcommand("validate", "construct and validate");
  algebra_validate->add_option("spec", spec, "builtin spec, file, or inline JSON")->required();
  algebra_validate->add_flag("--json", dump_json, "include the canonical file encoding");
  auto* algebra_radical = algebra->add_subcommand("radical", "Jacobson radical report");
  algebra_radical->add_option("spec", spec, "builtin spec, file, or inline JSON")->required();

  auto* regular = app.add_subcommand("regular", "regularity of a grading");
  auto* regular_check = regular->add_subcommand("check", "full regularity report");
  regular_check->add_option("spec", spec, "algebra spec")->required();
  regular_check->add_option("--state-cap", state_cap, "closure state cap (default 4096)");
  auto* regular_matrix = regular->add_subcommand("matrix", "decomposition matrix report");
  regular_matrix->add_option("spec", spec, "algebra spec")->required();

  auto* codim = app.add_subcommand("codim", "graded codimension sweep");
  codim->add_option("spec", spec, "algebra spec")->required();
  codim->add_option("--max-n", max_n, "sweep n = 1..N (default 3)");
  codim->add_flag("--ordinary", ordinary, "also compute ordinary codimensions");
  codim->add_option("--tuples", tuples, "per-tuple listing: all | nonzero (default)")
      ->check(CLI::IsMember({"all", "nonzero"}));

  auto* verify = app.add_subcommand("verify", "run bundled verification suites");
  verify->add_option("suites", suites, "suite names, or 'all'")->required();

  try {
    app.parse(static_cast<int>(args.size()) + 1, [&] {
      static std::vector<const char*> cargs;
      cargs.clear();
      cargs.push_back("regrade");
      for (const auto& a : args) cargs.push_back(a.c_str());
      return cargs.data();
    }());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (group_info->parsed()) return cmd_group_info(spec);
    if (pairing_check->parsed()) return cmd_pairing_check(spec, dump_json);
    if (algebra_validate->parsed()) return cmd_algebra_validate(spec, dump_json);
    if (algebra_radical->parsed()) return cmd_algebra_radical(spec);
    if (regular_check->parsed()) return cmd_regular_check(spec, state_cap);
    if (regular_matrix->parsed()) return cmd_regular_matrix(spec);
    if (codim->parsed()) return cmd_codim(spec, max_n, ordinary, tuples);
    if (verify->parsed()) return cmd_verify(suites);
    std::cerr << "missing subcommand\n";
    return 2;
  } catch (const regrade::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const regrade::ShapeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const regrade::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const regrade::ValidationError& e) {
    std::cerr << "invalid input object: " << e.what() << "\n";
    return 2;
  } catch (const regrade::InternalError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  }
}
