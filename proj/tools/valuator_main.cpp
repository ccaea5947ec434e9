// valuator: command-line front end for the matroid valuative-invariant library.
//
// Exit codes: 0 success, 1 usage error, 2 validation error (bad input or
// failed geometric validation), 3 identity-check failure.

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "valuator/acceptance.hpp"
#include "valuator/catalog.hpp"
#include "valuator/decomp.hpp"
#include "valuator/equivariant.hpp"
#include "valuator/functors.hpp"
#include "valuator/homcheck.hpp"
#include "valuator/invariants.hpp"
#include "valuator/json_io.hpp"
#include "valuator/matroid.hpp"
#include "valuator/polytope.hpp"

namespace {

using namespace valuator;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + s + "'");
  }
}

// Exactly one of a file path and a --uniform k,n shorthand.
Matroid input_matroid(const std::string& file, const std::string& uniform) {
  if (!file.empty() && !uniform.empty())
    throw UsageError("give either a matroid file or --uniform, not both");
  if (!uniform.empty()) {
    const auto parts = split(uniform, ',');
    if (parts.size() != 2) throw UsageError("--uniform expects k,n");
    return Matroid::uniform_kn(parse_int(parts[0], "--uniform rank"),
                               parse_int(parts[1], "--uniform size"));
  }
  if (file.empty()) throw UsageError("no matroid given: pass a file or --uniform k,n");
  return matroid_from_json(parse_json_file(file));
}

Decomposition input_decomposition(const std::string& positional, const std::string& flag) {
  if (!positional.empty() && !flag.empty() && positional != flag)
    throw UsageError("decomposition given twice with different paths");
  const std::string& path = positional.empty() ? flag : positional;
  if (path.empty()) throw UsageError("no decomposition file given");
  return decomposition_from_json(parse_json_file(path));
}

FunctorSpec functor_by_name(const std::string& name) {
  if (name == "tau") return tau();
  if (name == "gros") return gros();
  if (name == "os") return os();
  if (name == "chow") return chow();
  if (name == "augchow") return aug_chow();
  if (name == "kl") return kl_bigraded();
  if (name == "sigma") return sigma_bigraded();
  if (name.rfind("phi:", 0) == 0) {
    std::vector<int> ranks;
    for (const auto& p : split(name.substr(4), ','))
      ranks.push_back(parse_int(p, "phi rank list"));
    if (ranks.empty()) throw UsageError("phi: needs at least one rank");
    return whitney(ranks);
  }
  throw UsageError("unknown functor '" + name +
                   "' (use tau|gros|os|chow|augchow|kl|sigma|phi:<ranks>)");
}

Json rat_json(const Rat& r) {
  if (denominator(r) == 1) {
    std::ostringstream os;
    os << numerator(r);
    long long v = 0;
    std::istringstream is(os.str());
    if (is >> v && is.eof()) return Json(v);
  }
  std::ostringstream os;
  os << r;
  return Json(os.str());
}

std::string deg_key(const Deg& d) {
  std::ostringstream os;
  os << "t^" << d.first;
  if (d.second != 0) os << " u^" << d.second;
  return os.str();
}

Json labels_json(const Matroid& m, Mask s) {
  Json a = Json::array();
  for (const auto& l : m.labels_of(s)) a.push_back(l);
  return a;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --- subcommand payloads ----------------------------------------------------

int run_matroid_info(const Matroid& m) {
  Json out;
  out["schema"] = kSchema;
  out["ground"] = Json::array();
  for (const auto& l : m.ground()) out["ground"].push_back(l);
  out["n"] = m.n();
  out["rank"] = m.rank();
  out["bases"] = m.bases().size();
  out["d"] = m.d();
  out["connected"] = m.components().size() <= 1;
  out["components"] = m.components().size();
  Json flats = Json::object();
  for (int r = 0; r <= m.rank(); ++r) {
    Json level = Json::array();
    for (Mask f : m.flats_of_rank(r)) level.push_back(labels_json(m, f));
    flats[std::to_string(r)] = std::move(level);
  }
  out["flats"] = std::move(flats);
  out["nbc_dims"] = upoly_to_json(poincare_poly(m));
  emit(out);
  return 0;
}

int run_invariant(const std::string& name, const Matroid& m) {
  Json value;
  if (name == "poincare") {
    value = upoly_to_json(poincare_poly(m));
  } else if (name == "chow") {
    value = upoly_to_json(chow_poly(m));
  } else if (name == "augchow") {
    value = upoly_to_json(aug_chow_poly(m));
  } else if (name == "kl") {
    value = upoly_to_json(kl_poly(m));
  } else if (name == "z") {
    value = upoly_to_json(z_poly(m));
  } else if (name == "klt" || name == "zt") {
    const FunctorSpec f = name == "klt" ? kl_bigraded() : sigma_bigraded();
    BPoly b;
    for (const auto& [deg, dim] : graded_dims(f, m))
      if (dim != 0) b.add_coeff(deg.first, deg.second, dim);
    value = bpoly_to_json(b);
  } else if (name == "g") {
    Json words = Json::object();
    long long total = 0;
    for (const auto& [w, c] : g_invariant(m)) {
      words[w] = c;
      total += c;
    }
    value = Json::object();
    value["words"] = std::move(words);
    value["total"] = total;
  } else if (name == "bergman") {
    value = Json::object();
    value["cones"] = bergman_cones(m).size();
  } else {
    throw UsageError("unknown invariant '" + name +
                     "' (use poincare|chow|augchow|kl|klt|z|zt|g|bergman)");
  }
  Json out;
  out["schema"] = kSchema;
  out["invariant"] = name;
  out["value"] = std::move(value);
  emit(out);
  return 0;
}

int run_relax(const Matroid& m, const std::string& flat_csv, bool group, unsigned seed) {
  const Mask f = m.mask_of(split(flat_csv, ','));
  Json out;
  out["schema"] = kSchema;
  out["seed"] = seed;
  out["flat"] = labels_json(m, f);
  Matroid relaxed = m;  // reassigned below; Matroid has no default ctor
  Decomposition dec = [&] {
    if (group) {
      const auto orbit = orbit_of(f, PermGroup::full_automorphisms(m).elements);
      Json oj = Json::array();
      for (Mask g : orbit) oj.push_back(labels_json(m, g));
      out["orbit"] = std::move(oj);
      relaxed = relax_orbit(m, orbit);
      return relax_decomposition_orbit(m, orbit);
    }
    relaxed = relax(m, f);
    return relax_decomposition(m, f);
  }();
  dec.validate(seed);
  out["validated"] = true;
  out["relaxed"] = matroid_to_json(relaxed);
  out["decomposition"] = decomposition_to_json(dec);
  emit(out);
  return 0;
}

int run_complex_check(const Decomposition& dec, const std::string& functor_name) {
  const FunctorSpec f = functor_by_name(functor_name);
  const HomologyReport r = functor_homology(build_complex(dec), f);
  Json out;
  out["schema"] = kSchema;
  out["functor"] = functor_name;
  out["report"] = homreport_to_json(r);
  out["exact"] = r.exact;
  emit(out);
  return r.exact ? 0 : 3;
}

int run_deltapsi(const Decomposition& dec, const std::string& psi_csv) {
  const Matroid& u = dec.target();
  const auto parts = split(psi_csv, ',');
  if (static_cast<int>(parts.size()) != u.n())
    throw UsageError("--psi needs " + std::to_string(u.n()) + " comma-separated rationals");
  Vec psi;
  for (const auto& p : parts) {
    try {
      psi.push_back(Rat(p));
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + p + "' in --psi");
    }
  }

  const SignedComplex proj = project_complex(build_complex(dec), psi);
  const Decomposition face = face_decomposition(dec, psi);
  const SignedComplex fc = build_complex(face);
  const int shift = u.d() - face.target().d();
  const auto hp = tau_homology(proj);
  const auto hf = tau_homology(fc);

  bool match = true;
  for (int k = 0; k <= proj.top; ++k) {
    const int expect = (k - shift >= 0 && k - shift <= fc.top) ? hf[k - shift] : 0;
    if (hp[k] != expect) match = false;
  }

  Json out;
  out["schema"] = kSchema;
  out["psi"] = Json::array();
  for (const auto& c : psi) out["psi"].push_back(rat_json(c));
  out["face_target"] = matroid_to_json(face.target());
  out["shift"] = shift;
  out["projected_homology"] = hp;
  out["face_homology"] = hf;
  out["match"] = match;
  emit(out);
  return match ? 0 : 3;
}

std::vector<std::vector<int>> parse_gens(const std::string& gens_str, int n) {
  std::vector<std::vector<int>> gens;
  for (const auto& g : split(gens_str, ';')) {
    std::vector<int> perm;
    for (const auto& p : split(g, ',')) perm.push_back(parse_int(p, "--gens entry"));
    if (static_cast<int>(perm.size()) != n)
      throw UsageError("each generator needs " + std::to_string(n) + " entries");
    gens.push_back(std::move(perm));
  }
  return gens;
}

int run_equivariant_table(const Matroid& m, const std::string& functor_name,
                          const std::string& gens_str) {
  const PermGroup g = gens_str.empty()
                          ? PermGroup::full_automorphisms(m)
                          : PermGroup::generate(m.n(), parse_gens(gens_str, m.n()));
  const FunctorSpec f = functor_by_name(functor_name);
  const auto reps = g.conjugacy_class_reps();
  const auto sizes = g.conjugacy_class_sizes();

  Json classes = Json::object();
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& gamma = g.elements[reps[i]];
    std::string key = cycle_type_string(cycle_type(gamma));
    const int dup = ++seen[key];
    if (dup > 1) key += "#" + std::to_string(dup);
    Json entry;
    entry["size"] = sizes[i];
    entry["det"] = det_character(m, gamma);
    Json traces = Json::object();
    for (const auto& [deg, tr] : trace_on(f, m, gamma)) traces[deg_key(deg)] = rat_json(tr);
    entry["traces"] = std::move(traces);
    classes[key] = std::move(entry);
  }

  Json out;
  out["schema"] = kSchema;
  out["functor"] = functor_name;
  out["group_order"] = g.size();
  out["classes"] = std::move(classes);
  emit(out);
  return 0;
}

int run_equivariant_check(const Decomposition& dec, const std::string& functor_name,
                          const std::string& gens_str) {
  const Matroid& t = dec.target();
  PermGroup g = PermGroup::trivial(t.n());
  if (gens_str.empty()) {
    // Largest subgroup of Aut(target) that permutes the cells.
    const PermGroup aut = PermGroup::full_automorphisms(t);
    std::set<Matroid> cells(dec.faces().begin(), dec.faces().end());
    g.elements.clear();
    for (const auto& gamma : aut.elements) {
      bool keeps = true;
      for (const auto& face : dec.faces())
        if (!cells.count(face.relabel(gamma))) {
          keeps = false;
          break;
        }
      if (keeps) g.elements.push_back(gamma);
    }
  } else {
    g = PermGroup::generate(t.n(), parse_gens(gens_str, t.n()));
  }

  const FunctorSpec f = functor_by_name(functor_name);
  const CharReport r = character_identity_check(build_complex(dec), g, f);

  Json out;
  out["schema"] = kSchema;
  out["functor"] = functor_name;
  out["group_order"] = g.size();
  out["pass"] = r.pass;
  out["detail"] = r.detail;
  emit(out);
  return r.pass ? 0 : 3;
}

int run_suite_acceptance(unsigned seed) {
  const auto results = run_acceptance(std::cerr, seed);
  bool all = true;
  Json criteria = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    Json c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["detail"] = r.detail;
    criteria.push_back(std::move(c));
  }
  Json out;
  out["schema"] = kSchema;
  out["suite"] = "acceptance";
  out["seed"] = seed;
  out["criteria"] = std::move(criteria);
  out["pass"] = all;
  emit(out);
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valuative invariants of matroids: polytope decompositions, "
               "functor exactness, and equivariant checks"};
  app.require_subcommand(1);

  unsigned seed = 2027;
  int jobs = 1;
  app.add_option("--seed", seed, "seed for randomized validation sampling (recorded in reports)")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker count hint; results never depend on it")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string m_file, m_uniform;
  auto* matroid_cmd = app.add_subcommand("matroid", "inspect a matroid");
  matroid_cmd->require_subcommand(1);
  auto* info_cmd = matroid_cmd->add_subcommand(
      "info", "rank, flats, broken-circuit dimensions, polytope dimension");
  info_cmd->add_option("file", m_file, "matroid JSON file");
  info_cmd->add_option("--uniform", m_uniform, "uniform matroid k,n instead of a file");

  std::string inv_name, inv_file, inv_uniform;
  auto* inv_cmd = app.add_subcommand("invariant", "evaluate a numerical invariant");
  inv_cmd->add_option("name", inv_name, "poincare|chow|augchow|kl|klt|z|zt|g|bergman")
      ->required();
  inv_cmd->add_option("file", inv_file, "matroid JSON file");
  inv_cmd->add_option("--uniform", inv_uniform, "uniform matroid k,n instead of a file");

  std::string rl_file, rl_uniform, rl_flat;
  bool rl_group = false;
  auto* relax_cmd =
      app.add_subcommand("relax", "relax a stressed flat; emit the relaxation decomposition");
  relax_cmd->add_option("file", rl_file, "matroid JSON file");
  relax_cmd->add_option("--uniform", rl_uniform, "uniform matroid k,n instead of a file");
  relax_cmd->add_option("--flat", rl_flat, "comma-separated labels of the stressed flat")
      ->required();
  relax_cmd->add_flag("--group", rl_group,
                      "relax the whole orbit of the flat under the automorphism group");

  std::string cc_pos, cc_flag, cc_functor;
  auto* complex_cmd = app.add_subcommand("complex", "chain complexes of a decomposition");
  complex_cmd->require_subcommand(1);
  auto* check_cmd = complex_cmd->add_subcommand(
      "check", "apply a functor to the signed complex and test exactness");
  check_cmd->add_option("decomposition-file", cc_pos, "decomposition JSON file");
  check_cmd->add_option("--decomposition", cc_flag, "decomposition JSON file");
  check_cmd->add_option("--functor", cc_functor, "tau|gros|os|chow|augchow|kl|sigma|phi:<ranks>")
      ->required();

  std::string dp_pos, dp_flag, dp_psi;
  auto* dp_cmd = app.add_subcommand(
      "deltapsi", "compare the projected complex against the face decomposition");
  dp_cmd->add_option("decomposition-file", dp_pos, "decomposition JSON file");
  dp_cmd->add_option("--decomposition", dp_flag, "decomposition JSON file");
  dp_cmd->add_option("--psi", dp_psi, "comma-separated rational functional, one value per element")
      ->required();

  std::string eq_functor, eq_gens;
  std::string et_file, et_uniform, ec_pos, ec_flag;
  auto* eq_cmd = app.add_subcommand("equivariant", "character tables and identity checks");
  eq_cmd->require_subcommand(1);
  auto* table_cmd = eq_cmd->add_subcommand("table", "character table of a functor on a matroid");
  table_cmd->add_option("file", et_file, "matroid JSON file");
  table_cmd->add_option("--uniform", et_uniform, "uniform matroid k,n instead of a file");
  table_cmd->add_option("--functor", eq_functor, "tau|os|chow|augchow|kl|sigma|phi:<ranks>")
      ->required();
  table_cmd->add_option("--gens", eq_gens,
                        "semicolon-separated generators, e.g. 1,0,2,3;2,3,0,1 "
                        "(default: full automorphism group)");
  auto* eqcheck_cmd =
      eq_cmd->add_subcommand("check", "fixed-cell character identity on a decomposition");
  eqcheck_cmd->add_option("decomposition-file", ec_pos, "decomposition JSON file");
  eqcheck_cmd->add_option("--decomposition", ec_flag, "decomposition JSON file");
  eqcheck_cmd->add_option("--functor", eq_functor, "tau|os|chow|augchow|kl|sigma|phi:<ranks>")
      ->required();
  eqcheck_cmd->add_option("--gens", eq_gens,
                          "semicolon-separated generators "
                          "(default: cell-preserving automorphisms of the target)");

  auto* suite_cmd = app.add_subcommand("suite", "batteries of checks");
  suite_cmd->require_subcommand(1);
  suite_cmd->add_subcommand("acceptance", "run the full acceptance battery")
      ->alias("accept");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (info_cmd->parsed()) return run_matroid_info(input_matroid(m_file, m_uniform));
    if (inv_cmd->parsed()) return run_invariant(inv_name, input_matroid(inv_file, inv_uniform));
    if (relax_cmd->parsed())
      return run_relax(input_matroid(rl_file, rl_uniform), rl_flat, rl_group, seed);
    if (check_cmd->parsed())
      return run_complex_check(input_decomposition(cc_pos, cc_flag), cc_functor);
    if (dp_cmd->parsed()) return run_deltapsi(input_decomposition(dp_pos, dp_flag), dp_psi);
    if (table_cmd->parsed())
      return run_equivariant_table(input_matroid(et_file, et_uniform), eq_functor, eq_gens);
    if (eqcheck_cmd->parsed())
      return run_equivariant_check(input_decomposition(ec_pos, ec_flag), eq_functor, eq_gens);
    if (suite_cmd->parsed()) return run_suite_acceptance(seed);
    throw UsageError("no subcommand selected");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
