// Command-line front end for the quandle toolkit: groups, finite quandles,
// Dehn quandles, homological quandles, involutory-presentation completion,
// knot colorings, and free-quandle normal forms.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dehnkit/completion.hpp"
#include "dehnkit/constructions.hpp"
#include "dehnkit/error.hpp"
#include "dehnkit/freeq.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/homsym.hpp"
#include "dehnkit/knots.hpp"
#include "dehnkit/quandles.hpp"
#include "dehnkit/smith.hpp"

namespace {

using nlohmann::json;

int g_exit = 0;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dehnkit::Error(dehnkit::ErrorKind::bad_input, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

dehnkit::FiniteGroup load_group(const std::string& path) {
  return dehnkit::generate_group(dehnkit::parse_generators(slurp(path)),
                                 dehnkit::group_cap_from_env());
}

dehnkit::FiniteQuandle load_quandle(const std::string& path) {
  return dehnkit::quandle_from_json_text(slurp(path));
}

int element_of(const dehnkit::FiniteGroup& g, const std::string& literal) {
  if (literal.find("mod=") == 0) return g.index_of(dehnkit::parse_matrix(literal));
  int degree = g.perm(g.identity()).degree();
  return g.index_of(dehnkit::parse_cycles(literal, degree));
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    json out = j;
    out["v"] = 1;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text;
  }
}

json quandle_json(const dehnkit::FiniteQuandle& q) {
  json j;
  j["size"] = q.n;
  j["table"] = q.table;
  if (!q.labels.empty()) j["labels"] = q.labels;
  return j;
}

void write_quandle(const dehnkit::FiniteQuandle& q, const std::string& path) {
  std::ofstream out(path);
  out << dehnkit::quandle_to_json_text(q) << "\n";
}

std::string side_name(dehnkit::OrderSide s) {
  switch (s) {
    case dehnkit::OrderSide::left: return "left";
    case dehnkit::OrderSide::right: return "right";
    default: return "bi";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dehnkit - Dehn quandles of groups and surfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  unsigned long long seed = 0;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "seed for randomized checks (reserved)");

  // group ------------------------------------------------------------------
  auto* group = app.add_subcommand("group", "finite group engine");
  group->require_subcommand(1);
  std::string group_in, group_of;
  auto* g_gen = group->add_subcommand("generate", "closure of the generators");
  g_gen->add_option("--in", group_in, "generator file")->required();
  auto* g_cls = group->add_subcommand("classes", "conjugacy class of an element");
  g_cls->add_option("--in", group_in, "generator file")->required();
  g_cls->add_option("--of", group_of, "element literal (cycles or matrix)");
  auto* g_cen = group->add_subcommand("center", "center of the group");
  g_cen->add_option("--in", group_in, "generator file")->required();

  // quandle ----------------------------------------------------------------
  auto* quandle = app.add_subcommand("quandle", "finite quandle queries");
  quandle->require_subcommand(1);
  std::string q_in, q_with, q_side = "right";
  auto* q_val = quandle->add_subcommand("validate", "check the three axioms");
  q_val->add_option("--in", q_in)->required();
  auto* q_comp = quandle->add_subcommand("components", "inner-group orbits");
  q_comp->add_option("--in", q_in)->required();
  auto* q_inn = quandle->add_subcommand("inn", "inner automorphism group");
  q_inn->add_option("--in", q_in)->required();
  auto* q_aut = quandle->add_subcommand("aut", "full automorphism group");
  q_aut->add_option("--in", q_in)->required();
  auto* q_exp = quandle->add_subcommand("exponent", "least n with S_y^n = id");
  q_exp->add_option("--in", q_in)->required();
  auto* q_ord = quandle->add_subcommand("order-search", "exhaustive linear-order search");
  q_ord->add_option("--in", q_in)->required();
  q_ord->add_option("--side", q_side, "left|right|bi");
  auto* q_iso = quandle->add_subcommand("iso", "isomorphism search");
  q_iso->add_option("--in", q_in)->required();
  q_iso->add_option("--with", q_with)->required();

  // dehn -------------------------------------------------------------------
  auto* dehn = app.add_subcommand("dehn", "Dehn quandles of groups");
  dehn->require_subcommand(1);
  std::string d_group, d_quandle, d_out, d_csv;
  std::vector<std::string> d_seeds;
  auto add_dehn_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--group", d_group, "generator file")->required();
    cmd->add_option("--seed-el", d_seeds, "seed element literal (repeatable)")
        ->required();
  };
  auto* d_build = dehn->add_subcommand("build", "build D(A^G)");
  add_dehn_inputs(d_build);
  d_build->add_option("--out", d_out, "write the table as JSON");
  d_build->add_option("--csv", d_csv, "write the table as CSV");
  auto* d_env = dehn->add_subcommand("env-ab", "enveloping-group abelianization");
  add_dehn_inputs(d_env);
  auto* d_inn = dehn->add_subcommand("inn-check", "Inn(D) vs G/Z(G)");
  add_dehn_inputs(d_inn);
  auto* d_wit = dehn->add_subcommand("witness", "Dehn witness for a finite quandle");
  d_wit->add_option("--in", d_quandle, "quandle JSON")->required();

  // hom --------------------------------------------------------------------
  auto* hom = app.add_subcommand("hom", "homological quandles and Sp(2g, Z_q)");
  hom->require_subcommand(1);
  int h_g = 1;
  long long h_n = 2, h_q = 2;
  std::string h_out, h_csv;
  auto* h_hq = hom->add_subcommand("hquandle", "P_{g,n} as a finite quandle");
  h_hq->add_option("--g", h_g)->required();
  h_hq->add_option("--n", h_n)->required();
  h_hq->add_option("--out", h_out, "write the table as JSON");
  h_hq->add_option("--csv", h_csv, "write the table as CSV");
  auto* h_sp = hom->add_subcommand("sp", "order of Sp(2g, Z_q)");
  h_sp->add_option("--g", h_g)->required();
  h_sp->add_option("--q", h_q)->required();
  auto* h_dsp = hom->add_subcommand("dehn-of-sp", "Dehn quandle of the transvection class");
  h_dsp->add_option("--g", h_g)->required();
  h_dsp->add_option("--q", h_q)->required();
  auto* h_lam = hom->add_subcommand("lambda-check", "transvection realization check");
  h_lam->add_option("--g", h_g)->required();
  h_lam->add_option("--q", h_q)->required();

  // complete ---------------------------------------------------------------
  auto* comp = app.add_subcommand("complete", "involutory presentation completion");
  std::string c_preset, c_in, c_out, c_csv;
  bool c_lemmas = false, c_table1 = false, c_iso = false, c_witnesses = false;
  std::size_t c_cap = dehnkit::kDefaultCompletionCap;
  comp->add_option("--preset", c_preset, "humphries1|humphries2|humphries3");
  comp->add_option("--in", c_in, "presentation file");
  comp->add_option("--cap", c_cap, "element cap");
  comp->add_option("--out", c_out, "write the completed table as JSON");
  comp->add_option("--csv", c_csv, "write the completed table as CSV");
  comp->add_flag("--verify-lemmas", c_lemmas, "check the chain-identity lemmas");
  comp->add_flag("--verify-table1", c_table1, "check the genus-3 product table");
  comp->add_flag("--iso-homological", c_iso, "isomorphism with P_{g,2}");
  comp->add_flag("--witnesses", c_witnesses, "list witness words");

  // knot -------------------------------------------------------------------
  auto* knot = app.add_subcommand("knot", "diagram colorings");
  knot->require_subcommand(1);
  std::string k_in, k_quandle;
  int k_dihedral = 0, k_bound = 10;
  auto* k_color = knot->add_subcommand("color", "count colorings");
  k_color->add_option("--in", k_in, "diagram file")->required();
  k_color->add_option("--quandle", k_quandle, "quandle JSON");
  k_color->add_option("--dihedral", k_dihedral, "use the dihedral quandle R_n");
  auto* k_tref = knot->add_subcommand("trefoil-check", "torus-model verification");
  k_tref->add_option("--bound", k_bound, "entry bound for reachability");

  // free -------------------------------------------------------------------
  auto* fr = app.add_subcommand("free", "free quandle normal forms");
  fr->require_subcommand(1);
  std::string f_word, f_u, f_v;
  auto* f_norm = fr->add_subcommand("normalize", "free quandle normal form");
  f_norm->add_option("--word", f_word, "word like a*b*-c")->required();
  auto* f_mul = fr->add_subcommand("multiply", "free involutory product");
  f_mul->add_option("--u", f_u, "word like x*y")->required();
  f_mul->add_option("--v", f_v, "word like y*z")->required();
  auto* f_core = fr->add_subcommand("core-embed", "palindromic image in the free group");
  f_core->add_option("--word", f_word, "involutory word like x*y")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g_gen->parsed()) {
      auto g = load_group(group_in);
      emit(as_json, json{{"order", g.size()}},
           "order " + std::to_string(g.size()) + "\n");
    } else if (g_cls->parsed()) {
      auto g = load_group(group_in);
      int x = group_of.empty() ? g.generator_indices().front()
                               : element_of(g, group_of);
      auto cls = conjugacy_class(g, x);
      std::ostringstream out;
      out << "class of " << g.element_name(x) << " has size " << cls.size() << "\n";
      json names = json::array();
      for (int e : cls) {
        out << "  " << g.element_name(e) << "\n";
        names.push_back(g.element_name(e));
      }
      emit(as_json, json{{"size", cls.size()}, {"elements", names}}, out.str());
    } else if (g_cen->parsed()) {
      auto g = load_group(group_in);
      auto z = center(g);
      std::ostringstream out;
      out << "center has order " << z.size() << "\n";
      for (int e : z) out << "  " << g.element_name(e) << "\n";
      emit(as_json, json{{"order", z.size()}}, out.str());
    } else if (q_val->parsed()) {
      auto text = slurp(q_in);
      json j = json::parse(text);
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      auto violation = dehnkit::check_axioms(table);
      if (violation) {
        emit(as_json, json{{"valid", false}, {"violation", violation->describe()}},
             "invalid: " + violation->describe() + "\n");
        g_exit = 1;
      } else {
        emit(as_json, json{{"valid", true}},
             "valid quandle of size " + std::to_string(table.size()) + "\n");
      }
    } else if (q_comp->parsed()) {
      auto q = load_quandle(q_in);
      auto comps = dehnkit::components(q);
      std::ostringstream out;
      out << comps.size() << " component(s)\n";
      for (const auto& c : comps) {
        out << " ";
        for (int x : c) out << ' ' << q.label(x);
        out << "\n";
      }
      emit(as_json, json{{"components", comps}}, out.str());
    } else if (q_inn->parsed()) {
      auto q = load_quandle(q_in);
      auto inn = dehnkit::inner_group(q, dehnkit::group_cap_from_env());
      emit(as_json, json{{"order", inn.size()}},
           "Inn has order " + std::to_string(inn.size()) + "\n");
    } else if (q_aut->parsed()) {
      auto q = load_quandle(q_in);
      auto aut = dehnkit::aut_group(q);
      emit(as_json, json{{"order", aut.size()}},
           "Aut has order " + std::to_string(aut.size()) + "\n");
    } else if (q_exp->parsed()) {
      auto q = load_quandle(q_in);
      int e = dehnkit::quandle_exponent(q);
      emit(as_json, json{{"exponent", e}}, "exponent " + std::to_string(e) + "\n");
    } else if (q_ord->parsed()) {
      auto q = load_quandle(q_in);
      dehnkit::OrderSide side = q_side == "left"  ? dehnkit::OrderSide::left
                                : q_side == "bi"  ? dehnkit::OrderSide::bi
                                                  : dehnkit::OrderSide::right;
      auto order = dehnkit::search_linear_order(q, side);
      if (order) {
        std::ostringstream out;
        out << side_name(side) << " order exists:";
        for (int x : *order) out << ' ' << q.label(x);
        out << "\n";
        emit(as_json, json{{"side", side_name(side)}, {"order", *order}}, out.str());
      } else {
        emit(as_json, json{{"side", side_name(side)}, {"order", nullptr}},
             "no " + side_name(side) + " order (exhausted)\n");
      }
    } else if (q_iso->parsed()) {
      auto qa = load_quandle(q_in);
      auto qb = load_quandle(q_with);
      auto iso = dehnkit::find_isomorphism(qa, qb);
      if (iso)
        emit(as_json, json{{"isomorphic", true}, {"map", *iso}}, "isomorphic\n");
      else
        emit(as_json, json{{"isomorphic", false}}, "not isomorphic\n");
    } else if (d_build->parsed() || d_env->parsed() || d_inn->parsed()) {
      auto g = load_group(d_group);
      std::vector<int> seeds;
      for (const auto& lit : d_seeds) seeds.push_back(element_of(g, lit));
      auto d = dehnkit::dehn_quandle(std::move(g), seeds);
      if (d_build->parsed()) {
        auto counts = dehnkit::class_counts(d);
        std::ostringstream out;
        out << "Dehn quandle of size " << d.quandle.n << ", c = " << counts.c
            << ", ct = " << counts.ct << "\n";
        if (!d_out.empty()) write_quandle(d.quandle, d_out);
        if (!d_csv.empty()) {
          std::ofstream csv(d_csv);
          csv << dehnkit::quandle_to_csv(d.quandle);
        }
        emit(as_json,
             json{{"size", d.quandle.n}, {"c", counts.c}, {"ct", counts.ct}},
             out.str());
      } else if (d_env->parsed()) {
        auto env = dehnkit::env_abelianization(d.quandle);
        std::ostringstream out;
        out << "free rank " << env.free_rank << ", invariant factors";
        json factors = json::array();
        for (const auto& f : env.invariant_factors) {
          out << ' ' << f.str();
          factors.push_back(f.str());
        }
        out << (env.torsion_free() ? " (torsion free)\n" : " (has torsion)\n");
        emit(as_json,
             json{{"free_rank", env.free_rank},
                  {"factors", factors},
                  {"torsion_free", env.torsion_free()}},
             out.str());
      } else {
        auto report = dehnkit::inn_equals_central_quotient(d);
        std::ostringstream out;
        out << "Inn(D) order " << report.inn_order << ", G/Z order "
            << report.quotient_order << ": "
            << (report.ok ? (report.iso_checked ? "isomorphic"
                                                : "orders match (iso not searched)")
                          : "MISMATCH")
            << "\n";
        emit(as_json,
             json{{"ok", report.ok},
                  {"inn_order", report.inn_order},
                  {"quotient_order", report.quotient_order},
                  {"iso_checked", report.iso_checked}},
             out.str());
        if (!report.ok) g_exit = 1;
      }
    } else if (d_wit->parsed()) {
      auto q = load_quandle(d_quandle);
      auto w = dehnkit::dehn_witness(q);
      if (w.determined) {
        emit(as_json,
             json{{"determined", true},
                  {"inner_group_order", w.witness->group.size()}},
             "witness found inside Inn(Q) of order " +
                 std::to_string(w.witness->group.size()) + "\n");
      } else {
        emit(as_json, json{{"determined", false}},
             "undetermined (quandle is not faithful)\n");
      }
    } else if (h_hq->parsed()) {
      auto h = dehnkit::hquandle(h_g, h_n);
      if (!h_out.empty()) write_quandle(h.quandle, h_out);
      if (!h_csv.empty()) {
        std::ofstream csv(h_csv);
        csv << dehnkit::quandle_to_csv(h.quandle);
      }
      emit(as_json, json{{"size", h.quandle.n}},
           "P_{" + std::to_string(h_g) + "," + std::to_string(h_n) +
               "} has size " + std::to_string(h.quandle.n) + "\n");
    } else if (h_sp->parsed()) {
      auto sp = dehnkit::sp_group(h_g, h_q, dehnkit::group_cap_from_env());
      emit(as_json, json{{"order", sp.size()}},
           "Sp(" + std::to_string(2 * h_g) + ",Z_" + std::to_string(h_q) +
               ") has order " + std::to_string(sp.size()) + "\n");
    } else if (h_dsp->parsed()) {
      auto d = dehnkit::dehn_of_sp(h_g, h_q, dehnkit::group_cap_from_env());
      auto comps = dehnkit::components(d.quandle);
      emit(as_json, json{{"size", d.quandle.n}, {"components", comps.size()}},
           "Dehn quandle of the transvection class: size " +
               std::to_string(d.quandle.n) + ", " + std::to_string(comps.size()) +
               " component(s)\n");
    } else if (h_lam->parsed()) {
      auto rep = dehnkit::lambda_check(h_g, h_q, dehnkit::group_cap_from_env());
      emit(as_json,
           json{{"ok", rep.ok},
                {"quandle_size", rep.quandle_size},
                {"class_size", rep.class_size}},
           std::string(rep.ok ? "true" : "FALSE") + ": |P| = " +
               std::to_string(rep.quandle_size) + ", |class| = " +
               std::to_string(rep.class_size) + "\n");
      if (!rep.ok) g_exit = 1;
    } else if (comp->parsed()) {
      dehnkit::InvPresentation pres;
      int genus = 0;
      if (!c_preset.empty()) {
        if (c_preset.rfind("humphries", 0) != 0)
          throw dehnkit::Error(dehnkit::ErrorKind::bad_input,
                               "unknown preset: " + c_preset);
        genus = std::stoi(c_preset.substr(9));
        pres = dehnkit::relations_from_graph(dehnkit::humphries_graph(genus));
      } else if (!c_in.empty()) {
        pres = dehnkit::parse_presentation(slurp(c_in));
      } else {
        throw dehnkit::Error(dehnkit::ErrorKind::bad_input,
                             "complete needs --preset or --in");
      }
      auto result = dehnkit::complete(pres, c_cap);
      json j{{"size", result.quandle.n},
             {"merges", result.stats.merges},
             {"elements_created", result.stats.elements_created}};
      std::ostringstream out;
      out << "completed: size " << result.quandle.n << " ("
          << result.stats.elements_created << " created, " << result.stats.merges
          << " merged)\n";
      if (c_witnesses) {
        for (const auto& w : result.witnesses) out << "  " << w << "\n";
        j["witnesses"] = result.witnesses;
      }
      if (!c_out.empty()) write_quandle(result.quandle, c_out);
      if (!c_csv.empty()) {
        std::ofstream csv(c_csv);
        csv << dehnkit::quandle_to_csv(result.quandle);
      }
      if (c_lemmas) {
        auto rep = dehnkit::verify_lemma_identities(result, genus ? genus : 3);
        out << "lemmas: " << rep.checked - rep.failed << "/" << rep.checked
            << " identities hold\n";
        j["lemmas_checked"] = rep.checked;
        j["lemmas_failed"] = rep.failed;
        if (rep.failed) g_exit = 1;
      }
      if (c_table1) {
        auto rep = dehnkit::verify_table1(result);
        out << "table: " << rep.checked - static_cast<int>(rep.mismatches.size())
            << "/" << rep.checked << " cells match\n";
        for (const auto& m : rep.mismatches)
          out << "  mismatch at (" << m.row << ", " << m.column << "): expected "
              << m.expected << ", got " << m.got << "\n";
        j["cells_checked"] = rep.checked;
        j["cells_mismatched"] = rep.mismatches.size();
        if (!rep.ok()) g_exit = 1;
      }
      if (c_iso) {
        int g_for_iso = genus ? genus : 3;
        auto iso = dehnkit::quotient_iso_to_homological(result, g_for_iso);
        out << "homological iso: " << (iso ? "found" : "none") << "\n";
        j["iso_homological"] = iso.has_value();
        if (!iso) g_exit = 1;
      }
      emit(as_json, j, out.str());
    } else if (k_color->parsed()) {
      auto d = dehnkit::parse_diagram(slurp(k_in));
      dehnkit::FiniteQuandle q = k_dihedral > 0 ? dehnkit::dihedral_quandle(k_dihedral)
                                                : load_quandle(k_quandle);
      auto count = dehnkit::coloring_count(d, q);
      emit(as_json, json{{"colorings", count}},
           std::to_string(count) + " colorings\n");
    } else if (k_tref->parsed()) {
      auto rep = dehnkit::trefoil_torus_check(k_bound);
      std::ostringstream out;
      out << "braid relations: " << (rep.braid_relations ? "ok" : "FAIL") << "\n"
          << "generation: " << rep.classes_reached << "/" << rep.classes_expected
          << " classes reached\n"
          << "freeness probe: " << (rep.freeness ? "ok" : "FAIL") << " ("
          << rep.first_collision << ")\n";
      emit(as_json,
           json{{"ok", rep.ok()},
                {"braid", rep.braid_relations},
                {"reached", rep.classes_reached},
                {"expected", rep.classes_expected},
                {"freeness", rep.freeness}},
           out.str());
      if (!rep.ok()) g_exit = 1;
    } else if (f_norm->parsed()) {
      auto e = dehnkit::free_normalize(dehnkit::parse_quandle_word(f_word));
      std::string conj = dehnkit::format_group_word(e.conjugator);
      emit(as_json, json{{"base", e.base}, {"conjugator", conj}},
           "base " + e.base + ", conjugator " + conj + "\n");
    } else if (f_mul->parsed()) {
      auto parse_inv = [](const std::string& s) {
        auto w = dehnkit::parse_quandle_word(s);
        std::vector<std::string> letters{w.base};
        for (const auto& [sym, sign] : w.ops) letters.push_back(sym);
        return dehnkit::inv_normalize(std::move(letters));
      };
      auto r = dehnkit::inv_multiply(parse_inv(f_u), parse_inv(f_v));
      emit(as_json, json{{"word", dehnkit::format_involutory_word(r)}},
           dehnkit::format_involutory_word(r) + "\n");
    } else if (f_core->parsed()) {
      auto w = dehnkit::parse_quandle_word(f_word);
      std::vector<std::string> letters{w.base};
      for (const auto& [sym, sign] : w.ops) letters.push_back(sym);
      auto img = dehnkit::core_embed(dehnkit::inv_normalize(std::move(letters)));
      emit(as_json, json{{"image", dehnkit::format_group_word(img)}},
           dehnkit::format_group_word(img) + "\n");
    }
  } catch (const dehnkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == dehnkit::ErrorKind::parse_error ||
                   e.kind() == dehnkit::ErrorKind::bad_input
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
