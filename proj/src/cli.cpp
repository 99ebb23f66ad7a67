#include "tetra/cli.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tetra/errors.hpp"
#include "tetra/formula.hpp"
#include "tetra/four_valued.hpp"
#include "tetra/koti.hpp"
#include "tetra/predicate.hpp"
#include "tetra/semantics.hpp"

namespace tetra::cli {
namespace {

using json = nlohmann::ordered_json;

std::string trimmed(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

/// Comma-separated list -> trimmed items. Empty input is an empty list.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  if (trimmed(text).empty()) return items;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string piece = trimmed(text.substr(start, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - start));
    if (piece.empty()) throw Error("empty item in list \"" + text + "\"");
    items.push_back(std::move(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

/// "A=0,B=1" -> Valuation. An empty string is the empty valuation.
Valuation parse_valuation_arg(const std::string& text) {
  Valuation v;
  for (const std::string& piece : split_list(text)) {
    const std::size_t eq = piece.find('=');
    if (eq == std::string::npos) {
      throw Error("bad valuation entry \"" + piece + "\": expected letter=bit");
    }
    const std::string name = trimmed(piece.substr(0, eq));
    const std::string bit = trimmed(piece.substr(eq + 1));
    if (bit != "0" && bit != "1") {
      throw Error("bad valuation entry \"" + piece + "\": value must be 0 or 1");
    }
    v.set(SentenceLetter(name), bit == "1");
  }
  return v;
}

json valuation_json(const Valuation& v) {
  json o = json::object();
  for (const auto& [letter, bit] : v.entries()) o[letter.name()] = bit ? 1 : 0;
  return o;
}

json formulas_json(const std::vector<Formula>& fs) {
  json a = json::array();
  for (const Formula& f : fs) a.push_back(render(f));
  return a;
}

std::string symbol_str(FourValue v) { return std::string(1, four_value_symbol(v)); }

std::string cell_text(const TableCell& c) {
  if (c.column) return "(" + symbol_str(c.row) + "," + symbol_str(*c.column) + ")";
  return symbol_str(c.row);
}

json cell_json(const TableCell& c) {
  json o = json::object();
  o["row"] = symbol_str(c.row);
  if (c.column) o["column"] = symbol_str(*c.column);
  return o;
}

json mismatch_json(const AuditMismatch& m) {
  json o = cell_json(m.cell);
  o["computed"] = symbol_str(m.computed);
  o["reference"] = symbol_str(m.reference);
  return o;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) s += sep;
    s += items[i];
  }
  return s;
}

std::vector<std::string> rendered(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  out.reserve(fs.size());
  for (const Formula& f : fs) out.push_back(render(f));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tetralemma toolkit: koti tuples under classical, four-valued and "
               "finite-model semantics",
               "tetra"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  std::size_t max_letters = kDefaultMaxLetters;
  app.add_option("--max-letters", max_letters, "letter-count cap for exhaustive checks");
  std::size_t max_domain = kDefaultMaxDomain;
  app.add_option("--max-domain", max_domain, "largest domain size for finite-model checks");

  const std::vector<std::string> kind_names = {"dilemma",   "trilemma10", "trilemma11",
                                               "modified3", "modified7",  "dual12",
                                               "dual13",    "proper14"};
  const std::vector<std::string> semantics_names = {"pairing", "fde", "b4"};
  const std::vector<std::string> connective_names = {"not", "~",  "and",     "&",
                                                     "or",  "|",  "implies", "->"};

  // parse
  std::string one_formula;
  auto* cmd_parse = app.add_subcommand("parse", "parse a formula, print its canonical form");
  cmd_parse->add_option("formula", one_formula, "formula text")->required();

  // status
  auto* cmd_status =
      app.add_subcommand("status", "tautology / contradiction / generic, with witnesses");
  cmd_status->add_option("formula", one_formula, "formula text")->required();

  // equiv
  std::vector<std::string> two_formulas;
  auto* cmd_equiv = app.add_subcommand("equiv", "classical equivalence of two formulas");
  cmd_equiv->add_option("formulas", two_formulas, "the two formulas")
      ->required()
      ->expected(2);

  // entails
  std::vector<std::string> entail_args;
  auto* cmd_entails =
      app.add_subcommand("entails", "semantic entailment; last argument is the conclusion");
  cmd_entails->add_option("formulas", entail_args, "premises followed by the conclusion")
      ->required();

  // separable
  auto* cmd_separable =
      app.add_subcommand("separable", "do valuations send (a,b) to (0,1) and to (1,0)?");
  cmd_separable->add_option("formulas", two_formulas, "the two formulas")
      ->required()
      ->expected(2);

  // classify
  std::string v0_text, v1_text, v_text;
  auto* cmd_classify =
      app.add_subcommand("classify", "quadrant L1..L4 of a formula under two valuations");
  cmd_classify->add_option("formula", one_formula, "formula text")->required();
  cmd_classify->add_option("--v0", v0_text, "first valuation, e.g. \"A=0,B=1\"")->required();
  cmd_classify->add_option("--v1", v1_text, "second valuation")->required();

  // partition
  std::vector<std::string> many_formulas;
  auto* cmd_partition = app.add_subcommand(
      "partition", "split formulas into L1..L4 (with --v0/--v1) or a two-way split (with --v)");
  cmd_partition->add_option("formulas", many_formulas, "formulas to classify")->required();
  auto* part_v0 = cmd_partition->add_option("--v0", v0_text, "first valuation");
  auto* part_v1 = cmd_partition->add_option("--v1", v1_text, "second valuation");
  auto* part_v = cmd_partition->add_option("--v", v_text, "single valuation (dilemma split)");
  part_v0->needs(part_v1);
  part_v1->needs(part_v0);
  part_v->excludes(part_v0)->excludes(part_v1);

  // koti
  auto* cmd_koti = app.add_subcommand("koti", "tuple constructions");
  cmd_koti->require_subcommand(1);
  std::string kind_text;
  std::vector<std::string> generator_args;

  auto* koti_build = cmd_koti->add_subcommand("build", "instantiate a tuple schema");
  koti_build->add_option("--kind", kind_text, "construction kind")
      ->required()
      ->check(CLI::IsMember(kind_names));
  koti_build->add_option("generators", generator_args, "one or two generator formulas")
      ->required()
      ->expected(1, 2);

  auto* koti_check =
      cmd_koti->add_subcommand("check", "exclusivity and exhaustiveness of a tuple");
  koti_check->add_option("--kind", kind_text, "construction kind")
      ->required()
      ->check(CLI::IsMember(kind_names));
  koti_check->add_option("generators", generator_args, "one or two generator formulas")
      ->required()
      ->expected(1, 2);
  auto* check_v0 =
      koti_check->add_option("--v0", v0_text, "witness valuation sending the generator(s) to (0,1)");
  auto* check_v1 =
      koti_check->add_option("--v1", v1_text, "witness valuation sending the generator(s) to (1,0)");
  check_v0->needs(check_v1);
  check_v1->needs(check_v0);

  auto* koti_duality = cmd_koti->add_subcommand(
      "duality", "negated dual tuple of (~a,~b) matches the modified tuple of (a,b)");
  koti_duality->add_option("formulas", two_formulas, "the two generator formulas")
      ->required()
      ->expected(2);

  // mv
  auto* cmd_mv = app.add_subcommand("mv", "four-valued semantics");
  cmd_mv->require_subcommand(1);
  std::string semantics_text, connective_text, left_text, right_text;

  auto* mv_table = cmd_mv->add_subcommand("table", "print one connective table");
  mv_table->add_option("--semantics", semantics_text, "pairing, fde or b4")
      ->required()
      ->check(CLI::IsMember(semantics_names));
  mv_table->add_option("--connective", connective_text, "not, and, or, implies")
      ->required()
      ->check(CLI::IsMember(connective_names));

  auto* mv_audit = cmd_mv->add_subcommand(
      "audit", "compare generated pairing tables against the transcribed reference tables");

  auto* mv_diff = cmd_mv->add_subcommand("diff", "cells where two semantics disagree");
  mv_diff->add_option("--left", left_text, "first semantics")
      ->required()
      ->check(CLI::IsMember(semantics_names));
  mv_diff->add_option("--right", right_text, "second semantics")
      ->required()
      ->check(CLI::IsMember(semantics_names));
  mv_diff->add_option("--connective", connective_text, "not, and, or, implies")
      ->required()
      ->check(CLI::IsMember(connective_names));

  auto* mv_b4 = cmd_mv->add_subcommand(
      "b4", "check the relabeling carries the b4 tables onto the pairing tables");

  // fol
  auto* cmd_fol = app.add_subcommand("fol", "monadic predicate formulas over finite models");
  cmd_fol->require_subcommand(1);
  std::string domain_text;
  std::vector<std::string> ext_args;

  auto* fol_eval = cmd_fol->add_subcommand("eval", "evaluate a closed formula in one model");
  fol_eval->add_option("formula", one_formula, "monadic formula text")->required();
  fol_eval->add_option("--domain", domain_text, "domain elements, e.g. \"d1,d2\"")->required();
  fol_eval->add_option("--ext", ext_args,
                       "predicate extension, e.g. \"F=d1,d2\" (repeatable; \"F=\" is empty)");

  auto* fol_equiv =
      cmd_fol->add_subcommand("equiv", "agreement on every model up to --max-domain");
  fol_equiv->add_option("formulas", two_formulas, "the two formulas")->required()->expected(2);

  auto* fol_koti = cmd_fol->add_subcommand(
      "koti", "run the predicate tuple battery over domains up to --max-domain");

  try {
    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("tetra");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& s : argv_store) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool as_json = format == "json";

  try {
    if (cmd_parse->parsed()) {
      const Formula f = parse(one_formula);
      if (as_json) {
        json doc;
        doc["formula"] = render(f);
        json ls = json::array();
        for (const SentenceLetter& l : letters(f)) ls.push_back(l.name());
        doc["letters"] = ls;
        emit(out, doc);
      } else {
        out << render(f) << '\n';
      }
      return 0;
    }

    if (cmd_status->parsed()) {
      const Formula f = parse(one_formula);
      const SemanticStatus st = semantic_status(f, max_letters);
      const char* name = st.is_tautology()       ? "tautology"
                         : st.is_contradiction() ? "contradiction"
                                                 : "generic";
      if (as_json) {
        json doc;
        doc["formula"] = render(f);
        doc["status"] = name;
        if (st.is_generic()) {
          doc["witnesses"] = {{"falsifying", valuation_json(*st.falsifying)},
                              {"satisfying", valuation_json(*st.satisfying)}};
        }
        emit(out, doc);
      } else {
        out << render(f) << ": " << name << '\n';
        if (st.is_generic()) {
          out << "  falsifying: " << st.falsifying->to_string() << '\n';
          out << "  satisfying: " << st.satisfying->to_string() << '\n';
        }
      }
      return 0;
    }

    if (cmd_equiv->parsed()) {
      const Formula p = parse(two_formulas[0]);
      const Formula q = parse(two_formulas[1]);
      const EquivalenceVerdict verdict = equivalent(p, q, max_letters);
      if (as_json) {
        json doc;
        doc["formulas"] = formulas_json({p, q});
        doc["equivalent"] = verdict.equivalent;
        if (verdict.counterexample) {
          doc["counterexample"] = valuation_json(*verdict.counterexample);
        }
        emit(out, doc);
      } else if (verdict.equivalent) {
        out << "equivalent\n";
      } else {
        out << "not equivalent\n";
        out << "  counterexample: " << verdict.counterexample->to_string() << '\n';
      }
      return verdict.equivalent ? 0 : 1;
    }

    if (cmd_entails->parsed()) {
      std::vector<Formula> premises;
      for (std::size_t i = 0; i + 1 < entail_args.size(); ++i) {
        premises.push_back(parse(entail_args[i]));
      }
      const Formula conclusion = parse(entail_args.back());
      const EntailmentVerdict verdict = entails(premises, conclusion, max_letters);
      if (as_json) {
        json doc;
        doc["premises"] = formulas_json(premises);
        doc["conclusion"] = render(conclusion);
        doc["entails"] = verdict.holds;
        if (verdict.counterexample) {
          doc["counterexample"] = valuation_json(*verdict.counterexample);
        }
        emit(out, doc);
      } else if (verdict.holds) {
        out << "entails\n";
      } else {
        out << "does not entail\n";
        out << "  counterexample: " << verdict.counterexample->to_string() << '\n';
      }
      return verdict.holds ? 0 : 1;
    }

    if (cmd_separable->parsed()) {
      const Formula a = parse(two_formulas[0]);
      const Formula b = parse(two_formulas[1]);
      const SeparabilityVerdict verdict = are_separable(a, b, max_letters);
      if (as_json) {
        json doc;
        doc["formulas"] = formulas_json({a, b});
        doc["separable"] = verdict.separable;
        if (verdict.separable) {
          doc["witnesses"] = {{"v0", valuation_json(*verdict.v0)},
                              {"v1", valuation_json(*verdict.v1)}};
        }
        emit(out, doc);
      } else if (verdict.separable) {
        out << "separable\n";
        out << "  v0: " << verdict.v0->to_string() << '\n';
        out << "  v1: " << verdict.v1->to_string() << '\n';
      } else {
        out << "not separable\n";
      }
      return verdict.separable ? 0 : 1;
    }

    if (cmd_classify->parsed()) {
      const Formula f = parse(one_formula);
      const Valuation v0 = parse_valuation_arg(v0_text);
      const Valuation v1 = parse_valuation_arg(v1_text);
      const Quadrant q = classify_formula(f, v0, v1);
      if (as_json) {
        json doc;
        doc["formula"] = render(f);
        doc["quadrant"] = quadrant_name(q);
        emit(out, doc);
      } else {
        out << quadrant_name(q) << '\n';
      }
      return 0;
    }

    if (cmd_partition->parsed()) {
      std::vector<Formula> fs;
      fs.reserve(many_formulas.size());
      for (const std::string& text : many_formulas) fs.push_back(parse(text));
      if (part_v->count() > 0) {
        const Valuation v = parse_valuation_arg(v_text);
        const DilemmaPartition split = dilemma_partition(fs, v);
        if (as_json) {
          json doc;
          doc["v"] = valuation_json(v);
          doc["classes"] = {{"0", formulas_json(split.value_false)},
                            {"1", formulas_json(split.value_true)}};
          emit(out, doc);
        } else {
          out << "v: " << v.to_string() << '\n';
          out << "0: " << (split.value_false.empty() ? "(none)" : join(rendered(split.value_false), ", ")) << '\n';
          out << "1: " << (split.value_true.empty() ? "(none)" : join(rendered(split.value_true), ", ")) << '\n';
        }
        return 0;
      }
      if (part_v0->count() == 0) {
        err << "error: partition needs either --v or both --v0 and --v1\n";
        return 2;
      }
      const Valuation v0 = parse_valuation_arg(v0_text);
      const Valuation v1 = parse_valuation_arg(v1_text);
      const PartitionReport report = partition_report(fs, v0, v1);
      if (as_json) {
        json doc;
        doc["v0"] = valuation_json(v0);
        doc["v1"] = valuation_json(v1);
        json classes = json::object();
        for (Quadrant q : {Quadrant::L1, Quadrant::L2, Quadrant::L3, Quadrant::L4}) {
          classes[quadrant_name(q)] = formulas_json(report.members(q));
        }
        doc["classes"] = classes;
        emit(out, doc);
      } else {
        out << "v0: " << v0.to_string() << '\n';
        out << "v1: " << v1.to_string() << '\n';
        for (Quadrant q : {Quadrant::L1, Quadrant::L2, Quadrant::L3, Quadrant::L4}) {
          const auto& members = report.members(q);
          out << quadrant_name(q) << ": "
              << (members.empty() ? "(none)" : join(rendered(members), ", ")) << '\n';
        }
      }
      return 0;
    }

    if (cmd_koti->parsed()) {
      if (koti_duality->parsed()) {
        const Formula a = parse(two_formulas[0]);
        const Formula b = parse(two_formulas[1]);
        const DualityVerdict verdict = duality_check(a, b);
        if (as_json) {
          json doc;
          doc["formulas"] = formulas_json({a, b});
          doc["holds"] = verdict.holds;
          if (verdict.first_mismatch) doc["component"] = *verdict.first_mismatch + 1;
          emit(out, doc);
        } else if (verdict.holds) {
          out << "duality holds\n";
        } else {
          out << "duality fails at component " << (*verdict.first_mismatch + 1) << '\n';
        }
        return verdict.holds ? 0 : 1;
      }

      const KotiKind kind = *koti_kind_from_name(kind_text);
      const Formula a = parse(generator_args[0]);
      std::optional<Formula> b;
      if (generator_args.size() == 2) b = parse(generator_args[1]);
      const KotiTuple tuple = build_koti(kind, a, b);

      if (koti_build->parsed()) {
        if (as_json) {
          json doc;
          doc["kind"] = koti_kind_name(kind);
          doc["generators"] = formulas_json(tuple.generators);
          doc["alternatives"] = formulas_json(tuple.alternatives);
          emit(out, doc);
        } else {
          for (std::size_t i = 0; i < tuple.alternatives.size(); ++i) {
            out << (i + 1) << ": " << render(tuple.alternatives[i]) << '\n';
          }
        }
        return 0;
      }

      // koti check
      const ExclusionVerdict excl = mutual_exclusion(tuple);
      const ExhaustivenessVerdict exh = exhaustiveness(tuple);
      std::optional<RepresentativesVerdict> reps;
      if (check_v0->count() > 0) {
        reps = check_representatives(tuple, parse_valuation_arg(v0_text),
                                     parse_valuation_arg(v1_text));
      }
      const bool ok = excl.exclusive && exh.exhaustive && (!reps || reps->all_distinct);
      if (as_json) {
        json doc;
        doc["kind"] = koti_kind_name(kind);
        doc["alternatives"] = formulas_json(tuple.alternatives);
        doc["exclusivity"] = excl.exclusive;
        if (excl.offending) {
          doc["offending"] = json::array({excl.offending->first + 1, excl.offending->second + 1});
        }
        doc["exhaustiveness"] = exh.exhaustive;
        if (exh.counterexample) doc["counterexample"] = valuation_json(*exh.counterexample);
        if (reps) {
          json names = json::array();
          for (Quadrant q : reps->quadrants) names.push_back(quadrant_name(q));
          doc["representatives"] = {{"quadrants", names}, {"distinct", reps->all_distinct}};
        }
        emit(out, doc);
      } else {
        out << "exclusivity: " << (excl.exclusive ? "true" : "false") << '\n';
        if (excl.offending) {
          out << "  jointly satisfiable: alternatives " << (excl.offending->first + 1)
              << " and " << (excl.offending->second + 1) << '\n';
        }
        out << "exhaustiveness: " << (exh.exhaustive ? "true" : "false") << '\n';
        if (exh.counterexample) {
          out << "  counterexample: " << exh.counterexample->to_string() << '\n';
        }
        if (reps) {
          out << "quadrants:";
          for (Quadrant q : reps->quadrants) out << ' ' << quadrant_name(q);
          out << '\n';
          out << "distinct: " << (reps->all_distinct ? "true" : "false") << '\n';
        }
      }
      return ok ? 0 : 1;
    }

    if (cmd_mv->parsed()) {
      if (mv_table->parsed()) {
        const SemanticsId sem = *semantics_from_name(semantics_text);
        const Connective conn = *connective_from_name(connective_text);
        const TruthTable4 table = full_table(sem, conn);
        if (as_json) {
          json doc;
          doc["semantics"] = semantics_name(sem);
          doc["connective"] = connective_symbol(conn);
          doc["operands"] = json::array({"t", "b", "n", "f"});
          if (table.unary()) {
            json cells = json::array();
            for (FourValue v : table.unary_cells) cells.push_back(symbol_str(v));
            doc["table"] = cells;
          } else {
            json rows = json::array();
            for (const auto& row : table.binary_cells) {
              json cells = json::array();
              for (FourValue v : row) cells.push_back(symbol_str(v));
              rows.push_back(cells);
            }
            doc["table"] = rows;
          }
          emit(out, doc);
        } else {
          out << render_table(table);
        }
        return 0;
      }

      if (mv_audit->parsed()) {
        const AuditReport report = audit_reference_tables();
        const std::pair<Connective, const char*> sections[] = {
            {Connective::Not, "not"},
            {Connective::And, "and"},
            {Connective::Or, "or"},
            {Connective::Implies, "implies"},
        };
        if (as_json) {
          json doc;
          json groups = json::object();
          for (const auto& [conn, name] : sections) {
            json items = json::array();
            for (const AuditMismatch& m : report.mismatches(conn)) {
              items.push_back(mismatch_json(m));
            }
            groups[name] = items;
          }
          doc["mismatches"] = groups;
          emit(out, doc);
        } else {
          for (const auto& [conn, name] : sections) {
            const auto& items = report.mismatches(conn);
            out << connective_symbol(conn) << ": " << items.size() << " mismatch"
                << (items.size() == 1 ? "" : "es") << '\n';
            for (const AuditMismatch& m : items) {
              out << "  " << cell_text(m.cell) << ": computed " << symbol_str(m.computed)
                  << ", reference " << symbol_str(m.reference) << '\n';
            }
          }
        }
        return 0;
      }

      if (mv_diff->parsed()) {
        const SemanticsId left = *semantics_from_name(left_text);
        const SemanticsId right = *semantics_from_name(right_text);
        const Connective conn = *connective_from_name(connective_text);
        const std::vector<TableCell> cells = diff_tables(left, right, conn);
        if (as_json) {
          json doc;
          doc["left"] = semantics_name(left);
          doc["right"] = semantics_name(right);
          doc["connective"] = connective_symbol(conn);
          json items = json::array();
          for (const TableCell& c : cells) items.push_back(cell_json(c));
          doc["cells"] = items;
          emit(out, doc);
        } else {
          out << semantics_name(left) << " vs " << semantics_name(right) << " on "
              << connective_symbol(conn) << ": " << cells.size() << " differing cell"
              << (cells.size() == 1 ? "" : "s") << '\n';
          if (!cells.empty()) {
            std::vector<std::string> names;
            names.reserve(cells.size());
            for (const TableCell& c : cells) names.push_back(cell_text(c));
            out << "  " << join(names, ", ") << '\n';
          }
        }
        return 0;
      }

      if (!mv_b4->parsed()) {
        err << "error: no subcommand\n";
        return 2;
      }
      const B4Correspondence c = b4_correspondence();
      if (as_json) {
        json doc;
        doc["bijective"] = c.bijective;
        doc["tables_match"] = c.tables_match;
        json items = json::array();
        for (const AuditMismatch& m : c.mismatches) items.push_back(mismatch_json(m));
        doc["mismatches"] = items;
        emit(out, doc);
      } else {
        out << "bijective: " << (c.bijective ? "true" : "false") << '\n';
        out << "tables match: " << (c.tables_match ? "true" : "false") << '\n';
        for (const AuditMismatch& m : c.mismatches) {
          out << "  " << cell_text(m.cell) << ": b4 " << symbol_str(m.computed) << ", pairing "
              << symbol_str(m.reference) << '\n';
        }
      }
      return c.passed() ? 0 : 1;
    }

    if (cmd_fol->parsed()) {
      if (fol_eval->parsed()) {
        const MonadicFormula f = parse_monadic(one_formula);
        FiniteModel m(split_list(domain_text));
        for (const std::string& ext : ext_args) {
          const std::size_t eq = ext.find('=');
          if (eq == std::string::npos) {
            throw Error("bad extension \"" + ext + "\": expected NAME=elements");
          }
          m.set_extension(trimmed(ext.substr(0, eq)), split_list(ext.substr(eq + 1)));
        }
        const bool value = eval_model(f, m);
        if (as_json) {
          json doc;
          doc["formula"] = render(f);
          doc["model"] = m.to_string();
          doc["value"] = value ? 1 : 0;
          emit(out, doc);
        } else {
          out << (value ? 1 : 0) << '\n';
        }
        return 0;
      }

      if (fol_equiv->parsed()) {
        const MonadicFormula p = parse_monadic(two_formulas[0]);
        const MonadicFormula q = parse_monadic(two_formulas[1]);
        const FinEquivalenceVerdict verdict = equivalent_fin(p, q, max_domain);
        if (as_json) {
          json doc;
          doc["formulas"] = json::array({render(p), render(q)});
          doc["max_domain"] = max_domain;
          doc["equivalent"] = verdict.equivalent;
          if (verdict.countermodel) doc["countermodel"] = verdict.countermodel->to_string();
          emit(out, doc);
        } else if (verdict.equivalent) {
          out << "equivalent up to n=" << max_domain << '\n';
        } else {
          out << "not equivalent\n";
          out << "  countermodel: " << verdict.countermodel->to_string() << '\n';
        }
        return verdict.equivalent ? 0 : 1;
      }

      if (!fol_koti->parsed()) {
        err << "error: no subcommand\n";
        return 2;
      }
      const PredicateKotiReport report = predicate_koti_check(max_domain);
      if (as_json) {
        json doc;
        doc["max_domain"] = report.max_n;
        doc["passed"] = report.passed();
        json items = json::array();
        for (const PredicateCheck& check : report.checks) {
          json item;
          item["name"] = check.name;
          item["passed"] = check.passed;
          if (check.model) item["model"] = check.model->to_string();
          items.push_back(item);
        }
        doc["checks"] = items;
        emit(out, doc);
      } else {
        std::size_t passed = 0;
        for (const PredicateCheck& check : report.checks) {
          if (check.passed) ++passed;
          out << (check.passed ? "[ok] " : "[fail] ") << check.name;
          if (check.model) {
            out << " (" << (check.passed ? "witness" : "model") << ": "
                << check.model->to_string() << ")";
          }
          out << '\n';
        }
        out << passed << " of " << report.checks.size() << " checks passed\n";
      }
      return report.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tetra::cli
