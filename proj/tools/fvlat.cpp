// Command line front end: constructs free vector lattices over finite
// Boolean algebras and answers canonical-form, cone-membership, lattice
// operation, extension, duality, and functional queries as JSON.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fvlat/fvlat.hpp"

namespace {

using fvlat::Json;

struct AlgebraOptions {
  std::size_t generators = 2;
  std::size_t max_generators = fvlat::Limits{}.max_generators;

  void attach(CLI::App* cmd) {
    cmd->add_option("--generators", generators,
                    "number of free generators of the algebra")
        ->capture_default_str();
    cmd->add_option("--max-generators", max_generators,
                    "cap on the generator count")
        ->capture_default_str();
  }

  fvlat::Limits limits() const {
    fvlat::Limits out;
    out.max_generators = max_generators;
    return out;
  }

  fvlat::FreeBooleanAlgebra build() const {
    return fvlat::free_boolean_algebra(generators, limits());
  }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fvlat::DomainError("cannot open file '" + path + "'");
  return Json::parse(in);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"free vector lattices over finite Boolean algebras"};
  app.require_subcommand(1);

  auto* algebra_cmd = app.add_subcommand("algebra", "algebra constructions");
  algebra_cmd->require_subcommand(1);
  auto* algebra_new = algebra_cmd->add_subcommand("new", "describe a free algebra");
  AlgebraOptions algebra_opts;
  algebra_opts.attach(algebra_new);

  auto* canon_cmd =
      app.add_subcommand("canon", "canonical form of a formal sum");
  std::string canon_text;
  canon_cmd->add_option("sum", canon_text, "formal sum expression")->required();
  AlgebraOptions canon_opts;
  canon_opts.attach(canon_cmd);

  auto* cone_cmd =
      app.add_subcommand("cone", "positive cone membership of a formal sum");
  std::string cone_text;
  std::string cone_mode = "atoms";
  bool cone_original = false;
  cone_cmd->add_option("sum", cone_text, "formal sum expression")->required();
  cone_cmd->add_option("--mode", cone_mode, "membership route")
      ->check(CLI::IsMember({"atoms", "quantifier", "both"}))
      ->capture_default_str();
  cone_cmd->add_flag("--original-form", cone_original,
                     "use the three-quantifier membership form");
  AlgebraOptions cone_opts;
  cone_opts.attach(cone_cmd);

  auto* op_cmd = app.add_subcommand("op", "lattice operations on sums");
  std::string op_name;
  std::vector<std::string> op_args;
  op_cmd->add_option("operation", op_name, "abs, meet, join, or pppsup")
      ->required()
      ->check(CLI::IsMember({"abs", "meet", "join", "pppsup"}));
  op_cmd->add_option("sums", op_args, "one or two formal sums")
      ->required()
      ->expected(1, 2);
  AlgebraOptions op_opts;
  op_opts.attach(op_cmd);

  auto* hom_cmd = app.add_subcommand(
      "hom", "verify and extend a disjointness-additive map");
  std::string hom_target;
  std::string hom_apply;
  hom_cmd->add_option("--target", hom_target, "element map JSON file")
      ->required();
  hom_cmd->add_option("--apply", hom_apply,
                      "formal sum to push through the extension");
  AlgebraOptions hom_opts;
  hom_opts.attach(hom_cmd);

  auto* stone_cmd = app.add_subcommand("stone", "dual space constructions");
  stone_cmd->require_subcommand(1);
  auto* stone_export =
      stone_cmd->add_subcommand("export", "export the dual space");
  std::string stone_format = "json";
  stone_export->add_option("--format", stone_format, "output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  AlgebraOptions stone_opts;
  stone_opts.attach(stone_export);

  auto* riesz_cmd = app.add_subcommand("riesz", "functionals and measures");
  riesz_cmd->require_subcommand(1);
  auto* riesz_check =
      riesz_cmd->add_subcommand("check", "norms and norm additivity");
  std::string riesz_functional;
  std::string riesz_second;
  riesz_check->add_option("--functional", riesz_functional,
                          "point map JSON file with the weights")
      ->required();
  riesz_check->add_option("--second", riesz_second,
                          "second functional for the additivity check");

  auto* urysohn_cmd = app.add_subcommand(
      "urysohn", "truncation separating the level sets of a function");
  // frees the short -h so the function argument can be spelled --h
  urysohn_cmd->set_help_flag("--help", "print help");
  std::string urysohn_file;
  urysohn_cmd->add_option("--h", urysohn_file, "point map JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (algebra_new->parsed()) {
    const auto free = algebra_opts.build();
    print_json(fvlat::algebra_to_json(free.algebra));
    return 0;
  }

  if (canon_cmd->parsed()) {
    const auto free = canon_opts.build();
    const fvlat::FormalSum e =
        fvlat::resolve(fvlat::parse_sum(canon_text), free.algebra);
    const fvlat::LatticeElement v = fvlat::canonicalize(e);
    Json out;
    out["algebra"] = fvlat::algebra_to_json(free.algebra);
    out["valuation"] = fvlat::lattice_element_to_json(v)["valuation"];
    out["strong_unit_bound"] = fvlat::strong_unit_bound(v).str();
    print_json(out);
    return 0;
  }

  if (cone_cmd->parsed()) {
    const auto free = cone_opts.build();
    const fvlat::FormalSum e =
        fvlat::resolve(fvlat::parse_sum(cone_text), free.algebra);
    const fvlat::Limits limits = cone_opts.limits();

    Json out;
    bool member = false;
    if (cone_mode == "atoms" || cone_mode == "both") {
      member = fvlat::cone_contains_atoms(e);
      out["atom_route"] = member;
    }
    if (cone_mode == "quantifier" || cone_mode == "both") {
      const auto form = cone_original ? fvlat::QuantifierForm::original
                                      : fvlat::QuantifierForm::simplified;
      member = fvlat::cone_contains_quantifier(e, form, limits);
      out["quantifier_route"] = member;
      out["quantifier_form"] = cone_original ? "original" : "simplified";
    }
    out["member"] = member;
    if (member) {
      out["certificate"] = fvlat::certificate_to_json(fvlat::cone_certificate(e));
    } else {
      const auto witness = fvlat::cone_negative_witness(e);
      out["witness_atom"] = *witness;
      out["witness_sum"] =
          fvlat::rational_to_string(fvlat::atom_coefficient_sum(e, *witness));
    }
    print_json(out);
    return 0;
  }

  if (op_cmd->parsed()) {
    const auto free = op_opts.build();
    std::vector<fvlat::LatticeElement> inputs;
    for (const auto& text : op_args)
      inputs.push_back(fvlat::canonicalize(
          fvlat::resolve(fvlat::parse_sum(text), free.algebra)));

    const auto arity = (op_name == "abs") ? 1u : 2u;
    if (inputs.size() != arity)
      throw fvlat::DomainError("operation '" + op_name + "' takes " +
                               std::to_string(arity) + " sum(s)");

    Json out;
    out["operation"] = op_name;
    if (op_name == "abs") {
      out["valuation"] =
          fvlat::lattice_element_to_json(inputs[0].abs())["valuation"];
    } else if (op_name == "meet") {
      out["valuation"] = fvlat::lattice_element_to_json(
          inputs[0].meet(inputs[1]))["valuation"];
    } else if (op_name == "join") {
      out["valuation"] = fvlat::lattice_element_to_json(
          inputs[0].join(inputs[1]))["valuation"];
    } else {
      out["valuation"] = fvlat::lattice_element_to_json(
          fvlat::ppp_sup(inputs[0], inputs[1]))["valuation"];
      out["stabilization_bound"] =
          fvlat::ppp_stabilization_bound(inputs[0], inputs[1]).str();
    }
    print_json(out);
    return 0;
  }

  if (hom_cmd->parsed()) {
    const auto free = hom_opts.build();
    const fvlat::ElementMap psi =
        fvlat::element_map_from_json(read_json_file(hom_target), free.algebra);

    Json out;
    out["dimension"] = psi.dimension();
    const bool additive =
        fvlat::verify_disjointness_additive(psi, hom_opts.limits());
    out["disjointness_additive"] = additive;
    if (additive) {
      const fvlat::HomExtension ext = fvlat::extend_hom(psi, hom_opts.limits());
      out["psi_injective"] = ext.psi_injective();
      out["injective"] = ext.injective();
      if (!hom_apply.empty()) {
        const fvlat::FormalSum e =
            fvlat::resolve(fvlat::parse_sum(hom_apply), free.algebra);
        Json applied = Json::array();
        for (const auto& v : ext.apply(e))
          applied.push_back(fvlat::rational_to_string(v));
        out["applied"] = std::move(applied);
      }
    }
    print_json(out);
    return 0;
  }

  if (stone_export->parsed()) {
    const auto free = stone_opts.build();
    const fvlat::StoneSpace space(free.algebra);
    if (stone_format == "dot") {
      std::cout << fvlat::stone_to_dot(space);
    } else {
      print_json(fvlat::stone_to_json(space));
    }
    return 0;
  }

  if (riesz_check->parsed()) {
    const fvlat::FiniteFunctional first =
        fvlat::functional_from_json(read_json_file(riesz_functional));
    Json out;
    out["points"] = first.points();
    if (riesz_second.empty()) {
      out["norm"] = fvlat::rational_to_string(fvlat::operator_norm(first));
      out["positive"] = first.is_positive();
      if (first.is_positive())
        out["total_mass"] = fvlat::rational_to_string(
            fvlat::functional_to_measure(first).total());
    } else {
      const fvlat::FiniteFunctional second =
          fvlat::functional_from_json(read_json_file(riesz_second));
      const fvlat::AlNormReport report = fvlat::al_norm_check(first, second);
      out["norm_left"] = fvlat::rational_to_string(report.norm_left);
      out["norm_right"] = fvlat::rational_to_string(report.norm_right);
      out["norm_sum"] = fvlat::rational_to_string(report.norm_sum);
      out["additive"] = report.additive;
    }
    print_json(out);
    return 0;
  }

  if (urysohn_cmd->parsed()) {
    const fvlat::SimpleFunction h =
        fvlat::simple_function_from_json(read_json_file(urysohn_file));
    print_json(fvlat::simple_function_to_json(fvlat::urysohn_truncation(h)));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fvlat::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const Json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
