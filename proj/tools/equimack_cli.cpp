// Command-line front end: every subcommand prints deterministic text, JSON, or
// DOT, and the exit code reports the verification outcome (0 clean, 1 a
// checked property failed, 2 bad input, 3 a cap or representability limit).
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "equimack/agmod.hpp"
#include "equimack/boxhom.hpp"
#include "equimack/changegroups.hpp"
#include "equimack/json_io.hpp"
#include "equimack/picard.hpp"

using namespace equimack;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;

std::vector<long> parseLongs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw InvalidInputError("expected a comma-separated list of integers, got '" + csv + "'");
    }
  }
  if (out.empty()) throw InvalidInputError("empty integer list");
  return out;
}

IntVec parseTwistValues(const std::string& csv) {
  IntVec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Int(item));
    } catch (const std::exception&) {
      throw InvalidInputError("expected a comma-separated list of integers, got '" + csv + "'");
    }
  }
  return out;
}

LatticePtr latticeFor(const std::string& groupCsv, long cap) {
  return subgroup_lattice(make_group(parseLongs(groupCsv)), cap);
}

Twist twistFor(const LatticePtr& lat, const std::string& csv) {
  if (csv.empty()) return unit_twist(lat);
  return make_twist(lat, parseTwistValues(csv));
}

// Echoed by every twist-accepting command so the index convention is explicit.
Json subgroupOrdering(const SubgroupLattice& lat) {
  Json order = Json::array();
  for (const auto& s : lat.subs)
    order.push_back(Json{{"index", s.index}, {"order", s.order}, {"elements", s.elements}});
  return order;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string group;
  std::string twistA, twistB, twist;
  std::string format = "json";
  long normal = -1;
  long bound = 0;
  long cap = 512;
  unsigned long seed = 1;
};

int runLattice(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  if (opt.format == "dot") {
    std::cout << lattice_to_dot(*lat);
    return kExitClean;
  }
  emit(lattice_to_json(*lat));
  return kExitClean;
}

int runBurnside(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Json levels = Json::array();
  for (int h = 0; h < lat->size(); ++h)
    levels.push_back(Json{{"subgroup", h},
                          {"basis", lat->below[h]},
                          {"multiplication", matrix_to_json(multiplication_matrix(lat, h))},
                          {"marks", matrix_to_json(marks_matrix(lat, h))}});
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"levels", levels}});
  return kExitClean;
}

int runMackeyCheck(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twist);
  ValidationReport rep = check_axioms(twisted_burnside(a));
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"twist", twist_to_json(a)},
            {"report", report_to_json(rep)}});
  return rep.ok() ? kExitClean : kExitVerificationFailed;
}

int runTwistNormalize(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twistA);
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"input", twist_to_json(a)},
            {"normalized", twist_to_json(normalize(a))}});
  return kExitClean;
}

int runTwistEquiv(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twistA);
  Twist b = twistFor(lat, opt.twistB);
  bool eq = equivalent(a, b);
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"a", twist_to_json(a)},
            {"b", twist_to_json(b)},
            {"equivalent", eq}});
  return eq ? kExitClean : kExitVerificationFailed;
}

int runTwistWitness(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twistA);
  Twist b = twistFor(lat, opt.twistB);
  auto w = witness_iso(a, b);
  Json out{{"group", group_to_json(lat->group)},
           {"subgroup_ordering", subgroupOrdering(*lat)},
           {"a", twist_to_json(a)},
           {"b", twist_to_json(b)},
           {"equivalent", w.has_value()}};
  if (w) out["witness"] = morphism_to_json(*w);
  emit(out);
  return w ? kExitClean : kExitVerificationFailed;
}

int runBoxVerify(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twistA);
  Twist b = twistFor(lat, opt.twistB);
  ValidationReport rep = verify_box_law(a, b, default_probe_family(a, b, opt.seed));
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"a", twist_to_json(a)},
            {"b", twist_to_json(b)},
            {"seed", opt.seed},
            {"probes", 5},
            {"report", report_to_json(rep)}});
  return rep.ok() ? kExitClean : kExitVerificationFailed;
}

int runPhi(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  if (opt.normal < 0 || opt.normal >= lat->size())
    throw InvalidInputError("--normal must index a subgroup of the lattice");
  auto q = quotient(lat, int(opt.normal));
  Twist a = twistFor(lat, opt.twist);
  auto gfp = geometric_fixed_points(twisted_burnside(a), q);
  Json ranks = Json::array();
  for (int hq = 0; hq < q.quotLattice->size(); ++hq)
    ranks.push_back(Json{{"subgroup", hq}, {"rank", gfp.phi.rank(hq)}});
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"normal", opt.normal},
            {"quotient", group_to_json(q.quot)},
            {"twist", twist_to_json(a)},
            {"phi_twist", twist_to_json(phi_twist(a, q))},
            {"levels", ranks},
            {"functor", functor_to_json(gfp.phi)}});
  return kExitClean;
}

int runQind(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  if (opt.normal < 0 || opt.normal >= lat->size())
    throw InvalidInputError("--normal must index a subgroup of the lattice");
  auto q = quotient(lat, int(opt.normal));
  Twist alpha = twistFor(q.quotLattice, opt.twist);
  Twist up = qind_twisted(alpha, q);
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"normal", opt.normal},
            {"quotient", group_to_json(q.quot)},
            {"quotient_twist", twist_to_json(alpha)},
            {"extended_twist", twist_to_json(up)}});
  return kExitClean;
}

int runPicard(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  PicardGroup pic = picard_group(lat);
  Json reps = Json::array();
  for (const auto& c : pic.classes) reps.push_back(twist_to_json(c.representative)["values"]);
  Json out{{"group", group_to_json(lat->group)},
           {"subgroup_ordering", subgroupOrdering(*lat)},
           {"order", picard_order(lat).get_str()},
           {"representatives", reps}};
  int code = kExitClean;
  if (opt.bound > 0) {
    ValidationReport rep = verify_classification(lat, opt.bound);
    out["classification"] = report_to_json(rep);
    out["bound"] = opt.bound;
    if (!rep.ok()) code = kExitVerificationFailed;
  }
  emit(out);
  return code;
}

int runSplit(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  if (opt.normal < 0 || opt.normal >= lat->size())
    throw InvalidInputError("--normal must index a subgroup of the lattice");
  ValidationReport rep = verify_splitting(lat, int(opt.normal));
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"normal", opt.normal},
            {"report", report_to_json(rep)}});
  return rep.ok() ? kExitClean : kExitVerificationFailed;
}

int runModuleTable(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twist);
  AGModule m = twisted_module(a);
  ValidationReport rep = check_module_axioms(m);
  Json actions = Json::array();
  for (int h = 0; h < lat->size(); ++h)
    actions.push_back(Json{{"acting_orbit", h}, {"matrix", matrix_to_json(m.action[h])}});
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"twist", twist_to_json(a)},
            {"basis", m.basis},
            {"actions", actions},
            {"report", report_to_json(rep)}});
  return rep.ok() ? kExitClean : kExitVerificationFailed;
}

int runModuleCounit(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twist);
  bool ok = check_counit(twisted_module(a));
  emit(Json{{"group", group_to_json(lat->group)},
            {"subgroup_ordering", subgroupOrdering(*lat)},
            {"twist", twist_to_json(a)},
            {"counit_isomorphism", ok}});
  return ok ? kExitClean : kExitVerificationFailed;
}

int runRenderLewis(const Options& opt) {
  auto lat = latticeFor(opt.group, opt.cap);
  Twist a = twistFor(lat, opt.twist);
  std::cout << render_lewis(twisted_burnside(a));
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with Burnside rings, Mackey functors, and their twisted forms"};
  app.require_subcommand(1);

  Options opt;
  int (*handler)(const Options&) = nullptr;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--group", opt.group, "invariant factors, e.g. 2,2 or 9")->required();
    cmd->add_option("--cap", opt.cap, "group order cap");
  };

  auto* lattice = app.add_subcommand("lattice", "subgroup lattice as JSON or DOT");
  addCommon(lattice);
  lattice->add_option("--format", opt.format, "json or dot");
  lattice->callback([&] { handler = runLattice; });

  auto* burnside = app.add_subcommand("burnside", "multiplication and marks tables");
  addCommon(burnside);
  burnside->callback([&] { handler = runBurnside; });

  auto* mackey = app.add_subcommand("mackey", "Mackey functor operations");
  auto* mackeyCheck = mackey->add_subcommand("check", "axiom report for A or A^a");
  addCommon(mackeyCheck);
  mackeyCheck->add_option("--twist", opt.twist, "twist values in lattice order (default: all 1)");
  mackeyCheck->callback([&] { handler = runMackeyCheck; });

  auto* twist = app.add_subcommand("twist", "twist arithmetic and classification");
  auto* twistNorm = twist->add_subcommand("normalize", "canonical sign-quotient representative");
  addCommon(twistNorm);
  twistNorm->add_option("--a", opt.twistA, "twist values")->required();
  twistNorm->callback([&] { handler = runTwistNormalize; });
  auto* twistEquiv = twist->add_subcommand("equiv", "are two twists in the same class");
  addCommon(twistEquiv);
  twistEquiv->add_option("--a", opt.twistA, "first twist")->required();
  twistEquiv->add_option("--b", opt.twistB, "second twist")->required();
  twistEquiv->callback([&] { handler = runTwistEquiv; });
  auto* twistWitness = twist->add_subcommand("witness", "explicit isomorphism A^a -> A^b");
  addCommon(twistWitness);
  twistWitness->add_option("--a", opt.twistA, "first twist")->required();
  twistWitness->add_option("--b", opt.twistB, "second twist")->required();
  twistWitness->callback([&] { handler = runTwistWitness; });

  auto* box = app.add_subcommand("box", "box product checks");
  auto* boxVerify = box->add_subcommand("verify", "universal property over the probe family");
  addCommon(boxVerify);
  boxVerify->add_option("--a", opt.twistA, "first twist (default: all 1)");
  boxVerify->add_option("--b", opt.twistB, "second twist (default: all 1)");
  boxVerify->add_option("--seed", opt.seed, "seed for the random probe");
  boxVerify->callback([&] { handler = runBoxVerify; });

  auto* phi = app.add_subcommand("phi", "geometric fixed points of A^a");
  addCommon(phi);
  phi->add_option("--normal", opt.normal, "lattice index of N")->required();
  phi->add_option("--twist", opt.twist, "twist values (default: all 1)");
  phi->callback([&] { handler = runPhi; });

  auto* qind = app.add_subcommand("qind", "extend a twist from G/N to G");
  addCommon(qind);
  qind->add_option("--normal", opt.normal, "lattice index of N")->required();
  qind->add_option("--twist", opt.twist, "twist over the quotient lattice")->required();
  qind->callback([&] { handler = runQind; });

  auto* picard = app.add_subcommand("picard", "Picard group of invertible functors");
  addCommon(picard);
  picard->add_option("--bound", opt.bound, "also run the witness/refutation sweep with this bound");
  picard->callback([&] { handler = runPicard; });

  auto* split = app.add_subcommand("split", "splitting of Pic along a quotient");
  addCommon(split);
  split->add_option("--normal", opt.normal, "lattice index of N")->required();
  split->callback([&] { handler = runSplit; });

  auto* module = app.add_subcommand("module", "Burnside ring modules");
  auto* moduleTable = module->add_subcommand("table", "action matrices of A(G)^a");
  addCommon(moduleTable);
  moduleTable->add_option("--twist", opt.twist, "twist values (default: all 1)");
  moduleTable->callback([&] { handler = runModuleTable; });
  auto* moduleCounit = module->add_subcommand("counit", "adjunction round-trip check");
  addCommon(moduleCounit);
  moduleCounit->add_option("--twist", opt.twist, "twist values (default: all 1)");
  moduleCounit->callback([&] { handler = runModuleCounit; });

  auto* render = app.add_subcommand("render", "diagram output");
  auto* renderLewis = render->add_subcommand("lewis", "text Lewis diagram of A^a");
  addCommon(renderLewis);
  renderLewis->add_option("--twist", opt.twist, "twist values (default: all 1)");
  renderLewis->callback([&] { handler = runRenderLewis; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitClean : kExitInvalidInput;
  }

  try {
    return handler(opt);
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const UnrepresentableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  }
}
