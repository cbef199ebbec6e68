// svc: command-line front end.
//
// Exit status: 0 when the checked property holds (or the command succeeded),
// 1 when it fails, 2 on any error.

#include "svc/chambers.hpp"
#include "svc/cone.hpp"
#include "svc/fixtures.hpp"
#include "svc/ideals.hpp"
#include "svc/io.hpp"
#include "svc/supernormal.hpp"
#include "svc/triangulations.hpp"
#include "svc/virtual_chambers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace svc;
using nlohmann::json;

namespace {

constexpr std::size_t kMaxDegreeBound = 12;
constexpr std::size_t kUnsafeConeDim = 8;
constexpr std::size_t kUnsafeTriangulationSize = 24;

struct Input {
  std::string matrix, file, fixture;

  void add_to(CLI::App *app) {
    app->add_option("--matrix", matrix,
                    "inline matrix, rows separated by '@' (e.g. \"1 2@-2 3\")");
    app->add_option("--file", file, "matrix file (\"m n\" + rows, or JSON)");
    app->add_option("--fixture", fixture, "named configuration");
  }

  Configuration load() const {
    int given = !matrix.empty() + !file.empty() + !fixture.empty();
    if (given != 1)
      throw Error(ErrorKind::InvalidArgument,
                  "give exactly one of --matrix, --file, --fixture");
    if (!fixture.empty())
      return svc::fixture(fixture).config;
    if (!file.empty())
      return parse_configuration(read_file(file), file);
    return parse_configuration(matrix);
  }
};

struct PolygonInput {
  std::string vertices, fixture;
  std::vector<long> rect;

  void add_to(CLI::App *app) {
    app->add_option("--vertices", vertices, "\"x y, x y, ...\"");
    app->add_option("--rect", rect, "width height")->expected(2);
  }

  LatticePolygon load() const {
    if (vertices.empty() == rect.empty())
      throw Error(ErrorKind::InvalidArgument, "give one of --vertices, --rect");
    if (!vertices.empty())
      return LatticePolygon(parse_points(vertices));
    if (rect[0] < 1 || rect[1] < 1)
      throw Error(ErrorKind::InvalidArgument, "rectangle sides must be positive");
    return LatticePolygon({{0, 0}, {rect[0], 0}, {rect[0], rect[1]}, {0, rect[1]}});
  }
};

json cell_json(const Cell &c) {
  json t = json::array();
  for (std::size_t i : c)
    t.push_back(i + 1);
  return t;
}

void print(const json &j) { std::cout << j.dump(2) << "\n"; }

WeightOrder weight_from(const Configuration &b, const std::string &w,
                        const std::string &omega) {
  if (w.empty() == omega.empty())
    throw Error(ErrorKind::InvalidArgument, "give one of --w, --omega");
  if (!omega.empty())
    return weight_order_from_omega(b, parse_rat_vector(omega));
  return weight_order_for(b, parse_rat_vector(w));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Supernormal vector configurations in exact arithmetic"};
  app.require_subcommand(1);
  bool unsafeLarge = false;
  app.add_flag("--unsafe-large", unsafeLarge, "lift the size guards");
  int status = 0;

  // check
  CLI::App *check = app.add_subcommand("check", "decide a property of B");
  check->require_subcommand(1);
  Input checkInput;
  std::string checkC, method = "subsets";
  for (const char *kind : {"normal", "supernormal", "tight", "tdi"}) {
    CLI::App *sub = check->add_subcommand(kind);
    checkInput.add_to(sub);
    if (std::string(kind) == "supernormal")
      sub->add_option("--method", method, "subsets | triangulations")
          ->check(CLI::IsMember({"subsets", "triangulations"}));
    if (std::string(kind) == "tight" || std::string(kind) == "tdi")
      sub->add_option("--c", checkC, "right-hand side c")->required();
    sub->callback([&, kind = std::string(kind)] {
      Configuration b = checkInput.load();
      std::size_t maxDim = unsafeLarge ? kUnsafeConeDim : kMaxConeDim;
      json out;
      bool verdict = false;
      if (kind == "normal") {
        verdict = is_normal(b, std::max(b.dim(), maxDim));
        out["normal"] = verdict;
      } else if (kind == "supernormal") {
        SupernormalityReport r = is_supernormal(
            b, method == "subsets" ? SupernormalMethod::DefinitionSubsets
                                   : SupernormalMethod::TriangulationCriterion);
        verdict = r.verdict;
        out["supernormal"] = verdict;
        out["method"] = to_string(r.method);
        if (r.witness)
          out["witness"] = {{"subset", cell_json(r.witness->subset)},
                            {"point", to_json(r.witness->point)}};
      } else if (kind == "tight") {
        TightnessReport r = is_tight(b, parse_int_vector(checkC));
        verdict = r.tight;
        out["tight"] = verdict;
        json slack = json::array();
        for (std::size_t i : r.slackIndices)
          slack.push_back(i + 1);
        out["slack"] = slack;
        if (r.tightenedC)
          out["tightened_c"] = to_json(*r.tightenedC);
      } else {
        verdict = is_TDI(b, parse_int_vector(checkC));
        out["tdi"] = verdict;
      }
      print(out);
      status = verdict ? 0 : 1;
    });
  }

  // hilbert
  CLI::App *hilbert = app.add_subcommand("hilbert", "Hilbert basis of cone(B)");
  Input hilbertInput;
  hilbertInput.add_to(hilbert);
  hilbert->callback([&] {
    Configuration b = hilbertInput.load();
    Cone c = cone_from(b.vectors(), b.dim(),
                       std::max(b.dim(), unsafeLarge ? kUnsafeConeDim : kMaxConeDim));
    json basis = json::array();
    for (const IntVec &h : hilbert_basis(c).elements)
      basis.push_back(to_json(h));
    print({{"hilbert_basis", basis}});
  });

  // gale
  CLI::App *gale = app.add_subcommand("gale", "Gale dual A of B");
  Input galeInput;
  galeInput.add_to(gale);
  gale->callback([&] { print(to_json(gale_dual(galeInput.load()).matrixA)); });

  // triangulations
  CLI::App *tri = app.add_subcommand("triangulations", "all triangulations of B");
  Input triInput;
  bool usesAll = false, regularOnly = false;
  tri->add_flag("--uses-all", usesAll, "only triangulations using every vector");
  tri->add_flag("--regular", regularOnly, "only regular triangulations");
  triInput.add_to(tri);
  tri->callback([&] {
    Configuration b = triInput.load();
    json out = json::array();
    for (const Subdivision &t :
         all_triangulations(b, usesAll,
                            unsafeLarge ? kUnsafeTriangulationSize
                                        : kMaxTriangulationSize))
      if (!regularOnly || is_regular(b, t).regular)
        out.push_back(to_json(t));
    print(out);
  });

  // chambers
  CLI::App *cham = app.add_subcommand("chambers", "chamber complex of B (m <= 3)");
  Input chamInput;
  chamInput.add_to(cham);
  cham->callback([&] {
    ChamberComplex cc = chamber_complex(chamInput.load());
    json list = json::array();
    for (const Chamber &ch : cc.chambers) {
      json cells = json::array();
      for (const Cell &c : ch.containingCells)
        cells.push_back(cell_json(c));
      list.push_back({{"cells", cells},
                      {"interior_point", to_json(ch.interiorPoint)},
                      {"facets", ch.facets}});
    }
    json census = json::object();
    for (const auto &[k, v] : cc.facetsCensus)
      census[std::to_string(k)] = v;
    print({{"chambers", list}, {"facets_census", census}});
  });

  // polygon
  CLI::App *poly = app.add_subcommand("polygon", "subdivision of a lattice polygon");
  poly->require_subcommand(1);
  PolygonInput polyInput;
  std::string svgPath;
  bool noShade = false, noHighlight = false;
  CLI::App *polyChambers = poly->add_subcommand("chambers", "face census");
  CLI::App *polyMu = poly->add_subcommand("mu", "maximum number of sides");
  CLI::App *polySvg = poly->add_subcommand("svg", "render as SVG");
  for (CLI::App *sub : {polyChambers, polyMu, polySvg})
    polyInput.add_to(sub);
  polySvg->add_option("-o,--output", svgPath, "output file (default stdout)");
  polySvg->add_flag("--no-shade", noShade, "do not shade faces by side count");
  polySvg->add_flag("--no-highlight", noHighlight, "do not outline the largest faces");
  polyChambers->callback([&] {
    print(census_json(polygon_chamber_complex(polyInput.load(), unsafeLarge)));
  });
  polyMu->callback([&] { std::cout << mu(polyInput.load(), unsafeLarge) << "\n"; });
  polySvg->callback([&] {
    SvgOptions opts;
    opts.shadeByEdges = !noShade;
    opts.highlightMax = !noHighlight;
    std::string svg =
        emit_svg(polygon_chamber_complex(polyInput.load(), unsafeLarge), opts);
    if (svgPath.empty()) {
      std::cout << svg;
      return;
    }
    std::ofstream out(svgPath);
    if (!(out << svg))
      throw Error(ErrorKind::InvalidArgument, "cannot write '" + svgPath + "'");
  });

  // gb
  CLI::App *gb = app.add_subcommand("gb", "reduced Groebner basis of J_B");
  Input gbInput;
  std::string gbW, gbOmega;
  bool gbJson = false;
  gbInput.add_to(gb);
  gb->add_option("--w", gbW, "weight w in cone(B)");
  gb->add_option("--omega", gbOmega, "nonnegative weight on the variables");
  gb->add_flag("--json", gbJson, "JSON output");
  gb->callback([&] {
    Configuration b = gbInput.load();
    WeightOrder wo = weight_from(b, gbW, gbOmega);
    GroebnerBasis basis = groebner_basis(lattice_ideal(b), wo);
    GroebnerCone gc = groebner_cone(basis, b);
    if (gbJson) {
      json elems = json::array();
      for (std::size_t i = 0; i < basis.elements.size(); ++i)
        elems.push_back({{"binomial", to_string(basis.elements[i])},
                         {"flippable", bool(gc.flippable[i])}});
      print({{"omega", to_json(wo.omega)}, {"elements", elems}});
      return;
    }
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
      std::cout << to_string(basis.elements[i])
                << (gc.flippable[i] ? "  [flippable]" : "") << "\n";
  });

  // initial
  CLI::App *init = app.add_subcommand("initial", "initial ideal in_w(J_B)");
  Input initInput;
  std::string initW, initOmega;
  initInput.add_to(init);
  init->add_option("--w", initW, "weight w in cone(B)");
  init->add_option("--omega", initOmega, "nonnegative weight on the variables");
  init->callback([&] {
    Configuration b = initInput.load();
    InitialIdeal in = initial_ideal(lattice_ideal(b), weight_from(b, initW, initOmega));
    json gens = json::array();
    for (const Binomial &f : in.generators)
      gens.push_back(to_string(f));
    print({{"generators", gens}, {"monomial", in.is_monomial()}});
  });

  // virtual
  CLI::App *virt = app.add_subcommand("virtual", "virtual chambers and ideals");
  Input virtInput;
  std::size_t degree = 8;
  bool listOnly = false, virtJson = false;
  virtInput.add_to(virt);
  virt->add_option("--degree", degree, "degree bound D for the certification");
  virt->add_flag("--chambers", listOnly, "only list the virtual chambers");
  virt->add_flag("--json", virtJson, "JSON report");
  virt->callback([&] {
    Configuration b = virtInput.load();
    if (listOnly) {
      json list = json::array();
      for (const VirtualChamber &vc : virtual_chambers(b))
        list.push_back({{"cells", to_json(vc.cells)}, {"regular", vc.regular}});
      print(list);
      return;
    }
    if (degree > kMaxDegreeBound && !unsafeLarge)
      throw Error(ErrorKind::TooLarge, "degree bound above " +
                                           std::to_string(kMaxDegreeBound) +
                                           " needs --unsafe-large");
    BijectionReport r = verify_bijection(b, degree);
    status = r.holds() ? 0 : 1;
    if (virtJson) {
      json ideals = json::array();
      for (const VirtualInitialIdeal &m : r.ideals) {
        json gens = json::array();
        for (const Exponent &g : m.ideal.generators)
          gens.push_back(to_string(g));
        ideals.push_back({{"chamber", to_json(m.sourceChamber->cells)},
                          {"regular", m.sourceChamber->regular},
                          {"generators", gens}});
      }
      print({{"chambers", r.chambers},
             {"distinct_ideals", r.distinctIdeals},
             {"round_trips", r.roundTrips},
             {"degree", degree},
             {"bijection", r.holds()},
             {"ideals", ideals}});
      return;
    }
    std::cout << r.chambers << " chambers, " << r.distinctIdeals << " ideals, "
              << (r.holds() ? "bijection OK" : "bijection FAILED") << "\n";
  });

  // fixtures
  CLI::App *fix = app.add_subcommand("fixtures", "named configurations");
  fix->require_subcommand(1);
  CLI::App *fixList = fix->add_subcommand("list", "list the catalog");
  fixList->callback([&] {
    for (const Fixture &f : fixture_catalog())
      std::cout << f.name << "\t" << f.config.dim() << "x" << f.config.size()
                << "\t" << f.description << "\n";
  });
  CLI::App *fixShow = fix->add_subcommand("show", "print a fixture as JSON");
  std::string showName;
  fixShow->add_option("name", showName)->required();
  fixShow->callback([&] { print(to_json(fixture(showName).config.matrix())); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error &e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
