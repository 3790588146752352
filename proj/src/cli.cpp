#include "latpoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "json_util.hpp"
#include "latpoly/cayley.hpp"
#include "latpoly/classify.hpp"
#include "latpoly/gauss.hpp"
#include "latpoly/io.hpp"
#include "latpoly/jets.hpp"
#include "latpoly/seshadri.hpp"

namespace latpoly::cli {

namespace {

struct Options {
  // smooth2d
  std::size_t maxPoints = 12;
  bool tally = false;
  std::int64_t aCap = 12;
  std::size_t maxRays = 0;
  // shared file arguments
  std::string file;
  std::vector<std::string> files;
  // cayley-sum
  std::string scale = "1";
  // blowup
  std::string faceVertices;
  std::string depth;
  // jets
  unsigned long order = 0;
  std::string point;
  bool generic = false;
  // epsilon
  std::string n;
  unsigned long dcap = 3;
  // gauss
  bool image = false;
  bool fiber = false;
  bool json = false;
  // load-3d
  bool tallyCayley = false;
};

Integer parseInteger(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0)
    throw ParseError(std::string(what) + " must be an integer, got \"" + text + "\"");
  return v;
}

JetPoint jetPoint(const Options& o) {
  return o.generic ? JetPoint::generic() : JetPoint::at(parseRationalList(o.point));
}

std::string joinMonomials(const std::vector<IntVector>& exps) {
  std::string out;
  for (const auto& e : exps) {
    if (!out.empty()) out += " ";
    out += formatMonomial(e);
  }
  return out;
}

void printRecords(const std::vector<ClassificationRecord>& records, std::ostream& out) {
  auto doc = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json entry;
    entry["vertices"] = detail::pointsToJson(r.polytope.vertices());
    entry["lattice_points"] = r.latticePointCount;
    entry["smooth"] = r.isSmoothFlag;
    entry["cayley"] = r.isCayleyFlag;
    doc.push_back(std::move(entry));
  }
  out << doc.dump() << "\n";
}

int smooth2d(const Options& o, std::ostream& out) {
  Smooth2DOptions opts;
  opts.aCap = o.aCap;
  opts.maxRays = o.maxRays;
  const auto records = listSmooth2D(o.maxPoints, opts);
  if (o.tally) {
    std::string line;
    for (const auto& [count, howMany] : tallyByPointCount(records)) {
      if (!line.empty()) line += " ";
      line += std::to_string(count) + ":" + std::to_string(howMany);
    }
    out << line << "\n";
  } else {
    printRecords(records, out);
  }
  return Ok;
}

int isCayleyCommand(const Options& o, std::ostream& out) {
  const auto p = readPolytopeFile(o.file).polytope;
  const auto witness = isCayley(p.isFullDimensional() ? p : intrinsicPolytope(p));
  out << (witness ? "true" : "false") << "\n";
  if (witness && p.isFullDimensional())
    out << "functional " << formatVector(witness->functional) << ", offset "
        << witness->offset.get_str() << "\n";
  return Ok;
}

int cayleySumCommand(const Options& o, std::ostream& out) {
  std::vector<LatticePolytope> ps;
  for (const auto& f : o.files) ps.push_back(readPolytopeFile(f).polytope);
  out << polytopeToJson(cayleySum(ps, parseInteger(o.scale, "--scale"))) << "\n";
  return Ok;
}

int blowupCommand(const Options& o, std::ostream& out) {
  const auto p = readPolytopeFile(o.file).polytope;
  const Face face = faceFromVertices(p, parseIndexList(o.faceVertices));
  out << polytopeToJson(toricBlowUp(p, face, parseInteger(o.depth, "--k"))) << "\n";
  return Ok;
}

int latticePointsCommand(const Options& o, std::ostream& out) {
  const auto p = readPolytopeFile(o.file).polytope;
  nlohmann::json doc;
  doc["points"] = detail::pointsToJson(latticePoints(p));
  out << doc.dump() << "\n";
  return Ok;
}

int isSmoothCommand(const Options& o, std::ostream& out) {
  out << (isSmooth(readPolytopeFile(o.file).polytope) ? "true" : "false") << "\n";
  return Ok;
}

int jetsCommand(const Options& o, std::ostream& out) {
  const auto config = readConfigurationFile(o.file);
  const auto jm = jetMatrix(config, o.order, jetPoint(o));
  out << "order " << o.order << ", rank " << rank(jm.entries) << " of "
      << jm.fullRankTarget.get_str() << "\n";
  out << "columns";
  for (const auto& a : config.exponents()) out << " " << formatVector(a);
  out << "\n";
  for (std::size_t i = 0; i < jm.rows.size(); ++i) {
    out << formatVector(jm.rows[i]) << ":";
    for (std::size_t j = 0; j < jm.entries.cols(); ++j) out << " " << formatRational(jm.entries(i, j));
    out << "\n";
  }
  return Ok;
}

int jetDegreeCommand(const Options& o, std::ostream& out) {
  out << degreeOfJetSeparation(readConfigurationFile(o.file), jetPoint(o)) << "\n";
  return Ok;
}

int epsilonCommand(const Options& o, std::ostream& out) {
  const auto p = readPolytopeFile(o.file).polytope;
  const auto b = epsilonBounds(p, parseInteger(o.n, "--n"), o.dcap);
  out << "lower " << formatRational(b.lower) << ", upper " << formatRational(b.upper) << "\n";
  out << "lower witness: dilation " << b.lowerWitness.dilation.get_str() << ", jet degree "
      << b.lowerWitness.jetDegree << "\n";
  out << "upper witness: direction " << formatVector(b.upperWitness.direction) << ", width "
      << b.upperWitness.width.get_str() << "\n";
  std::ostringstream diag;
  diag << std::fixed << std::setprecision(6) << sqrtDegreeDiagnostic(p);
  out << "sqrt(degree) diagnostic (floating point, not a bound used above): " << diag.str()
      << "\n";
  return Ok;
}

int gaussCommand(const Options& o, std::ostream& out) {
  const auto result = gaussMap(readConfigurationFile(o.file), o.order);
  const auto& exps = o.image ? result.imageExponents : result.fiberExponents;
  if (o.json) {
    nlohmann::json doc;
    doc["order"] = result.order;
    doc[o.image ? "image" : "fiber"] = detail::pointsToJson(exps);
    doc["image_dim"] = result.imageDim;
    doc["fiber_dim"] = result.fiberDim;
    out << doc.dump() << "\n";
  } else {
    out << joinMonomials(exps) << "\n";
  }
  return Ok;
}

int normalFormCommand(const Options& o, std::ostream& out) {
  const auto named = readPolytopeFile(o.file);
  out << polytopeToJson(normalForm(named.polytope), named.name) << "\n";
  return Ok;
}

int load3dCommand(const Options& o, std::ostream& out) {
  const auto records = loadClassification3D(o.file);
  if (o.tallyCayley) {
    std::string line;
    for (const auto& [flag, count] : tallyByCayley(records)) {
      if (!line.empty()) line += " ";
      line += std::string(flag ? "true" : "false") + ":" + std::to_string(count);
    }
    out << line << "\n";
  } else {
    printRecords(records, out);
  }
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice polytope toolkit for smooth polarized toric varieties", "latpoly"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;

  auto* smooth = app.add_subcommand("smooth2d", "Classify smooth lattice polygons");
  smooth->add_option("--max-points", o.maxPoints, "Maximal number of lattice points")
      ->required()
      ->check(CLI::Range(std::size_t{3}, std::size_t{1000}));
  smooth->add_flag("--tally", o.tally, "Print counts by number of lattice points");
  smooth->add_option("--a-cap", o.aCap, "Largest Hirzebruch parameter used")
      ->check(CLI::NonNegativeNumber);
  smooth->add_option("--max-rays", o.maxRays, "Largest fan size (default: max points)");

  auto* cayley = app.add_subcommand("is-cayley", "Test for lattice width one");
  cayley->add_option("file", o.file, "Polytope JSON")->required();

  auto* sum = app.add_subcommand("cayley-sum", "Cayley sum of several polytopes");
  sum->add_option("files", o.files, "Polytope JSON files")->required()->expected(2, 1 << 20);
  sum->add_option("--scale", o.scale, "Height of the Cayley layers");

  auto* blowup = app.add_subcommand("blowup", "Toric blow-up of a face");
  blowup->add_option("file", o.file, "Polytope JSON")->required();
  blowup->add_option("--face-vertices", o.faceVertices, "Vertex indices, e.g. 0,2")->required();
  blowup->add_option("--k", o.depth, "Depth of the cut")->required();

  auto* points = app.add_subcommand("lattice-points", "List the lattice points");
  points->add_option("file", o.file, "Polytope JSON")->required();

  auto* smoothTest = app.add_subcommand("is-smooth", "Test smoothness");
  smoothTest->add_option("file", o.file, "Polytope JSON")->required();

  auto* jets = app.add_subcommand("jets", "Print the jet matrix");
  jets->add_option("file", o.file, "Polytope or point configuration JSON")->required();
  jets->add_option("--order", o.order, "Jet order")->required();
  auto* jetsPoint = jets->add_option("--point", o.point, "Point such as 1,1 or 1/2,3");
  auto* jetsGeneric = jets->add_flag("--generic", o.generic, "Use the general torus point");
  jetsPoint->excludes(jetsGeneric);

  auto* jetDegree = app.add_subcommand("jet-degree", "Degree of jet separation");
  jetDegree->add_option("file", o.file, "Polytope or point configuration JSON")->required();
  auto* degPoint = jetDegree->add_option("--point", o.point, "Point such as 1,1 or 1/2,3");
  auto* degGeneric = jetDegree->add_flag("--generic", o.generic, "Use the general torus point");
  degPoint->excludes(degGeneric);

  auto* epsilon = app.add_subcommand("epsilon", "Bounds for the Seshadri constant");
  epsilon->add_option("file", o.file, "Polygon JSON")->required();
  epsilon->add_option("--n", o.n, "Search parameter")->required();
  epsilon->add_option("--dcap", o.dcap, "Largest dilation tried")->check(CLI::PositiveNumber);

  auto* gauss = app.add_subcommand("gauss", "Image or fiber of the Gauss map");
  gauss->add_option("file", o.file, "Polytope or point configuration JSON")->required();
  gauss->add_option("--order", o.order, "Order of the Gauss map")->required();
  auto* gImage = gauss->add_flag("--image", o.image, "Print image exponents");
  auto* gFiber = gauss->add_flag("--fiber", o.fiber, "Print fiber exponents");
  gImage->excludes(gFiber);
  gauss->add_flag("--json", o.json, "Print exponent vectors as JSON");

  auto* nf = app.add_subcommand("normal-form", "Unimodular normal form");
  nf->add_option("file", o.file, "Polytope JSON")->required();

  auto* load3d = app.add_subcommand("load-3d", "Load smooth 3-polytope data");
  load3d->add_option("file", o.file, "JSON array of polytopes")->required();
  load3d->add_flag("--tally-cayley", o.tallyCayley, "Print counts by Cayley flag");

  std::vector<const char*> argv{"latpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if ((jets->parsed() || jetDegree->parsed()) && o.point.empty() && !o.generic)
      throw CLI::RequiredError("--point or --generic");
    if (gauss->parsed() && !o.image && !o.fiber) throw CLI::RequiredError("--image or --fiber");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    if (smooth->parsed()) return smooth2d(o, out);
    if (cayley->parsed()) return isCayleyCommand(o, out);
    if (sum->parsed()) return cayleySumCommand(o, out);
    if (blowup->parsed()) return blowupCommand(o, out);
    if (points->parsed()) return latticePointsCommand(o, out);
    if (smoothTest->parsed()) return isSmoothCommand(o, out);
    if (jets->parsed()) return jetsCommand(o, out);
    if (jetDegree->parsed()) return jetDegreeCommand(o, out);
    if (epsilon->parsed()) return epsilonCommand(o, out);
    if (gauss->parsed()) return gaussCommand(o, out);
    if (nf->parsed()) return normalFormCommand(o, out);
    if (load3d->parsed()) return load3dCommand(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return DomainError;
  }
  return UsageError;
}

}  // namespace latpoly::cli
