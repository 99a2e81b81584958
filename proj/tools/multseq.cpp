#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "multseq/hilbert.hpp"
#include "multseq/monomial.hpp"
#include "multseq/newton.hpp"
#include "multseq/parse.hpp"

namespace {

using nlohmann::json;

struct Args {
  std::string vars;
  std::string ideal;
  std::string idealFile;
  std::int64_t power = 1;
  bool emitJson = false;
  std::int64_t genCap = 2'000'000;
  int gridCap = 128;
  int threads = 1;
  int maxI = -1;
  int maxJ = -1;
};

std::int64_t toInt64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) {
    throw multseq::OverflowError(std::string(what) + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

json idealToJson(const multseq::MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) {
    gens.push_back(g.exponents());
  }
  return gens;
}

std::string facetLine(const multseq::Halfspace& f,
                      const multseq::RingSpec& ring) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < f.normal.size(); ++k) {
    if (f.normal[k] == 0) continue;
    if (!first) os << " + ";
    if (f.normal[k] != 1) os << f.normal[k].get_str() << '*';
    os << ring.varNames()[k];
    first = false;
  }
  os << " >= " << f.offset.get_str();
  return os.str();
}

struct Output {
  std::string plain;  // newline-terminated block
  json result;
};

Output runOp(const std::string& op, const multseq::MonomialIdeal& ideal,
             const Args& args) {
  multseq::HilbertOptions hopts;
  hopts.genCap = static_cast<std::size_t>(args.genCap);
  hopts.gridCap = args.gridCap;
  hopts.threads = args.threads;

  Output out;
  std::ostringstream plain;
  if (op == "ms") {
    multseq::MultiplicitySequence seq =
        multseq::multiplicitySequence(ideal, hopts);
    json nonzero = json::object();
    for (int i = 0; i <= seq.d; ++i) {
      const std::int64_t c = seq.c[static_cast<std::size_t>(i)];
      if (c != 0) {
        plain << "c[" << i << "] = " << c << '\n';
        nonzero[std::to_string(i)] = c;
      }
    }
    out.result = {{"c", seq.c}, {"nonzero", nonzero}};
  } else if (op == "jmult") {
    const std::int64_t j = multseq::jMultiplicity(ideal, hopts);
    plain << j << '\n';
    out.result = {{"jmult", j}};
  } else if (op == "monjmult") {
    const std::int64_t j = multseq::monJMult(ideal);
    plain << j << '\n';
    out.result = {{"jmult", j}};
  } else if (op == "spread") {
    const int s = multseq::monAnalyticSpread(ideal);
    plain << s << '\n';
    out.result = {{"analytic_spread", s}};
  } else if (op == "reduction") {
    multseq::MonomialIdeal r = multseq::monReduction(ideal);
    plain << multseq::renderIdeal(r) << '\n';
    out.result = {{"reduction", idealToJson(r)}};
  } else if (op == "closure") {
    multseq::MonomialIdeal r = multseq::integralClosure(ideal);
    plain << multseq::renderIdeal(r) << '\n';
    out.result = {{"closure", idealToJson(r)}};
  } else if (op == "facets") {
    multseq::NewtonPolyhedron p = multseq::newtonPolyhedron(ideal);
    json facets = json::array();
    for (const auto& f : p.facets) {
      json normal = json::array();
      for (const auto& c : f.normal) normal.push_back(toInt64(c, "normal"));
      facets.push_back(
          {{"normal", normal}, {"offset", toInt64(f.offset, "offset")}});
      plain << facetLine(f, ideal.ring()) << '\n';
    }
    json vertices = json::array();
    for (const auto& v : p.vertices) vertices.push_back(v.exponents());
    out.result = {{"vertices", vertices}, {"facets", facets}};
  } else if (op == "lambda-table") {
    const int d = ideal.dim();
    const int maxI = args.maxI >= 0 ? args.maxI : 2 * d + 4;
    const int maxJ = args.maxJ >= 0 ? args.maxJ : 2 * d + 4;
    multseq::LambdaTable t = multseq::lambdaTable(ideal, maxI, maxJ, hopts);
    for (const auto& row : t.values) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) plain << ' ';
        plain << row[j];
      }
      plain << '\n';
    }
    out.result = {{"max_i", maxI}, {"max_j", maxJ}, {"lambda", t.values}};
  } else {
    throw multseq::InternalError("unknown subcommand '" + op + "'");
  }
  out.plain = plain.str();
  return out;
}

multseq::MonomialIdeal resolveIdeal(const std::string& raw,
                                    const multseq::RingSpec& ring,
                                    const Args& args) {
  multseq::IdealExpression expr = multseq::parseIdealExpression(raw, ring);
  const std::int64_t suffix = expr.power.value_or(1);
  if (suffix > 1'000'000 || args.power > 1'000'000 ||
      suffix * args.power > 1'000'000) {
    throw multseq::ParseError("power larger than 1000000 is not supported");
  }
  const std::int64_t k = suffix * args.power;
  if (k == 1) return expr.parsed;
  return multseq::power(expr.parsed, k,
                        static_cast<std::size_t>(args.genCap));
}

int runSingle(const std::string& op, const Args& args) {
  multseq::RingSpec ring = multseq::parseVarList(args.vars);
  multseq::MonomialIdeal ideal = resolveIdeal(args.ideal, ring, args);
  Output out = runOp(op, ideal, args);
  if (args.emitJson) {
    json record = {{"vars", ring.varNames()},
                   {"ideal", idealToJson(ideal)},
                   {"result", out.result}};
    std::cout << record.dump() << '\n';
  } else {
    std::cout << out.plain;
  }
  return 0;
}

int runBatch(const std::string& op, const Args& args) {
  multseq::RingSpec ring = multseq::parseVarList(args.vars);
  std::ifstream in(args.idealFile);
  if (!in) {
    throw multseq::ParseError("cannot open ideal file '" + args.idealFile +
                              "'");
  }
  bool sawParseError = false;
  bool sawDomainError = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.empty()) continue;
    json record = {{"input", line}};
    try {
      multseq::MonomialIdeal ideal = resolveIdeal(line, ring, args);
      Output out = runOp(op, ideal, args);
      record["vars"] = ring.varNames();
      record["ideal"] = idealToJson(ideal);
      record["result"] = out.result;
    } catch (const multseq::ParseError& e) {
      record["error"] = e.what();
      sawParseError = true;
    } catch (const multseq::Error& e) {
      record["error"] = e.what();
      sawDomainError = true;
    }
    std::cout << record.dump() << '\n';
  }
  if (sawParseError) return 2;
  return sawDomainError ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiplicity invariants of monomial ideals"};
  app.require_subcommand(1);

  Args args;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"ms", "multiplicity sequence via the bivariate Hilbert polynomial"},
      {"jmult", "j-multiplicity via the Hilbert polynomial route"},
      {"monjmult", "j-multiplicity via the Newton polyhedron"},
      {"spread", "analytic spread via compact faces of the Newton polyhedron"},
      {"reduction", "minimal monomial reduction (vertex ideal)"},
      {"closure", "integral closure"},
      {"facets", "facets of the Newton polyhedron"},
      {"lambda-table", "table of bigraded piece lengths"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--vars", args.vars, "comma-separated variable names")
        ->required();
    sub->add_option("--ideal", args.ideal,
                    "ideal expression, e.g. \"x2,xy\" or \"x^2*y, y^3\"");
    sub->add_option("--ideal-file", args.idealFile,
                    "batch file, one ideal expression per line");
    sub->add_option("--power", args.power, "replace the ideal by this power")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", args.emitJson, "emit one JSON record");
    sub->add_option("--gen-cap", args.genCap,
                    "cap on intermediate generator-set sizes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grid-cap", args.gridCap,
                    "largest grid bound for the adaptive driver")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", args.threads,
                    "worker threads for the length table")
        ->check(CLI::PositiveNumber);
    if (name == "lambda-table") {
      sub->add_option("--max-i", args.maxI, "row bound (default 2d+4)");
      sub->add_option("--max-j", args.maxJ, "column bound (default 2d+4)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string op = app.get_subcommands().front()->get_name();
  try {
    const bool haveIdeal = !args.ideal.empty();
    const bool haveFile = !args.idealFile.empty();
    if (haveIdeal == haveFile) {
      throw multseq::ParseError(
          "exactly one of --ideal / --ideal-file is required");
    }
    return haveFile ? runBatch(op, args) : runSingle(op, args);
  } catch (const multseq::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const multseq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
