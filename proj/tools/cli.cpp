#include "cli.hpp"

#include "instance_io.hpp"
#include "latgap/bounds.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace latgap::cli {

namespace {

using io::encode;
using io::Json;

struct Settings {
  std::string command;
  std::string input;
  std::string aList;
  std::optional<long long> row;
  bool witness = false;
  bool withGap = false;
  bool verify = false;
  std::optional<std::uint64_t> box;
  std::uint64_t maxCosets = 10'000'000;
  std::string gridH = "1/16";
  std::string rho;
  std::string modulus = "last";

  SolverOptions solver() const { return SolverOptions{maxCosets}; }
};

struct Outcome {
  Json result;
  int code = kOk;
};

[[noreturn]] void wrongKind(const std::string& command, const char* expected) {
  throw Error(ErrorCode::InvalidInput, command + " expects an instance of kind " + expected);
}

const io::GroupFile& expectGroup(const io::Instance& inst, const Settings& s) {
  if (const auto* g = std::get_if<io::GroupFile>(&inst)) return *g;
  wrongKind(s.command, "group");
}

bool nonnegative(const IntVector& x) { return (x.array() >= Integer(0)).all(); }

// Witness feasibility and label consistency; membership goes through the
// Hermite form, independently of the Smith labels.
bool verifyGap(const GroupInstance& inst, const GapCertificate& cert) {
  const IntVector& x = cert.witnessX;
  return nonnegative(x) && inst.cost().dot(x) == cert.gap &&
         cosetLabel(inst.snf(), x) == cert.witnessLabel &&
         isMember(inst.basis(), IntVector(x - cosetLift(inst.snf(), cert.witnessLabel)));
}

bool verifySolution(const GroupInstance& inst, const IntVector& r, const IntVector& x,
                    const Rational& value) {
  return nonnegative(x) && inst.cost().dot(x) == value &&
         isMember(inst.basis(), IntVector(x - r));
}

Json gapJson(const GroupInstance& inst, const GapCertificate& cert) {
  return Json{{"gap", encode(cert.gap)},
              {"witness_label", encode(cert.witnessLabel)},
              {"witness_x", encode(cert.witnessX)},
              {"cosets", encode(cert.cosetCount)},
              {"invariants", encode(inst.snf().invariants)}};
}

Json cmdGap(const io::Instance& instance, const Settings& s) {
  const GroupInstance inst = expectGroup(instance, s).instance();
  const GapCertificate cert = gap(inst, s.solver());
  Json out = gapJson(inst, cert);
  if (s.verify) out["verified"] = verifyGap(inst, cert);
  return out;
}

Json cmdSolve(const io::Instance& instance, const Settings& s) {
  const io::GroupFile& file = expectGroup(instance, s);
  if (!file.residue) throw Error(ErrorCode::InvalidInput, "solve needs the field \"r\"");
  const GroupInstance inst = file.instance();
  const GroupSolution sol = minimize(inst, *file.residue, s.solver());
  Json out{{"value", encode(sol.value)},
           {"minimizer", encode(sol.minimizer)},
           {"residue_label", encode(sol.residueLabel)},
           {"cosets", encode(inst.cosetCount())}};
  if (s.verify) out["verified"] = verifySolution(inst, *file.residue, sol.minimizer, sol.value);
  return out;
}

Json cmdFrobenius(const io::Instance& instance, const Settings& s) {
  const auto* file = std::get_if<io::FrobeniusFile>(&instance);
  if (!file) wrongKind(s.command, "frobenius");
  const ModulusRole role = s.modulus == "smallest" ? ModulusRole::Smallest : ModulusRole::Last;
  const FrobeniusReduction red = frobeniusReduction(file->a, role, s.solver());
  Json out{{"frobenius", encode(red.frobenius)},
           {"gap", encode(red.certificate.gap)},
           {"det", encode(red.instance.basis().detAbs())},
           {"modulus", encode(red.modulus)},
           {"modulus_index", red.modulusIndex + 1},
           {"witness_x", encode(red.certificate.witnessX)}};
  if (s.verify) out["verified"] = verifyGap(red.instance, red.certificate);
  return out;
}

Json boundJson(const std::optional<DirectedBound>& b) {
  if (!b) return nullptr;
  return b->value();
}

Json cmdBounds(const io::Instance& instance, const Settings& s) {
  const GroupInstance inst = expectGroup(instance, s).instance();
  std::optional<GapCertificate> cert;
  if (s.withGap) cert = gap(inst, s.solver());
  const BoundsReport r =
      boundsReport(inst, cert ? std::optional<Rational>(cert->gap) : std::nullopt);

  Json out{{"k", r.k}, {"det", encode(r.det)}};
  Json rounding = Json::object();
  if (r.lowerRho) {
    out["lower_rho"] = boundJson(r.lowerRho);
    rounding["lower_rho"] = "down";
  }
  if (r.lowerFactorial) {
    out["lower_factorial"] = boundJson(r.lowerFactorial);
    rounding["lower_factorial"] = "down";
  }
  if (r.upper) {
    out["upper"] = boundJson(r.upper);
    rounding["upper"] = "up";
  }
  if (r.inradius.exact) {
    out["inradius"] = encode(*r.inradius.exact);
  } else {
    out["inradius"] = Json{{"lower", r.inradius.enclosure.lower()},
                           {"upper", r.inradius.enclosure.upper()}};
  }
  out["rounding"] = rounding;
  if (cert) {
    out["gap"] = encode(cert->gap);
    out["covering_radius"] = encode(coveringRadius(inst, *cert));
    out["consistent"] = r.consistent();
    if (s.verify) out["verified"] = verifyGap(inst, *cert) && r.consistent();
  }
  return out;
}

std::vector<std::int64_t> oneBased(const std::vector<Index>& idx) {
  std::vector<std::int64_t> out;
  for (Index i : idx) out.push_back(static_cast<std::int64_t>(i) + 1);
  return out;
}

Json cmdRelax(const io::Instance& instance, const Settings& s) {
  const auto* file = std::get_if<io::IpFile>(&instance);
  if (!file) wrongKind(s.command, "ip");
  const IpInstance& ip = file->ip;
  if (s.row && (*s.row < 1 || *s.row > ip.rows()))
    throw Error(ErrorCode::InvalidInput, "--row must lie in 1.." + std::to_string(ip.rows()));
  const GroupRelaxation rel =
      s.row ? singleRowRelaxation(ip, static_cast<Index>(*s.row - 1)) : buildRelaxation(ip);
  const GroupInstance inst = rel.instance();
  const CosetDistances dist = solveAll(inst, s.solver());
  const GroupSolution sol = minimize(inst, dist, rel.residue);
  const Rational bound = sol.value + rel.constant;

  Json out;
  out["lp"] = Json{{"basis", oneBased(rel.lp.basic)},
                   {"nonbasic", oneBased(rel.lp.nonbasic)},
                   {"value", encode(rel.lp.value)},
                   {"x", encode(rel.lp.x)},
                   {"reduced_costs", encode(rel.lp.reducedCosts)},
                   {"unique", rel.lp.unique}};
  out["relaxation"] = Json{{"type", s.row ? "single_row" : "full"},
                           {"lattice", encode(rel.lattice.rows())},
                           {"det", encode(rel.lattice.detAbs())},
                           {"l", encode(rel.cost.values())},
                           {"r", encode(rel.residue)},
                           {"constant", encode(rel.constant)}};
  if (s.row) out["relaxation"]["row"] = *s.row;
  out["group_value"] = encode(sol.value);
  out["minimizer"] = encode(sol.minimizer);
  out["bound"] = encode(bound);

  bool ok = verifySolution(inst, rel.residue, sol.minimizer, sol.value);
  if (s.witness) {
    const GapCertificate cert = gap(inst, dist);
    const WitnessRhs w = witnessRhs(ip, rel, cert);
    out["witness"] = Json{{"gap", encode(cert.gap)},
                          {"witness_x", encode(cert.witnessX)},
                          {"u", encode(w.u)},
                          {"b_prime", encode(w.bPrime)},
                          {"predicted", encode(w.predicted)}};
    ok = ok && verifyGap(inst, cert) && IntVector(ip.A() * w.u) == w.bPrime;
  }
  if (s.verify) out["verified"] = ok;
  return out;
}

Json cmdOracle(const io::Instance& instance, const Settings& s) {
  if (const auto* g = std::get_if<io::GroupFile>(&instance)) {
    BruteForceOracle::Options options;
    options.box = s.box;
    const BruteForceOracle oracle(g->instance(), options);
    if (g->residue) {
      const auto m = oracle.minimum(*g->residue);
      return Json{{"oracle_m", m ? encode(*m) : Json(nullptr)}};
    }
    return Json{{"oracle_gap", encode(oracle.gap())}};
  }
  if (const auto* f = std::get_if<io::FrobeniusFile>(&instance))
    return Json{{"oracle_frobenius", encode(oracleFrobenius(f->a))}};
  const IpInstance& ip = std::get<io::IpFile>(instance).ip;
  // Without --box use max |b_i|, enough for knapsacks with positive entries.
  std::uint64_t box = 0;
  if (s.box) {
    box = *s.box;
  } else {
    Integer m = 0;
    for (Index i = 0; i < ip.rows(); ++i) m = std::max(m, Integer(abs(ip.b()(i))));
    if (m > Integer(std::numeric_limits<std::uint32_t>::max()))
      throw Error(ErrorCode::ResourceLimitExceeded, "default box too large; pass --box");
    box = static_cast<std::uint64_t>(m);
  }
  const auto value = ipBruteForce(ip, box);
  return Json{{"ip_bruteforce", value ? encode(*value) : Json(nullptr)}, {"box", box}};
}

Json cmdCoverCheck(const io::Instance& instance, const Settings& s) {
  const GroupInstance inst = expectGroup(instance, s).instance();
  const Rational h = parseRational(s.gridH);
  const Rational rho = s.rho.empty() ? coveringRadius(inst, s.solver()) : parseRational(s.rho);
  const GridCoverReport report = gridCoverCheck(inst, rho, h);
  Json uncovered = Json::array();
  for (const RatVector& p : report.uncovered) uncovered.push_back(encode(p));
  return Json{{"rho", encode(report.rho)},
              {"h", encode(report.h)},
              {"points_checked", report.pointsChecked},
              {"uncovered_count", report.uncoveredCount},
              {"uncovered", uncovered},
              {"covered", report.noUncoveredPointFound()}};
}

Json dispatch(const io::Instance& inst, const Settings& s) {
  if (s.command == "gap") return cmdGap(inst, s);
  if (s.command == "solve") return cmdSolve(inst, s);
  if (s.command == "frobenius") return cmdFrobenius(inst, s);
  if (s.command == "bounds") return cmdBounds(inst, s);
  if (s.command == "relax") return cmdRelax(inst, s);
  if (s.command == "oracle") return cmdOracle(inst, s);
  return cmdCoverCheck(inst, s);
}

Outcome errorOutcome(int code, const std::string& name, const std::string& message) {
  return Outcome{Json{{"error", Json{{"code", name}, {"message", message}}}}, code};
}

std::string describe(const Json& error) {
  return error["code"].get<std::string>() + ": " + error["message"].get<std::string>();
}

Outcome runOne(const Json& doc, const Settings& s) {
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o{dispatch(io::parseInstance(doc), s), kOk};
    if (o.result.contains("verified") && !o.result["verified"].get<bool>()) o.code = kVerifyFailed;
    o.result["elapsed"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
  } catch (const Error& e) {
    return errorOutcome(isResourceError(e.code()) ? kResourceLimit : kInvalidInput,
                        std::string(errorName(e.code())), e.detail());
  } catch (const Json::exception& e) {
    return errorOutcome(kInvalidInput, "InvalidInput", e.what());
  } catch (const std::bad_alloc&) {
    return errorOutcome(kResourceLimit, "ResourceLimitExceeded", "out of memory");
  }
}

std::vector<Outcome> runBatch(const Json& docs, const Settings& s) {
  std::vector<Outcome> results(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < docs.size();) results[i] = runOne(docs[i], s);
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(docs.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

std::string readAll(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "3,5,7" -> {"kind": "frobenius", "a": ["3", "5", "7"]}
Json inlineFrobenius(const std::string& list) {
  Json a = Json::array();
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) a.push_back(item);
  return Json{{"kind", "frobenius"}, {"a", a}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lattice programming gaps, group relaxations and Frobenius numbers", "latgap"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--input", s.input, "instance file (JSON); standard input when omitted or -");
  app.add_option("--a", s.aList, "frobenius: comma-separated entries instead of a file");
  app.add_option("--row", s.row, "relax: single-row relaxation of constraint row I (1-based)");
  app.add_flag("--witness", s.witness, "relax: also report the gap-attaining right-hand side");
  app.add_flag("--with-gap", s.withGap, "bounds: compute the gap and check it against the bounds");
  app.add_option("--box", s.box, "oracle: box [0, B]^n searched by brute force");
  app.add_option("--max-cosets", s.maxCosets, "refuse quotient groups larger than N")
      ->capture_default_str();
  app.add_flag("--verify", s.verify, "re-check the emitted certificate");
  app.add_option("--grid-h", s.gridH, "cover-check: grid spacing (rational)")->capture_default_str();
  app.add_option("--rho", s.rho, "cover-check: radius to test (default: the covering radius)");
  app.add_option("--modulus", s.modulus, "frobenius: entry used as modulus")
      ->check(CLI::IsMember({"last", "smallest"}))
      ->capture_default_str();

  app.add_subcommand("gap", "maximum over residues of the group minimum");
  app.add_subcommand("solve", "group minimum for the residue r");
  app.add_subcommand("frobenius", "Frobenius number through the lattice reduction");
  app.add_subcommand("bounds", "lower and upper bounds on the gap");
  app.add_subcommand("relax", "Gomory group relaxation of an integer program");
  app.add_subcommand("oracle", "brute-force reference values");
  app.add_subcommand("cover-check", "grid test of the covering radius");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }
  s.command = app.get_subcommands().front()->get_name();

  Json doc;
  try {
    if (!s.aList.empty()) {
      if (s.command != "frobenius" && s.command != "oracle")
        throw Error(ErrorCode::InvalidInput, "--a applies to frobenius and oracle only");
      doc = inlineFrobenius(s.aList);
    } else if (s.input.empty() || s.input == "-") {
      doc = Json::parse(readAll(in));
    } else {
      std::ifstream file(s.input);
      if (!file) throw Error(ErrorCode::InvalidInput, "cannot open " + s.input);
      doc = Json::parse(readAll(file));
    }
  } catch (const Error& e) {
    err << "latgap: " << e.what() << "\n";
    out << errorOutcome(kInvalidInput, std::string(errorName(e.code())), e.detail()).result.dump(2)
        << "\n";
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "latgap: malformed JSON: " << e.what() << "\n";
    out << errorOutcome(kInvalidInput, "InvalidInput", std::string("malformed JSON: ") + e.what())
               .result.dump(2)
        << "\n";
    return kInvalidInput;
  }

  int code = kOk;
  if (doc.is_array()) {
    Json results = Json::array();
    std::size_t i = 0;
    for (Outcome& o : runBatch(doc, s)) {
      if (o.code != kOk) {
        err << "latgap: instance " << i << ": "
            << (o.code == kVerifyFailed ? "verification failed"
                                        : describe(o.result["error"]))
            << "\n";
        if (code == kOk) code = o.code;
      }
      results.push_back(std::move(o.result));
      ++i;
    }
    out << results.dump(2) << "\n";
  } else {
    Outcome o = runOne(doc, s);
    if (o.code == kVerifyFailed) err << "latgap: verification failed\n";
    else if (o.code != kOk) err << "latgap: " << describe(o.result["error"]) << "\n";
    out << o.result.dump(2) << "\n";
    code = o.code;
  }
  return code;
}

}  // namespace latgap::cli
