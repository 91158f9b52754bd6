// Command-line front end: check, compose, verify.
//
// Exit status: 0 controllable or certified, 1 not controllable (or an
// invalid certificate for `verify`), 2 inconclusive, 3 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sctk/errors.hpp"
#include "sctk/expr_parser.hpp"
#include "sctk/io.hpp"

namespace {

using nlohmann::json;
using namespace sctk;

constexpr int kExitOk = 0;
constexpr int kExitNotControllable = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

int exitStatusFor(const std::vector<Verdict>& verdicts) {
  bool positive = false;
  for (const auto& v : verdicts) {
    if (v.status == Status::kNotControllable) return kExitNotControllable;
    positive = positive || v.status == Status::kControllable || v.status == Status::kCertified;
  }
  return positive ? kExitOk : kExitInconclusive;
}

void printCertificate(std::ostream& os, const Certificate& cert) {
  os << "  partition: " << cert.partition.toString() << '\n';
  for (std::size_t b = 0; b < cert.bases.size(); ++b) {
    os << "  block " << b + 1 << " rows {" ;
    const auto& rows = cert.partition.blocks()[b];
    for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i] + 1;
    os << "}: base {";
    const auto& labels = cert.bases[b].base.labels;
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << "}  witness " << render(cert.bases[b].witness) << '\n';
  }
  if (cert.unionWitness) {
    os << "  union witness " << render(*cert.unionWitness)
       << (cert.unionUnimodular ? "  (unimodular)" : "  (involves s; rank n via minors gcd 1)") << '\n';
  }
}

struct CheckArgs {
  std::string path;
  std::string method = "all";
  std::optional<std::string> partition;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::size_t maxBases = kDefaultMaxBases;
  std::size_t maxColumns = kDefaultMaxColumns;
  std::optional<std::string> certificateOut;
};

int runCheck(const CheckArgs& args) {
  const SystemDef sys = toSystem(readSystemFile(args.path), args.path);
  CheckOptions opts;
  opts.maxBases = args.maxBases;
  opts.maxColumns = args.maxColumns;
  opts.seed = args.seed;
  const RowPartition partition =
      args.partition ? RowPartition::parse(*args.partition, sys.n()) : RowPartition::singletons(sys.n());

  std::vector<Verdict> verdicts;
  const bool all = args.method == "all";
  if (all || args.method == "pbh") verdicts.push_back(pbhCheck(sys, opts));
  if (all || args.method == "kalman") verdicts.push_back(kalmanCheck(sys, opts));
  if (all || args.method == "matroid") verdicts.push_back(certificateSearch(sys, partition, opts));
  const int status = exitStatusFor(verdicts);

  if (args.certificateOut) {
    for (const auto& v : verdicts) {
      if (!v.certificate) continue;
      std::ofstream out(*args.certificateOut);
      if (!out) throw UsageError("cannot write " + *args.certificateOut);
      out << certificateToJson(*v.certificate, sys).dump(2) << '\n';
    }
  }

  if (args.json) {
    json doc;
    doc["system"] = sys.name();
    doc["n"] = sys.n();
    doc["m"] = sys.m();
    doc["results"] = json::array();
    for (const auto& v : verdicts) doc["results"].push_back(verdictToJson(v, sys));
    doc["exit_status"] = status;
    std::cout << doc.dump(2) << '\n';
    return status;
  }
  std::cout << "system: " << sys.name() << " (n = " << sys.n() << ", m = " << sys.m() << ")\n";
  for (const auto& v : verdicts) {
    std::cout << '[' << toString(v.method) << "] " << toString(v.status) << ": " << v.detail << '\n';
    if (v.minorsGcd) std::cout << "  minors gcd: " << render(*v.minorsGcd) << '\n';
    if (v.certificate) printCertificate(std::cout, *v.certificate);
  }
  std::cout << "exit status: " << status << '\n';
  return status;
}

int runCompose(const std::vector<std::string>& paths, const std::string& out_path) {
  std::vector<SystemFile> files;
  std::vector<std::string> params;
  for (const auto& p : paths) {
    files.push_back(readSystemFile(p));
    if (files.back().indeterminate != files.front().indeterminate) {
      throw UsageError(p + ": indeterminate '" + files.back().indeterminate + "' differs from '" +
                       files.front().indeterminate + "'");
    }
    for (const auto& name : files.back().parameters) {
      if (std::find(params.begin(), params.end(), name) == params.end()) params.push_back(name);
    }
  }
  const SpacePtr space = ParamSpace::make(params, files.front().indeterminate);
  std::vector<SystemDef> systems;
  for (std::size_t i = 0; i < files.size(); ++i) systems.push_back(toSystem(files[i], paths[i], space));
  const SystemDef composite = composeParallel(systems);
  writeSystemFile(toSystemFile(composite), out_path);
  std::cout << "wrote " << out_path << ": " << composite.name() << " (n = " << composite.n()
            << ", m = " << composite.m() << ")\n";
  return kExitOk;
}

int runVerify(const std::string& system_path, const std::string& cert_path, bool as_json) {
  const SystemDef sys = toSystem(readSystemFile(system_path), system_path);
  std::ifstream in(cert_path);
  if (!in) throw UsageError("cannot open " + cert_path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(cert_path + ": " + e.what());
  }
  const CertificateCheck check = verifyCertificate(sys, claimFromJson(doc, sys));
  const int status = check.valid ? kExitOk : kExitNotControllable;
  if (as_json) {
    json out = certificateCheckToJson(check);
    out["exit_status"] = status;
    std::cout << out.dump(2) << '\n';
    return status;
  }
  for (std::size_t b = 0; b < check.blocks.size(); ++b) {
    const auto& bc = check.blocks[b];
    std::cout << "block " << b + 1 << ": base {";
    for (std::size_t i = 0; i < bc.labels.size(); ++i) std::cout << (i ? "," : "") << bc.labels[i];
    std::cout << "}";
    if (bc.witness) std::cout << "  witness " << render(*bc.witness);
    std::cout << (bc.failures.empty() ? "  ok" : "  FAILED") << '\n';
    for (const auto& f : bc.failures) std::cout << "  - " << f << '\n';
  }
  if (check.unionWitness) std::cout << "union witness " << render(*check.unionWitness) << '\n';
  for (const auto& f : check.failures) std::cout << "- " << f << '\n';
  std::cout << (check.valid ? "certificate valid" : "certificate INVALID") << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural controllability checks for linear systems over F(z)"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* cmd_check = app.add_subcommand("check", "Run controllability checks on a system file");
  cmd_check->add_option("system", check.path, "System file (JSON)")->required();
  cmd_check->add_option("--method", check.method, "pbh | kalman | matroid | all")
      ->check(CLI::IsMember({"pbh", "kalman", "matroid", "all"}))
      ->capture_default_str();
  cmd_check->add_option("--partition", check.partition,
                        "Row blocks for the matroid search, 1-based, e.g. \"1,2;3,4,5\" "
                        "(default: one block per row)");
  cmd_check->add_flag("--json", check.json, "Emit a JSON report");
  cmd_check->add_option("--seed", check.seed, "Seed for the randomized full-rank fast path (default: off)");
  cmd_check->add_option("--max-bases", check.maxBases, "Unimodular bases enumerated per block")
      ->capture_default_str();
  cmd_check->add_option("--max-columns", check.maxColumns, "Column limit for minor enumeration")
      ->capture_default_str();
  cmd_check->add_option("--certificate-out", check.certificateOut, "Write the certificate (JSON)");

  std::vector<std::string> compose_paths;
  std::string compose_out;
  auto* cmd_compose = app.add_subcommand("compose", "Parallel composition of system files");
  cmd_compose->add_option("systems", compose_paths, "Subsystem files")->required();
  cmd_compose->add_option("-o,--output", compose_out, "Output system file")->required();

  std::string verify_system, verify_cert;
  bool verify_json = false;
  auto* cmd_verify = app.add_subcommand("verify", "Check an exported certificate");
  cmd_verify->add_option("system", verify_system, "System file (JSON)")->required();
  cmd_verify->add_option("certificate", verify_cert, "Certificate file (JSON)")->required();
  cmd_verify->add_flag("--json", verify_json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*cmd_check) return runCheck(check);
    if (*cmd_compose) return runCompose(compose_paths, compose_out);
    if (*cmd_verify) return runVerify(verify_system, verify_cert, verify_json);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}
