#include "sctk/io.hpp"

#include <fstream>
#include <sstream>

#include "sctk/errors.hpp"
#include "sctk/expr_parser.hpp"

namespace sctk {
namespace {

using nlohmann::json;

std::vector<std::vector<std::string>> readMatrix(const json& doc, const char* key) {
  if (!doc.contains(key)) throw UsageError(std::string("system file lacks \"") + key + "\"");
  const json& m = doc.at(key);
  if (!m.is_array()) throw UsageError(std::string("\"") + key + "\" must be an array of rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    if (!row.is_array()) throw UsageError(std::string("\"") + key + "\" rows must be arrays");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (e.is_string()) {
        r.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        r.push_back(std::to_string(e.get<long long>()));
      } else {
        throw UsageError(std::string("\"") + key + "\" entries must be expression strings");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

SymMatrix parseMatrix(const std::vector<std::vector<std::string>>& rows, std::size_t cols,
                      const char* key, const std::string& origin, const SpacePtr& space) {
  SymMatrix m(space, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw UsageError(origin + ": \"" + key + "\" row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      SourceOrigin where{origin + "#" + key + "[" + std::to_string(r + 1) + "][" +
                             std::to_string(c + 1) + "]",
                         1, 1};
      m.set(r, c, parseExpr(ExprSource{rows[r][c], where}, space));
    }
  }
  return m;
}

}  // namespace

SystemFile systemFileFromJson(const json& doc) {
  if (!doc.is_object()) throw UsageError("system file must be a JSON object");
  SystemFile f;
  f.name = doc.value("name", std::string("system"));
  if (doc.contains("parameters")) {
    if (!doc.at("parameters").is_array()) throw UsageError("\"parameters\" must be an array");
    for (const auto& p : doc.at("parameters")) {
      if (!p.is_string()) throw UsageError("parameter names must be strings");
      f.parameters.push_back(p.get<std::string>());
    }
  }
  f.indeterminate = doc.value("indeterminate", std::string("s"));
  f.a = readMatrix(doc, "A");
  f.b = readMatrix(doc, "B");
  return f;
}

json toJson(const SystemFile& file) {
  json doc;
  doc["name"] = file.name;
  doc["parameters"] = file.parameters;
  if (file.indeterminate != "s") doc["indeterminate"] = file.indeterminate;
  doc["A"] = file.a;
  doc["B"] = file.b;
  return doc;
}

SystemFile readSystemFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
  return systemFileFromJson(doc);
}

void writeSystemFile(const SystemFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << toJson(file).dump(2) << '\n';
}

SystemDef toSystem(const SystemFile& file, const std::string& origin, SpacePtr space) {
  if (!space) space = ParamSpace::make(file.parameters, file.indeterminate);
  for (const auto& p : file.parameters) {
    auto idx = space->indexOf(p);
    if (!idx || *idx == space->sIndex()) {
      throw UsageError(origin + ": parameter '" + p + "' is not declared in the target space");
    }
  }
  const std::size_t n = file.a.size();
  if (n == 0) throw UsageError(origin + ": A must have at least one row");
  if (file.b.size() != n) {
    throw UsageError(origin + ": B has " + std::to_string(file.b.size()) + " rows, A has " +
                     std::to_string(n));
  }
  const std::size_t m = file.b.front().size();
  SymMatrix a = parseMatrix(file.a, n, "A", origin, space);
  SymMatrix b = parseMatrix(file.b, m, "B", origin, space);
  return SystemDef(file.name, std::move(a), std::move(b));
}

SystemFile toSystemFile(const SystemDef& sys) {
  SystemFile f;
  f.name = sys.name();
  f.parameters = sys.space()->params();
  f.indeterminate = sys.space()->sName();
  auto dump = [](const SymMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(render(m.at(r, c)));
    }
    return rows;
  };
  f.a = dump(sys.A());
  f.b = dump(sys.B());
  return f;
}

json certificateToJson(const Certificate& cert, const SystemDef& sys) {
  json doc;
  doc["system"] = sys.name();
  doc["n"] = sys.n();
  json blocks = json::array();
  for (std::size_t b = 0; b < cert.bases.size(); ++b) {
    json block;
    std::vector<std::size_t> rows;
    for (auto r : cert.partition.blocks()[b]) rows.push_back(r + 1);
    block["rows"] = rows;
    block["base"] = cert.bases[b].base.labels;
    block["witness"] = render(cert.bases[b].witness);
    blocks.push_back(std::move(block));
  }
  doc["blocks"] = std::move(blocks);
  if (cert.unionWitness) doc["union_witness"] = render(*cert.unionWitness);
  return doc;
}

CertificateClaim claimFromJson(const json& doc, const SystemDef& sys) {
  if (!doc.is_object() || !doc.contains("blocks") || !doc.at("blocks").is_array()) {
    throw UsageError("certificate must be an object with a \"blocks\" array");
  }
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::string>> bases;
  std::vector<std::optional<RationalFunction>> witnesses;
  std::size_t index = 0;
  for (const auto& block : doc.at("blocks")) {
    ++index;
    if (!block.contains("rows") || !block.contains("base")) {
      throw UsageError("certificate block " + std::to_string(index) + " needs \"rows\" and \"base\"");
    }
    std::vector<std::size_t> r;
    for (const auto& x : block.at("rows")) {
      if (!x.is_number_integer() || x.get<long long>() < 1) {
        throw UsageError("certificate rows are 1-based integers");
      }
      r.push_back(static_cast<std::size_t>(x.get<long long>() - 1));
    }
    rows.push_back(std::move(r));
    bases.push_back(block.at("base").get<std::vector<std::string>>());
    if (block.contains("witness")) {
      SourceOrigin where{"certificate#blocks[" + std::to_string(index) + "].witness", 1, 1};
      witnesses.emplace_back(
          parseExpr(ExprSource{block.at("witness").get<std::string>(), where}, sys.space()));
    } else {
      witnesses.emplace_back(std::nullopt);
    }
  }
  return CertificateClaim{RowPartition(std::move(rows), sys.n()), std::move(bases),
                          std::move(witnesses)};
}

json verdictToJson(const Verdict& v, const SystemDef& sys) {
  json doc;
  doc["method"] = std::string(toString(v.method));
  doc["status"] = std::string(toString(v.status));
  doc["detail"] = v.detail;
  if (v.rank) doc["rank"] = *v.rank;
  if (v.minorsGcd) doc["minors_gcd"] = render(*v.minorsGcd);
  if (v.certificate) doc["certificate"] = certificateToJson(*v.certificate, sys);
  return doc;
}

json certificateCheckToJson(const CertificateCheck& check) {
  json doc;
  doc["valid"] = check.valid;
  json blocks = json::array();
  for (const auto& b : check.blocks) {
    json block;
    block["base"] = b.labels;
    if (b.witness) block["witness"] = render(*b.witness);
    block["failures"] = b.failures;
    blocks.push_back(std::move(block));
  }
  doc["blocks"] = std::move(blocks);
  if (check.unionWitness) doc["union_witness"] = render(*check.unionWitness);
  doc["failures"] = check.failures;
  return doc;
}

}  // namespace sctk
