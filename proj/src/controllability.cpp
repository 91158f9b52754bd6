#include "sctk/controllability.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "sctk/errors.hpp"
#include "sctk/expr_parser.hpp"

namespace sctk {

SystemDef::SystemDef(std::string name, SymMatrix a, SymMatrix b)
    : name_(std::move(name)), a_(std::move(a)), b_(std::move(b)) {
  requireSameSpace(a_.space(), b_.space());
  if (!a_.isSquare()) throw UsageError("A must be square");
  if (a_.rows() == 0) throw UsageError("a system needs at least one state");
  if (b_.rows() != a_.rows()) {
    throw UsageError("B has " + std::to_string(b_.rows()) + " rows but A is " +
                     std::to_string(a_.rows()) + "x" + std::to_string(a_.rows()));
  }
  if (a_.involvesS() || b_.involvesS()) {
    throw UsageError("A and B must not involve the indeterminate " + a_.space()->sName());
  }
}

RowPartition::RowPartition(std::vector<std::vector<std::size_t>> blocks, std::size_t n)
    : blocks_(std::move(blocks)), n_(n) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) throw UsageError("partition blocks must be nonempty");
    for (auto r : block) {
      if (r >= n) throw UsageError("partition row " + std::to_string(r + 1) + " exceeds n = " +
                                   std::to_string(n));
      if (seen[r]) throw UsageError("partition row " + std::to_string(r + 1) + " appears twice");
      seen[r] = true;
      ++covered;
    }
  }
  if (covered != n) throw UsageError("partition does not cover all " + std::to_string(n) + " rows");
}

RowPartition RowPartition::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t r = 0; r < n; ++r) blocks.push_back({r});
  return RowPartition(std::move(blocks), n);
}

RowPartition RowPartition::consecutive(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t next = 0;
  for (auto size : sizes) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < size; ++i) block.push_back(next++);
    blocks.push_back(std::move(block));
  }
  return RowPartition(std::move(blocks), next);
}

RowPartition RowPartition::parse(std::string_view text, std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks(1);
  std::size_t i = 0;
  auto skipSpace = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skipSpace();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value == 0) {
      throw UsageError("partition '" + std::string(text) + "': expected a row number >= 1 at offset " +
                       std::to_string(i));
    }
    i = static_cast<std::size_t>(ptr - text.data());
    blocks.back().push_back(value - 1);
    skipSpace();
    if (i == text.size()) break;
    if (text[i] == ';') {
      blocks.emplace_back();
    } else if (text[i] != ',') {
      throw UsageError("partition '" + std::string(text) + "': expected ',' or ';' at offset " +
                       std::to_string(i));
    }
    ++i;
  }
  return RowPartition(std::move(blocks), n);
}

std::string RowPartition::toString() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += ';';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(blocks_[b][i] + 1);
    }
  }
  return out;
}

std::vector<std::size_t> Certificate::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : bases) out.push_back(b.base.labels.size());
  return out;
}

std::string_view toString(Status s) {
  switch (s) {
    case Status::kControllable: return "CONTROLLABLE";
    case Status::kNotControllable: return "NOT_CONTROLLABLE";
    case Status::kCertified: return "CERTIFIED";
    case Status::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view toString(Method m) {
  switch (m) {
    case Method::kPbh: return "pbh";
    case Method::kKalman: return "kalman";
    case Method::kMatroid: return "matroid";
    case Method::kComposite: return "composite";
  }
  return "?";
}

Verdict pbhCheck(const SystemDef& sys, const CheckOptions& opts) {
  Verdict v;
  v.method = Method::kPbh;
  const SymMatrix pencil = sys.pencil();
  const std::size_t n = sys.n();
  const std::size_t r = rank(pencil, opts.seed);
  v.rank = r;
  if (r < n) {
    v.status = Status::kNotControllable;
    v.detail = "rank [sI - A | B] = " + std::to_string(r) + " < n = " + std::to_string(n) +
               " over F(z)(s)";
    return v;
  }
  Polynomial g(sys.space());
  try {
    g = minorsGcdInS(pencil, n, opts.maxColumns);
  } catch (const LimitExceeded& e) {
    v.status = Status::kInconclusive;
    v.detail = std::string("max-columns limit: ") + e.what();
    return v;
  }
  v.minorsGcd = g;
  if (g.sDegree() == 0) {
    v.status = Status::kControllable;
    v.detail = "rank [sI - A | B] = n and the maximal minors have no common factor in s";
  } else {
    v.status = Status::kNotControllable;
    v.detail = "maximal minors share the factor " + render(g) + " (s-degree " +
               std::to_string(g.sDegree()) + "); its roots are uncontrollable modes";
  }
  return v;
}

Verdict kalmanCheck(const SystemDef& sys, const CheckOptions& opts) {
  Verdict v;
  v.method = Method::kKalman;
  const std::size_t r = sys.m() == 0 ? 0 : rank(controllabilityMatrix(sys.A(), sys.B()), opts.seed);
  v.rank = r;
  const std::string desc = "rank [B, AB, ..., A^(n-1)B] = " + std::to_string(r);
  if (r == sys.n()) {
    v.status = Status::kControllable;
    v.detail = desc + " = n over F(z)";
  } else {
    v.status = Status::kNotControllable;
    v.detail = desc + " < n = " + std::to_string(sys.n()) + " over F(z)";
  }
  return v;
}

Verdict certificateSearch(const SystemDef& sys, const RowPartition& partition,
                          const CheckOptions& opts) {
  if (partition.n() != sys.n()) {
    throw UsageError("partition covers " + std::to_string(partition.n()) + " rows but n = " +
                     std::to_string(sys.n()));
  }
  Verdict v;
  v.method = Method::kMatroid;
  v.status = Status::kInconclusive;
  const SymMatrix pencil = sys.pencil();
  std::vector<UnimodularBaseList> lists;
  std::vector<std::vector<ColumnSet>> candidates;
  bool truncated = false;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    const auto& block = partition.blocks()[b];
    VectorMatroid m(pencil.selectRows(block));
    const std::size_t r = m.rank();
    if (r != block.size()) {
      v.detail = "block " + std::to_string(b + 1) + " has rank " + std::to_string(r) + " < " +
                 std::to_string(block.size()) + " rows; no unimodular base exists";
      return v;
    }
    lists.push_back(enumerateUnimodularBases(m, opts.maxBases));
    truncated = truncated || lists.back().truncated;
    if (lists.back().bases.empty()) {
      v.detail = "block " + std::to_string(b + 1) + " has no unimodular base";
      return v;
    }
    std::vector<ColumnSet> sets;
    for (const auto& ub : lists.back().bases) sets.push_back(ub.base.columns);
    candidates.push_back(std::move(sets));
  }
  auto unionOf = [&](const std::vector<std::size_t>& pick) {
    ColumnSet u;
    for (std::size_t b = 0; b < pick.size(); ++b) u = u | candidates[b][pick[b]];
    return u;
  };
  // Prefer a family whose union is unimodular in the whole pencil.
  std::size_t examined = 0;
  auto pick = findDisjointSelection(candidates, [&](const std::vector<std::size_t>& p) {
    if (++examined > opts.maxBases) return false;
    const RationalFunction d = det(pencil.selectColumns(unionOf(p).indices()));
    return !d.isZero() && d.isSFree();
  });
  const bool unionUnimodular = pick.has_value();
  if (!pick) pick = findDisjointSelection(candidates);
  if (!pick) {
    v.detail = "no pairwise-disjoint family of unimodular bases";
    if (truncated) v.detail += " (base enumeration truncated at " + std::to_string(opts.maxBases) + ")";
    return v;
  }
  Certificate cert{partition, {}, {}, unionUnimodular};
  for (std::size_t b = 0; b < pick->size(); ++b) cert.bases.push_back(lists[b].bases[(*pick)[b]]);
  cert.unionWitness = det(pencil.selectColumns(unionOf(*pick).indices())).reduced();

  std::ostringstream os;
  os << "disjoint unimodular bases of sizes ";
  const auto sizes = cert.sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "+" : "") << sizes[i];
  os << " = " << sys.n();
  if (unionUnimodular) {
    os << "; their union is a unimodular base of the pencil";
  } else if (cert.unionWitness->isZero()) {
    v.detail = os.str() + ", but their union is dependent in the full pencil";
    return v;
  } else {
    Polynomial g(sys.space());
    try {
      g = minorsGcdInS(pencil, sys.n(), opts.maxColumns);
    } catch (const LimitExceeded& e) {
      v.detail = os.str() + ", but the union witness " + render(*cert.unionWitness) + " involves " +
                 sys.space()->sName() + " and the minors check hit the max-columns limit: " + e.what();
      return v;
    }
    if (g.sDegree() > 0) {
      v.detail = os.str() + ", but the full pencil's maximal minors share the factor " + render(g) +
                 "; the block bases do not carry over to the whole pencil";
      return v;
    }
    os << "; their union is not unimodular but the maximal minors have gcd 1";
  }
  v.status = Status::kCertified;
  v.detail = os.str();
  v.certificate = std::move(cert);
  return v;
}

SystemDef composeParallel(std::span<const SystemDef> subsystems) {
  if (subsystems.empty()) throw UsageError("nothing to compose");
  if (subsystems.size() == 1) return subsystems.front();
  const auto& space = subsystems.front().space();
  const std::size_t m = subsystems.front().m();
  std::size_t n = 0;
  std::string name = "parallel(";
  for (std::size_t i = 0; i < subsystems.size(); ++i) {
    const auto& s = subsystems[i];
    if (!sameSpace(space, s.space())) {
      throw UsageError("subsystem '" + s.name() + "' uses a different parameter space");
    }
    if (s.m() != m) {
      throw UsageError("input dimension mismatch: '" + subsystems.front().name() + "' has m = " +
                       std::to_string(m) + ", '" + s.name() + "' has m = " + std::to_string(s.m()));
    }
    n += s.n();
    name += (i ? "," : "") + s.name();
  }
  name += ")";
  SymMatrix a(space, n, n);
  SymMatrix b(space, n, m);
  std::size_t offset = 0;
  for (const auto& s : subsystems) {
    for (std::size_t r = 0; r < s.n(); ++r) {
      for (std::size_t c = 0; c < s.n(); ++c) a.set(offset + r, offset + c, s.A().at(r, c));
      for (std::size_t c = 0; c < m; ++c) b.set(offset + r, c, s.B().at(r, c));
    }
    offset += s.n();
  }
  return SystemDef(std::move(name), std::move(a), std::move(b));
}

Verdict compositeCertificateCheck(std::span<const SystemDef> subsystems, const CheckOptions& opts) {
  SystemDef composite = composeParallel(subsystems);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < subsystems.size(); ++i) {
    Verdict sub = pbhCheck(subsystems[i], opts);
    if (sub.status != Status::kControllable) {
      Verdict v;
      v.method = Method::kComposite;
      v.status = Status::kInconclusive;
      v.detail = "subsystem " + std::to_string(i + 1) + " ('" + subsystems[i].name() +
                 "') is not known to be structurally controllable: " + sub.detail;
      return v;
    }
    sizes.push_back(subsystems[i].n());
  }
  Verdict v = certificateSearch(composite, RowPartition::consecutive(sizes), opts);
  v.method = Method::kComposite;
  return v;
}

CertificateClaim toClaim(const Certificate& cert) {
  CertificateClaim claim{cert.partition, {}, {}};
  for (const auto& b : cert.bases) {
    claim.bases.push_back(b.base.labels);
    claim.witnesses.emplace_back(b.witness);
  }
  return claim;
}

CertificateCheck verifyCertificate(const SystemDef& sys, const CertificateClaim& claim) {
  if (claim.partition.n() != sys.n()) {
    throw UsageError("certificate partition covers " + std::to_string(claim.partition.n()) +
                     " rows but the system has n = " + std::to_string(sys.n()));
  }
  if (claim.bases.size() != claim.partition.size()) {
    throw UsageError("certificate lists " + std::to_string(claim.bases.size()) + " bases for " +
                     std::to_string(claim.partition.size()) + " blocks");
  }
  if (!claim.witnesses.empty() && claim.witnesses.size() != claim.bases.size()) {
    throw UsageError("certificate witness count does not match its base count");
  }
  const SymMatrix pencil = sys.pencil();
  CertificateCheck out;
  std::vector<ColumnSet> sets;
  std::size_t total = 0;
  for (std::size_t b = 0; b < claim.bases.size(); ++b) {
    const auto& block = claim.partition.blocks()[b];
    BlockCheck bc;
    bc.labels = claim.bases[b];
    std::vector<std::size_t> cols;
    for (const auto& l : bc.labels) {
      auto idx = pencil.labelIndex(l);
      if (!idx) throw UsageError("certificate names unknown column label '" + l + "'");
      cols.push_back(*idx);
    }
    const ColumnSet set = ColumnSet::of(cols);
    if (set.size() != cols.size()) bc.failures.push_back("base repeats a column label");
    sets.push_back(set);
    total += cols.size();
    if (cols.size() != block.size()) {
      bc.failures.push_back("base has " + std::to_string(cols.size()) + " columns but block has " +
                            std::to_string(block.size()) + " rows");
    } else {
      RationalFunction w = detCofactor(pencil.selectRows(block).selectColumns(cols)).reduced();
      if (w.isZero()) {
        bc.failures.push_back("witness is zero: columns are dependent");
      } else if (!w.isSFree()) {
        bc.failures.push_back("witness " + render(w) + " involves " + sys.space()->sName() +
                              ": not a unit, so the base is not unimodular");
      }
      if (!claim.witnesses.empty() && claim.witnesses[b] && !(*claim.witnesses[b] == w)) {
        bc.failures.push_back("claimed witness " + render(*claim.witnesses[b]) +
                              " differs from recomputed " + render(w));
      }
      bc.witness = std::move(w);
    }
    out.blocks.push_back(std::move(bc));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].intersects(sets[j])) {
        std::string shared;
        for (auto c : (sets[i] & sets[j]).indices()) {
          shared += (shared.empty() ? "" : ",") + pencil.labels()[c];
        }
        out.failures.push_back("disjointness: bases " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " share {" + shared + "}");
      }
    }
  }
  if (total != sys.n()) {
    out.failures.push_back("sizes sum to " + std::to_string(total) + ", expected n = " +
                           std::to_string(sys.n()));
  }
  ColumnSet all;
  for (const auto& set : sets) all = all | set;
  if (all.size() == sys.n()) {
    RationalFunction w = detCofactor(pencil.selectColumns(all.indices())).reduced();
    if (w.isZero()) {
      out.failures.push_back("union of the bases is dependent in the full pencil");
    } else if (!w.isSFree()) {
      const std::string what = "union witness " + render(w) + " involves " + sys.space()->sName();
      try {
        const Polynomial g = minorsGcdInS(pencil, sys.n(), pencil.cols());
        if (g.sDegree() > 0) {
          out.failures.push_back(what + " and the maximal minors share the factor " + render(g));
        }
      } catch (const LimitExceeded& e) {
        out.failures.push_back(what + " and the minors check failed: " + e.what());
      }
    }
    out.unionWitness = std::move(w);
  }
  out.valid = out.failures.empty() &&
              std::all_of(out.blocks.begin(), out.blocks.end(),
                          [](const BlockCheck& bc) { return bc.failures.empty(); });
  return out;
}

CertificateCheck verifyCertificate(const SystemDef& sys, const Certificate& cert) {
  return verifyCertificate(sys, toClaim(cert));
}

}  // namespace sctk
