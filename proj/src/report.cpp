#include "qdc/report.hpp"

#include <json.hpp>
#include <sstream>

#include "qdc/expr.hpp"

namespace qdc {

using nlohmann::json;

std::string report_json(const std::vector<CheckResult>& results, const std::string& suite, int N,
                        const BatteryOptions& opt, bool stable) {
  json checks = json::array();
  for (const auto& r : results) {
    json c;
    c["name"] = r.name;
    c["status"] = status_name(r.status);
    c["witness"] = r.witness ? json(print_poly(*r.witness)) : json(nullptr);
    c["detail"] = r.detail;
    c["millis"] = stable ? 0 : r.millis;
    checks.push_back(c);
  }
  json doc;
  doc["schema"] = "qdc-report/1";
  doc["suite"] = suite;
  doc["N"] = N;
  doc["convention"] = convention_name(opt.convention);
  doc["mutation"] = mutation_name(opt.mutation);
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<CheckResult>& results, const std::string& suite, int N,
                        const BatteryOptions& opt) {
  std::ostringstream os;
  os << "suite " << suite << "  N=" << N << "  convention=" << convention_name(opt.convention);
  if (opt.mutation != Mutation::none) os << "  mutation=" << mutation_name(opt.mutation);
  os << "\n";
  int npass = 0, nfail = 0, nskip = 0;
  for (const auto& r : results) {
    os << "  " << (r.status == CheckStatus::pass   ? "PASS"
                   : r.status == CheckStatus::fail ? "FAIL"
                                                   : "SKIP")
       << "  " << r.name << "  (" << r.millis << " ms)";
    if (!r.detail.empty()) os << "  " << r.detail;
    if (r.witness) os << "  witness: " << print_poly(*r.witness);
    os << "\n";
    (r.status == CheckStatus::pass ? npass : r.status == CheckStatus::fail ? nfail : nskip)++;
  }
  os << "result: " << npass << " passed, " << nfail << " failed, " << nskip << " skipped\n";
  return os.str();
}

std::string dump_rmatrix_json(int N, Convention convention) {
  ScalarMatrix r = build_rhat(N, convention);
  json entries = json::array();
  for (int row = 0; row < r.dim(); ++row)
    for (const auto& [col, v] : r.row(row)) {
      // Tensor indices (i,j),(k,l), 1-based.
      json e = json::array();
      e.push_back(row / N + 1);
      e.push_back(row % N + 1);
      e.push_back(col / N + 1);
      e.push_back(col % N + 1);
      e.push_back(v.str());
      entries.push_back(e);
    }
  json doc;
  doc["N"] = N;
  doc["convention"] = convention_name(convention);
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

namespace {

std::string word_str(const Word& w, int N) {
  Polynomial p = Polynomial::from_word(w, Scalar::one(N));
  return print_poly(p);
}

}  // namespace

std::string dump_rules_json(PresName name, int N, const BuildOptions& opt) {
  Presentation pres = make_presentation(name, N, opt);
  json arr = json::array();
  for (const auto& rule : pres.rules.rules()) {
    json r;
    r["lhs"] = word_str(rule.lhs, N);
    r["rhs"] = print_poly(rule.rhs);
    r["source"] = rule.source;
    arr.push_back(r);
  }
  return arr.dump(2) + "\n";
}

std::string dump_presentation_json(PresName name, int N, const BuildOptions& opt) {
  Presentation pres = make_presentation(name, N, opt);
  json gens = json::array();
  for (const Gen& g : pres.generators)
    gens.push_back(std::string(kind_name(g.kind)) + "[" + std::to_string(g.row) + "," +
                   std::to_string(g.col) + "]");
  json fams = json::array();
  for (const auto& fam : pres.families) {
    json f;
    f["tag"] = fam.tag;
    f["rank"] = fam.rank;
    json comps = json::array();
    for (const auto& c : fam.components) comps.push_back(print_poly(c));
    f["components"] = comps;
    fams.push_back(f);
  }
  json defined;
  auto matrix_json = [](const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(print_poly(m.at(i, j)));
      rows.push_back(row);
    }
    return rows;
  };
  defined["DetT"] = print_poly(det_q_T(N));
  if (name == PresName::swz) {
    defined["WL"] = matrix_json(wl_matrix(N));
    defined["OmX"] = matrix_json(omega_x_matrix(N));
    defined["XiX"] = print_poly(xi_x(N, opt));
  }
  if (name == PresName::lbasis) {
    defined["OmTilde"] = matrix_json(omega_tilde_lbasis(N, opt));
    defined["TrOmL"] = print_poly(tr_q_omL(N, opt));
    defined["W"] = matrix_json(w_matrix(N));
    defined["Wbar"] = matrix_json(wbar_matrix(N));
  }
  if (name == PresName::fp) {
    defined["OmTilde"] = matrix_json(omega_tilde_fp(N, opt));
    defined["eliminated"] = "OmT[" + std::to_string(N) + "," + std::to_string(N) +
                            "] via Tr_q(Omega-tilde) = 0";
  }
  json doc;
  doc["name"] = pres_name(name);
  doc["N"] = N;
  doc["convention"] = convention_name(opt.convention);
  doc["generators"] = gens;
  doc["families"] = fams;
  doc["defined_symbols"] = defined;
  doc["rules"] = static_cast<int>(pres.rules.size());
  return doc.dump(2) + "\n";
}

}  // namespace qdc
