// latkit command-line front end.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input or usage error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latkit/claims.hpp"
#include "latkit/error.hpp"
#include "latkit/fqf.hpp"
#include "latkit/io.hpp"
#include "latkit/k3fam.hpp"
#include "latkit/shortvec.hpp"

using nlohmann::ordered_json;
using namespace latkit;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

ordered_json signature_json(Signature s) { return {s.positive, s.negative}; }

ordered_json lattice_summary(const IntegralLattice& l) {
  return {{"rank", l.rank()},
          {"det", to_string(l.det())},
          {"signature", signature_json(l.signature())},
          {"even", l.is_even()}};
}

ordered_json disc_json(const IntegralLattice& l) {
  FiniteQuadraticForm f = discriminant_group(l);
  ordered_json j;
  j["order"] = to_string(f.order());
  j["invariant_factors"] = ordered_json::array();
  for (const auto& d : f.invariant_factors) j["invariant_factors"].push_back(to_string(d));
  j["primary"] = f.primary_string();
  if (f.has_q) {
    j["q"] = ordered_json::array();
    for (const auto& q : f.q_values) j["q"].push_back(q.str());
  } else {
    j["q"] = nullptr;
  }
  j["b"] = ordered_json::array();
  for (std::size_t i = 0; i < f.b_matrix.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < f.b_matrix.cols(); ++k) row.push_back(f.b_matrix(i, k).str());
    j["b"].push_back(row);
  }
  return j;
}

std::string join(const ordered_json& arr, const std::string& sep = ",") {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += sep;
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

void print_lattice(std::ostream& os, const ordered_json& l) {
  os << "lattice: rank " << l["rank"].get<std::size_t>() << ", det " << l["det"].get<std::string>()
     << ", signature (" << l["signature"][0] << "," << l["signature"][1] << "), "
     << (l["even"].get<bool>() ? "even" : "odd") << "\n";
}

void print_disc(std::ostream& os, const ordered_json& d) {
  if (d["invariant_factors"].empty()) {
    os << "discriminant group: unimodular (trivial group)\n";
    return;
  }
  os << "discriminant group: " << join(d["invariant_factors"]) << " (order " << d["order"].get<std::string>()
     << ")\n";
  os << "primary decomposition: " << d["primary"].get<std::string>() << "\n";
  if (!d["q"].is_null()) os << "q(generators) mod 2: " << join(d["q"], " ") << "\n";
  os << "b(generators) mod 1:\n";
  for (const auto& row : d["b"]) os << "  " << join(row, " ") << "\n";
}

int emit(const ordered_json& j, bool as_json, const std::function<void(std::ostream&)>& text, int code) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    text(std::cout);
  return code;
}

int cmd_disc(const std::string& path, bool as_json) {
  LatticeFile file = read_lattice_file(path);
  IntegralLattice l = file.effective();
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "disc";
  j["file"] = path;
  j["glued"] = !file.glue.empty();
  j["lattice"] = lattice_summary(l);
  j["discriminant"] = disc_json(l);
  return emit(j, as_json, [&](std::ostream& os) {
    if (j["glued"].get<bool>()) os << "(overlattice from " << file.glue.size() << " glue rows)\n";
    print_lattice(os, j["lattice"]);
    print_disc(os, j["discriminant"]);
  }, kPass);
}

int cmd_shortvec(const std::string& path, const std::string& bound_text, bool count_only, unsigned threads,
                 bool as_json) {
  LatticeFile file = read_lattice_file(path);
  IntegralLattice l = file.effective();
  Integer bound = parse_integer(bound_text);
  EnumerationOptions opts;
  opts.threads = threads;
  ShortVectorReport r = short_vectors(l, bound, opts);
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "shortvec";
  j["file"] = path;
  j["bound"] = to_string(bound);
  j["negated"] = r.negated;
  j["pairs"] = r.pair_count();
  j["counts_by_norm"] = ordered_json::object();
  for (const auto& [norm, count] : r.counts_by_norm) j["counts_by_norm"][to_string(norm)] = count;
  if (!count_only) {
    j["vectors"] = ordered_json::array();
    for (const auto& v : r.vectors) {
      ordered_json coords = ordered_json::array();
      for (const auto& c : v.coords) coords.push_back(c.fits_slong_p() ? ordered_json(c.get_si()) : ordered_json(to_string(c)));
      j["vectors"].push_back({{"norm", to_string(v.norm)}, {"coords", coords}});
    }
  }
  return emit(j, as_json, [&](std::ostream& os) {
    os << "bound " << j["bound"].get<std::string>() << (r.negated ? " (negative definite, norms of -Gram)" : "")
       << ": found " << r.pair_count() << " pairs (" << 2 * r.pair_count() << " vectors)\n";
    for (const auto& [norm, count] : j["counts_by_norm"].items()) os << "  norm " << norm << ": " << count << " pairs\n";
    if (j.contains("vectors"))
      for (const auto& v : j["vectors"]) os << "  " << v["norm"].get<std::string>() << "  " << join(v["coords"], " ") << "\n";
  }, kPass);
}

int cmd_overlattice(const std::string& path, bool as_json) {
  LatticeFile file = read_lattice_file(path);
  if (file.glue.empty()) throw InputError(path + ": no glue rows");
  IntegralLattice base = file.base();
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "overlattice";
  j["file"] = path;
  j["base"] = lattice_summary(base);
  j["glue"] = file.glue.size();
  int code = kPass;
  try {
    Overlattice ov = overlattice(base, file.glue);
    j["ok"] = true;
    j["index"] = to_string(ov.index);
    j["lattice"] = lattice_summary(ov.lattice);
    j["basis"] = ordered_json::array();
    for (std::size_t i = 0; i < ov.basis.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < ov.basis.cols(); ++k) row.push_back(ov.basis(i, k).str());
      j["basis"].push_back(row);
    }
    j["discriminant"] = disc_json(ov.lattice);
  } catch (const GlueError& e) {
    j["ok"] = false;
    j["error"] = e.what();
    code = kCheckFailed;
  }
  return emit(j, as_json, [&](std::ostream& os) {
    os << "base ";
    print_lattice(os, j["base"]);
    if (!j["ok"].get<bool>()) {
      os << "glue check failed: " << j["error"].get<std::string>() << "\n";
      return;
    }
    os << "index " << j["index"].get<std::string>() << "\n";
    print_lattice(os, j["lattice"]);
    os << "basis (rows, base coordinates):\n";
    for (const auto& row : j["basis"]) os << "  " << join(row, " ") << "\n";
    print_disc(os, j["discriminant"]);
  }, code);
}

int cmd_repro(const std::vector<std::string>& filters, const std::vector<std::string>& faults, bool as_json) {
  ReproOptions opts;
  opts.tags.insert(filters.begin(), filters.end());
  opts.faults.active.insert(faults.begin(), faults.end());
  auto results = repro_all(opts);
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "repro";
  j["filter"] = filters;
  j["faults"] = faults;
  j["results"] = ordered_json::array();
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t disc = 0;
  for (const auto& r : results) {
    ordered_json c;
    c["id"] = r.id;
    c["tag"] = r.tag;
    c["locator"] = r.locator;
    c["expected"] = r.expected;
    c["computed"] = r.computed;
    c["pass"] = r.pass;
    c["status"] = to_string(r.status());
    c["note"] = r.note;
    c["millis"] = r.millis;
    j["results"].push_back(c);
    switch (r.status()) {
      case ClaimStatus::Pass: ++pass; break;
      case ClaimStatus::Fail: ++fail; break;
      case ClaimStatus::Discrepancy: ++disc; break;
    }
  }
  j["summary"] = {{"claims", results.size()}, {"pass", pass}, {"fail", fail}, {"discrepancy", disc}};
  const int code = all_pass(results) ? kPass : kCheckFailed;
  j["exit_code"] = code;
  return emit(j, as_json, [&](std::ostream& os) {
    if (!faults.empty()) {
      os << "injected faults:";
      for (const auto& f : faults) os << " " << f;
      os << "\n";
    }
    for (const auto& c : j["results"]) {
      std::string status = c["status"].get<std::string>();
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      os << "[" << status << "] " << c["id"].get<std::string>() << ": " << c["locator"].get<std::string>() << "\n"
         << "    expected: " << c["expected"].get<std::string>() << "\n"
         << "    computed: " << c["computed"].get<std::string>() << "\n";
      if (!c["note"].get<std::string>().empty()) os << "    note: " << c["note"].get<std::string>() << "\n";
      std::ostringstream ms;
      ms.precision(1);
      ms << std::fixed << c["millis"].get<double>();
      os << "    time: " << ms.str() << " ms\n";
    }
    os << results.size() << " claims: " << pass << " pass, " << fail << " fail, " << disc << " discrepancy\n";
  }, code);
}

int cmd_family(const std::string& path, bool as_json) {
  FamilyFile f = read_family_file(path);
  auto polys = f.sample_polynomials();
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "family";
  j["file"] = path;
  j["vars"] = f.num_vars;
  j["weights"] = f.weights;
  bool ok = true;
  std::vector<int> params;
  j["equations"] = ordered_json::array();
  for (std::size_t i = 0; i < f.equations.size(); ++i) {
    const auto& e = f.equations[i];
    Invariance inv = is_invariant_family(e);
    ok = ok && inv.invariant;
    int degree = e.degree_of(e.monomials.front());
    int dim = static_cast<int>(weight_space(e.weights, e.degrees, degree, inv.weight).size());
    params.push_back(dim);
    j["equations"].push_back({{"name", e.name},
                              {"degree", degree},
                              {"monomials", e.monomials.size()},
                              {"monomial_weights", inv.monomial_weights},
                              {"invariant", inv.invariant},
                              {"weight", inv.weight},
                              {"weight_space_dim", dim},
                              {"sample", polys[i].str()}});
  }
  auto sigma = f.maps.find("sigma");
  auto iota = f.maps.find("iota");
  if (sigma != f.maps.end()) {
    int comm = static_cast<int>(commutant_dim(sigma->second));
    int moduli = moduli_count(params, comm, f.redundancy);
    j["commutant_dim"] = comm;
    j["redundancy"] = f.redundancy;
    j["moduli"] = moduli;
    if (f.expect_moduli) {
      j["expected_moduli"] = *f.expect_moduli;
      ok = ok && moduli == *f.expect_moduli;
    }
    ordered_json pres = ordered_json::array();
    for (const auto& p : polys) pres.push_back(preserves(sigma->second, p));
    j["sigma_preserves"] = pres;
  }
  if (sigma != f.maps.end() && iota != f.maps.end()) {
    bool d = dihedral_in_pgl(sigma->second, iota->second);
    j["dihedral"] = d;
    ok = ok && d;
  }
  if (iota != f.maps.end()) {
    ordered_json images = ordered_json::array();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      std::string image = "none";
      for (std::size_t k = 0; k < polys.size(); ++k)
        if (swap_check(iota->second, polys[i], polys[k])) {
          image = f.equations[k].name;
          break;
        }
      images.push_back(image);
    }
    j["iota_images"] = images;
    FixedPointCount fc = fixed_point_count(polys, iota->second);
    ordered_json spaces = ordered_json::array();
    for (const auto& s : fc.spaces)
      spaces.push_back({{"eigenvalue", s.eigenvalue.str()},
                        {"dim", s.dim},
                        {"equations", s.equations},
                        {"kind", to_string(s.kind)},
                        {"points", s.points}});
    j["fixed_locus"] = spaces;
    j["fixed_points_finite"] = fc.finite;
    j["fixed_points"] = fc.total;
    if (f.expect_fixed_points) {
      j["expected_fixed_points"] = *f.expect_fixed_points;
      ok = ok && fc.finite && fc.total == *f.expect_fixed_points;
    }
  }
  j["ok"] = ok;
  return emit(j, as_json, [&](std::ostream& os) {
    os << "vars " << f.num_vars << ", weights " << join(j["weights"], " ") << "\n";
    for (const auto& e : j["equations"]) {
      os << "equation " << e["name"].get<std::string>() << ": degree " << e["degree"] << ", " << e["monomials"]
         << " monomials, weights " << join(e["monomial_weights"], " ") << " -> "
         << (e["invariant"].get<bool>() ? "invariant" : "NOT invariant") << " (weight " << e["weight"]
         << "), weight space dim " << e["weight_space_dim"] << "\n";
      os << "  sample: " << e["sample"].get<std::string>() << "\n";
    }
    if (j.contains("commutant_dim")) {
      os << "commutant dim " << j["commutant_dim"] << ", redundancy " << j["redundancy"] << ", moduli " << j["moduli"];
      if (j.contains("expected_moduli")) os << " (expected " << j["expected_moduli"] << ")";
      os << "\n";
      os << "sigma preserves samples: " << join(j["sigma_preserves"], " ") << "\n";
    }
    if (j.contains("dihedral")) os << "dihedral in PGL: " << (j["dihedral"].get<bool>() ? "yes" : "no") << "\n";
    if (j.contains("fixed_locus")) {
      os << "iota images: " << join(j["iota_images"], " ") << "\n";
      for (const auto& s : j["fixed_locus"])
        os << "  eigenvalue " << s["eigenvalue"].get<std::string>() << ": dim " << s["dim"] << ", "
           << s["equations"] << " restricted equations, " << s["kind"].get<std::string>() << ", " << s["points"]
           << " points\n";
      os << "fixed points: " << j["fixed_points"] << (j["fixed_points_finite"].get<bool>() ? "" : " (locus not finite)");
      if (j.contains("expected_fixed_points")) os << " (expected " << j["expected_fixed_points"] << ")";
      os << "\n";
    }
    os << (ok ? "all checks pass" : "CHECK FAILED") << "\n";
  }, ok ? kPass : kCheckFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice and discriminant-form toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string file;

  auto* disc = app.add_subcommand("disc", "Discriminant group and form of a lattice file");
  disc->add_option("file", file, "lattice file")->required();
  disc->add_flag("--json", as_json, "JSON output");

  std::string bound;
  bool count_only = false;
  unsigned threads = 1;
  auto* sv = app.add_subcommand("shortvec", "Enumerate short vectors of a definite lattice");
  sv->add_option("file", file, "lattice file")->required();
  sv->add_option("--bound", bound, "norm bound |x.x| <= B")->required();
  sv->add_flag("--count-only", count_only, "only report counts");
  sv->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 256U));
  sv->add_flag("--json", as_json, "JSON output");

  auto* ov = app.add_subcommand("overlattice", "Build the overlattice given by the glue rows");
  ov->add_option("file", file, "lattice file with glue rows")->required();
  ov->add_flag("--json", as_json, "JSON output");

  std::vector<std::string> filters;
  std::vector<std::string> faults;
  auto* repro = app.add_subcommand("repro", "Run the reproduction suite");
  repro->add_option("--filter", filters, "only claims with this tag (repeatable)");
  repro->add_option("--inject-fault", faults, "corrupt a construction (repeatable)");
  repro->add_flag("--json", as_json, "JSON output");

  auto* fam = app.add_subcommand("family", "Check a monomial family file");
  fam->add_option("file", file, "family file")->required();
  fam->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*disc) return cmd_disc(file, as_json);
    if (*sv) return cmd_shortvec(file, bound, count_only, threads, as_json);
    if (*ov) return cmd_overlattice(file, as_json);
    if (*repro) return cmd_repro(filters, faults, as_json);
    if (*fam) return cmd_family(file, as_json);
  } catch (const GlueError& e) {
    std::cerr << "latkit: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "latkit: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
