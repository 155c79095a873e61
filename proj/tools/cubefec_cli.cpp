// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: dimension tables, verification suites, basis and
// DOF export, mesh complexes. Exit codes: 0 pass, 1 verification failure,
// 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cubefec/json_io.hpp"
#include "cubefec/mesh.hpp"

using namespace cubefec;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

[[noreturn]] void io_error(const std::string& what) {
  std::cerr << "I/O error: " << what << "\n";
  std::exit(kExitIo);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) io_error("cannot open " + path);
  os << text;
  if (!os.good()) io_error("failed writing " + path);
}

struct CellVerdict {
  std::string cell;
  bool pass;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CellVerdict> cells;
  bool pass() const {
    for (const auto& c : cells) {
      if (!c.pass) return false;
    }
    return true;
  }
};

std::string cell_name(int n, int r, int k, int l = -1) {
  std::ostringstream os;
  os << "n=" << n << ",r=" << r << ",k=" << k;
  if (l >= 0) os << ",l=" << l;
  return os.str();
}

SuiteResult run_suite(const std::string& suite, int nmax, int rmax, int rexact,
                      unsigned long long seed, int samples) {
  SuiteResult res{suite, {}};
  auto add = [&](const std::string& cell, bool pass, const std::string& detail) {
    res.cells.push_back({cell, pass, detail});
  };

  if (suite == "koszul") {
    for (int n = 1; n <= nmax; ++n)
      for (int r = 1; r <= rmax; ++r)
        for (int l = 0; l < r; ++l)
          for (int k = 0; k < n; ++k) {
            auto rep = verify_koszul_exactness(n, r, l, k);
            std::ostringstream os;
            os << rep.dim_img_in << " + " << rep.dim_img_mid << " vs " << rep.dim_mid;
            add(cell_name(n, r, k, l), rep.pass(), os.str());
          }
  } else if (suite == "degree") {
    for (int n = 1; n <= nmax; ++n)
      for (int r = 1; r <= rmax; ++r)
        for (int k = 0; k <= n; ++k) {
          auto rep = verify_degree_property(n, r, k);
          add(cell_name(n, r, k), rep.pass, rep.detail);
        }
  } else if (suite == "subcomplex") {
    for (int n = 1; n <= nmax; ++n)
      for (int r = 1; r <= rmax; ++r)
        for (int k = 1; k <= n; ++k) {
          auto rep = verify_subcomplex(n, r, k);
          add(cell_name(n, r, k), rep.pass, rep.detail);
        }
  } else if (suite == "inclusion") {
    for (int n = 1; n <= nmax; ++n)
      for (int r = 1; r <= rmax; ++r)
        for (int k = 0; k <= n; ++k) {
          auto rep = verify_inclusion(n, r, k);
          add(cell_name(n, r, k), rep.pass, rep.detail);
        }
  } else if (suite == "trace") {
    for (int n = 2; n <= nmax; ++n)
      for (int r = 1; r <= rmax; ++r)
        for (int k = 0; k <= n; ++k) {
          auto rep = verify_trace(n, r, k);
          add(cell_name(n, r, k), rep.pass, rep.detail);
        }
  } else if (suite == "unisolvence") {
    for (int n = 1; n <= nmax; ++n)
      for (int r = 1; r <= rmax; ++r)
        for (int k = 0; k <= n; ++k) {
          auto rep = certify_unisolvence(n, r, k);
          std::ostringstream os;
          os << "dim " << rep.dim_basis << ", dofs " << rep.n_dofs;
          add(cell_name(n, r, k), rep.pass(), os.str());
        }
  } else if (suite == "vanishing") {
    for (int n = 1; n <= nmax; ++n)
      for (int r = 1; r <= rmax; ++r)
        for (int k = 0; k <= n; ++k) {
          auto rep = certify_vanishing_trace_unisolvence(n, r, k);
          std::ostringstream os;
          os << "ring dim " << rep.ring_dim << ", weights " << rep.n_weights
             << (rep.square ? ", square" : "");
          add(cell_name(n, r, k), rep.pass(), os.str());
        }
  } else if (suite == "commute") {
    for (int n = 1; n <= nmax; ++n) {
      const int r = (rexact > 0) ? rexact : std::max(n, rmax);
      if (r < n) continue;
      auto rep = certify_commuting_diagram(n, r, samples, seed);
      std::ostringstream os;
      os << "seed " << seed << ", " << samples << " samples per k";
      add(cell_name(n, r, -1), rep.pass, rep.pass ? os.str() : rep.detail);
    }
  } else {
    throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
  }
  return res;
}

int report_suites(const std::vector<SuiteResult>& suites, const std::string& format,
                  const std::string& out) {
  bool all_pass = true;
  if (format == "json") {
    ordered_json j;
    j["suites"] = ordered_json::array();
    for (const auto& s : suites) {
      ordered_json js;
      js["suite"] = s.suite;
      js["pass"] = s.pass();
      js["cells"] = ordered_json::array();
      for (const auto& c : s.cells) {
        js["cells"].push_back(
            ordered_json{{"cell", c.cell}, {"pass", c.pass}, {"detail", c.detail}});
      }
      j["suites"].push_back(std::move(js));
      all_pass = all_pass && s.pass();
    }
    j["pass"] = all_pass;
    write_text(out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& s : suites) {
      const bool pass = s.pass();
      all_pass = all_pass && pass;
      os << (pass ? "PASS" : "FAIL") << " " << s.suite << " (" << s.cells.size()
         << " cells)\n";
      for (const auto& c : s.cells) {
        if (!c.pass) os << "  FAIL " << c.cell << ": " << c.detail << "\n";
      }
    }
    write_text(out, os.str());
  }
  return all_pass ? kExitPass : kExitFail;
}

MeshSpec parse_mesh_arg(const std::string& arg) {
  if (arg.rfind("grid:", 0) == 0) {
    MeshSpec spec;
    std::string dims = arg.substr(5);
    std::replace(dims.begin(), dims.end(), 'x', ' ');
    std::istringstream is(dims);
    int v;
    while (is >> v) spec.grid.push_back(v);
    if (spec.grid.empty()) throw CLI::ValidationError("--mesh", "empty grid spec");
    spec.n = static_cast<int>(spec.grid.size());
    return spec;
  }
  std::ifstream is(arg);
  if (!is) io_error("cannot read mesh file " + arg);
  nlohmann::json j;
  is >> j;
  return mesh_spec_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic construction and verification of the S-family "
               "finite element differential forms on cubes"};
  app.require_subcommand(1);

  // dims
  auto* dims = app.add_subcommand("dims", "Dimension table of S_r Lambda^k(I^n)");
  int d_n = 3, d_rmax = 7;
  bool d_constructive = false;
  std::string d_format = "table", d_out;
  dims->add_option("--n", d_n, "Ambient dimension")->check(CLI::PositiveNumber);
  dims->add_option("--rmax", d_rmax, "Largest polynomial degree")->check(CLI::PositiveNumber);
  dims->add_flag("--constructive", d_constructive,
                 "Also echelonize the constructed bases and compare ranks");
  dims->add_option("--format", d_format)->check(CLI::IsMember({"table", "json"}));
  dims->add_option("--out", d_out, "Write the report here instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string v_suite = "all", v_format = "table", v_out;
  int v_n = 0, v_rmax = 0, v_r = 0, v_samples = 100;
  unsigned long long v_seed = 1;
  verify->add_option("--suite", v_suite,
                     "koszul|degree|subcomplex|inclusion|trace|unisolvence|vanishing|"
                     "commute|all");
  verify->add_option("--n", v_n, "Largest ambient dimension");
  verify->add_option("--rmax", v_rmax, "Largest polynomial degree");
  verify->add_option("--r", v_r, "Exact polynomial degree (commute)");
  verify->add_option("--seed", v_seed, "Seed for sampled checks");
  verify->add_option("--samples", v_samples, "Samples per form degree (commute)");
  verify->add_option("--format", v_format)->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", v_out);

  // basis
  auto* basis = app.add_subcommand("basis", "Write the echelonized basis of S_r Lambda^k");
  int b_n = 0, b_r = 0, b_k = 0;
  std::string b_out;
  basis->add_option("--n", b_n)->required();
  basis->add_option("--r", b_r)->required();
  basis->add_option("--k", b_k)->required();
  basis->add_option("--out", b_out, "Output JSON path (stdout when absent)");

  // dofs
  auto* dofs_cmd = app.add_subcommand("dofs", "Write the degrees of freedom of S_r Lambda^k");
  int f_n = 0, f_r = 0, f_k = 0;
  std::string f_out, f_matrix;
  dofs_cmd->add_option("--n", f_n)->required();
  dofs_cmd->add_option("--r", f_r)->required();
  dofs_cmd->add_option("--k", f_k)->required();
  dofs_cmd->add_option("--out", f_out, "Output JSON path (stdout when absent)");
  dofs_cmd->add_option("--matrix", f_matrix, "Also write the DOF matrix as rational CSV");

  // complex
  auto* cpx = app.add_subcommand("complex", "Assembled de Rham complex on a mesh");
  std::string c_mesh, c_format = "table", c_out, c_export;
  int c_r = 0;
  cpx->add_option("--mesh", c_mesh, "grid:AxBxC or a mesh JSON path")->required();
  cpx->add_option("--r", c_r, "Polynomial degree of the 0-form space")->required();
  cpx->add_option("--format", c_format)->check(CLI::IsMember({"table", "json"}));
  cpx->add_option("--out", c_out);
  cpx->add_option("--export", c_export,
                  "Prefix for exact-rational triplet files of the global d matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dims) {
      bool all_match = true;
      ordered_json jrows = ordered_json::array();
      std::ostringstream table;
      table << "dim S_r Lambda^k([-1,1]^" << d_n << "), r = 1.." << d_rmax
            << (d_constructive ? "  (formula | constructed rank)" : "") << "\n";
      for (int k = 0; k <= d_n; ++k) {
        table << "k=" << k << ":";
        for (int r = 1; r <= d_rmax; ++r) {
          const long long formula = dim_S_formula(d_n, r, k);
          table << " " << formula;
          ordered_json cell{{"n", d_n}, {"r", r}, {"k", k}, {"formula", formula}};
          if (d_constructive) {
            const long constructed = basis_S(d_n, r, k).dim();
            table << "|" << constructed;
            cell["constructed"] = constructed;
            if (constructed != formula) all_match = false;
          }
          jrows.push_back(std::move(cell));
        }
        table << "\n";
      }
      if (d_format == "json") {
        ordered_json j{{"cells", std::move(jrows)}, {"pass", all_match}};
        write_text(d_out, j.dump(2) + "\n");
      } else {
        if (!all_match) table << "MISMATCH between formula and constructed rank\n";
        write_text(d_out, table.str());
      }
      return all_match ? kExitPass : kExitFail;
    }

    if (*verify) {
      const std::vector<std::string> all_suites = {
          "koszul", "degree", "subcomplex", "inclusion", "trace",
          "unisolvence", "vanishing", "commute"};
      std::vector<SuiteResult> results;
      if (v_suite == "all") {
        if (v_n > 4) {
          std::cerr << "verify --suite all is capped at n <= 4\n";
          return kExitUsage;
        }
        for (const std::string& s : all_suites) {
          // Default grids per suite; exact certificates throughout.
          int nmax = (s == "trace" || s == "unisolvence" || s == "vanishing" ||
                      s == "commute")
                         ? 3
                         : 4;
          int rmax = 4;
          if (s == "koszul") rmax = 6;
          if (s == "degree" || s == "subcomplex" || s == "inclusion") rmax = 5;
          if (v_n > 0) nmax = std::min(nmax, v_n);
          if (v_rmax > 0) rmax = v_rmax;
          results.push_back(run_suite(s, nmax, rmax, v_r, v_seed, v_samples));
        }
      } else {
        int nmax = (v_n > 0) ? v_n : ((v_suite == "koszul") ? 4 : 3);
        if (nmax > 4) {
          std::cerr << "note: n > 4 may take a while\n";
        }
        int rmax = (v_rmax > 0) ? v_rmax : ((v_suite == "koszul") ? 6 : 4);
        results.push_back(run_suite(v_suite, nmax, rmax, v_r, v_seed, v_samples));
      }
      return report_suites(results, v_format, v_out);
    }

    if (*basis) {
      const SpaceBasis sb = basis_S(b_n, b_r, b_k);
      write_text(b_out, basis_to_json(sb).dump(2) + "\n");
      return kExitPass;
    }

    if (*dofs_cmd) {
      const DofSet set = make_dofs(Box::reference(f_n), f_r, f_k);
      write_text(f_out, dofs_to_json(set).dump(2) + "\n");
      if (!f_matrix.empty()) {
        std::ofstream os(f_matrix);
        if (!os) io_error("cannot open " + f_matrix);
        dof_matrix(Box::reference(f_n), f_r, f_k).write_csv(os);
      }
      return kExitPass;
    }

    if (*cpx) {
      const MeshSpec spec = parse_mesh_arg(c_mesh);
      const CubicalMesh mesh = build_mesh(spec);
      if (c_r < mesh.dimension()) {
        std::cerr << "complex needs --r >= mesh dimension\n";
        return kExitUsage;
      }
      const MeshCohomologyReport rep = mesh_complex_cohomology(mesh, c_r);
      bool continuity = true;
      std::string cont_detail;
      for (int k = 0; k < mesh.dimension(); ++k) {
        const auto cont = certify_continuity(assemble(mesh, c_r - k, k));
        if (!cont.pass) {
          continuity = false;
          cont_detail = cont.detail;
        }
      }
      if (!c_export.empty()) {
        for (std::size_t k = 0; k < rep.d_matrices.size(); ++k) {
          const std::string path = c_export + ".d" + std::to_string(k) + ".txt";
          std::ofstream os(path);
          if (!os) io_error("cannot open " + path);
          rep.d_matrices[k].write_triplets(os);
        }
      }
      const bool pass = rep.pass() && continuity;
      if (c_format == "json") {
        ordered_json j{{"defects", rep.defects},
                       {"subcomplex", rep.subcomplex_ok},
                       {"products_vanish", rep.products_vanish},
                       {"continuity", continuity},
                       {"pass", pass}};
        write_text(c_out, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "cohomology defects:";
        for (long d : rep.defects) os << " " << d;
        os << "\ncontinuity: " << (continuity ? "pass" : "FAIL " + cont_detail) << "\n"
           << (pass ? "PASS" : "FAIL") << "\n";
        write_text(c_out, os.str());
      }
      return pass ? kExitPass : kExitFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
