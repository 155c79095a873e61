// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#include "cubefec/spaces.hpp"

#include <sstream>
#include <stdexcept>

namespace cubefec {

FormEchelon::FormEchelon(int n, int k, bool track_combos)
    : n_(n), k_(k), ech_(track_combos) {}

SparseEchelon<FormMonomial>::InsertResult FormEchelon::insert(const DiffForm& f) {
  if (f.dimension() != n_ || (!f.is_zero() && f.form_degree() != k_))
    throw std::invalid_argument("echelon shape mismatch");
  return ech_.insert(f.terms());
}

bool FormEchelon::contains(const DiffForm& f) const {
  if (f.is_zero()) return true;
  if (f.dimension() != n_ || f.form_degree() != k_) return false;
  return ech_.contains(f.terms());
}

std::optional<std::vector<Rational>> FormEchelon::coordinates(const DiffForm& f) const {
  if (f.dimension() != n_ || (!f.is_zero() && f.form_degree() != k_))
    return std::nullopt;
  return ech_.coordinates(f.terms());
}

void FormEchelon::finalize() { ech_.finalize(); }

DiffForm FormEchelon::form_from_terms(const DiffForm::TermMap& terms) const {
  DiffForm f(n_, k_);
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

std::vector<DiffForm> FormEchelon::forms() const {
  std::vector<DiffForm> out;
  out.reserve(ech_.rows().size());
  for (const auto& row : ech_.rows()) out.push_back(form_from_terms(row));
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::H: return "H";
    case Family::H_ldeg: return "H_ldeg";
    case Family::J: return "J";
    case Family::S: return "S";
  }
  return "?";
}

SpaceBasis::SpaceBasis(Family family, int n, int r, int k, int l,
                       const std::vector<DiffForm>& generators)
    : family_(family), n_(n), r_(r), k_(k), l_(l), ech_(n, k) {
  for (const DiffForm& g : generators) {
    if (!g.is_zero()) ech_.insert(g);
  }
  ech_.finalize();
  forms_ = ech_.forms();
}

DiffForm SpaceBasis::combine(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != forms_.size())
    throw std::invalid_argument("coefficient count mismatch");
  DiffForm out(n_, k_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    DiffForm t = forms_[i];
    t *= coeffs[i];
    out += t;
  }
  return out;
}

std::vector<FormMonomial> form_monomials(int n, int deg, int k) {
  std::vector<FormMonomial> out;
  if (deg < 0 || k < 0 || k > n) return out;
  const auto alphas = multi_indices_of_degree(n, deg);
  const auto sigmas = index_sets(n, k);
  out.reserve(alphas.size() * sigmas.size());
  for (const auto& a : alphas) {
    for (const auto& s : sigmas) out.emplace_back(a, s);
  }
  return out;
}

std::vector<FormMonomial> j_generator_monomials(int n, int r, int k) {
  std::vector<FormMonomial> out;
  if (r < 1 || k < 0 || k + 1 > n) return out;
  const int max_ldeg = n - (k + 1);
  for (int deg = r; deg <= r - 1 + max_ldeg; ++deg) {
    for (const auto& m : form_monomials(n, deg, k + 1)) {
      if (deg - m.ldeg() <= r - 1) out.push_back(m);
    }
  }
  return out;
}

namespace {

std::vector<DiffForm> monomial_generators(int n,
                                          const std::vector<FormMonomial>& monomials) {
  std::vector<DiffForm> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.emplace_back(n, m, Rational(1));
  return out;
}

}  // namespace

SpaceBasis basis_P(int n, int r, int k) {
  std::vector<DiffForm> gens;
  for (int deg = 0; deg <= r; ++deg) {
    for (const auto& m : form_monomials(n, deg, k)) gens.emplace_back(n, m, Rational(1));
  }
  return SpaceBasis(Family::P, n, r, k, -1, gens);
}

SpaceBasis basis_H(int n, int r, int k) {
  return SpaceBasis(Family::H, n, r, k, -1,
                    monomial_generators(n, form_monomials(n, r, k)));
}

SpaceBasis basis_H_ldeg(int n, int r, int l, int k) {
  std::vector<DiffForm> gens;
  for (const auto& m : form_monomials(n, r, k)) {
    if (m.ldeg() >= l) gens.emplace_back(n, m, Rational(1));
  }
  return SpaceBasis(Family::H_ldeg, n, r, k, l, gens);
}

SpaceBasis span_J(int n, int r, int k) {
  if (r < 1) throw std::domain_error("J space needs r >= 1");
  std::vector<DiffForm> gens;
  for (const auto& m : j_generator_monomials(n, r, k)) {
    gens.push_back(koszul(DiffForm(n, m, Rational(1))));
  }
  return SpaceBasis(Family::J, n, r, k, -1, gens);
}

SpaceBasis basis_S(int n, int r, int k) {
  if (k < 0 || k > n) throw std::domain_error("form degree out of range");
  if (r < 1 && !(r == 0 && k == n))
    throw std::domain_error("S space needs r >= 1 (r = 0 only for n-forms)");
  std::vector<DiffForm> gens;
  for (int deg = 0; deg <= r; ++deg) {
    for (const auto& m : form_monomials(n, deg, k)) gens.emplace_back(n, m, Rational(1));
  }
  if (r >= 1) {
    for (const auto& m : j_generator_monomials(n, r, k)) {
      gens.push_back(koszul(DiffForm(n, m, Rational(1))));
    }
    if (k >= 1) {
      for (const auto& m : j_generator_monomials(n, r + 1, k - 1)) {
        gens.push_back(exterior_derivative(koszul(DiffForm(n, m, Rational(1)))));
      }
    }
  }
  return SpaceBasis(Family::S, n, r, k, -1, gens);
}

long long dim_S_formula(int n, int r, int k) {
  if (n < 1 || k < 0 || k > n) return 0;
  if (r < 0) return 0;
  if (r == 0) return (k == n) ? 1 : 0;
  long long total = 0;
  const int dmax = std::min(n, r / 2 + k);
  for (int d = k; d <= dmax; ++d) {
    total += (1LL << (n - d)) * binom(n, d) * binom(r - d + 2 * k, d) * binom(d, k);
  }
  return total;
}

long long count_A(int n, int r, int k) {
  if (n < 1 || k < 0 || k > n || r < 1) return 0;
  long long total = 0;
  const int dmax = std::min(n - k, r / 2);
  for (int d = 0; d <= dmax; ++d) {
    total += (1LL << (n - k - d)) * binom(n - k, d) * binom(r - d + k, d + k);
  }
  return total;
}

KoszulExactnessReport verify_koszul_exactness(int n, int r, int l, int k) {
  if (n < 1 || r < 1 || l < 0 || l >= r || k < 0 || k >= n)
    throw std::domain_error("koszul exactness parameters out of range");
  KoszulExactnessReport rep{n, r, l, k};

  FormEchelon img_in(n, k, false);
  for (const auto& m : form_monomials(n, r - 1, k + 1)) {
    if (m.ldeg() < l) continue;
    DiffForm km = koszul(DiffForm(n, m, Rational(1)));
    if (!km.is_zero()) img_in.insert(km);
  }
  rep.dim_img_in = img_in.dim();

  std::vector<FormMonomial> mid;
  for (const auto& m : form_monomials(n, r, k)) {
    if (m.ldeg() >= l) mid.push_back(m);
  }
  rep.dim_mid = static_cast<long>(mid.size());

  // Track relations so the kernel of kappa on the middle space comes out of
  // the same elimination.
  FormEchelon img_mid(n, k - 1 < 0 ? 0 : k - 1, true);
  std::vector<SparseEchelon<FormMonomial>::Combo> kernel;
  for (const auto& m : mid) {
    DiffForm km = koszul(DiffForm(n, m, Rational(1)));
    auto res = img_mid.insert(km);
    if (!res.independent) kernel.push_back(std::move(res.combo));
  }
  rep.dim_img_mid = img_mid.dim();
  rep.dims_match = (rep.dim_img_in + rep.dim_img_mid == rep.dim_mid);

  rep.kernel_in_image = true;
  for (const auto& combo : kernel) {
    DiffForm v(n, k);
    for (const auto& [idx, c] : combo) {
      v.add_term(mid[static_cast<std::size_t>(idx)], c);
    }
    if (!img_in.contains(v)) {
      rep.kernel_in_image = false;
      break;
    }
  }
  return rep;
}

CheckReport verify_degree_property(int n, int r, int k) {
  CheckReport rep;
  const int delta = (k == 0) ? 1 : 0;
  const SpaceBasis S = basis_S(n, r, k);
  for (const DiffForm& f : S.forms()) {
    for (const auto& [m, c] : f.terms()) {
      if (m.degree() > r + n - k - delta || m.degree() - m.ldeg() > r + 1 - delta) {
        rep.pass = false;
        std::ostringstream os;
        os << "degree property violated at (n=" << n << ",r=" << r << ",k=" << k
           << ") by monomial of degree " << m.degree() << ", ldeg " << m.ldeg();
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

CheckReport verify_subcomplex(int n, int r, int k) {
  if (k < 1 || k > n) throw std::domain_error("subcomplex check needs 1 <= k <= n");
  CheckReport rep;
  const SpaceBasis big = basis_S(n, r, k);
  const SpaceBasis src = basis_S(n, r + 1, k - 1);
  for (const DiffForm& f : src.forms()) {
    if (!big.contains(exterior_derivative(f))) {
      rep.pass = false;
      rep.detail = "d image left S_r Lambda^k";
      return rep;
    }
  }
  return rep;
}

CheckReport verify_inclusion(int n, int r, int k) {
  CheckReport rep;
  const SpaceBasis small = basis_S(n, r, k);
  const SpaceBasis big = basis_S(n, r + 1, k);
  for (const DiffForm& f : small.forms()) {
    if (!big.contains(f)) {
      rep.pass = false;
      rep.detail = "S_r not inside S_{r+1}";
      return rep;
    }
  }
  return rep;
}

CheckReport verify_trace(int n, int r, int k) {
  if (n < 2) throw std::domain_error("trace check needs n >= 2");
  CheckReport rep;
  const SpaceBasis big = basis_S(n, r, k);
  // k = n: traces of top forms vanish identically and S_r Lambda^n(f) = 0.
  const bool target_trivial = (k > n - 1);
  std::vector<DiffForm> target_forms;
  if (!target_trivial) target_forms = basis_S(n - 1, r, k).forms();

  const Rational cs[3] = {rat(-1), rat(0), rat(1)};
  for (int axis = 1; axis <= n; ++axis) {
    for (const Rational& c : cs) {
      FormEchelon traced(n - 1, k, false);
      for (const DiffForm& f : big.forms()) {
        DiffForm t = trace_hyperplane(f, axis, c);
        if (!t.is_zero()) traced.insert(t);
      }
      if (target_trivial) {
        if (traced.dim() != 0) {
          rep.pass = false;
          rep.detail = "nonzero trace of a top form";
          return rep;
        }
        continue;
      }
      FormEchelon target(n - 1, k, false);
      for (const DiffForm& f : target_forms) target.insert(f);
      if (traced.dim() != target.dim()) {
        rep.pass = false;
        std::ostringstream os;
        os << "trace span dimension " << traced.dim() << " vs " << target.dim()
           << " at axis " << axis << ", c = " << rat_str(c);
        rep.detail = os.str();
        return rep;
      }
      for (const DiffForm& f : big.forms()) {
        if (!target.contains(trace_hyperplane(f, axis, c))) {
          rep.pass = false;
          rep.detail = "trace left S_r Lambda^k(f)";
          return rep;
        }
      }
      for (const DiffForm& f : target_forms) {
        if (!traced.contains(f)) {
          rep.pass = false;
          rep.detail = "target basis form missing from trace span";
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace cubefec
