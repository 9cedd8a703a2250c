#include "modsuper/kwverify.hpp"

#include <sstream>

namespace modsuper {

WallsType walls_type(const std::vector<Mat>& ops, const std::vector<int>& op_parity,
                     const std::vector<int>& basis_parity) {
  const std::size_t n = basis_parity.size();
  if (n == 0) return WallsType::M;
  const Field& F = ops.empty() ? Field::create(3) : ops.front().field();
  // unknowns: entries T(i,j) with |i| != |j|
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_of;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (basis_parity[i] != basis_parity[j]) {
        slot_of[{i, j}] = slots.size();
        slots.emplace_back(i, j);
      }
  if (slots.empty()) return WallsType::M;
  if (ops.empty()) return WallsType::Q;
  Mat E(F, ops.size() * n * n, slots.size());
  for (std::size_t x = 0; x < ops.size(); ++x) {
    const Mat& A = ops[x];
    const Elem s = op_parity[x] ? F.neg(F.one()) : F.one();
    // (T A - s A T)(i,j) = sum_k T(i,k) A(k,j) - s A(i,k) T(k,j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = (x * n + i) * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          if (auto it = slot_of.find({i, k}); it != slot_of.end() && A(k, j).v != 0)
            E(row, it->second) = F.add(E(row, it->second), A(k, j));
          if (auto it = slot_of.find({k, j}); it != slot_of.end() && A(i, k).v != 0)
            E(row, it->second) = F.sub(E(row, it->second), F.mul(s, A(i, k)));
        }
      }
  }
  return kernel(E).empty() ? WallsType::M : WallsType::Q;
}

namespace {

std::uint64_t divisor_from(const LieSuperalgebra& g, const PCharacter& chi, bool ceil_variant) {
  const Centralizer C = centralizer(g, chi);
  if (C.d0 % 2 != 0) throw AlgebraError("odd even codimension d0 of the centralizer (artifact bug)");
  std::uint64_t d = 1;
  for (std::size_t k = 0; k < C.d0 / 2; ++k) d *= g.field().p();
  const std::size_t e = ceil_variant ? (C.d1 + 1) / 2 : C.d1 / 2;
  for (std::size_t k = 0; k < e; ++k) d *= 2;
  return d;
}

std::string field_label(const Field& F) {
  std::ostringstream os;
  os << "GF(" << F.p();
  if (F.k() > 1) os << "^" << F.k();
  os << ")";
  return os.str();
}

}  // namespace

std::uint64_t kw_divisor(const LieSuperalgebra& g, const PCharacter& chi) { return divisor_from(g, chi, false); }
std::uint64_t kw_divisor_ceil(const LieSuperalgebra& g, const PCharacter& chi) { return divisor_from(g, chi, true); }

PCharacter nilpotent_character(const LieSuperalgebra& g, const Weight& a) {
  if (!g.root_system()->is_even(a)) throw AlgebraError("nilpotent characters need an even root");
  const Vec x = g.unit(g.root_index(a));
  PCharacter chi{Vec(g.dim())};
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.parity(i) == 0) chi.values[i] = g.form(x, g.unit(i));
  return chi;
}

KWReport verify_superkw(const LieSuperalgebra& g, const PCharacter& chi, const std::string& chi_label,
                        std::uint32_t k_max) {
  KWReport rep;
  rep.algebra = g.spec().label();
  rep.chi_label = chi_label;
  const Centralizer C = centralizer(g, chi);
  rep.d0 = C.d0;
  rep.d1 = C.d1;
  rep.divisor = kw_divisor(g, chi);
  rep.divisor_ceil = kw_divisor_ceil(g, chi);

  // a simple system whose positive root vectors chi kills
  std::optional<SimpleSystem> chosen;
  for (const auto& ss : all_simple_systems(g.root_system())) {
    bool ok = true;
    for (const auto& rv : g.root_vectors())
      if (ss.is_positive(rv.root) && chi.values[rv.index].v != 0) ok = false;
    if (ok) {
      chosen = ss;
      break;
    }
  }
  if (!chosen) {
    rep.skipped = "no simple system with chi vanishing on n+";
    return rep;
  }

  const Field& F = g.field();
  std::vector<Elem> hvals;
  for (std::size_t h : g.cartan()) hvals.push_back(chi.values[h]);
  const LambdaSet L = lambda_set(g, g.character_on_cartan(hvals), k_max);
  const Field& F2 = L.field();
  rep.field = field_label(F2);
  Vec full(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) full[i] = F2.embed_from(F, chi.values[i]);
  VermaFamily fam(L.g, SimpleSystem(L.g->root_system(), chosen->simple()), PCharacter{full});

  std::vector<int> op_par;
  for (std::size_t i = 0; i < g.dim(); ++i) op_par.push_back(g.parity(i));
  std::uint64_t q_half = 1;
  for (std::size_t k = 0; k < C.d0 / 2; ++k) q_half *= F.p();
  const std::size_t qe = (C.d1 + 1) / 2;
  for (std::size_t k = 1; k < qe; ++k) q_half *= 2;

  for (const auto& lam : L.weights) {
    const BabyVerma Z = fam.build(lam);
    const Head H = head_of(Z);
    KWHead h;
    h.lambda = lam;
    h.head_dim = H.dim;
    h.type = walls_type(H.ops, op_par, H.parity);
    h.divisible = H.dim % rep.divisor == 0;
    if (!h.divisible) rep.all_divisible = false;
    if (h.type == WallsType::M && !h.divisible) rep.proof_arithmetic = false;
    if (h.type == WallsType::Q && (H.dim % 2 != 0 || (H.dim / 2) % q_half != 0)) rep.proof_arithmetic = false;
    rep.heads.push_back(std::move(h));
  }
  return rep;
}

std::vector<KWReport> verify_superkw_sweep(const LieSuperalgebra& g,
                                           const std::vector<std::pair<std::string, PCharacter>>& chis,
                                           std::uint32_t k_max) {
  std::vector<KWReport> out;
  for (const auto& [label, chi] : chis) {
    kw_divisor(g, chi);  // an odd d0 is a hard failure, not a skip
    try {
      out.push_back(verify_superkw(g, chi, label, k_max));
    } catch (const AlgebraError& e) {
      KWReport r;
      r.algebra = g.spec().label();
      r.chi_label = label;
      r.skipped = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace modsuper
