#include "cutpoint/analysis/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "cutpoint/constructions/px.hpp"

namespace cutpoint {

std::optional<SeparationWitness> separate(const Automaton& a, const CutpointSpec& cp_a, const Automaton& b,
                                          const CutpointSpec& cp_b, std::size_t max_length, double eps) {
  if (!a.alphabet().is_unary() || !b.alphabet().is_unary()) throw DomainError("separation needs unary automata");
  check_cutpoint(cp_a, a.model());
  check_cutpoint(cp_b, b.model());
  const auto va = unary_values(a, max_length);
  const auto vb = unary_values(b, max_length);
  for (std::size_t m = 0; m <= max_length; ++m) {
    const bool in_a = cut_member(va[m], cp_a, eps);
    const bool in_b = cut_member(vb[m], cp_b, eps);
    if (in_a != in_b) return SeparationWitness{m, va[m], vb[m], in_a, in_b};
  }
  return std::nullopt;
}

PxSeparation px_separation(const Rational& x1, const Rational& x2) {
  check_px_domain(x1);
  check_px_domain(x2);
  if (!(x1 < x2)) throw DomainError("px separation needs x1 < x2");
  const PxParams p1 = px_params(x1);
  const PxParams p2 = px_params(x2);
  const double dtheta = p2.theta - p1.theta;
  const double dgamma = p2.gamma - p1.gamma;
  const double predicted = std::floor((std::numbers::pi - dgamma) / dtheta);

  PxSeparation out;
  out.candidate = predicted > 0 ? static_cast<std::size_t>(predicted) : 0;

  const std::size_t horizon = out.candidate + 2;
  const Automaton a1 = px(x1);
  const Automaton a2 = px(x2);
  const auto v1 = unary_values(a1, horizon);
  const auto v2 = unary_values(a2, horizon);
  auto witness_at = [&](std::size_t m) -> std::optional<SeparationWitness> {
    const bool in1 = v1[m].rational() > p1.lambda_exact;
    const bool in2 = v2[m].rational() > p2.lambda_exact;
    if (in1 == in2) return std::nullopt;
    return SeparationWitness{m, v1[m], v2[m], in1, in2};
  };

  for (std::size_t m : {out.candidate, out.candidate + 1}) {
    if (auto w = witness_at(m)) {
      out.witness = w;
      return out;
    }
  }
  out.anomaly = true;
  for (std::size_t m : {out.candidate + 2, out.candidate - 1}) {
    if (m > horizon) continue;  // candidate = 0
    if (auto w = witness_at(m)) {
      out.witness = w;
      break;
    }
  }
  return out;
}

bool aperiodicity_check(const Automaton& aut, std::size_t max_length) {
  if (!aut.is_exact()) throw DomainError("aperiodicity check needs an exact automaton");
  const auto values = unary_values(aut, max_length);
  std::set<Rational> seen;
  for (const auto& v : values) {
    if (!seen.insert(v.rational()).second) return false;
  }
  return true;
}

std::size_t DensityReport::misses() const {
  return static_cast<std::size_t>(std::count(first_hit.begin(), first_hit.end(), std::nullopt));
}

DensityReport density_report(const PythTriple& t, std::size_t bins, std::size_t horizon) {
  check_triple(t);
  if (bins == 0) throw DomainError("density report needs at least one bin");
  DensityReport report;
  report.bins = bins;
  report.horizon = horizon;
  report.bin_width = make_rational(2, bins);
  report.first_hit.assign(bins, std::nullopt);

  // cos(k theta) = p_k / h^k with p_k = 2a p_{k-1} - h^2 p_{k-2}; the bin
  // of cos is floor((p_k + h^k) bins / (2 h^k)).
  const Integer a = triple_adjacent(t);
  const Integer h = triple_hypotenuse(t);
  const Integer two_a = 2 * a;
  const Integer h2 = h * h;
  Integer prev;  // p_{k-1}
  Integer cur = 1;
  Integer hk = 1;
  Integer num, den, idx;
  std::size_t remaining = bins;
  for (std::size_t k = 0; k <= horizon && remaining > 0; ++k) {
    if (k == 1) {
      prev = cur;
      cur = a;
      hk = h;
    } else if (k >= 2) {
      Integer next = two_a * cur - h2 * prev;
      prev = std::move(cur);
      cur = std::move(next);
      hk *= h;
    }
    num = (cur + hk) * bins;
    den = 2 * hk;
    mpz_fdiv_q(idx.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::size_t bin = idx.get_ui();
    if (bin >= bins) bin = bins - 1;
    if (!report.first_hit[bin]) {
      report.first_hit[bin] = k;
      --remaining;
    }
  }
  return report;
}

}  // namespace cutpoint
