#include "cstar/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "cstar/errors.hpp"
#include "cstar/random.hpp"

namespace cstar {

namespace {

constexpr double kMinMargin = 1e-6;
constexpr int kMaxDraws = 50;

struct InstanceOutcome {
  std::vector<Check> checks;
  std::vector<std::string> details;
  std::string note;
  int redraws = 0;
};

using InstanceFn = std::function<InstanceOutcome(Rng&, const SuiteConfig&)>;

std::string error_kind(const Error& e) {
  if (dynamic_cast<const TheoremViolation*>(&e)) return "theorem-violation";
  if (dynamic_cast<const UnmetHypothesis*>(&e)) return "unmet-hypothesis";
  if (dynamic_cast<const InvarianceError*>(&e)) return "invariance-error";
  if (dynamic_cast<const StructuralError*>(&e)) return "structural-error";
  return "error";
}

Check at_most(const std::string& name, double value, double bound) { return {name, value <= bound, value, true}; }
Check holds(const std::string& name, bool ok) { return {name, ok, ok ? 0.0 : 1.0, true}; }
Check margin_check(const std::string& name, double value) { return {name, value >= kMinMargin, value, false}; }

double map_margin(const AdjointableMap& f) { return singular_data(f).margin; }

// Draws until the instance's rank decisions are well separated.
template <typename Draw, typename Margin>
auto draw_filtered(Rng& rng, int& redraws, Draw draw, Margin margin) {
  for (int attempt = 0;; ++attempt) {
    auto inst = draw(rng);
    if (margin(inst) >= kMinMargin || attempt + 1 >= kMaxDraws) return inst;
    ++redraws;
  }
}

AlgebraShape shape23() { return AlgebraShape({2, 3}); }

// Stabilization of rank F^k from dense powers of the realization, each rank
// judged against ||F||^k.
int dense_ascent(const AdjointableMap& f) {
  const Matrix& r = f.realization();
  const double nf = spectral_norm(r);
  Matrix p = Matrix::Identity(r.rows(), r.cols());
  Index prev = r.rows();
  for (int k = 1; k <= r.rows() + 1; ++k) {
    p = r * p;
    const RealVector sv = singular_values(p);
    const Index rank = decide_rank(sv, p.rows(), std::pow(nf, k)).rank;
    if (rank == prev) return k - 1;
    prev = rank;
  }
  return -1;
}

double max_entry_difference(const AdjointableMap& a, const AdjointableMap& b) {
  double d = 0.0;
  for (int i = 0; i < a.num_blocks(); ++i) {
    const Matrix diff = a.block(i) - b.block(i);
    if (diff.size() > 0) d = std::max(d, diff.cwiseAbs().maxCoeff());
  }
  return d;
}

RandomEndomorphism endomorphism_instance(Rng& rng) {
  switch (rng.integer(0, 2)) {
    case 0: {
      const int blocks = rng.integer(2, 6);
      return random_endomorphism(rng, AlgebraShape(std::vector<int>(blocks, 1)), rng.integer(1, 6));
    }
    case 1:
      return random_endomorphism(rng, AlgebraShape({2}), rng.integer(1, 8));
    default:
      return random_endomorphism(rng, shape23(), rng.integer(1, 4));
  }
}

InstanceOutcome exact_sequence_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  struct Pair {
    AdjointableMap f, g;
  };
  const Pair p = draw_filtered(
      rng, out.redraws,
      [](Rng& r) {
        const int m = r.integer(1, 3), n = r.integer(1, 3), q = r.integer(1, 3);
        return Pair{random_map(r, shape23(), n, m), random_map(r, shape23(), q, n)};
      },
      [](const Pair& x) { return std::min({map_margin(x.f), map_margin(x.g), map_margin(compose(x.g, x.f))}); });
  const ExactSequenceReport r = exact_sequence(p.f, p.g);
  out.checks.push_back(at_most("exactness-residual", r.max_residual(), 1e-8));
  out.checks.push_back(at_most("map-leak", r.leak, 1e-8));
  out.checks.push_back(holds("alternating-dim-sum-zero", r.alternating_dim_sum == 0));
  out.checks.push_back(holds("k0-alternating-sum-zero", r.alternating_k0_sum.is_zero()));
  const K0Class i_f = fredholm_report(p.f).index;
  const K0Class i_g = fredholm_report(p.g).index;
  const K0Class i_gf = fredholm_report(compose(p.g, p.f)).index;
  out.checks.push_back(holds("index-additivity", i_gf == i_g + i_f));
  std::ostringstream note;
  note << "index(F)=" << i_f << " index(G)=" << i_g << " index(GF)=" << i_gf;
  out.note = note.str();
  return out;
}

InstanceOutcome perturbation_chain_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  struct Pair {
    AdjointableMap t, f;
  };
  const Pair p = draw_filtered(
      rng, out.redraws,
      [](Rng& r) {
        const int m = r.integer(1, 3), n = r.integer(1, 3);
        return Pair{random_map(r, shape23(), n, m), random_low_rank_map(r, shape23(), n, m, r.integer(1, 2))};
      },
      [](const Pair& x) {
        const AdjointableMap q = orthogonal_projection(kernel(x.f));
        return std::min({map_margin(x.t), map_margin(x.f), map_margin(x.t + x.f), map_margin(compose(x.t, q))});
      });
  const ChainReport c = weyl_perturbation_chain(p.t, p.f);
  out.checks.push_back(holds("k0-identity", c.identity_holds));
  out.checks.push_back(holds("image-splittings", c.image_splittings_hold));
  out.checks.push_back(holds("kernel-splittings", c.kernel_splittings_hold));
  out.checks.push_back(margin_check("rank-margin", c.margin));
  std::ostringstream note;
  note << "lhs=" << c.lhs << " rhs=" << c.rhs;
  out.note = note.str();
  return out;
}

InstanceOutcome product_chain_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  struct Pair {
    AdjointableMap d, f;
  };
  const Pair p = draw_filtered(
      rng, out.redraws,
      [](Rng& r) {
        const int m = r.integer(1, 3), n = r.integer(1, 3), q = r.integer(1, 3);
        return Pair{random_map(r, shape23(), q, n), random_map(r, shape23(), n, m)};
      },
      [](const Pair& x) { return std::min({map_margin(x.d), map_margin(x.f), map_margin(compose(x.d, x.f))}); });
  const ProductChainReport r = product_chain(p.d, p.f);
  out.checks.push_back(holds("chain-links-equal", r.identity_holds));
  const bool both_weyl = generalized_weyl_check(p.d).generalized_weyl && generalized_weyl_check(p.f).generalized_weyl;
  out.checks.push_back(holds("weyl-product", !both_weyl || r.product_generalized_weyl));
  out.checks.push_back(margin_check("rank-margin", r.margin));
  return out;
}

InstanceOutcome drazin_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  const RandomEndomorphism e = endomorphism_instance(rng);
  const DrazinReport r = drazin_inverse(e.f);
  out.checks.push_back(at_most("axiom-xfx", r.residuals.xfx, 1e-9));
  out.checks.push_back(at_most("axiom-commute", r.residuals.commute, 1e-9));
  out.checks.push_back(at_most("axiom-power", r.residuals.power, 1e-9));
  out.checks.push_back(at_most("nilpotent-part", r.nilpotent_residual, 1e-9));
  out.checks.push_back(holds("index-matches-construction", r.index == e.expected_index));
  out.checks.push_back(holds("index-matches-dense-ascent", r.index == dense_ascent(e.f)));
  out.checks.push_back(holds("index-matches-stabilization", r.index == b_fredholm_report(e.f).stabilization_exponent));
  out.checks.push_back(margin_check("core-gamma", r.core_gamma));
  std::ostringstream note;
  note << "p=" << r.index << " dim=" << e.f.domain_class().complex_dim(e.f.shape());
  out.note = note.str();
  return out;
}

InstanceOutcome dual_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  const RandomEndomorphism e = endomorphism_instance(rng);
  const DualReport d = drazin_dual_check(e.f);
  const AdjointableMap xs = drazin_inverse(adjoint(e.f)).inverse;
  const AdjointableMap x = drazin_inverse(e.f).inverse;
  out.checks.push_back(holds("index-equal", d.index == d.adjoint_index));
  out.checks.push_back(at_most("inverse-entrywise", max_entry_difference(xs, adjoint(x)), 1e-9));
  out.checks.push_back(at_most("orthogonality", d.orthogonality_residual, 1e-8));
  return out;
}

CommutingPair commuting_instance(Rng& rng, int& redraws) {
  return draw_filtered(
      rng, redraws, [](Rng& r) { return random_commuting_pair(r, r.integer(6, 12)); },
      [](const CommutingPair& c) {
        double m = std::min(map_margin(c.f), map_margin(c.d));
        const AdjointableMap fd = compose(c.f, c.d);
        for (int k = 1; k <= 4; ++k) {
          m = std::min({m, map_margin(power(c.f, k)), map_margin(power(c.d, k)), map_margin(power(fd, k))});
        }
        return m;
      });
}

InstanceOutcome ra_l01_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  const CommutingPair c = commuting_instance(rng, out.redraws);
  const CriterionReport r = commuting_drazin_criterion(c.f, c.d);
  out.checks.push_back(holds("verdict-equals-direct", r.verdict == r.direct_verdict));
  out.checks.push_back(holds("criterion-found", r.found.has_value()));
  bool nontrivial = false;
  for (std::size_t k = static_cast<std::size_t>(r.p); k < r.intersection_classes.size(); ++k) {
    nontrivial = nontrivial || !r.intersection_classes[k].is_zero();
  }
  std::ostringstream note;
  note << "p=" << r.p;
  if (r.found) {
    note << " k=" << r.found->k << " s=" << r.found->s << " k'=" << r.found->k_prime << " t=" << r.found->t;
  }
  note << (nontrivial ? " nontrivial-intersection" : " trivial-intersection");
  out.note = note.str();
  return out;
}

InstanceOutcome browder_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  const CommutingPair c = commuting_instance(rng, out.redraws);
  const CommutingBrowderReport r = commuting_browder_check(c.f, c.d);
  out.checks.push_back(at_most("f-off-diagonal", r.f_off_diagonal, 1e-8));
  out.checks.push_back(at_most("d-off-diagonal", r.d_off_diagonal, 1e-8));
  out.checks.push_back(margin_check("f-core-gamma", r.f_core_gamma));
  out.checks.push_back(margin_check("d-core-gamma", r.d_core_gamma));
  out.checks.push_back(holds("kernel-identity", r.kernel_identity_holds));
  const BrowderWitness wf = browder_decomposition(c.f);
  const BrowderWitness wd = browder_decomposition(c.d);
  out.checks.push_back(at_most("factor-witness-off-diagonal", std::max(wf.off_diagonal, wd.off_diagonal), 1e-8));
  std::ostringstream note;
  note << "p=" << r.p << " core=" << r.decomposition.first.k0_class();
  out.note = note.str();
  return out;
}

InstanceOutcome bouldin_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  struct Pair {
    AdjointableMap f, d;
  };
  const Pair p = draw_filtered(
      rng, out.redraws,
      [](Rng& r) {
        const int m = r.integer(1, 3), n = r.integer(1, 3), q = r.integer(1, 3);
        return Pair{random_map(r, shape23(), n, m), random_map(r, shape23(), q, n)};
      },
      [](const Pair& x) { return std::min({map_margin(x.f), map_margin(x.d), map_margin(compose(x.d, x.f))}); });
  const BouldinReport r = bouldin_criterion(p.f, p.d);
  const BouldinReport dual = bouldin_criterion(adjoint(p.d), adjoint(p.f));
  out.checks.push_back(holds("verdicts-agree", r.verdicts_agree));
  out.checks.push_back(holds("closed-sum-bridge", r.bridge_agrees));
  out.checks.push_back(holds("gamma-df-positive", r.gamma_df > 0.0));
  double sym = 0.0;
  if (!r.p_degenerate && !r.q_degenerate) sym = std::abs(r.margin_p - r.margin_q);
  out.checks.push_back(at_most("margin-symmetry", sym, 1e-8));
  double dual_gap = 0.0;
  if (!r.p_degenerate && !dual.p_degenerate) dual_gap = std::abs(r.margin_p - dual.margin_p);
  if (!r.q_degenerate && !dual.q_degenerate) dual_gap = std::max(dual_gap, std::abs(r.margin_q - dual.margin_q));
  out.checks.push_back(at_most("adjoint-duality", dual_gap, 1e-8));
  return out;
}

InstanceOutcome closed_sum_instance(Rng& rng, const SuiteConfig& config) {
  InstanceOutcome out;
  const int d = rng.integer(2, 40);
  const int dm = rng.integer(1, d - 1);
  const int dn = rng.integer(1, d - dm);
  const Subspace m = random_subspace(rng, d, dm);
  const Subspace n = random_subspace(rng, d, dn);
  const auto seed = static_cast<std::uint64_t>(rng.integer(0, 1 << 30));
  const GeometryReport g = closed_sum_report(m, n, seed, config.samples);
  out.checks.push_back(holds("trivial-intersection", !g.reduced));
  out.checks.push_back(at_most("c0-delta-identity", g.identity_residual, 1e-8));
  out.checks.push_back(at_most("c0-paths-agree", std::abs(g.c0 - g.c0_sup), 1e-8));
  out.checks.push_back(holds("sampled-bound", g.inequality_holds));
  out.checks.push_back({"bound-slack", g.bound_c >= g.adversarial_ratio, g.bound_c - g.adversarial_ratio, false});
  std::ostringstream note;
  note << "d=" << d << " dims=" << dm << "," << dn << " samples=" << g.samples;
  out.note = note.str();
  return out;
}

InstanceOutcome banach_perturbation_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  const int rows = rng.integer(2, 8), cols = rng.integer(2, 8);
  const Matrix t = random_rank(rng, rows, cols, rng.integer(0, std::min(rows, cols)));
  const KernelImage tki = kernel_image(t);
  const RegularOperator reg = make_regular(t, random_oblique_complement(rng, tki.kernel, 3.0),
                                           random_oblique_complement(rng, tki.image, 3.0));
  const Matrix f = random_rank(rng, rows, cols, rng.integer(1, 2));
  const Subspace kfc = random_oblique_complement(rng, kernel(f), 3.0);
  const BanachPerturbationReport r = banach_perturbation(reg, f, kfc);
  out.checks.push_back(holds("dimension-identity", r.identity_holds));
  out.checks.push_back(at_most("perturbed-inner-residual", r.perturbed.inner_residual, 1e-9));
  out.checks.push_back(at_most("perturbed-outer-residual", r.perturbed.outer_residual, 1e-9));
  out.checks.push_back(at_most("projection-condition", r.max_projection_norm, 1e4));
  out.checks.push_back(at_most("idempotency",
                               std::max({reg.domain_split.idempotency_residual, reg.codomain_split.idempotency_residual,
                                         r.perturbed.domain_split.idempotency_residual,
                                         r.perturbed.codomain_split.idempotency_residual}),
                               1e-9));
  const RegularOperator ortho = make_regular_orthogonal(t);
  const AdjointableMap mp = mp_pseudoinverse(AdjointableMap(AlgebraShape::trivial(), {t}));
  const double gap = ortho.t_prime.size() == 0 ? 0.0 : (ortho.t_prime - mp.block(0)).cwiseAbs().maxCoeff();
  out.checks.push_back(at_most("moore-penrose-consistency", gap, 1e-9));
  std::ostringstream note;
  note << rows << "x" << cols << " rank F=" << r.rank_f << " lhs=" << r.lhs << " rhs=" << r.rhs;
  out.note = note.str();
  return out;
}

InstanceOutcome banach_product_instance(Rng& rng, const SuiteConfig&) {
  InstanceOutcome out;
  const int n = rng.integer(2, 8);
  auto regular = [&](Matrix m) {
    const KernelImage ki = kernel_image(m);
    return make_regular(m, random_oblique_complement(rng, ki.kernel, 3.0),
                        random_oblique_complement(rng, ki.image, 3.0));
  };
  const RegularOperator t = regular(random_rank(rng, n, n, rng.integer(0, n)));
  const RegularOperator s = regular(random_rank(rng, n, n, rng.integer(0, n)));
  const BanachProductReport r = banach_product(s, t);
  out.checks.push_back(holds("factors-generalized-weyl", r.s_weyl && r.t_weyl));
  out.checks.push_back(holds("product-generalized-weyl", r.product_weyl));
  out.checks.push_back(at_most("restricted-inverse", r.restricted_inverse_residual, 1e-9));
  out.checks.push_back(holds("kernel-on-image-complemented", r.kernel_on_image_complemented));
  double seq = 0.0;
  for (double x : r.sequence.residuals) seq = std::max(seq, x);
  out.checks.push_back(at_most("oblique-sequence-exact", seq, 1e-8));
  out.checks.push_back(holds("oblique-alternating-sum-zero", r.sequence.alternating_dim_sum == 0));
  out.checks.push_back(holds("index-additive", r.index_additive));
  return out;
}

const std::map<std::string, InstanceFn>& registry() {
  static const std::map<std::string, InstanceFn> fns{
      {"exact-sequence", exact_sequence_instance},
      {"perturbation-chain", perturbation_chain_instance},
      {"product-chain", product_chain_instance},
      {"drazin-axioms", drazin_instance},
      {"ra-l01", ra_l01_instance},
      {"dual", dual_instance},
      {"browder", browder_instance},
      {"bouldin", bouldin_instance},
      {"lemma-d-l22", closed_sum_instance},
      {"banach-perturbation", banach_perturbation_instance},
      {"banach-product", banach_product_instance},
  };
  return fns;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exact-sequence", "perturbation-chain", "product-chain",
                                              "drazin-axioms",  "ra-l01",             "dual",
                                              "browder",        "bouldin",            "lemma-d-l22",
                                              "banach-perturbation", "banach-product"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ParseError("unknown suite '" + name + "'");
  if (config.instances < 0) throw ParseError("instance count must be nonnegative");
  const InstanceFn& fn = it->second;

  const int n = config.instances;
  // dual reruns the drazin-axioms instances; browder reuses the ra-l01 pairs
  std::string stream = name;
  if (name == "dual") stream = "drazin-axioms";
  if (name == "browder") stream = "ra-l01";
  const std::uint64_t stream_base = static_cast<std::uint64_t>(std::hash<std::string>{}(stream)) << 20;
  std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      InstanceOutcome& o = outcomes[static_cast<std::size_t>(i)];
      Rng rng(config.seed, stream_base ^ static_cast<std::uint64_t>(i));
      try {
        o = fn(rng, config);
      } catch (const Error& e) {
        o.checks.push_back(holds("no-" + error_kind(e), false));
        o.details.push_back(e.what());
      }
    }
  };
  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, n));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult r;
  r.suite = name;
  r.config = config;
  std::vector<std::string> order;
  std::map<std::string, PropertyTally> tallies;
  for (int i = 0; i < n; ++i) {
    const InstanceOutcome& o = outcomes[static_cast<std::size_t>(i)];
    r.redraws += o.redraws;
    if (!o.note.empty()) r.log.push_back(std::to_string(i) + ": " + o.note);
    std::size_t detail = 0;
    for (const Check& c : o.checks) {
      auto [pos, fresh] = tallies.try_emplace(c.property);
      PropertyTally& t = pos->second;
      if (fresh) {
        order.push_back(c.property);
        t.property = c.property;
        t.higher_is_worse = c.higher_is_worse;
        t.worst = c.value;
        t.worst_instance = i;
      } else if (c.higher_is_worse ? c.value > t.worst : c.value < t.worst) {
        t.worst = c.value;
        t.worst_instance = i;
      }
      (c.pass ? t.passed : t.failed)++;
      if (!c.pass) {
        std::ostringstream os;
        if (detail < o.details.size()) {
          os << o.details[detail++];
        } else {
          os << "value " << format_double(c.value);
        }
        r.failures.push_back({i, c.property, os.str()});
      }
    }
  }
  for (const auto& p : order) {
    r.properties.push_back(tallies[p]);
    if (tallies[p].failed > 0) r.passed = false;
  }
  if (n == 0) r.warnings.push_back("no instances requested; the suite passes vacuously");
  if (r.redraws > 0) {
    r.warnings.push_back(std::to_string(r.redraws) + " draws discarded for rank margins below 1e-6");
  }
  return r;
}

Json report_json(const SuiteResult& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    props.push_back(Json{{"property", p.property},
                         {"passed", p.passed},
                         {"failed", p.failed},
                         {"worst", p.worst},
                         {"worst_instance", p.worst_instance},
                         {"worst_is", p.higher_is_worse ? "max" : "min"}});
  }
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"instance", f.instance}, {"property", f.property}, {"detail", f.detail}});
  }
  return Json{{"suite", r.suite},
              {"seed", r.config.seed},
              {"instances", r.config.instances},
              {"passed", r.passed},
              {"properties", props},
              {"failures", failures},
              {"warnings", r.warnings},
              {"redraws", r.redraws},
              {"log", r.log}};
}

}  // namespace cstar
