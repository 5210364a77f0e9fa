#include "gemcalc/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

#include "gemcalc/cycle_decomp.hpp"
#include "gemcalc/embeddings.hpp"
#include "gemcalc/generator.hpp"

namespace gemcalc {

namespace {

class CheckList {
 public:
  explicit CheckList(std::vector<NamedCheck>& out) : out_(out) {}

  template <class Fn>
  void add(std::string name, Fn&& fn) {
    bool holds = false;
    try {
      holds = fn();
    } catch (const GemError&) {
      holds = false;
    }
    out_.push_back({std::move(name), holds});
  }

 private:
  std::vector<NamedCheck>& out_;
};

void class_checks(const ColoredGraph& g, const std::vector<HalfInt>& genera, CheckList& checks) {
  const int d = g.dimension();
  const auto& perms = cyclic_permutations(d);
  const auto& partition = canonical_partition(d + 1);
  const std::int64_t multiplicity = (d + 1) % 2 == 1 ? 1 : 2;
  const auto p = static_cast<std::int64_t>(g.half_order());
  const std::int64_t reduced = d + p * (d - 1) * d / 2 - pair_residue_sum(g);
  // Even d: a class sums to half the reduced degree; odd d: to all of it.
  const HalfInt expected = d % 2 == 0 ? HalfInt::from_twice(reduced) : HalfInt(reduced);

  std::vector<HalfInt> class_sum_of(perms.size());
  bool edge_sums = true, constant = true;
  for (const auto& cls : partition.classes) {
    std::int64_t faces = 0;
    HalfInt sum;
    for (const auto& e : cls.cycles) {
      faces += bicolored_face_count(g, e);
      sum += genera[permutation_index(e)];
    }
    edge_sums = edge_sums && faces == multiplicity * pair_residue_sum(g);
    constant = constant && sum == expected;
    for (const auto& e : cls.cycles) class_sum_of[permutation_index(e)] = sum;
  }
  checks.add("classes.edge_sum", [&] { return edge_sums; });
  checks.add("classes.genus_sum_constant", [&] { return constant; });
  checks.add("classes.minimizer_maximizes_difference", [&] {
    // ρ_ε̂ - ρ_ε, with ρ_ε̂ the rest of ε's class, is largest exactly at the minimizers.
    std::vector<HalfInt> gap(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) gap[i] = class_sum_of[i] - genera[i] - genera[i];
    const HalfInt best = *std::max_element(gap.begin(), gap.end());
    const HalfInt low = *std::min_element(genera.begin(), genera.end());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if ((gap[i] == best) != (genera[i] == low)) return false;
    }
    return true;
  });
}

void dim4_checks(const ColoredGraph& g, HalfInt omega, GraphFacts& facts, std::optional<int> rank, CheckList& checks) {
  const auto p = static_cast<std::int64_t>(g.half_order());
  checks.add("dim4.pair_sum_degree", [&] {
    for (const auto& [e, f] : associated_pairs()) {
      if (omega != 6 * (regular_genus(g, e) + regular_genus(g, f))) return false;
    }
    return true;
  });
  checks.add("dim4.pair_sum_constant", [&] {
    // 2(ρ_ε + ρ_ε') = 4 + 6p - Σ g_ij
    const HalfInt expected = HalfInt::from_twice(4 + 6 * p - pair_residue_sum(g));
    for (const auto& [e, f] : associated_pairs()) {
      if (regular_genus(g, e) + regular_genus(g, f) != expected) return false;
    }
    return true;
  });
  checks.add("dim4.difference_a", [&] {
    const auto& all = cyclic_permutations(4);
    return std::all_of(all.begin(), all.end(), [&](const CyclicPerm& e) { return check_difference_a(g, e); });
  });
  checks.add("dim4.corollary_12rho", [&] {
    auto c = check_corollary_12rho(g);
    return c.holds_left == c.holds_right;
  });
  checks.add("dim4.residue_degree_identity", [&] { return residue_degree_identity(g); });

  facts.singular_manifold = is_singular_4_manifold(g);
  if (facts.odd_reduced) {
    checks.add("dim4.odd_reduced_consistency", [&] { return !facts.bipartite && !facts.singular_manifold; });
  }
  if (!facts.singular_manifold) return;

  checks.add("dim4.singular_degree_mod6", [&] { return omega.twice() % 12 == 0; });
  checks.add("dim4.singular_integral_genera", [&] {
    const auto& all = cyclic_permutations(4);
    return std::all_of(all.begin(), all.end(), [&](const CyclicPerm& e) { return regular_genus(g, e).is_integer(); });
  });
  checks.add("dim4.difference_b", [&] {
    const auto& all = cyclic_permutations(4);
    return std::all_of(all.begin(), all.end(), [&](const CyclicPerm& e) { return check_difference_b(g, e); });
  });
  checks.add("dim4.triple_lemma", [&] { return check_triple_lemma(g); });
  checks.add("dim4.euler_via_genus", [&] {
    const std::int64_t chi = euler_characteristic_complex(g);
    for (const auto& [e, f] : associated_pairs()) {
      if (euler_char_via_genus(g, e) != chi || euler_char_via_genus(g, f) != chi) return false;
    }
    return true;
  });

  if (!rank) return;
  for (Color i = 0; i <= 4; ++i) {
    if (g.residue_count(ColorSet::all_but(i, 4)) != 1) return;
  }
  for (Color a = 0; a <= 4; ++a) {
    for (Color b = a + 1; b <= 4; ++b) {
      for (Color c = b + 1; c <= 4; ++c) {
        if (static_cast<std::int64_t>(g.residue_count({a, b, c})) - 1 - *rank < 0) return;
      }
    }
  }
  std::optional<CrystallizationProfile> profile;
  checks.add("crystal.half_order_decomposition", [&] {
    profile = crystallization_profile(g, *rank);
    return true;
  });
  if (!profile) return;
  facts.crystallization = true;
  for (auto& check : crystallization_identities(*profile, g)) {
    if (check.name == "half_order_decomposition") continue;
    checks.add("crystal." + check.name, [&] { return check.holds; });
  }
  checks.add("crystal.classification", [&] {
    classify_crystallization(*profile, g);
    return true;
  });
}

// Position of a graph in corpus order: (p, shard, index within shard).
using CorpusKey = std::tuple<std::size_t, std::size_t, std::uint64_t>;

struct Partial {
  CampaignReport counts;
  std::optional<CorpusKey> first_key;

  void record(const ColoredGraph& g, const CorpusKey& key) {
    auto v = verify_graph(g);
    ++counts.graphs;
    counts.bipartite += v.facts.bipartite;
    counts.singular_manifold += v.facts.singular_manifold;
    counts.odd_reduced += v.facts.odd_reduced;
    counts.crystallizations += v.facts.crystallization;
    for (const auto& c : v.checks) {
      auto& tally = counts.checks[c.name];
      ++tally.evaluated;
      if (!c.holds) {
        ++tally.violations;
        if (!first_key || key < *first_key) {
          first_key = key;
          counts.counterexample = Counterexample{c.name, std::get<0>(key), serialize_gem(g)};
        }
      }
    }
  }

  void merge(const Partial& other) {
    counts.graphs += other.counts.graphs;
    counts.bipartite += other.counts.bipartite;
    counts.singular_manifold += other.counts.singular_manifold;
    counts.odd_reduced += other.counts.odd_reduced;
    counts.crystallizations += other.counts.crystallizations;
    for (const auto& [name, tally] : other.counts.checks) {
      counts.checks[name].evaluated += tally.evaluated;
      counts.checks[name].violations += tally.violations;
    }
    if (other.first_key && (!first_key || *other.first_key < *first_key)) {
      first_key = other.first_key;
      counts.counterexample = other.counts.counterexample;
    }
  }
};

void run_workers(unsigned workers, const std::function<void(unsigned, Partial&)>& job, Partial& total) {
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    job(0, partials[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { job(w, partials[w]); });
    for (auto& t : pool) t.join();
  }
  for (const auto& part : partials) total.merge(part);
}

}  // namespace

bool GraphVerification::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.holds; });
}

GraphVerification verify_graph(const ColoredGraph& g, std::optional<int> rank) {
  const int d = g.dimension();
  if (d < 2) throw PreconditionError("verification needs d >= 2");
  if (!is_connected(g)) throw PreconditionError("verification needs a connected graph");

  GraphVerification out;
  CheckList checks(out.checks);
  out.facts.bipartite = is_bipartite(g);
  const auto p = static_cast<std::int64_t>(g.half_order());

  checks.add("core.singleton_residues", [&] {
    for (Color c = 0; c <= static_cast<Color>(d); ++c) {
      if (g.residue_count(ColorSet{c}) != p) return false;
    }
    return true;
  });

  const auto genera = regular_genera(g);
  HalfInt omega;
  for (HalfInt rho : genera) omega += rho;

  if (out.facts.bipartite) {
    checks.add("degree.integral_genera_bipartite", [&] {
      return std::all_of(genera.begin(), genera.end(), [](HalfInt h) { return h.is_integer(); });
    });
  }

  if (d == 2) {
    checks.add("degree.surface_genus", [&] {
      const std::int64_t chi = euler_characteristic_complex(g);
      const HalfInt rho = genera.front();
      return omega == rho && rho == HalfInt::from_twice(2 - chi) && (!out.facts.bipartite || rho.is_integer());
    });
    return out;
  }

  const std::int64_t half_factorial_twice = factorial(d - 1);  // twice of (d-1)!/2
  checks.add("degree.definition_equals_formula", [&] { return omega == g_degree_formula(g); });
  checks.add("degree.half_factorial_multiple", [&] {
    return omega >= HalfInt(0) && omega.twice() % half_factorial_twice == 0;
  });
  if (omega.twice() % half_factorial_twice == 0) out.facts.odd_reduced = (omega.twice() / half_factorial_twice) % 2 != 0;

  if (d % 2 == 0 && d >= 4 && out.facts.bipartite) {
    checks.add("degree.bipartite_even_reduced", [&] { return omega.twice() % (2 * half_factorial_twice) == 0; });
  }
  if (d >= 3 && d <= 6) class_checks(g, genera, checks);

  if (d == 4) {
    dim4_checks(g, omega, out.facts, rank, checks);
  } else if (d % 2 == 0 && out.facts.odd_reduced) {
    checks.add("degree.odd_reduced_nonbipartite", [&] { return !out.facts.bipartite; });
  }
  return out;
}

std::uint64_t CampaignReport::violations() const {
  std::uint64_t total = 0;
  for (const auto& [name, tally] : checks) total += tally.violations;
  return total;
}

std::string to_string(CampaignMode mode) { return mode == CampaignMode::exhaustive ? "exhaustive" : "random"; }

nlohmann::ordered_json CampaignReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify";
  j["d"] = options.d;
  j["mode"] = to_string(options.mode);
  j["min_p"] = options.min_p;
  j["max_p"] = options.max_p;
  if (options.mode == CampaignMode::random) {
    j["count_per_p"] = options.count;
    j["seed"] = options.seed;
  }
  j["bipartite_only"] = options.bipartite_only;
  j["graphs"] = graphs;
  j["bipartite"] = bipartite;
  j["singular_manifold"] = singular_manifold;
  j["odd_reduced"] = odd_reduced;
  j["crystallizations"] = crystallizations;
  auto cs = nlohmann::ordered_json::object();
  for (const auto& [name, tally] : checks) cs[name] = {{"evaluated", tally.evaluated}, {"violations", tally.violations}};
  j["checks"] = std::move(cs);
  j["violations"] = violations();
  if (counterexample) {
    j["counterexample"] = {{"check", counterexample->check},
                           {"p", counterexample->p},
                           {"gem", nlohmann::ordered_json::parse(counterexample->gem)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string CampaignReport::to_text() const {
  std::ostringstream os;
  os << "verify d=" << options.d << " mode=" << to_string(options.mode) << " p=" << options.min_p << ".."
     << options.max_p;
  if (options.mode == CampaignMode::random) os << " count/p=" << options.count << " seed=" << options.seed;
  if (options.bipartite_only) os << " bipartite-only";
  os << "\n";
  auto line = [&](const std::string& k, std::uint64_t v) {
    os << "  " << k << std::string(k.size() < 20 ? 20 - k.size() : 1, ' ') << v << "\n";
  };
  line("graphs", graphs);
  line("bipartite", bipartite);
  line("singular manifold", singular_manifold);
  line("odd reduced degree", odd_reduced);
  line("crystallizations", crystallizations);
  std::size_t width = 0;
  for (const auto& [name, tally] : checks) width = std::max(width, name.size());
  os << "checks:\n";
  for (const auto& [name, tally] : checks) {
    os << "  " << name << std::string(width - name.size() + 2, ' ') << tally.evaluated << " evaluated, "
       << tally.violations << " violations\n";
  }
  if (counterexample) {
    os << "VIOLATION " << counterexample->check << " at p=" << counterexample->p << ": " << counterexample->gem << "\n";
  } else {
    os << "all identities hold\n";
  }
  return os.str();
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GEMCALC_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::min<unsigned long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CampaignReport run_campaign(const CampaignOptions& options) {
  if (options.d < 2 || options.d > kMaxDimension) throw PreconditionError("campaign dimension out of range");
  if (options.min_p < 1 || options.max_p < options.min_p) throw PreconditionError("campaign needs 1 <= min_p <= max_p");
  if (options.mode == CampaignMode::exhaustive) {
    if (options.bipartite_only) throw PreconditionError("bipartite filter applies to random campaigns only");
    for (std::size_t p = options.min_p; p <= options.max_p; ++p) {
      if (enumeration_size(options.d, p) > kEnumerationBudget) {
        throw PreconditionError("exhaustive enumeration of d = " + std::to_string(options.d) + ", p = " +
                                std::to_string(p) + " exceeds the budget");
      }
    }
  }
  const unsigned workers = worker_count(options.threads);

  Partial total;
  for (std::size_t p = options.min_p; p <= options.max_p; ++p) {
    if (options.mode == CampaignMode::exhaustive) {
      run_workers(workers, [&](unsigned w, Partial& part) {
        std::uint64_t local = 0;
        enumerate_gems_shard(options.d, p, true, w, workers, [&](const ColoredGraph& g) {
          part.record(g, {p, w, local++});
          return true;
        });
      }, total);
    } else {
      GenSpec spec;
      spec.d = options.d;
      spec.p = p;
      spec.connected_only = true;
      spec.bipartite_only = options.bipartite_only;
      spec.seed = options.seed ^ (0x9E3779B97F4A7C15ull * p);
      spec.count = options.count;
      const auto corpus = random_gem(spec);
      run_workers(workers, [&](unsigned w, Partial& part) {
        const std::size_t begin = corpus.size() * w / workers, end = corpus.size() * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) part.record(corpus[i], {p, 0, i});
      }, total);
    }
  }
  CampaignReport report = total.counts;
  report.options = options;
  return report;
}

}  // namespace gemcalc
