#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "cqe/logic.hpp"
#include "cqe/scenarios.hpp"

namespace cqe {

namespace {

constexpr const char* kAtomNames[] = {"a", "b", "c", "d"};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream)
      : engine_(splitmix(splitmix(seed) ^ splitmix(index * 4 + stream))) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(std::size_t percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

LFormula random_literal(Rng& rng, std::size_t atom_count) {
  auto p = atom(kAtomNames[rng.below(atom_count)]);
  return rng.chance(50) ? p : neg(p);
}

LFormula random_query(Rng& rng, std::size_t atom_count) {
  std::size_t kind = rng.below(100);
  if (kind < 40) return random_literal(rng, atom_count);
  if (kind < 70) return implies(random_literal(rng, atom_count), random_literal(rng, atom_count));
  if (kind < 85) return disj(random_literal(rng, atom_count), random_literal(rng, atom_count));
  return conj(random_literal(rng, atom_count), random_literal(rng, atom_count));
}

// box(l1 -> l2) -> (box(~l1) | box(l2)) for literals over distinct atoms; true in
// {KB} for every consistent set of literals KB.
MFormula atomicity_instance(const LFormula& l1, const LFormula& l2) {
  return mimplies(box(implies(l1, l2)), mdisj(box(complement(l1)), box(l2)));
}

FuzzInstance anchor_nogo1() {
  auto s = atom("s");
  return {{{s}, {}, {s}}, {s, s, s}, false, "anchor nogo1"};
}

FuzzInstance anchor_nogo2() {
  auto a = atom("a"), b = atom("b"), c = atom("c");
  PrivacyConfiguration config{{a, b}, {atomicity_instance(c, a), atomicity_instance(neg(c), b)}, {a, b}};
  return {config, {implies(c, a), implies(neg(c), b), c}, true, "anchor nogo2"};
}

struct Strategy {
  std::string name;
  Censor censor;
};

std::vector<Strategy> strategies() {
  return {
      {"all-refuse", all_refuse()},
      {"truthful-min", truthful_min()},
      {"refuse-secret-atoms", refuse_secret_atoms()},
      {"honest", honest()},
      {"lying(tie-break=honest)", lying_nonrefusing(TieBreak::Honest)},
      {"lying(tie-break=lie)", lying_nonrefusing(TieBreak::Lie)},
  };
}

struct Outcome {
  bool refused = false;
  bool truthful = false;
  bool effective = false;
  bool min_invasive = false;
  bool repudiating = false;
};

struct InstanceResult {
  std::vector<Outcome> outcomes;  // one per strategy
  std::vector<Counterexample> counterexamples;
};

using Check = bool (*)(const PrivacyConfiguration&, const Censor&, const std::vector<LFormula>&);

// Prefix of a run never depends on later queries.
bool continuity_fails_with(const PrivacyConfiguration& config, const Censor& censor, const std::vector<LFormula>& q,
                           std::size_t cut, const std::vector<LFormula>& tail) {
  cut = std::min(cut, q.size());
  Transcript full = run(censor, config, q);
  std::vector<LFormula> other(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(cut));
  Transcript prefix_only = run(censor, config, other);
  other.insert(other.end(), tail.begin(), tail.end());
  Transcript diverted = run(censor, config, other);
  auto head = [cut](const Transcript& t) {
    return std::vector<Answer>(t.answers.begin(), t.answers.begin() + static_cast<std::ptrdiff_t>(cut));
  };
  return head(full) != prefix_only.answers || head(full) != head(diverted);
}

bool monotonicity_fails(const PrivacyConfiguration& config, const Censor& censor, const std::vector<LFormula>& q) {
  Transcript tr = run(censor, config, q);
  for (std::size_t n = 0; n < tr.size(); ++n) {
    MTheory now = transcript_content(tr, config.ak, n);
    MTheory next = transcript_content(tr, config.ak, n + 1);
    if (!std::includes(next.begin(), next.end(), now.begin(), now.end())) return true;
  }
  return false;
}

bool truthful_not_credible(const PrivacyConfiguration& config, const Censor& censor, const std::vector<LFormula>& q) {
  Transcript tr = run(censor, config, q);
  return check_truthful(config, tr).holds() && !check_credible(config, tr).holds();
}

bool same_query_differs(const PrivacyConfiguration& config, const Censor& censor, const std::vector<LFormula>& q) {
  Transcript tr = run(censor, config, q);
  if (!check_truthful(config, tr).holds()) return false;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    for (std::size_t j = i + 1; j < tr.size(); ++j) {
      if (tr.queries[i] == tr.queries[j] && tr.answers[i] != tr.answers[j]) return true;
    }
  }
  return false;
}

std::vector<LFormula> minimize(const PrivacyConfiguration& config, const Censor& censor, std::vector<LFormula> q,
                               Check failing) {
  for (std::size_t i = 0; i < q.size();) {
    auto shorter = q;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
    if (failing(config, censor, shorter)) {
      q = std::move(shorter);
    } else {
      ++i;
    }
  }
  return q;
}

InstanceResult evaluate(const FuzzInstance& inst, const std::vector<Strategy>& strats, Rng& rng,
                        std::size_t atom_count) {
  InstanceResult result;
  const auto& config = inst.config;
  const auto universe = default_kb_universe(config);

  std::size_t cut = rng.below(inst.queries.size() + 1);
  std::vector<LFormula> tail;
  for (std::size_t k = 1 + rng.below(3); k > 0; --k) tail.push_back(random_query(rng, atom_count));

  auto report = [&](const char* check, const Strategy& s, std::vector<LFormula> queries, std::string detail) {
    FuzzInstance shrunk = inst;
    shrunk.queries = std::move(queries);
    result.counterexamples.push_back({check, s.name, std::move(shrunk), std::move(detail)});
  };

  for (const auto& s : strats) {
    Transcript tr = run(s.censor, config, inst.queries);
    Outcome o;
    o.refused = std::any_of(tr.answers.begin(), tr.answers.end(), [](Answer a) { return a == Answer::Refuse; });
    o.truthful = check_truthful(config, tr).holds();
    o.effective = check_effective(config, tr).holds();
    o.min_invasive = check_min_invasive(config, s.censor, inst.queries).holds();
    o.repudiating = check_repudiating(config, s.censor, inst.queries, universe).holds();
    result.outcomes.push_back(o);

    if (continuity_fails_with(config, s.censor, inst.queries, cut, tail)) {
      report("continuity", s, inst.queries, "answers before position " + std::to_string(cut + 1) + " changed");
    }
    if (monotonicity_fails(config, s.censor, inst.queries)) {
      report("monotonicity", s, minimize(config, s.censor, inst.queries, monotonicity_fails), "content shrank");
    }
    if (truthful_not_credible(config, s.censor, inst.queries)) {
      report("truthful-implies-credible", s, minimize(config, s.censor, inst.queries, truthful_not_credible),
             "truthful run with unsatisfiable content");
    }
    if (same_query_differs(config, s.censor, inst.queries)) {
      report("same-query-same-answer", s, minimize(config, s.censor, inst.queries, same_query_differs),
             "repeated query answered differently");
    }
  }
  return result;
}

std::string ratio(std::size_t k, std::size_t n) { return std::to_string(k) + "/" + std::to_string(n); }

}  // namespace

FuzzInstance random_instance(std::uint64_t seed, std::size_t index, std::size_t max_atoms, std::size_t max_queries) {
  Rng rng(seed, index, 0);
  for (std::size_t attempt = 0;; ++attempt) {
    FuzzInstance inst;
    inst.origin = "random #" + std::to_string(index);
    std::size_t atom_count = 1 + rng.below(max_atoms);

    for (std::size_t i = 0; i < atom_count; ++i) {
      std::size_t pick = rng.below(3);
      if (pick == 1) inst.config.kb.insert(atom(kAtomNames[i]));
      if (pick == 2) inst.config.kb.insert(neg(atom(kAtomNames[i])));
    }

    if (atom_count >= 2 && rng.chance(50)) {
      inst.atomic_schema = true;
      for (std::size_t k = 1 + rng.below(3); k > 0; --k) {
        std::size_t x = rng.below(atom_count);
        std::size_t y = (x + 1 + rng.below(atom_count - 1)) % atom_count;
        LFormula l1 = atom(kAtomNames[x]), l2 = atom(kAtomNames[y]);
        if (rng.chance(50)) l1 = neg(l1);
        if (rng.chance(50)) l2 = neg(l2);
        inst.config.ak.insert(atomicity_instance(l1, l2));
      }
    }

    for (std::size_t k = 1 + rng.below(2); k > 0; --k) {
      LFormula s = random_literal(rng, atom_count);
      if (rng.chance(25)) s = disj(s, random_literal(rng, atom_count));
      inst.config.sec.insert(s);
    }

    // Dilemma motif: two secret literals tied to a pivot atom absent from KB,
    // queried as (z -> x, ~z -> y, z) under the matching atomicity instances.
    if (atom_count >= 3 && max_queries >= 3 && rng.chance(20)) {
      std::size_t z = rng.below(atom_count);
      std::size_t x = (z + 1 + rng.below(atom_count - 1)) % atom_count;
      std::size_t y = x;
      while (y == x || y == z) y = rng.below(atom_count);
      LFormula pivot = atom(kAtomNames[z]);
      LFormula lx = atom(kAtomNames[x]), ly = atom(kAtomNames[y]);
      if (rng.chance(50)) lx = neg(lx);
      if (rng.chance(50)) ly = neg(ly);
      inst.config.kb.erase(pivot);
      inst.config.kb.erase(neg(pivot));
      for (const auto& l : {lx, ly}) {
        inst.config.kb.erase(complement(l));
        inst.config.kb.insert(l);
        inst.config.sec.insert(l);
      }
      inst.atomic_schema = true;
      inst.config.ak.insert(atomicity_instance(pivot, lx));
      inst.config.ak.insert(atomicity_instance(neg(pivot), ly));
      inst.queries = {implies(pivot, lx), implies(neg(pivot), ly), pivot};
      inst.origin += " (dilemma motif)";
    }

    std::size_t extra = rng.below(max_queries + 1 - inst.queries.size());
    if (inst.queries.empty()) extra = std::max<std::size_t>(extra, 1);
    for (std::size_t k = extra; k > 0; --k) {
      if (!inst.queries.empty() && rng.chance(20)) {
        inst.queries.push_back(inst.queries[rng.below(inst.queries.size())]);
      } else {
        inst.queries.push_back(random_query(rng, atom_count));
      }
    }

    // Tautological secrets break the hidden-secrets condition; draw again.
    if (validate(inst.config).valid()) return inst;
    if (attempt > 1000) throw std::logic_error("fuzz: no valid instance generated");
  }
}

FuzzResult fuzz(const FuzzOptions& options) {
  if (options.max_atoms < 1 || options.max_atoms > 4) throw std::invalid_argument("max-atoms must be in 1..4");
  if (options.max_queries < 1 || options.max_queries > 6) throw std::invalid_argument("max-queries must be in 1..6");
  if (options.instances < 1) throw std::invalid_argument("instances must be positive");

  std::vector<FuzzInstance> corpus{anchor_nogo1(), anchor_nogo2()};
  for (std::size_t i = 0; i < options.instances; ++i) {
    corpus.push_back(random_instance(options.seed, i, options.max_atoms, options.max_queries));
  }

  const auto strats = strategies();
  std::vector<InstanceResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      Rng rng(options.seed, i, 1);
      results[i] = evaluate(corpus[i], strats, rng, options.max_atoms);
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(corpus.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  FuzzResult out;
  out.options = options;
  out.corpus_size = corpus.size();
  std::vector<std::map<std::string, std::string>> first_failure(strats.size());
  for (const auto& s : strats) out.tallies.push_back(StrategyTally{s.name});

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t k = 0; k < strats.size(); ++k) {
      const Outcome& o = results[i].outcomes[k];
      StrategyTally& t = out.tallies[k];
      ++t.instances;
      t.refusing_runs += o.refused;
      t.truthful += o.truthful;
      t.effective += o.effective;
      t.min_invasive += o.min_invasive;
      t.repudiating += o.repudiating;
      if (corpus[i].atomic_schema) {
        ++t.schema_instances;
        t.schema_effective += o.effective;
        t.schema_min_invasive += o.min_invasive;
      }
      auto note_failure = [&](const char* property, bool held) {
        if (!held) first_failure[k].try_emplace(property, corpus[i].origin);
      };
      note_failure("truthful", o.truthful);
      note_failure("effective", o.effective);
      note_failure("min-invasive", o.min_invasive);
      note_failure("repudiating", o.repudiating);
    }
    for (auto& c : results[i].counterexamples) {
      if (c.check == "continuity") ++out.continuity_violations;
      if (c.check == "monotonicity") ++out.monotonicity_violations;
      if (c.check == "truthful-implies-credible") ++out.credibility_violations;
      if (c.check == "same-query-same-answer") ++out.same_answer_violations;
      out.counterexamples.push_back(std::move(c));
    }
  }

  // Impossibility results are statements about a censor across all
  // configurations, so the classification is per strategy over the whole corpus.
  for (std::size_t k = 0; k < strats.size(); ++k) {
    const StrategyTally& t = out.tallies[k];
    bool all_truthful = t.truthful == t.instances;
    if (all_truthful && t.effective == t.instances && t.min_invasive == t.instances &&
        t.repudiating == t.instances) {
      ++out.nogo1_violations;
      out.counterexamples.push_back({"nogo1-consistency", t.strategy, {},
                                     "truthful, effective, minimally invasive and repudiating on every instance"});
    }
    bool non_refusing = t.refusing_runs == 0;
    if (non_refusing && t.schema_instances > 0 && t.schema_effective == t.schema_instances &&
        t.schema_min_invasive == t.schema_instances) {
      ++out.nogo2_violations;
      out.counterexamples.push_back({"nogo2-consistency", t.strategy, {},
                                     "non-refusing, effective and minimally invasive on every atomic-schema instance"});
    }
  }

  ScenarioReport& rep = out.report;
  rep.name = "fuzz";
  rep.notes.push_back("seed " + std::to_string(options.seed) + ", " + std::to_string(options.instances) +
                      " random instances plus 2 anchor instances, max atoms " + std::to_string(options.max_atoms) +
                      ", max queries " + std::to_string(options.max_queries));
  for (std::size_t k = 0; k < strats.size(); ++k) {
    const StrategyTally& t = out.tallies[k];
    std::string line = t.strategy + ": truthful " + ratio(t.truthful, t.instances) + ", effective " +
                       ratio(t.effective, t.instances) + ", min-invasive " + ratio(t.min_invasive, t.instances) +
                       ", repudiating " + ratio(t.repudiating, t.instances) + ", refusing runs " +
                       ratio(t.refusing_runs, t.instances);
    for (const auto& [property, origin] : first_failure[k]) line += "; first non-" + property + ": " + origin;
    rep.notes.push_back(line);
  }
  auto zero = [&](const std::string& what, std::size_t count) {
    rep.claims.push_back({what + " found: " + std::to_string(count), "fuzz", count == 0});
  };
  zero("continuity violations", out.continuity_violations);
  zero("content monotonicity violations", out.monotonicity_violations);
  zero("truthful runs with unsatisfiable content", out.credibility_violations);
  zero("truthful repeated queries answered differently", out.same_answer_violations);
  zero("truthful strategies classified effective + min-invasive + repudiating", out.nogo1_violations);
  zero("non-refusing strategies classified effective + min-invasive on atomic-schema instances",
       out.nogo2_violations);
  return out;
}

}  // namespace cqe
