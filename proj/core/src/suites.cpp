#include "permlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "suite_context.hpp"

namespace permlab {

using detail::MemberContext;
using detail::SuiteDef;

namespace {

const SuiteDef* find_suite(const std::string& id) {
  for (const auto& def : detail::suite_registry())
    if (def.id == id) return &def;
  return nullptr;
}

} // namespace

namespace detail {

const std::vector<int>& MemberContext::nodes() {
  if (nodes_ready_) return node_domain_;
  nodes_ready_ = true;
  const SubgroupLattice& lat = a.lattice();
  if (exhaustive()) {
    node_domain_.resize(lat.size());
    for (int i = 0; i < lat.size(); ++i) node_domain_[i] = i;
    return node_domain_;
  }
  std::set<int> picked{lat.bottom(), lat.top()};
  for (int s : a.sylow_rep_nodes()) picked.insert(s);
  for (int h : a.hall_rep_nodes()) picked.insert(h);
  picked.insert(a.fitting_node());
  auto carter = a.carter_nodes();
  for (std::size_t i = 0; i < carter.size() && i < 4; ++i) picked.insert(carter[i]);
  auto reps = a.class_rep_nodes();
  for (std::size_t i = 0; i < reps.size() && i < 6; ++i) picked.insert(reps[i]);
  std::uniform_int_distribution<std::size_t> dist(0, reps.size() - 1);
  for (int draws = 0; draws < 8; ++draws) picked.insert(reps[dist(rng_)]);
  node_domain_.assign(picked.begin(), picked.end());
  return node_domain_;
}

const std::vector<int>& MemberContext::elements() {
  if (elements_ready_) return element_domain_;
  elements_ready_ = true;
  const int n = a.group().order();
  if (exhaustive()) {
    element_domain_.resize(n);
    for (int i = 0; i < n; ++i) element_domain_[i] = i;
    return element_domain_;
  }
  std::set<int> picked{0};
  for (int g : a.group().generator_indices()) picked.insert(g);
  std::uniform_int_distribution<int> dist(0, n - 1);
  for (int draws = 0; draws < 40; ++draws) picked.insert(dist(rng_));
  element_domain_.assign(picked.begin(), picked.end());
  return element_domain_;
}

std::vector<int> MemberContext::normals(bool proper_when_sampled) {
  std::vector<int> out = a.lattice().normal_nodes();
  if (proper_when_sampled && !exhaustive())
    std::erase(out, a.lattice().bottom());
  return out;
}

std::vector<int> MemberContext::overgroups_of(int node) {
  std::vector<int> all = a.lattice().overgroups(node);
  if (exhaustive()) return all;
  const auto& dom = nodes();
  std::vector<int> out;
  for (int u : all)
    if (u == node || u == a.lattice().top() ||
        std::binary_search(dom.begin(), dom.end(), u))
      out.push_back(u);
  return out;
}

QuotientEntry& MemberContext::quotient(int normal_node) {
  auto it = quotients_.find(normal_node);
  if (it == quotients_.end()) {
    auto entry = std::make_unique<QuotientEntry>();
    entry->quotient = quotient_group(a.group(), a.lattice().node(normal_node));
    it = quotients_.emplace(normal_node, std::move(entry)).first;
  }
  return *it->second;
}

const SubgroupLattice& MemberContext::quotient_lattice(int normal_node) {
  QuotientEntry& entry = quotient(normal_node);
  if (!entry.lattice)
    entry.lattice = std::make_unique<SubgroupLattice>(
        SubgroupLattice::build(entry.quotient.group, a.limits()));
  return *entry.lattice;
}

std::string MemberContext::node_desc(int id) {
  return subgroup_desc(a.lattice().node(id));
}

std::string MemberContext::subgroup_desc(const SubgroupRef& h) {
  std::string out = "order " + std::to_string(h.order());
  const auto& gens = h.generator_indices();
  if (!gens.empty()) {
    out += " = <";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) out += ", ";
      out += format_cycles(h.parent().element(gens[i]));
    }
    out += ">";
  }
  return out;
}

} // namespace detail

const std::vector<std::string>& registered_suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& def : detail::suite_registry()) out.push_back(def.id);
    return out;
  }();
  return ids;
}

bool suite_exists(const std::string& id) { return find_suite(id) != nullptr; }

std::string suite_description(const std::string& id) {
  const SuiteDef* def = find_suite(id);
  if (!def) throw std::invalid_argument("unknown suite: " + id);
  return def->description;
}

namespace {

struct MemberOutcome {
  long checks = 0;
  bool skipped = false;
  std::vector<std::string> failures;
  std::string error;
  double elapsed_ms = 0.0;
};

} // namespace

std::vector<SuiteReport> run_suites(const std::vector<std::string>& ids,
                                    const std::vector<NamedGroup>& corpus,
                                    const SuiteOptions& options) {
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  std::vector<const SuiteDef*> defs;
  for (const auto& id : ids) {
    const SuiteDef* def = find_suite(id);
    if (!def) throw std::invalid_argument("unknown suite: " + id);
    defs.push_back(def);
  }

  const int members = static_cast<int>(corpus.size());
  const int suites = static_cast<int>(defs.size());
  std::vector<std::vector<MemberOutcome>> outcomes(members,
                                                   std::vector<MemberOutcome>(suites));

  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      int m = next.fetch_add(1);
      if (m >= members) break;
      GroupAnalysis analysis(corpus[m].name, corpus[m].group, options.limits);
      for (int s = 0; s < suites; ++s) {
        MemberOutcome& out = outcomes[m][s];
        std::uint64_t seed =
            options.seed ^ fnv1a(defs[s]->id) ^ (fnv1a(corpus[m].name) << 1);
        MemberContext ctx(analysis, seed);
        auto start = std::chrono::steady_clock::now();
        try {
          defs[s]->run(ctx);
        } catch (const CapExceeded& e) {
          out.error = e.what();
        }
        out.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        out.checks = ctx.checks;
        out.skipped = ctx.member_skipped;
        out.failures = std::move(ctx.failures);
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<SuiteReport> reports;
  for (int s = 0; s < suites; ++s) {
    SuiteReport rep;
    rep.suite_id = defs[s]->id;
    rep.description = defs[s]->description;
    rep.jobs = options.jobs;
    rep.max_order = options.limits.max_order;
    rep.seed = options.seed;
    for (int m = 0; m < members; ++m) {
      rep.corpus.push_back(corpus[m].name);
      const MemberOutcome& out = outcomes[m][s];
      rep.checks_run += out.checks;
      rep.elapsed_ms += out.elapsed_ms;
      if (out.skipped) ++rep.skipped;
      if (!out.error.empty()) rep.errors.push_back(MemberError{corpus[m].name, out.error});
      for (const auto& f : out.failures)
        rep.failures.push_back(SuiteFailure{corpus[m].name, f});
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

SuiteReport run_suite(const std::string& id, const std::vector<NamedGroup>& corpus,
                      const SuiteOptions& options) {
  return run_suites({id}, corpus, options).front();
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite_id << ": "
      << (report.passed() ? "PASS" : "FAIL") << "\n";
  out << "  " << report.description << "\n";
  out << "  corpus: " << report.corpus.size() << " groups, checks: " << report.checks_run
      << ", skipped: " << report.skipped << ", failures: " << report.failures.size()
      << ", elapsed: " << static_cast<long>(report.elapsed_ms) << " ms\n";
  for (const auto& f : report.failures)
    out << "  FAIL [" << f.group << "] " << f.witness << "\n";
  for (const auto& e : report.errors)
    out << "  ERROR [" << e.group << "] " << e.message << "\n";
  return out.str();
}

// ---- counterexample search -------------------------------------------------

namespace {

struct Predicate {
  bool relational; // needs a subgroup argument
  std::function<bool(GroupAnalysis&, int)> eval;
};

const std::map<std::string, Predicate>& predicate_registry() {
  static const std::map<std::string, Predicate> reg = [] {
    std::map<std::string, Predicate> m;
    auto cls = [](bool (*get)(const Classification&)) {
      return Predicate{false, [get](GroupAnalysis& a, int) { return get(a.classification()); }};
    };
    m["soluble"] = cls([](const Classification& c) { return c.soluble; });
    m["nilpotent"] = cls([](const Classification& c) { return c.nilpotent; });
    m["abelian"] = cls([](const Classification& c) { return c.abelian; });
    m["supersoluble"] = cls([](const Classification& c) { return c.supersoluble; });
    m["w-supersoluble"] = cls([](const Classification& c) { return c.w_supersoluble; });
    m["metanilpotent"] = cls([](const Classification& c) { return c.metanilpotent; });
    m["ore-dispersive"] = cls([](const Classification& c) { return c.ore_dispersive; });
    m["sylow"] = Predicate{true, [](GroupAnalysis& a, int id) {
      long o = a.lattice().node(id).order();
      for (int p : a.primes())
        if (o == p_part(a.group().order(), p)) return true;
      return false;
    }};
    m["hall"] = Predicate{true, [](GroupAnalysis& a, int id) {
      long o = a.lattice().node(id).order();
      return std::gcd(o, a.group().order() / o) == 1;
    }};
    m["carter"] = Predicate{true, [](GroupAnalysis& a, int id) {
      auto c = a.carter_nodes();
      return std::find(c.begin(), c.end(), id) != c.end();
    }};
    m["normal"] = Predicate{true, [](GroupAnalysis& a, int id) { return a.node_normal(id); }};
    m["permuteral"] =
        Predicate{true, [](GroupAnalysis& a, int id) { return a.node_permuteral(id); }};
    m["strongly-permuteral"] =
        Predicate{true, [](GroupAnalysis& a, int id) { return a.node_strongly_permuteral(id); }};
    m["p-subnormal"] = Predicate{true, [](GroupAnalysis& a, int id) { return a.node_psn(id); }};
    m["pronormal"] =
        Predicate{true, [](GroupAnalysis& a, int id) { return a.node_pronormal(id); }};
    m["abnormal"] = Predicate{true, [](GroupAnalysis& a, int id) { return a.node_abnormal(id); }};
    return m;
  }();
  return reg;
}

struct Literal {
  const Predicate* pred;
  std::string name;
  bool negated;
};

std::vector<Literal> parse_expr(const std::string& expr) {
  std::vector<Literal> literals;
  std::size_t pos = 0;
  while (pos <= expr.size()) {
    std::size_t amp = expr.find('&', pos);
    std::string tok =
        expr.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
    pos = amp == std::string::npos ? expr.size() + 1 : amp + 1;
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty term in expression");
    std::size_t e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    bool neg = false;
    if (tok[0] == '!') {
      neg = true;
      tok = tok.substr(1);
      std::size_t nb = tok.find_first_not_of(" \t");
      if (nb == std::string::npos) throw std::invalid_argument("dangling '!' in expression");
      tok = tok.substr(nb);
    }
    auto it = predicate_registry().find(tok);
    if (it == predicate_registry().end())
      throw std::invalid_argument("unknown predicate: " + tok);
    literals.push_back(Literal{&it->second, tok, neg});
  }
  if (literals.empty()) throw std::invalid_argument("empty expression");
  return literals;
}

} // namespace

const std::vector<std::string>& known_predicates() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, pred] : predicate_registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SearchWitness> search_counterexamples(const std::string& expr,
                                                  const std::vector<NamedGroup>& corpus,
                                                  const SuiteOptions& options) {
  std::vector<Literal> literals = parse_expr(expr);
  bool relational = false;
  for (const auto& lit : literals) relational |= lit.pred->relational;

  std::vector<SearchWitness> witnesses;
  for (const auto& member : corpus) {
    GroupAnalysis a(member.name, member.group, options.limits);
    if (!relational) {
      bool all = true;
      for (const auto& lit : literals)
        if (lit.pred->eval(a, -1) == lit.negated) {
          all = false;
          break;
        }
      if (all) witnesses.push_back(SearchWitness{member.name, ""});
      continue;
    }
    for (int rep : a.class_rep_nodes()) {
      bool all = true;
      for (const auto& lit : literals)
        if (lit.pred->eval(a, rep) == lit.negated) {
          all = false;
          break;
        }
      if (all)
        witnesses.push_back(
            SearchWitness{member.name, MemberContext::subgroup_desc(a.lattice().node(rep))});
    }
  }
  return witnesses;
}

} // namespace permlab
