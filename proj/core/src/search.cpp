#include "fourcirc/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "fourcirc/error.hpp"
#include "fourcirc/rng.hpp"

namespace fourcirc {

namespace {

using json = nlohmann::json;

std::vector<RingElement> lambda_choices(const SearchConfig& c) {
  return c.lambda_pool.empty() ? units(c.alphabet) : c.lambda_pool;
}

RingElement draw(Rng& rng, const std::vector<RingElement>& pool) {
  return pool[rng.below(pool.size())];
}

RingVector random_row(Rng& rng, Alphabet a, std::size_t n) {
  const unsigned span = 1u << element_width(a);
  std::vector<RingElement> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.emplace_back(a, static_cast<unsigned>(rng.below(span)));
  return {a, std::move(entries)};
}

std::vector<RingElement> non_units(Alphabet a) {
  std::vector<RingElement> out;
  for (auto e : elements(a)) {
    if (!e.is_unit()) out.push_back(e);
  }
  return out;
}

std::vector<RingElement> involutive_units(Alphabet a) {
  std::vector<RingElement> out;
  for (auto e : units(a)) {
    if (e * e == RingElement::one(a)) out.push_back(e);
  }
  return out;
}

struct TrialOutcome {
  std::uint64_t trial = 0;
  bool condition = false;
  bool built = false;
  bool extremal = false;
  bool kept = false;
  StoredRecord stored;
  std::vector<std::uint64_t> histogram;
};

std::optional<CodeRecord> attempt(const SearchConfig& c, Rng& rng, TrialOutcome& out) {
  const Alphabet a = c.alphabet;
  switch (c.construction) {
    case Construction::FourCirculant: {
      const auto ra = random_row(rng, a, c.n);
      const auto rb = random_row(rng, a, c.n);
      if (!classic_condition_holds(ra, rb)) return std::nullopt;
      out.condition = true;
      return four_circulant_classic(ra, rb);
    }
    case Construction::Modified: {
      const auto lambda = draw(rng, lambda_choices(c));
      const auto ra = random_row(rng, a, c.n);
      const auto rb = random_row(rng, a, c.n);
      if (!modified_condition_holds(ra, rb, lambda)) return std::nullopt;
      out.condition = true;
      return modified_four_circulant(ra, rb, lambda);
    }
    case Construction::Bordered: {
      const auto ra = random_row(rng, a, c.n);
      const auto rb = random_row(rng, a, c.n);
      const auto x = draw(rng, units(a));
      const auto y = draw(rng, non_units(a));
      const auto sums = rowsum_class(ra, rb);
      if (sums.verdict != RowSumClass::Verdict::BothUnits || !(sums.sum_a == sums.sum_b)) return std::nullopt;
      if (!bordered_condition_holds(ra, rb)) return std::nullopt;
      out.condition = true;
      return bordered_four_circulant(ra, rb, x, y);
    }
    case Construction::Extension: {
      const CodeRecord& parent = *c.parent;
      const std::size_t len = parent.length();
      const std::size_t free = c.free_prefix == 0 ? len : c.free_prefix;
      RingVector ext = RingVector::constant(a, len, RingElement::one(a));
      const auto head = random_row(rng, a, free);
      for (std::size_t i = 0; i < free; ++i) ext.set(i, head[i]);
      const auto cc = draw(rng, involutive_units(a));
      if (!(inner_product(ext, ext) == RingElement::one(a))) return std::nullopt;
      out.condition = true;
      return extend(parent, ext, cc);
    }
    default:
      throw Error(ErrorKind::ConfigInvalid, "construction cannot be searched");
  }
}

bool matches(const std::optional<SearchTarget>& target, const EnumeratorClass& cls) {
  if (!target) return true;
  if (cls.family != target->family) return false;
  if (!target->betas.empty() && (!cls.beta || !target->betas.contains(*cls.beta))) return false;
  if (!target->gammas.empty() && (!cls.gamma || !target->gammas.contains(*cls.gamma))) return false;
  return true;
}

TrialOutcome run_trial(const SearchConfig& c, Rng& rng, std::uint64_t trial, std::size_t min_d) {
  TrialOutcome out;
  out.trial = trial;
  std::optional<CodeRecord> record;
  try {
    record = attempt(c, rng, out);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigInvalid) throw;
    return out;
  }
  if (!record) return out;
  out.built = true;
  record->provenance.seed = c.seed;

  const BitMatrix basis = binary_basis(*record);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (basis.row(i).weight() < min_d) return out;
  }
  const Measurement m = measure(basis, c.w_max);
  if (m.analysis.d == extremal_bound(basis.cols())) out.extremal = true;
  if (m.analysis.d < min_d) return out;
  out.kept = true;
  out.histogram = m.profile.histogram;
  out.stored = StoredRecord{std::move(*record), m.analysis, trial};
  return out;
}

using DedupKey = std::tuple<std::size_t, Family, std::optional<std::int64_t>, std::optional<std::int64_t>,
                            std::vector<std::uint64_t>>;

std::uint64_t parse_u64(std::string_view what, const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ConfigInvalid, std::string(what) + " is not an unsigned integer: '" + text + "'");
  }
}

std::set<std::int64_t> int_set(const json& j) {
  std::set<std::int64_t> out;
  if (j.is_array()) {
    for (const auto& v : j) out.insert(v.get<std::int64_t>());
  } else {
    out.insert(j.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Measurement measure(const BitMatrix& basis, std::size_t w_max, unsigned workers) {
  EnumerationOptions options;
  options.w_max = w_max;
  options.workers = workers;
  Measurement m{weight_distribution(basis, options), {}};
  const auto low = m.profile.min_nonzero_weight();
  m.analysis.d = low ? *low : minimum_distance(basis, w_max + 2, workers);
  const std::size_t n = basis.cols();
  if ((n == 64 || n == 66 || n == 68) && m.profile.covers(14)) m.analysis.enumerator = classify(m.profile);
  return m;
}

void validate(const SearchConfig& c) {
  if (c.trials == 0) throw Error(ErrorKind::ConfigInvalid, "trials must be at least 1");
  if (c.workers == 0) throw Error(ErrorKind::ConfigInvalid, "workers must be at least 1");
  switch (c.construction) {
    case Construction::FourCirculant:
    case Construction::Modified:
      if (c.n == 0) throw Error(ErrorKind::ConfigInvalid, "n must be positive");
      break;
    case Construction::Bordered:
      if (c.n == 0 || c.n % 2 == 0) throw Error(ErrorKind::ConfigInvalid, "bordered searches need odd n");
      break;
    case Construction::Extension:
      if (!c.parent) throw Error(ErrorKind::ConfigInvalid, "extension searches need a parent record");
      if (c.parent->alphabet != c.alphabet) throw Error(ErrorKind::ConfigInvalid, "parent alphabet differs from config");
      if (c.free_prefix > c.parent->length()) throw Error(ErrorKind::ConfigInvalid, "free_prefix exceeds parent length");
      break;
    default:
      throw Error(ErrorKind::ConfigInvalid, "construction cannot be searched: " + std::string(to_string(c.construction)));
  }
  for (auto l : c.lambda_pool) {
    if (l.alphabet() != c.alphabet) throw Error(ErrorKind::ConfigInvalid, "lambda from another alphabet");
    if (!l.is_unit()) throw Error(ErrorKind::ConfigInvalid, "lambda " + format_element(l) + " is not a unit");
  }
  if (c.w_max < 1) throw Error(ErrorKind::ConfigInvalid, "w_max must be positive");
}

SearchConfig parse_search_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  SearchConfig c;
  try {
    const json j = json::parse(json_text);
    c.alphabet = parse_alphabet(j.value("alphabet", std::string("f2")));
    c.construction = parse_construction(j.value("construction", std::string("modified")));
    c.n = j.value("n", std::size_t{0});
    if (j.contains("lambda_pool")) {
      const auto& pool = j.at("lambda_pool");
      if (!(pool.is_string() && pool.get<std::string>() == "all")) {
        for (const auto& l : pool) c.lambda_pool.push_back(parse_element(c.alphabet, l.get<std::string>()));
      }
    }
    c.trials = j.value("trials", std::uint64_t{0});
    if (j.contains("seed")) {
      const auto& s = j.at("seed");
      c.seed = s.is_string() ? parse_u64("seed", s.get<std::string>()) : s.get<std::uint64_t>();
    }
    if (j.contains("target")) {
      const auto& t = j.at("target");
      SearchTarget target;
      target.family = parse_family(t.at("family").get<std::string>());
      if (t.contains("beta")) target.betas = int_set(t.at("beta"));
      if (t.contains("gamma")) target.gammas = int_set(t.at("gamma"));
      c.target = target;
    }
    c.w_max = j.value("w_max", std::size_t{14});
    c.workers = j.value("workers", 1u);
    if (j.contains("min_distance")) c.min_distance = j.at("min_distance").get<std::size_t>();
    c.free_prefix = j.value("free_prefix", std::size_t{0});
    if (j.contains("parent")) {
      std::filesystem::path p = j.at("parent").get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      const auto records = read_records(p);
      if (records.empty()) throw Error(ErrorKind::ConfigInvalid, "parent file has no records: " + p.string());
      c.parent = records.front().record;
      if (!j.contains("alphabet")) c.alphabet = c.parent->alphabet;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ConfigInvalid, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigInvalid) throw;
    throw Error(ErrorKind::ConfigInvalid, e.what());
  }
  return c;
}

SearchConfig load_search_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ConfigInvalid, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  SearchConfig c = parse_search_config(text.str(), path.parent_path());
  if (const char* s = std::getenv("FOURCIRC_SEED")) c.seed = parse_u64("FOURCIRC_SEED", s);
  if (const char* w = std::getenv("FOURCIRC_WORKERS")) {
    c.workers = static_cast<unsigned>(parse_u64("FOURCIRC_WORKERS", w));
  }
  return c;
}

SearchReport run_search(const SearchConfig& config, const std::optional<std::filesystem::path>& store) {
  validate(config);
  const std::size_t binary_n = config.construction == Construction::Extension
                                   ? (config.parent->length() + 2) * element_width(config.alphabet)
                               : config.construction == Construction::Bordered
                                   ? (4 * config.n + 4) * element_width(config.alphabet)
                                   : 4 * config.n * element_width(config.alphabet);
  const std::size_t min_d = config.min_distance.value_or(extremal_bound(binary_n));

  const unsigned workers = config.workers;
  std::vector<std::vector<TrialOutcome>> per_worker(workers);
  std::vector<std::exception_ptr> errors(workers);
  const Rng base(config.seed);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          Rng rng = base.stream(w);
          for (std::uint64_t t = w; t < config.trials; t += workers) {
            per_worker[w].push_back(run_trial(config, rng, t, min_d));
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<TrialOutcome> outcomes;
  for (auto& v : per_worker) std::move(v.begin(), v.end(), std::back_inserter(outcomes));
  std::sort(outcomes.begin(), outcomes.end(), [](const auto& x, const auto& y) { return x.trial < y.trial; });

  SearchReport report;
  std::set<DedupKey> seen_profiles;
  std::set<DedupKey> seen_hits;
  for (auto& o : outcomes) {
    ++report.attempted;
    report.condition_passed += o.condition;
    report.self_dual_built += o.built;
    report.extremal_found += o.extremal;
    if (!o.kept) continue;
    const auto& cls = o.stored.analysis->enumerator;
    DedupKey key{o.stored.record.binary_length(), cls.family, cls.beta, cls.gamma, o.histogram};
    seen_profiles.insert(key);
    if (!matches(config.target, cls)) continue;
    if (seen_hits.insert(std::move(key)).second) report.hits.push_back(std::move(o.stored));
  }
  report.distinct_profiles = seen_profiles.size();
  if (store) append_records(*store, report.hits);
  return report;
}

}  // namespace fourcirc
