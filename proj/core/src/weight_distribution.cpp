#include "fourcirc/weight_distribution.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "fourcirc/error.hpp"

namespace fourcirc {

namespace {

template <std::size_t W>
using Word = std::array<std::uint64_t, W>;

template <std::size_t W>
inline void xor_into(Word<W>& acc, const Word<W>& row) noexcept {
  for (std::size_t i = 0; i < W; ++i) acc[i] ^= row[i];
}

template <std::size_t W>
inline unsigned popcount(const Word<W>& w) noexcept {
  unsigned s = 0;
  for (auto x : w) s += static_cast<unsigned>(std::popcount(x));
  return s;
}

template <std::size_t W>
Word<W> pack(const BitVector& v, std::size_t first, std::size_t last) {
  Word<W> out{};
  for (std::size_t c = first; c < last; ++c) {
    const std::size_t j = c - first;
    if (v.get(c)) out[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  return out;
}

void validate_shape(const BitMatrix& g) {
  if (g.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator matrix");
  if (g.rows() > kMaxDimension) {
    throw Error(ErrorKind::DimensionTooLarge, std::to_string(g.rows()) + " rows exceeds " + std::to_string(kMaxDimension));
  }
  if (g.cols() > kMaxLength) {
    throw Error(ErrorKind::DimensionTooLarge, "length " + std::to_string(g.cols()) + " exceeds " + std::to_string(kMaxLength));
  }
}

unsigned resolve_partition_bits(const EnumerationOptions& options, std::size_t k) {
  unsigned p = 0;
  if (options.partition_bits) {
    p = *options.partition_bits;
  } else if (options.workers > 1) {
    p = static_cast<unsigned>(std::bit_width(options.workers - 1)) + 3;
  }
  return static_cast<unsigned>(std::min<std::size_t>(p, k));
}

/// Runs `task(index, histogram)` for every index in [0, count) on `workers`
/// threads, each owning a private histogram; returns the summed histogram.
template <typename Task>
std::vector<std::uint64_t> run_partitioned(std::uint64_t count, unsigned workers, std::size_t hist_size, Task task) {
  workers = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(workers, count)));
  std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>(hist_size, 0));
  std::atomic<std::uint64_t> next{0};
  auto body = [&](unsigned w) {
    for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i, local[w]);
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
  }
  std::vector<std::uint64_t> total(hist_size, 0);
  for (const auto& h : local) {
    for (std::size_t i = 0; i < hist_size; ++i) total[i] += h[i];
  }
  return total;
}

// Gray-code traversal of one coset: the top p information bits are fixed to
// `chunk`, the low m = k - p bits run through all 2^m patterns.
template <std::size_t W>
void gray_chunk(const std::vector<Word<W>>& redundancy, std::size_t k, unsigned p, std::uint64_t chunk,
                std::size_t limit, std::vector<std::uint64_t>& hist) {
  const std::size_t m = k - p;
  Word<W> acc{};
  for (unsigned b = 0; b < p; ++b) {
    if ((chunk >> b) & 1u) xor_into(acc, redundancy[m + b]);
  }
  const unsigned base = static_cast<unsigned>(std::popcount(chunk));
  {
    const unsigned w = base + popcount(acc);
    if (w <= limit) ++hist[w];
  }
  const std::uint64_t steps = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < steps; ++i) {
    xor_into(acc, redundancy[static_cast<std::size_t>(std::countr_zero(i))]);
    const std::uint64_t gray = i ^ (i >> 1);
    const unsigned w = base + static_cast<unsigned>(std::popcount(gray)) + popcount(acc);
    if (w <= limit) ++hist[w];
  }
}

template <std::size_t W>
std::vector<std::uint64_t> gray_histogram(const StandardForm& sf, std::size_t limit, const EnumerationOptions& options) {
  const std::size_t k = sf.matrix.rows();
  const std::size_t n = sf.matrix.cols();
  std::vector<Word<W>> redundancy;
  redundancy.reserve(k);
  for (std::size_t i = 0; i < k; ++i) redundancy.push_back(pack<W>(sf.matrix.row(i), k, n));
  const unsigned p = resolve_partition_bits(options, k);
  return run_partitioned(std::uint64_t{1} << p, options.workers, limit + 1,
                         [&](std::uint64_t chunk, std::vector<std::uint64_t>& hist) {
                           gray_chunk<W>(redundancy, k, p, chunk, limit, hist);
                         });
}

// Visits the XOR of every subset of rows[start..] of size <= depth_left, added to acc.
template <std::size_t W, typename Visit>
void visit_subsets(const std::vector<Word<W>>& rows, std::size_t start, unsigned depth_left, const Word<W>& acc,
                   Visit& visit) {
  visit(acc);
  if (depth_left == 0) return;
  for (std::size_t i = start; i < rows.size(); ++i) {
    Word<W> next = acc;
    xor_into(next, rows[i]);
    visit_subsets<W>(rows, i + 1, depth_left - 1, next, visit);
  }
}

template <std::size_t W>
std::vector<std::uint64_t> split_histogram(const DisjointInformationSets& sets, std::size_t n, std::size_t limit,
                                           unsigned workers) {
  // A codeword of weight <= limit has weight <= low on the first information
  // set, or weight > low there and weight <= limit - low - 1 on the second.
  const std::size_t k = sets.first.rows();
  const unsigned low = static_cast<unsigned>(std::min(limit / 2, k));
  const std::int64_t high_raw = static_cast<std::int64_t>(limit) - static_cast<std::int64_t>(limit / 2) - 1;
  const unsigned high = high_raw < 0 ? 0 : static_cast<unsigned>(std::min<std::int64_t>(high_raw, static_cast<std::int64_t>(k)));

  std::vector<Word<W>> first, second;
  for (std::size_t i = 0; i < k; ++i) {
    first.push_back(pack<W>(sets.first.row(i), 0, n));
    second.push_back(pack<W>(sets.second.row(i), 0, n));
  }
  Word<W> first_mask{};
  for (auto c : sets.first_set) first_mask[c >> 6] |= std::uint64_t{1} << (c & 63);

  // Task 0: the empty subset of both passes. Tasks 1..k: subsets whose
  // smallest row index is task-1 in the first pass; k+1..2k likewise in the second.
  const std::uint64_t tasks = high_raw < 0 ? 1 + k : 1 + 2 * k;
  return run_partitioned(tasks, workers, limit + 1, [&](std::uint64_t task, std::vector<std::uint64_t>& hist) {
    if (task == 0) {
      ++hist[0];
      return;
    }
    const bool first_pass = task <= k;
    const std::size_t lead = static_cast<std::size_t>(first_pass ? task - 1 : task - 1 - k);
    const auto& rows = first_pass ? first : second;
    const unsigned depth = first_pass ? low : high;
    if (depth == 0) return;
    auto visit = [&](const Word<W>& cw) {
      const unsigned w = popcount(cw);
      if (w > limit) return;
      if (!first_pass) {
        Word<W> on_first = cw;
        for (std::size_t i = 0; i < W; ++i) on_first[i] &= first_mask[i];
        if (popcount(on_first) <= low) return;
      }
      ++hist[w];
    };
    visit_subsets<W>(rows, lead + 1, depth - 1, rows[lead], visit);
  });
}

long double subset_count(std::size_t k, std::size_t depth) {
  long double total = 0, term = 1;
  for (std::size_t i = 0; i <= std::min(depth, k); ++i) {
    total += term;
    term = term * static_cast<long double>(k - i) / static_cast<long double>(i + 1);
  }
  return total;
}

}  // namespace

std::uint64_t WeightProfile::count(std::size_t w) const {
  if (!covers(w)) {
    throw Error(ErrorKind::MissingWeights,
                "weight " + std::to_string(w) + " not covered (profile ends at " + std::to_string(max_weight()) + ")");
  }
  return histogram[w];
}

std::optional<std::size_t> WeightProfile::min_nonzero_weight() const noexcept {
  for (std::size_t w = 1; w < histogram.size(); ++w) {
    if (histogram[w] != 0) return w;
  }
  return std::nullopt;
}

std::uint64_t WeightProfile::total() const noexcept {
  return std::accumulate(histogram.begin(), histogram.end(), std::uint64_t{0});
}

std::optional<DisjointInformationSets> find_disjoint_information_sets(const BitMatrix& g) {
  auto first = rref(g);
  const std::size_t k = first.rank;
  if (g.cols() < 2 * k) return std::nullopt;
  std::vector<bool> in_first(g.cols(), false);
  for (auto c : first.pivot_cols) in_first[c] = true;
  std::vector<std::size_t> order;
  order.reserve(g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    if (!in_first[c]) order.push_back(c);
  }
  const std::size_t complement = order.size();
  for (std::size_t c = 0; c < g.cols(); ++c) {
    if (in_first[c]) order.push_back(c);
  }
  auto second = rref_in_column_order(first.reduced, std::span<const std::size_t>(order.data(), complement));
  if (second.rank < k) return std::nullopt;
  return DisjointInformationSets{std::move(first.reduced), std::move(second.reduced), std::move(first.pivot_cols),
                                 std::move(second.pivot_cols)};
}

WeightProfile weight_distribution(const BitMatrix& g, const EnumerationOptions& options) {
  validate_shape(g);
  const std::size_t n = g.cols();
  const std::size_t k = g.rows();
  const std::size_t limit = std::min(options.w_max.value_or(n), n);

  WeightProfile out;
  out.n = n;
  out.complete = limit == n;

  EnumerationMethod method = options.method;
  std::optional<DisjointInformationSets> sets;
  if (method == EnumerationMethod::SplitInformationSets && !options.w_max) {
    throw Error(ErrorKind::InvalidArgument, "split enumeration needs w_max");
  }
  if (method != EnumerationMethod::GrayCode && options.w_max) {
    if (rank(g) < k) throw Error(ErrorKind::RankDeficient, "generator rows are linearly dependent");
    sets = find_disjoint_information_sets(g);
    if (method == EnumerationMethod::SplitInformationSets && !sets) {
      throw Error(ErrorKind::InvalidArgument, "code has no two disjoint information sets");
    }
    if (method == EnumerationMethod::Auto) {
      const long double split_cost = subset_count(k, limit / 2) + subset_count(k, limit - limit / 2);
      method = sets && split_cost < std::ldexp(1.0L, static_cast<int>(k)) ? EnumerationMethod::SplitInformationSets
                                                                           : EnumerationMethod::GrayCode;
    }
  } else if (method == EnumerationMethod::Auto) {
    method = EnumerationMethod::GrayCode;
  }

  if (method == EnumerationMethod::SplitInformationSets) {
    out.histogram = n <= 64 ? split_histogram<1>(*sets, n, limit, options.workers)
                            : split_histogram<2>(*sets, n, limit, options.workers);
    return out;
  }

  const StandardForm sf = standard_form(g);
  out.histogram = (n - k) <= 64 ? gray_histogram<1>(sf, limit, options) : gray_histogram<2>(sf, limit, options);
  return out;
}

std::size_t minimum_distance(const BitMatrix& g, std::optional<std::size_t> w_max_hint, unsigned workers) {
  validate_shape(g);
  const std::size_t n = g.cols();
  std::size_t w = std::clamp<std::size_t>(w_max_hint.value_or(2), 1, n);
  while (true) {
    EnumerationOptions options;
    options.w_max = w;
    options.workers = workers;
    const auto profile = weight_distribution(g, options);
    if (auto d = profile.min_nonzero_weight()) return *d;
    if (w >= n) break;
    w = std::min(n, w + 2);
  }
  throw Error(ErrorKind::InvalidArgument, "code has no nonzero codeword");
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::W64_1: return "W64_1";
    case Family::W64_2: return "W64_2";
    case Family::W66_1: return "W66_1";
    case Family::W66_2: return "W66_2";
    case Family::W66_3: return "W66_3";
    case Family::W68_1: return "W68_1";
    case Family::W68_2: return "W68_2";
    case Family::Unknown: return "unknown";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  for (auto f : {Family::W64_1, Family::W64_2, Family::W66_1, Family::W66_2, Family::W66_3, Family::W68_1,
                 Family::W68_2, Family::Unknown}) {
    if (text == to_string(f)) return f;
  }
  throw Error(ErrorKind::ParseError, "unknown enumerator family '" + std::string(text) + "'");
}

EnumeratorClass classify(const WeightProfile& profile) {
  const std::size_t n = profile.n;
  if (n != 64 && n != 66 && n != 68) {
    throw Error(ErrorKind::UnsupportedLength, "no enumerator families for length " + std::to_string(n));
  }
  const auto a12 = static_cast<std::int64_t>(profile.count(12));
  const auto a14 = static_cast<std::int64_t>(profile.count(14));

  EnumeratorClass out;
  for (std::size_t w = 1; w < 12; ++w) {
    if (profile.count(w) != 0) return out;
  }
  // Solves a12 = base + step * beta for an integral beta.
  auto solve_beta = [a12](std::int64_t base, std::int64_t step) -> std::optional<std::int64_t> {
    if (a12 < base || (a12 - base) % step != 0) return std::nullopt;
    return (a12 - base) / step;
  };
  auto in_range = [](std::int64_t v, std::int64_t lo, std::int64_t hi) { return v >= lo && v <= hi; };

  if (n == 64) {
    const auto beta = solve_beta(1312, 16);
    if (!beta) return out;
    if (a14 == 22016 - 64 * *beta && in_range(*beta, 14, 284)) {
      out.family = Family::W64_1;
      out.beta = beta;
    } else if (a14 == 23040 - 64 * *beta && in_range(*beta, 0, 277)) {
      out.family = Family::W64_2;
      out.beta = beta;
    }
    return out;
  }

  if (n == 66) {
    if (a12 == 1690 && a14 == 7990) {
      out.family = Family::W66_2;
      return out;
    }
    const auto beta = solve_beta(858, 8);
    if (!beta) return out;
    if (a14 == 18678 - 24 * *beta && in_range(*beta, 0, 778)) {
      out.family = Family::W66_1;
      out.beta = beta;
    } else if (a14 == 18166 - 24 * *beta && in_range(*beta, 14, 756)) {
      out.family = Family::W66_3;
      out.beta = beta;
    }
    return out;
  }

  const auto beta = solve_beta(442, 4);
  if (!beta) return out;
  if (a14 == 10864 - 8 * *beta) {
    out.family = Family::W68_1;
    out.beta = beta;
    out.ambiguous = true;
    return out;
  }
  const std::int64_t rest = 14960 - 8 * *beta - a14;
  if (rest >= 0 && rest % 256 == 0) {
    out.family = Family::W68_2;
    out.beta = beta;
    out.gamma = rest / 256;
  }
  return out;
}

std::size_t extremal_bound(std::size_t n) {
  return n % 24 == 22 ? 4 * (n / 24) + 6 : 4 * (n / 24) + 4;
}

bool is_extremal(std::size_t n, std::size_t d) {
  if (n % 2 != 0) throw Error(ErrorKind::OddLength, "extremality is defined for even lengths");
  return d == extremal_bound(n);
}

}  // namespace fourcirc
