#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fourcirc/codec.hpp"
#include "fourcirc/constructions.hpp"
#include "fourcirc/error.hpp"
#include "fourcirc/paper_tables.hpp"
#include "fourcirc/search.hpp"
#include "fourcirc/weight_distribution.hpp"

using namespace fourcirc;

namespace {

CodeRecord first_record(const std::string& path) {
  auto records = read_records(path);
  if (records.empty()) throw Error(ErrorKind::InvalidArgument, path + " holds no records");
  return std::move(records.front().record);
}

void save(const std::string& path, const CodeRecord& r) {
  write_records(path, {StoredRecord{r, std::nullopt, 0}});
  std::printf("%s %s n=%zu binary_n=%zu -> %s\n", r.id().c_str(), std::string(to_string(r.provenance.construction)).c_str(),
              r.length(), r.binary_length(), path.c_str());
}

std::string optional_int(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

void print_report(const TableReport& report, const std::string& label) {
  if (!report.checksum_ok) std::printf("FAIL %s: embedded data checksum mismatch\n", label.c_str());
  for (const auto& r : report.rows) {
    std::printf("%s %s [%zu,%zu,%zu] %s beta=%s gamma=%s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.n, r.k,
                r.d, std::string(to_string(r.got.family)).c_str(), optional_int(r.got.beta).c_str(),
                optional_int(r.got.gamma).c_str(), r.detail.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-circulant self-dual code constructions, weight enumeration and search"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a code from first rows");
  std::string kind, alphabet = "f2", lambda, ra, rb, bx, by, out, convention = "circulant-times-d";
  construct->add_option("kind", kind, "four-circulant | modified | bordered")
      ->required()
      ->check(CLI::IsMember({"four-circulant", "modified", "bordered"}));
  construct->add_option("--alphabet", alphabet, "f2 | r1 | r2")->check(CLI::IsMember({"f2", "r1", "r2"}));
  construct->add_option("--lambda", lambda, "unit lambda (modified only)");
  construct->add_option("--ra", ra, "first row of A")->required();
  construct->add_option("--rb", rb, "tabulated row of B")->required();
  construct->add_option("--x", bx, "border unit x (bordered)");
  construct->add_option("--y", by, "border non-unit y (bordered)");
  construct->add_option("--rb-convention", convention, "circulant-times-d | first-row");
  construct->add_option("--out", out, "record file")->required();

  // extend
  auto* ext = app.add_subcommand("extend", "Extend a code by two coordinates");
  std::string ext_in, ext_x, ext_c, ext_out;
  ext->add_option("--in", ext_in, "parent record file")->required();
  ext->add_option("--x", ext_x, "extension vector X")->required();
  ext->add_option("--c", ext_c, "unit c with c^2 = 1")->required();
  ext->add_option("--out", ext_out, "record file")->required();

  // gray
  auto* gray = app.add_subcommand("gray", "Binary Gray image, or the R2 -> R1 map with --phi-u");
  std::string gray_in, gray_out, phi_u_variant = "along-v";
  bool use_phi_u = false;
  gray->add_option("--in", gray_in, "record file")->required();
  gray->add_option("--out", gray_out, "record file")->required();
  gray->add_flag("--phi-u", use_phi_u, "map R2 to R1 instead of to F2");
  gray->add_option("--phi-u-variant", phi_u_variant, "along-v | along-u")->check(CLI::IsMember({"along-v", "along-u"}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Weight distribution and enumerator family");
  std::string an_in;
  std::optional<std::size_t> wmax;
  unsigned an_workers = 1;
  analyze->add_option("--in", an_in, "record file")->required();
  analyze->add_option("--wmax", wmax, "count weights up to w only");
  analyze->add_option("--workers", an_workers, "threads")->check(CLI::PositiveNumber);

  // search
  auto* search = app.add_subcommand("search", "Seeded random search");
  std::string config_path, store;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> s_workers;
  search->add_option("--config", config_path, "JSON config")->required();
  search->add_option("--seed", seed, "overrides config and FOURCIRC_SEED");
  search->add_option("--workers", s_workers, "overrides config and FOURCIRC_WORKERS");
  search->add_option("--store", store, "JSON Lines output (appended)")->required();

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Rebuild published codes and check their parameters");
  std::string table;
  std::vector<std::string> rows;
  unsigned v_workers = 1;
  verify->add_option("--table", table, "1..7, bordered-r1 or phi-u-extension")->required();
  verify->add_option("--rows", rows, "row names or 1-based indices")->delimiter(',');
  verify->add_option("--workers", v_workers, "threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      const Alphabet a = parse_alphabet(alphabet);
      const auto conv = parse_reverse_block_row(convention);
      const auto row_a = parse_row(a, ra);
      const auto row_b = parse_row(a, rb);
      if (kind == "four-circulant") {
        save(out, four_circulant_classic(row_a, row_b));
      } else if (kind == "modified") {
        const auto l = lambda.empty() ? RingElement::one(a) : parse_element(a, lambda);
        save(out, modified_four_circulant(row_a, row_b, l, conv));
      } else {
        if (bx.empty() || by.empty()) throw Error(ErrorKind::InvalidArgument, "bordered needs --x and --y");
        save(out, bordered_four_circulant(row_a, row_b, parse_element(a, bx), parse_element(a, by), conv));
      }
    } else if (*ext) {
      const CodeRecord parent = first_record(ext_in);
      save(ext_out, extend(parent, parse_row(parent.alphabet, ext_x), parse_element(parent.alphabet, ext_c)));
    } else if (*gray) {
      const CodeRecord parent = first_record(gray_in);
      if (use_phi_u) {
        const auto variant = phi_u_variant == "along-u" ? PhiUVariant::AlongU : PhiUVariant::AlongV;
        save(gray_out, phi_u_record(parent, variant));
      } else {
        save(gray_out, gray_record(parent));
      }
    } else if (*analyze) {
      for (const auto& stored : read_records(an_in)) {
        const BitMatrix basis = binary_basis(stored.record);
        EnumerationOptions options;
        options.w_max = wmax;
        options.workers = an_workers;
        const WeightProfile profile = weight_distribution(basis, options);
        const auto low = profile.min_nonzero_weight();
        const std::size_t d = low ? *low : minimum_distance(basis, profile.max_weight() + 2, an_workers);
        std::printf("id=%s n=%zu k=%zu d=%zu\n", stored.record.id().c_str(), basis.cols(), basis.rows(), d);
        std::printf("histogram%s:", profile.complete ? "" : " (truncated)");
        std::size_t shown = 0;
        for (std::size_t w = 0; w < profile.histogram.size() && shown < 8; ++w) {
          if (profile.histogram[w] == 0) continue;
          std::printf(" A%zu=%llu", w, static_cast<unsigned long long>(profile.histogram[w]));
          ++shown;
        }
        std::printf("\n");
        const std::size_t n = basis.cols();
        if ((n == 64 || n == 66 || n == 68) && profile.covers(14)) {
          const auto cls = classify(profile);
          std::printf("family=%s beta=%s gamma=%s%s\n", std::string(to_string(cls.family)).c_str(),
                      optional_int(cls.beta).c_str(), optional_int(cls.gamma).c_str(),
                      cls.ambiguous ? " (also W68_2 with gamma=16)" : "");
        }
        std::printf("extremal=%s\n", is_extremal(n, d) ? "yes" : "no");
      }
    } else if (*search) {
      SearchConfig config = load_search_config(config_path);
      if (seed) config.seed = *seed;
      if (s_workers) config.workers = *s_workers;
      const SearchReport r = run_search(config, store);
      std::printf("attempted=%llu condition_passed=%llu self_dual_built=%llu extremal_found=%llu "
                  "distinct_profiles=%llu hits=%zu\n",
                  static_cast<unsigned long long>(r.attempted), static_cast<unsigned long long>(r.condition_passed),
                  static_cast<unsigned long long>(r.self_dual_built), static_cast<unsigned long long>(r.extremal_found),
                  static_cast<unsigned long long>(r.distinct_profiles), r.hits.size());
    } else if (*verify) {
      TableReport report;
      if (table.size() == 1 && table[0] >= '1' && table[0] <= '9') {
        report = verify_table(table[0] - '0', rows, v_workers);
      } else {
        report = verify_example(parse_paper_example(table), v_workers);
      }
      print_report(report, "table " + table);
      return report.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
