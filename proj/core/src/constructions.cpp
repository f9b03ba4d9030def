#include "fourcirc/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string>

#include "fourcirc/error.hpp"

namespace fourcirc {

namespace {

void require_same_shape(const RingVector& ra, const RingVector& rb) {
  if (ra.alphabet() != rb.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "rA and rB alphabets differ");
  if (ra.size() != rb.size()) throw Error(ErrorKind::LengthMismatch, "rA and rB lengths differ");
  if (ra.empty()) throw Error(ErrorKind::InvalidArgument, "empty first row");
}

std::vector<RingElement> module_basis(Alphabet a) {
  switch (a) {
    case Alphabet::F2: return {RingElement(a, 1)};
    case Alphabet::R1: return {RingElement(a, 1), RingElement(a, 2)};
    case Alphabet::R2: return {RingElement(a, 1), RingElement(a, 2), RingElement(a, 4), RingElement(a, 8)};
  }
  return {};
}

// A A^T + B B^T
RingMatrix gram_sum(const RingMatrix& a, const RingMatrix& b) {
  return a * a.transpose() + b * b.transpose();
}

// [I | M] with M given by its rows.
RingMatrix systematic(const RingMatrix& m) {
  return RingMatrix::identity(m.alphabet(), m.rows()).hconcat(m);
}

void require_self_dual(const CodeRecord& r) {
  if (!is_self_orthogonal(r.generator)) {
    throw Error(ErrorKind::ConditionFailed, "generated code is not self-orthogonal");
  }
  if (r.length() == 0 || !is_self_dual(binary_basis(r))) {
    throw Error(ErrorKind::ConditionFailed, "generated code is not self-dual");
  }
}

}  // namespace

std::string_view to_string(Construction c) noexcept {
  switch (c) {
    case Construction::FourCirculant: return "four-circulant";
    case Construction::Modified: return "modified";
    case Construction::Bordered: return "bordered";
    case Construction::Extension: return "extension";
    case Construction::Gray: return "gray";
    case Construction::PhiU: return "phi-u";
  }
  return "?";
}

std::string_view to_string(ReverseBlockRow c) noexcept {
  return c == ReverseBlockRow::FirstRow ? "first-row" : "circulant-times-d";
}

ReverseBlockRow parse_reverse_block_row(std::string_view text) {
  if (text == "first-row") return ReverseBlockRow::FirstRow;
  if (text == "circulant-times-d") return ReverseBlockRow::CirculantTimesBackdiagonal;
  throw Error(ErrorKind::ParseError, "unknown r_B convention '" + std::string(text) + "'");
}

RingMatrix reverse_block(const RingVector& rb, RingElement lambda, ReverseBlockRow convention) {
  if (convention == ReverseBlockRow::FirstRow) return lambda_reverse_circulant(rb, lambda);
  return lambda_circulant(rb, lambda) * backdiagonal(rb.size(), rb.alphabet());
}

Construction parse_construction(std::string_view text) {
  for (auto c : {Construction::FourCirculant, Construction::Modified, Construction::Bordered,
                 Construction::Extension, Construction::Gray, Construction::PhiU}) {
    if (text == to_string(c)) return c;
  }
  throw Error(ErrorKind::ParseError, "unknown construction '" + std::string(text) + "'");
}

std::string CodeRecord::id() const {
  // FNV-1a over the alphabet tag and every generator entry.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](unsigned byte) {
    h ^= byte & 0xFFu;
    h *= 0x100000001b3ull;
  };
  feed(static_cast<unsigned>(alphabet));
  feed(static_cast<unsigned>(generator.rows()));
  feed(static_cast<unsigned>(generator.cols()));
  for (std::size_t r = 0; r < generator.rows(); ++r) {
    for (auto e : generator.row(r).entries()) feed(e.nibble());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BitMatrix gray_generator(const RingMatrix& g) {
  const auto basis = module_basis(g.alphabet());
  std::vector<BitVector> rows;
  rows.reserve(g.rows() * basis.size());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (auto m : basis) rows.push_back(gray_image(g.row(i).scaled(m)));
  }
  return BitMatrix::from_rows(std::move(rows));
}

BitMatrix binary_basis(const CodeRecord& r) { return rref(gray_generator(r.generator)).reduced; }

bool is_self_orthogonal(const RingMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      if (!inner_product(g.row(i), g.row(j)).is_zero()) return false;
    }
  }
  return true;
}

RowSumClass rowsum_class(const RingVector& ra, const RingVector& rb) {
  if (ra.alphabet() != rb.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "rA and rB alphabets differ");
  RowSumClass out{ra.sum(), rb.sum(), RowSumClass::Verdict::Mixed};
  if (out.sum_a.is_unit() && out.sum_b.is_unit()) {
    out.verdict = RowSumClass::Verdict::BothUnits;
  } else if (!out.sum_a.is_unit() && !out.sum_b.is_unit()) {
    out.verdict = RowSumClass::Verdict::BothNonUnits;
  }
  return out;
}

bool classic_condition_holds(const RingVector& ra, const RingVector& rb) {
  require_same_shape(ra, rb);
  const auto a = circulant(ra);
  const auto b = circulant(rb);
  // -I = I in characteristic 2.
  return gram_sum(a, b) == RingMatrix::identity(ra.alphabet(), ra.size());
}

bool modified_condition_holds(const RingVector& ra, const RingVector& rb, RingElement lambda) {
  require_same_shape(ra, rb);
  if (!lambda.is_unit()) throw Error(ErrorKind::NonUnitLambda, "lambda must be a unit");
  const auto a = lambda_circulant(ra, lambda);
  const auto b = reverse_block(rb, lambda);
  return gram_sum(a, b) == RingMatrix::identity(ra.alphabet(), ra.size());
}

bool bordered_condition_holds(const RingVector& ra, const RingVector& rb) {
  require_same_shape(ra, rb);
  const auto a = circulant(ra);
  const auto b = reverse_block(rb, RingElement::one(ra.alphabet()));
  const auto target = RingMatrix::identity(ra.alphabet(), ra.size()) + RingMatrix::all_ones(ra.alphabet(), ra.size());
  return gram_sum(a, b) == target;
}

CodeRecord four_circulant_classic(const RingVector& ra, const RingVector& rb) {
  if (!classic_condition_holds(ra, rb)) throw Error(ErrorKind::ConditionFailed, "A A^T + B B^T != -I");
  const auto a = circulant(ra);
  const auto b = circulant(rb);
  // -B^T is stored as B^T.
  const auto m = a.hconcat(b).vconcat(b.transpose().hconcat(a.transpose()));
  CodeRecord r{ra.alphabet(), systematic(m), {}};
  r.provenance.construction = Construction::FourCirculant;
  r.provenance.ra = ra;
  r.provenance.rb = rb;
  require_self_dual(r);
  return r;
}

CodeRecord modified_four_circulant(const RingVector& ra, const RingVector& rb, RingElement lambda,
                                   ReverseBlockRow convention) {
  if (lambda.alphabet() != ra.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "lambda alphabet");
  if (!modified_condition_holds(ra, rb, lambda)) throw Error(ErrorKind::ConditionFailed, "A A^T + B B^T != -I");
  const auto a = lambda_circulant(ra, lambda);
  const auto b = reverse_block(rb, lambda, convention);
  // -B is stored as B.
  const auto m = a.hconcat(b).vconcat(b.hconcat(a));
  CodeRecord r{ra.alphabet(), systematic(m), {}};
  r.provenance.construction = Construction::Modified;
  r.provenance.lambda = lambda;
  r.provenance.ra = ra;
  r.provenance.rb = rb;
  r.provenance.rb_convention = convention;
  require_self_dual(r);
  return r;
}

CodeRecord bordered_four_circulant(const RingVector& ra, const RingVector& rb, RingElement x, RingElement y,
                                   ReverseBlockRow convention) {
  require_same_shape(ra, rb);
  const std::size_t n = ra.size();
  const Alphabet alpha = ra.alphabet();
  if (n % 2 == 0) throw Error(ErrorKind::EvenN, "bordered construction needs odd n, got " + std::to_string(n));
  if (x.alphabet() != alpha || y.alphabet() != alpha) throw Error(ErrorKind::AlphabetMismatch, "border alphabet");
  if (!x.is_unit() || y.is_unit()) throw Error(ErrorKind::BadBorder, "x must be a unit and y a non-unit");
  const auto sums = rowsum_class(ra, rb);
  if (sums.sum_a != sums.sum_b || !sums.sum_a.is_unit()) {
    throw Error(ErrorKind::RowSumMismatch, "row sums must be equal units");
  }
  if (!bordered_condition_holds(ra, rb)) throw Error(ErrorKind::ConditionFailed, "A A^T + B B^T != I + J");

  const auto a = circulant(ra);
  const auto b = reverse_block(rb, RingElement::one(alpha), convention);
  const RingElement z = x * sums.sum_a;
  const RingElement t = y * sums.sum_b;
  const RingElement one = RingElement::one(alpha);

  std::vector<RingVector> rows;
  rows.reserve(2 * n + 2);
  auto border_row = [&](RingElement first, RingElement second, RingElement left, RingElement right) {
    std::vector<RingElement> e{first, second};
    e.insert(e.end(), n, left);
    e.insert(e.end(), n, right);
    rows.emplace_back(alpha, std::move(e));
  };
  border_row(one, one, x, y);
  border_row(one, one, y, x);
  auto block_row = [&](RingElement first, RingElement second, const RingVector& left, const RingVector& right) {
    std::vector<RingElement> e{first, second};
    e.insert(e.end(), left.entries().begin(), left.entries().end());
    e.insert(e.end(), right.entries().begin(), right.entries().end());
    rows.emplace_back(alpha, std::move(e));
  };
  for (std::size_t i = 0; i < n; ++i) block_row(z, t, a.row(i), b.row(i));
  for (std::size_t i = 0; i < n; ++i) block_row(t, z, b.row(i), a.row(i));

  CodeRecord r{alpha, systematic(RingMatrix(alpha, std::move(rows))), {}};
  r.provenance.construction = Construction::Bordered;
  r.provenance.ra = ra;
  r.provenance.rb = rb;
  r.provenance.rb_convention = convention;
  r.provenance.x = x;
  r.provenance.y = y;
  require_self_dual(r);
  return r;
}

CodeRecord extend(const CodeRecord& parent, const RingVector& ext_vector, RingElement c) {
  const Alphabet alpha = parent.alphabet;
  if (ext_vector.alphabet() != alpha || c.alphabet() != alpha) throw Error(ErrorKind::AlphabetMismatch, "extension alphabet");
  if (ext_vector.size() != parent.length()) {
    throw Error(ErrorKind::LengthMismatch, "X has length " + std::to_string(ext_vector.size()) + ", code has length " +
                                               std::to_string(parent.length()));
  }
  const RingElement one = RingElement::one(alpha);
  if (!c.is_unit() || c * c != one) throw Error(ErrorKind::BadC, "c must be a unit with c^2 = 1");
  if (inner_product(ext_vector, ext_vector) != one) throw Error(ErrorKind::BadX, "<X, X> != 1");

  std::vector<RingVector> rows;
  rows.reserve(parent.generator.rows() + 1);
  {
    std::vector<RingElement> e{one, RingElement::zero(alpha)};
    e.insert(e.end(), ext_vector.entries().begin(), ext_vector.entries().end());
    rows.emplace_back(alpha, std::move(e));
  }
  for (std::size_t i = 0; i < parent.generator.rows(); ++i) {
    const auto& r = parent.generator.row(i);
    const RingElement yi = inner_product(r, ext_vector);
    std::vector<RingElement> e{yi, c * yi};
    e.insert(e.end(), r.entries().begin(), r.entries().end());
    rows.emplace_back(alpha, std::move(e));
  }

  CodeRecord out{alpha, RingMatrix(alpha, std::move(rows)), {}};
  out.provenance.construction = Construction::Extension;
  out.provenance.ext_vector = ext_vector;
  out.provenance.c = c;
  out.provenance.parent_id = parent.id();
  require_self_dual(out);
  return out;
}

CodeRecord gray_record(const CodeRecord& parent) {
  const BitMatrix basis = binary_basis(parent);
  std::vector<RingVector> rows;
  rows.reserve(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    RingVector v(Alphabet::F2, basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      if (basis.get(i, j)) v.set(j, RingElement::one(Alphabet::F2));
    }
    rows.push_back(std::move(v));
  }
  CodeRecord out{Alphabet::F2, RingMatrix(Alphabet::F2, std::move(rows)), {}};
  out.provenance.construction = Construction::Gray;
  out.provenance.parent_id = parent.id();
  require_self_dual(out);
  return out;
}

CodeRecord phi_u_record(const CodeRecord& parent, PhiUVariant variant) {
  if (parent.alphabet != Alphabet::R2) throw Error(ErrorKind::AlphabetMismatch, "phi_u maps R2 codes");
  const RingElement w = phi_u_split_scalar(variant);
  std::vector<RingVector> rows;
  rows.reserve(2 * parent.generator.rows());
  for (std::size_t i = 0; i < parent.generator.rows(); ++i) {
    rows.push_back(phi_u(parent.generator.row(i), variant));
    rows.push_back(phi_u(parent.generator.row(i).scaled(w), variant));
  }
  CodeRecord out{Alphabet::R1, RingMatrix(Alphabet::R1, std::move(rows)), {}};
  out.provenance.construction = Construction::PhiU;
  out.provenance.phi_u_variant = variant;
  out.provenance.parent_id = parent.id();
  require_self_dual(out);
  return out;
}

CodeRecord replay(const Provenance& p, const CodeRecord* parent) {
  auto need = [](const auto& opt, const char* what) -> const auto& {
    if (!opt) throw Error(ErrorKind::InvalidArgument, std::string("provenance lacks ") + what);
    return *opt;
  };
  auto need_parent = [&]() -> const CodeRecord& {
    if (parent == nullptr) throw Error(ErrorKind::InvalidArgument, "replay needs the parent record");
    if (p.parent_id && parent->id() != *p.parent_id) throw Error(ErrorKind::InvalidArgument, "parent id mismatch");
    return *parent;
  };
  CodeRecord r;
  switch (p.construction) {
    case Construction::FourCirculant:
      r = four_circulant_classic(need(p.ra, "rA"), need(p.rb, "rB"));
      break;
    case Construction::Modified:
      r = modified_four_circulant(need(p.ra, "rA"), need(p.rb, "rB"), need(p.lambda, "lambda"),
                                  p.rb_convention.value_or(ReverseBlockRow::CirculantTimesBackdiagonal));
      break;
    case Construction::Bordered:
      r = bordered_four_circulant(need(p.ra, "rA"), need(p.rb, "rB"), need(p.x, "x"), need(p.y, "y"),
                                  p.rb_convention.value_or(ReverseBlockRow::CirculantTimesBackdiagonal));
      break;
    case Construction::Extension:
      r = extend(need_parent(), need(p.ext_vector, "X"), need(p.c, "c"));
      break;
    case Construction::Gray:
      r = gray_record(need_parent());
      break;
    case Construction::PhiU:
      r = phi_u_record(need_parent(), p.phi_u_variant.value_or(PhiUVariant::AlongV));
      break;
  }
  r.provenance.seed = p.seed;
  return r;
}

}  // namespace fourcirc
