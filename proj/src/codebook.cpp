/*
 * Copyright 2026 The galois-sums Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "galois_sums/codebook.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "galois_sums/arith.hpp"
#include "galois_sums/sums.hpp"

namespace galois_sums {

namespace {

void check_shape(std::int64_t q, std::int64_t n, std::int64_t m, std::int64_t k) {
  if (q < 2 || n < 1 || m < 2 || k < 1 || k > m - 1) {
    throw Error(ErrorKind::InvalidParams, "need q >= 2, n >= 1, m >= 2 and 1 <= k <= m-1");
  }
}

// All S tuples in lexicographic order, flattened.
std::vector<ElementIndex> enumerate_s(const GaloisRing& ring, int m, int k, ElementIndex target) {
  std::vector<ElementIndex> out;
  std::vector<ElementIndex> all(static_cast<std::size_t>(ring.size()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElementIndex>(i);
  std::vector<const std::vector<ElementIndex>*> domains;
  for (int i = 0; i < m - 1; ++i) domains.push_back(i < k ? &ring.units() : &all);

  std::vector<std::size_t> cursor(static_cast<std::size_t>(m - 1), 0);
  std::vector<ElementIndex> tuple(static_cast<std::size_t>(m), 0);
  for (const auto* d : domains) {
    if (d->empty()) return out;
  }
  while (true) {
    ElementIndex sum = 0;
    for (int i = 0; i < m - 1; ++i) {
      tuple[static_cast<std::size_t>(i)] = (*domains[static_cast<std::size_t>(i)])[cursor[static_cast<std::size_t>(i)]];
      sum = ring.add_index(sum, tuple[static_cast<std::size_t>(i)]);
    }
    tuple.back() = ring.sub_index(target, sum);
    out.insert(out.end(), tuple.begin(), tuple.end());
    int j = m - 2;
    while (j >= 0 && ++cursor[static_cast<std::size_t>(j)] == domains[static_cast<std::size_t>(j)]->size()) {
      cursor[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

long double powq(long double q, long double e) { return std::pow(q, e); }

}  // namespace

CodebookSize codebook_size(std::int64_t q, std::int64_t n, std::int64_t m, std::int64_t k) {
  check_shape(q, n, m, k);
  const std::int64_t qn = ipow(q, n);
  const std::int64_t units = qn - ipow(q, n - 1);
  const std::int64_t length = checked_mul(ipow(units, k), ipow(qn, m - k - 1));
  return {checked_add(checked_mul(q, ipow(units, m - 1)), length), length};
}

Codebook build_codebook(const CodebookParams& params) {
  if (!params.group) throw Error(ErrorKind::InvalidParams, "codebook needs a character group");
  const CharacterGroup& group = *params.group;
  const GaloisRing& ring = group.ring();
  if (ring.n() < 2) throw Error(ErrorKind::InvalidParams, "codebook construction needs n >= 2");
  const int m = params.m;
  const int k = params.k;
  check_shape(ring.q(), ring.n(), m, k);

  Codebook cb;
  cb.params = params;
  if (cb.params.a.coords.empty()) cb.params.a = ring.one();
  const RingElement& a = cb.params.a;
  if (!ring.is_unit(a)) {
    if (!params.allow_nonunit_a) {
      throw Error(ErrorKind::NotAUnit, "the optimal construction needs a unit target a");
    }
    cb.warnings.push_back("target a is in the maximal ideal; the optimality bound does not apply");
  }

  const CodebookSize size = codebook_size(ring.q(), ring.n(), m, k);
  if (size.n > params.entry_cap / size.k) {
    throw Error(ErrorKind::TooLarge, "codebook needs " + std::to_string(size.n) + " x " + std::to_string(size.k) +
                                         " entries, cap is " + std::to_string(params.entry_cap));
  }
  cb.n_rows = size.n;
  cb.length = size.k;

  const auto reduced = group.reduced(1);
  const auto field = group.residue_field();
  const std::int64_t q = ring.q();
  const MultCharacter psi0 = params.psi0.empty() ? reduced->trivial() : reduced->character(params.psi0);

  std::vector<MultCharacter> sections;
  for (std::int64_t i = 0; i < q; ++i) {
    sections.push_back(extend_phi(params.group, field->ring().element(i), params.section));
  }
  std::vector<MultCharacter> lifts;
  for (const auto& psi : reduced->enumerate()) lifts.push_back(lift_character(psi, params.group));
  const MultCharacter lifted_psi0 = lift_character(psi0, params.group);

  // Extended tables shared by every row that uses the same character.
  std::map<std::int64_t, std::int64_t> table_of_ordinal;
  std::vector<std::vector<std::complex<double>>> tables;
  const auto table_id = [&](const MultCharacter& chi) {
    const std::int64_t ord = chi.ordinal();
    auto it = table_of_ordinal.find(ord);
    if (it != table_of_ordinal.end()) return it->second;
    const auto id = static_cast<std::int64_t>(tables.size());
    tables.push_back(chi.extended_table());
    table_of_ordinal.emplace(ord, id);
    return id;
  };

  // Rows in the order (a_1, psi_2, a_2, ..., psi_m, a_m).
  const auto psi_count = static_cast<std::int64_t>(lifts.size());
  const std::int64_t f_rows = size.n - size.k;
  std::vector<std::int64_t> row_chars;
  row_chars.reserve(static_cast<std::size_t>(f_rows * m));
  std::vector<std::int64_t> digits(static_cast<std::size_t>(2 * m - 1), 0);
  std::vector<std::int64_t> radix(static_cast<std::size_t>(2 * m - 1), q);
  for (int i = 1; i < m; ++i) radix[static_cast<std::size_t>(2 * i - 1)] = psi_count;
  for (std::int64_t r = 0; r < f_rows; ++r) {
    row_chars.push_back(table_id(lifted_psi0 * sections[static_cast<std::size_t>(digits[0])]));
    for (int i = 1; i < m; ++i) {
      const auto psi = static_cast<std::size_t>(digits[static_cast<std::size_t>(2 * i - 1)]);
      const auto ai = static_cast<std::size_t>(digits[static_cast<std::size_t>(2 * i)]);
      row_chars.push_back(table_id(lifts[psi] * sections[ai]));
    }
    cb.labels.push_back({false, digits});
    for (std::size_t j = digits.size(); j-- > 0;) {
      if (++digits[j] < radix[j]) break;
      digits[j] = 0;
    }
  }

  const std::vector<ElementIndex> tuples = enumerate_s(ring, m, k, ring.index_of(a));
  if (static_cast<std::int64_t>(tuples.size()) != size.k * m) {
    throw Error(ErrorKind::Internal, "|S| does not match its closed form");
  }

  kernels::RowBuildProblem problem{tuples, m, row_chars, tables};
  kernels::RowBuildResult built = params.exec == Execution::Serial ? kernels::build_rows_serial(problem)
                                                                   : kernels::build_rows_parallel(problem);
  cb.matrix.rows = size.n;
  cb.matrix.cols = size.k;
  cb.matrix.entries = std::move(built.entries);
  cb.matrix.entries.resize(static_cast<std::size_t>(size.n * size.k), {0.0, 0.0});
  cb.support = std::move(built.support);
  for (std::int64_t i = 0; i < size.k; ++i) {
    cb.matrix.entries[static_cast<std::size_t>((f_rows + i) * size.k + i)] = {1.0, 0.0};
    cb.support.push_back(1);
    cb.labels.push_back({true, {i}});
  }
  return cb;
}

EvalReport imax_exhaustive(const Codebook& codebook, std::int64_t pair_cap, Execution exec) {
  const std::int64_t n = codebook.matrix.rows;
  const std::int64_t len = codebook.matrix.cols;
  const std::int64_t pairs = n * (n - 1) / 2;
  if (len > 0 && pairs > pair_cap / len) {
    throw Error(ErrorKind::TooLarge, "pair scan needs " + std::to_string(pairs) + " inner products of length " +
                                         std::to_string(len) + ", cap is " + std::to_string(pair_cap));
  }
  const auto scan = exec == Execution::Serial
                        ? kernels::max_pair_serial(codebook.matrix.entries, n, len)
                        : kernels::max_pair_parallel(codebook.matrix.entries, n, len);
  EvalReport report;
  report.n = n;
  report.k = len;
  report.imax_measured = scan.value;
  report.argmax_i = scan.i;
  report.argmax_j = scan.j;
  const GaloisRing& ring = codebook.params.group->ring();
  const RingElement a = codebook.params.a.coords.empty() ? ring.one() : codebook.params.a;
  report.imax_formula = std::numeric_limits<double>::quiet_NaN();
  if (ring.is_unit(a)) {
    report.imax_formula = imax_formula(ring.q(), ring.n(), codebook.params.m);
  } else if (ring.q() > 2) {
    const bool zero = a == ring.zero();
    report.imax_formula =
        imax_remark(ring.q(), ring.n(), codebook.params.m, zero ? RemarkCase::ZeroTarget : RemarkCase::NonzeroIdeal);
  }
  // No Welch bound below N = K + 1; an orthonormal set meets 0.
  if (n > len) {
    report.welch = welch_bound(n, len);
    report.ratio = report.imax_measured / report.welch;
  }
  return report;
}

double imax_formula(std::int64_t q, std::int64_t n, std::int64_t m) {
  check_shape(q, n, m, 1);
  const long double qd = static_cast<long double>(q);
  const long double sign = (m % 2 == 0) ? -1.0L : 1.0L;  // (-1)^{m+1}
  const long double den = powq(qd, static_cast<long double>(n * m - m - n)) * (powq(qd - 1, m) + sign);
  return static_cast<double>(powq(qd, static_cast<long double>((m - 1) * n) / 2.0L) / den);
}

double imax_remark(std::int64_t q, std::int64_t n, std::int64_t m, RemarkCase which) {
  check_shape(q, n, m, 1);
  const long double qd = static_cast<long double>(q);
  const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;  // (-1)^m
  const long double base = powq(qd - 1, m) + sign * (qd - 1);
  if (base == 0.0L) throw Error(ErrorKind::DegenerateDimensions, "remark formula is undefined at q = 2");
  if (which == RemarkCase::ZeroTarget) {
    const long double units = powq(qd, n) - powq(qd, n - 1);
    return static_cast<double>(units * powq(qd, static_cast<long double>((m - 2) * n) / 2.0L) /
                               (powq(qd, static_cast<long double>(n * m - m - n)) * base));
  }
  return static_cast<double>(std::sqrt(powq(qd, static_cast<long double>(2 * m + 2 * n - m * n - 1))) / base);
}

double welch_bound(std::int64_t n_rows, std::int64_t length) {
  if (length < 1 || n_rows <= length) {
    throw Error(ErrorKind::DegenerateDimensions, "Welch bound needs N > K >= 1");
  }
  const long double nn = static_cast<long double>(n_rows);
  const long double kk = static_cast<long double>(length);
  return static_cast<double>(std::sqrt((nn - kk) / ((nn - 1) * kk)));
}

double asymptotic_ratio(std::int64_t q, std::int64_t n, std::int64_t m, std::int64_t k) {
  check_shape(q, n, m, k);
  const long double qd = static_cast<long double>(q);
  const long double sign = (m % 2 == 0) ? -1.0L : 1.0L;  // (-1)^{m+1}
  const long double tail = powq(qd - 1, m) + sign;
  const long double num = powq(qd, static_cast<long double>(m * n - 3 * m - n + k + 2)) * powq(qd - 1, m - k - 1) *
                          tail * tail;
  const long double den = qd * powq(powq(qd, n) - powq(qd, n - 1), m - 1) +
                          powq(qd - 1, k) * powq(qd, static_cast<long double>(m * n - k - n)) - 1;
  // The quotient is I_W / Imax.
  return static_cast<double>(1.0L / std::sqrt(num / den));
}

const std::vector<std::int64_t>& table2_default_qs() {
  static const std::vector<std::int64_t> qs{11, 19, 31, 53, 81, 121, 179, 256};
  return qs;
}

std::vector<Table2Row> table2(const std::vector<std::int64_t>& qs) {
  std::vector<Table2Row> rows;
  for (std::int64_t q : qs) {
    if (!prime_power(q)) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    const CodebookSize size = codebook_size(q, 2, 3, 1);
    Table2Row row;
    row.q = q;
    row.n_rows = size.n;
    row.length = size.k;
    row.imax = imax_formula(q, 2, 3);
    row.welch = welch_bound(size.n, size.k);
    row.ratio = asymptotic_ratio(q, 2, 3, 1);
    rows.push_back(row);
  }
  return rows;
}

void export_csv(const CodebookMatrix& matrix, std::ostream& out) {
  char buf[64];
  for (std::int64_t i = 0; i < matrix.rows; ++i) {
    const auto row = matrix.row(i);
    for (std::int64_t j = 0; j < matrix.cols; ++j) {
      const auto& v = row[static_cast<std::size_t>(j)];
      std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", j ? "," : "", v.real(), v.imag());
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorKind::IoError, "failed to write codebook CSV");
}

CodebookMatrix import_csv(std::istream& in) {
  CodebookMatrix matrix;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> values;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error(ErrorKind::IoError, "malformed CSV cell '" + cell + "'");
      }
    }
    if (values.size() % 2 != 0) throw Error(ErrorKind::IoError, "CSV row has an odd number of values");
    const auto cols = static_cast<std::int64_t>(values.size() / 2);
    if (matrix.rows == 0) matrix.cols = cols;
    if (cols != matrix.cols) throw Error(ErrorKind::IoError, "CSV rows have different lengths");
    for (std::size_t t = 0; t < values.size(); t += 2) matrix.entries.emplace_back(values[t], values[t + 1]);
    ++matrix.rows;
  }
  if (in.bad()) throw Error(ErrorKind::IoError, "failed to read codebook CSV");
  return matrix;
}

}  // namespace galois_sums
