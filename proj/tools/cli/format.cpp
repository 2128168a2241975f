// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

namespace jbtk::cli {

namespace {

constexpr double kExact = 1e-12;

std::optional<std::pair<long, long>> as_fraction(double x) {
  for (long q = 1; q <= 64; ++q) {
    const double p = std::round(x * q);
    if (std::abs(x - p / q) <= kExact * std::max(1.0, std::abs(x))) return std::make_pair(static_cast<long>(p), q);
  }
  return std::nullopt;
}

std::string fraction(long p, long q) {
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

}  // namespace

std::string format_number(double x) {
  if (std::abs(x) < kExact) return "0";
  if (auto f = as_fraction(x)) return fraction(f->first, f->second);
  if (auto f = as_fraction(x * x); f && f->first > 0) {
    const char* sign = x < 0 ? "-" : "";
    const long p = f->first, q = f->second;
    const long rp = std::lround(std::sqrt(static_cast<double>(p)));
    if (rp * rp == p) return sign + std::to_string(rp) + "/sqrt(" + std::to_string(q) + ")";
    const long rq = std::lround(std::sqrt(static_cast<double>(q)));
    if (rq * rq == q) return sign + std::string("sqrt(") + std::to_string(p) + ")/" + std::to_string(rq);
    return sign + std::string("sqrt(") + fraction(p, q) + ")";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_complex(Complex z) {
  const bool re = std::abs(z.real()) >= kExact, im = std::abs(z.imag()) >= kExact;
  if (!im) return format_number(z.real());
  std::string imag;
  if (std::abs(z.imag() - 1.0) < kExact)
    imag = "i";
  else if (std::abs(z.imag() + 1.0) < kExact)
    imag = "-i";
  else
    imag = format_number(z.imag()) + "i";
  if (!re) return imag;
  return format_number(z.real()) + (imag[0] == '-' ? "" : "+") + imag;
}

std::string format_element(const Element& x) {
  const auto& s = x.space();
  bool scalar = true;
  for (const auto& b : s.blocks()) scalar = scalar && b.rows == 1 && b.cols == 1;
  std::string out;
  if (scalar) {
    out = "(";
    for (std::size_t k = 0; k < x.num_blocks(); ++k) out += (k ? "," : "") + format_complex(x.block(k)(0, 0));
    return out + ")";
  }
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    if (k) out += " (+) ";
    const CMatrix& b = x.block(k);
    out += "[";
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      out += i ? ",[" : "[";
      for (Eigen::Index j = 0; j < b.cols(); ++j) out += (j ? "," : "") + format_complex(b(i, j));
      out += "]";
    }
    out += "]";
  }
  return out;
}

std::string format_space(const TripleSpace& s) {
  std::string out;
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    const auto& b = s.block(k);
    if (k) out += " (+) ";
    if (b.rows == 1 && b.cols == 1)
      out += "C";
    else if (b.square())
      out += "M" + std::to_string(b.rows);
    else
      out += std::to_string(b.rows) + "x" + std::to_string(b.cols);
  }
  return out;
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

}  // namespace jbtk::cli
