#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcalg/algebra.hpp"

namespace lcalg::tables {

// Printed multiplication tables for signed-basis algebras with basis
// {1, p1, ..., p(n-1)}. Row i lists p_i * p_1, ..., p_i * p_(n-1); every
// entry is "-1", "1", "pk" or "-pk".

inline constexpr std::array<std::string_view, 7> octonion = {
    "-1 e3 -e2 e5 -e4 -e7 e6",  //
    "-e3 -1 e1 e6 e7 -e4 -e5",  //
    "e2 -e1 -1 e7 -e6 e5 -e4",  //
    "-e5 -e6 -e7 -1 e1 e2 e3",  //
    "e4 -e7 e6 -e1 -1 -e3 e2",  //
    "e7 e4 -e5 -e2 e3 -1 -e1",  //
    "-e6 e5 e4 -e3 -e2 e1 -1",
};

inline constexpr std::array<std::string_view, 15> sedenion = {
    "-1 e3 -e2 e5 -e4 -e7 e6 e9 -e8 -e11 e10 -e13 e12 e15 -e14",
    "-e3 -1 e1 e6 e7 -e4 -e5 e10 e11 -e8 -e9 -e14 -e15 e12 e13",
    "e2 -e1 -1 e7 -e6 e5 -e4 e11 -e10 e9 -e8 -e15 e14 -e13 e12",
    "-e5 -e6 -e7 -1 e1 e2 e3 e12 e13 e14 e15 -e8 -e9 -e10 -e11",
    "e4 -e7 e6 -e1 -1 -e3 e2 e13 -e12 e15 -e14 e9 -e8 e11 -e10",
    "e7 e4 -e5 -e2 e3 -1 -e1 e14 -e15 -e12 e13 e10 -e11 -e8 e9",
    "-e6 e5 e4 -e3 -e2 e1 -1 e15 e14 -e13 -e12 e11 e10 -e9 -e8",
    "-e9 -e10 -e11 -e12 -e13 -e14 -e15 -1 e1 e2 e3 e4 e5 e6 e7",
    "e8 -e11 e10 -e13 e12 e15 -e14 -e1 -1 -e3 e2 -e5 e4 e7 -e6",
    "e11 e8 -e9 -e14 -e15 e12 e13 -e2 e3 -1 -e1 -e6 -e7 e4 e5",
    "-e10 e9 e8 -e15 e14 -e13 e12 -e3 -e2 e1 -1 -e7 e6 -e5 e4",
    "e13 e14 e15 e8 -e9 -e10 -e11 -e4 e5 e6 e7 -1 -e1 -e2 -e3",
    "-e12 e15 -e14 e9 e8 e11 -e10 -e5 -e4 e7 -e6 e1 -1 e3 -e2",
    "-e15 -e12 e13 e10 -e11 e8 e9 -e6 -e7 -e4 e5 e2 -e3 -1 e1",
    "e14 -e13 -e12 e11 e10 -e9 e8 -e7 e6 -e5 -e4 e3 e2 -e1 -1",
};

/// The 8-dimensional super-alternative algebra with even part span{1,f1,f2,f3}.
inline constexpr std::array<std::string_view, 7> twisted_octonion = {
    "-1 f3 -f2 f5 -f4 f7 -f6",  //
    "-f3 -1 f1 f6 -f7 -f4 f5",  //
    "f2 -f1 -1 f7 f6 -f5 -f4",  //
    "-f5 -f6 -f7 -1 f1 f2 f3",  //
    "f4 f7 -f6 -f1 -1 f3 -f2",  //
    "-f7 f4 f5 -f2 -f3 -1 f1",  //
    "f6 -f5 f4 -f3 f2 -f1 -1",
};

/// The 16-dimensional super-alternative algebra with even part span{1,f1..f7}.
inline constexpr std::array<std::string_view, 15> twisted_sedenion = {
    "-1 f3 -f2 f5 -f4 -f7 f6 f9 -f8 -f11 f10 -f13 f12 -f15 f14",
    "-f3 -1 f1 f6 f7 -f4 -f5 f10 f11 -f8 -f9 -f14 f15 f12 -f13",
    "f2 -f1 -1 f7 -f6 f5 -f4 f11 -f10 f9 -f8 f15 f14 -f13 -f12",
    "-f5 -f6 -f7 -1 f1 f2 f3 f12 f13 f14 -f15 -f8 -f9 -f10 f11",
    "f4 -f7 f6 -f1 -1 -f3 f2 f13 -f12 -f15 -f14 f9 -f8 f11 f10",
    "f7 f4 -f5 -f2 f3 -1 -f1 f14 f15 -f12 f13 f10 -f11 -f8 -f9",
    "-f6 f5 f4 -f3 -f2 f1 -1 f15 -f14 f13 f12 -f11 -f10 f9 -f8",
    "-f9 -f10 -f11 -f12 -f13 -f14 -f15 -1 f1 f2 f3 f4 f5 f6 f7",
    "f8 -f11 f10 -f13 f12 -f15 f14 -f1 -1 -f3 f2 -f5 f4 -f7 f6",
    "f11 f8 -f9 -f14 f15 f12 -f13 -f2 f3 -1 -f1 -f6 f7 f4 -f5",
    "-f10 f9 f8 f15 f14 -f13 -f12 -f3 -f2 f1 -1 f7 f6 -f5 -f4",
    "f13 f14 -f15 f8 -f9 -f10 f11 -f4 f5 f6 -f7 -1 -f1 -f2 f3",
    "-f12 -f15 -f14 f9 f8 f11 f10 -f5 -f4 -f7 -f6 f1 -1 f3 f2",
    "f15 -f12 f13 f10 -f11 f8 -f9 -f6 f7 -f4 f5 f2 -f3 -1 -f1",
    "-f14 f13 f12 -f11 -f10 f9 f8 -f7 -f6 f5 f4 -f3 -f2 f1 -1",
};

/// Builds the algebra with unit at index 0 and basis labels 1, p1, p2, ...
template <std::size_t N>
Algebra from_signed_table(const std::array<std::string_view, N>& rows, char prefix) {
  const std::size_t n = N + 1;
  std::vector<Rational> c(n * n * n, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i) {
    at(0, i, i) = 1;
    at(i, 0, i) = 1;
  }
  for (std::size_t r = 0; r < N; ++r) {
    std::istringstream in{std::string(rows[r])};
    std::string entry;
    std::size_t col = 0;
    while (in >> entry) {
      if (col >= N) throw ParseError("table row " + std::to_string(r + 1) + " is too long");
      int sign = 1;
      std::string_view e = entry;
      if (e.front() == '-') {
        sign = -1;
        e.remove_prefix(1);
      }
      std::size_t k = 0;
      if (e == "1") {
        k = 0;
      } else if (!e.empty() && e.front() == prefix) {
        k = std::stoul(std::string(e.substr(1)));
        if (k == 0 || k >= n) throw ParseError("table entry out of range: " + entry);
      } else {
        throw ParseError("bad table entry: " + entry);
      }
      at(r + 1, col + 1, k) = sign;
      ++col;
    }
    if (col != N) throw ParseError("table row " + std::to_string(r + 1) + " is too short");
  }
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(std::string(1, prefix) + std::to_string(i));
  return Algebra(n, std::move(c), 0, std::move(labels));
}

}  // namespace lcalg::tables
