// Copyright 2026 The trienum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trienum/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace trienum::gf2 {

int degree(Poly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

Poly clmul(Poly a, Poly b) {
  Poly r = 0;
  while (b != 0) {
    r ^= a << std::countr_zero(b);
    b &= b - 1;
  }
  return r;
}

Poly mod(Poly a, Poly f) {
  const int df = degree(f);
  if (df < 0) throw std::domain_error("gf2::mod by zero");
  for (int d = degree(a); d >= df; d = degree(a)) a ^= f << (d - df);
  return a;
}

Poly mulmod(Poly a, Poly b, Poly f) { return mod(clmul(a, b), f); }

Poly gcd(Poly a, Poly b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

// x^(2^n) mod f.
Poly frobenius(int n, Poly f) {
  Poly r = mod(2, f);
  for (int i = 0; i < n; ++i) r = mulmod(r, r, f);
  return r;
}

}  // namespace

bool is_irreducible(Poly f) {
  const int m = degree(f);
  if (m < 1 || m > 32) throw std::domain_error("gf2::is_irreducible: degree out of range");
  if (m == 1) return true;
  if ((f & 1) == 0) return false;
  if (frobenius(m, f) != mod(2, f)) return false;
  for (int p = 2, rest = m; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (gcd(f, frobenius(m / p, f) ^ mod(2, f)) != 1) return false;
  }
  return true;
}

std::vector<Poly> irreducibles(int m) {
  if (m < 1 || m > 24) throw std::domain_error("gf2::irreducibles: degree out of range");
  std::vector<Poly> out;
  const Poly top = Poly{1} << m;
  for (Poly low = 0; low < top; ++low) {
    if (is_irreducible(top | low)) out.push_back(top | low);
  }
  return out;
}

Poly first_irreducible(int m) {
  if (m < 1 || m > 32) throw std::domain_error("gf2::first_irreducible: degree out of range");
  const Poly top = Poly{1} << m;
  for (Poly low = 0;; ++low) {
    if (is_irreducible(top | low)) return top | low;
  }
}

Field::Field(int k) : k_(k), f_(first_irreducible(k)) {}

}  // namespace trienum::gf2
