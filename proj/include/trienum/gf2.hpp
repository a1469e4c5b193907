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

// Arithmetic on polynomials over GF(2) packed into 64-bit words, bit i being
// the coefficient of x^i, and on the fields GF(2^k) they define.

#pragma once

#include <cstdint>
#include <vector>

namespace trienum::gf2 {

using Poly = std::uint64_t;

// Degree of p; -1 for the zero polynomial.
int degree(Poly p);

// Carry-less product. Requires degree(a) + degree(b) < 64.
Poly clmul(Poly a, Poly b);

// Remainder of a modulo f (f != 0).
Poly mod(Poly a, Poly f);

// a * b mod f for operands of degree < degree(f) <= 32.
Poly mulmod(Poly a, Poly b, Poly f);

Poly gcd(Poly a, Poly b);

// Rabin's test. degree(f) must lie in [1, 32].
bool is_irreducible(Poly f);

// All monic irreducible polynomials of degree m in ascending order.
std::vector<Poly> irreducibles(int m);

// Smallest monic irreducible polynomial of degree m.
Poly first_irreducible(int m);

// The field GF(2^k), 1 <= k <= 32, modulo first_irreducible(k).
class Field {
 public:
  explicit Field(int k);
  int bits() const { return k_; }
  Poly modulus() const { return f_; }
  Poly mul(Poly a, Poly b) const { return mulmod(a, b, f_); }

 private:
  int k_;
  Poly f_;
};

}  // namespace trienum::gf2
