#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kirby4/diagram.hpp"
#include "kirby4/forms.hpp"
#include "kirby4/knot.hpp"

namespace kirby4 {

struct ManifoldInvariants {
  SymIntMatrix form;
  FormClass form_class;
  long signature = 0;
  IntVector characteristic;
  Integer characteristic_square;  // c^T V c
  int ks = 0;
  // Absent when smoothness was assumed instead of computing ks.
  std::optional<int> arf;
  std::optional<Integer> knot_determinant;
  std::size_t knot_crossings = 0;
  bool smooth_assumed = false;
};

// The linking matrix, once it is known to be unimodular. Errors: NotUnimodular.
SymIntMatrix intersection_form(const FramedLink& link);

// ks = Arf(K_c) + (c^T V c - signature) / 8 mod 2, with K_c the band sum of
// the sublink picked out by the 0/1 characteristic vector c. A band order,
// if given, ranks all components of the link; the sublink keeps that ranking.
// Errors: NotUnimodular, LengthMismatch / MalformedInput (band order), InternalInvariantViolation (8 does not divide
// c^T V c - signature, or an even knot determinant).
ManifoldInvariants kirby_siebenmann(const FramedLink& link, const BandOptions& bands = {});

// Everything except the Arf invariant; ks is taken to be 0.
ManifoldInvariants smooth_invariants(const FramedLink& link);

}  // namespace kirby4
