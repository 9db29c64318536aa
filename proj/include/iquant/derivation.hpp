#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iquant/qstate.hpp"

namespace iquant::derivation {

// Exact symbolic derivation of the far-field coefficient groups.
//
// Every coefficient group is a signed sum of matrix-entry parts. A Term with
// imag == false contributes sign * R_ij, imag == true contributes sign * I_ij
// (1-based indices, i < j, upper triangle). The derivation expands
// exp(i * chi_ij) for each coherence, with chi_ij = sum_X dX * 2 k theta z_X
// and dX = bit_i(X) - bit_j(X) in {-1, 0, +1}, into integer-coefficient trig
// monomials; this is exact, no floating point is involved.
struct Term {
  int i = 0;
  int j = 0;
  bool imag = false;
  int sign = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

using GroupExpr = std::vector<Term>;

struct GroupTable {
  // Groups in canonical label order (field order of CoefficientGroups2Q/3Q).
  std::vector<std::pair<std::string, GroupExpr>> groups;

  const GroupExpr* find(const std::string& label) const;
};

// Derives the full table from the slit path phases (slit 1: exp(-i k theta z),
// slit 2: exp(+i k theta z), constant far-field amplitudes). qubits is 2 or 3.
GroupTable derive_coefficient_groups(int qubits);

// The coefficient tables as printed in the source publication, transcribed
// verbatim (including their typos), for machine comparison against the
// derived tables.
GroupTable transcribed_printed_groups(int qubits);

double evaluate_group(const GroupExpr& expr, const DensityMatrix& m);

// Renders e.g. "+R14 +R23" / "+I13 +I24".
std::string render_group(const GroupExpr& expr);

// Deterministic, byte-stable document listing every divergence between the
// derived coefficient tables / mode pairings and the printed ones, plus
// transcription-level notes. Identical output on every call.
std::string generate_errata_document();

}  // namespace iquant::derivation
