#pragma once
// Plain-text manifests: one `key = value` per line, '#' starts a comment,
// blank lines are ignored.  Keys may repeat where the schema says so (e.g.
// one `generator` or `perm` line per group generator); order is preserved.
//
// Field manifest (builds an ExtensionDesc):
//
//   base.kind  = rational | quadratic | multiquadratic | monogenic
//   base.d           quadratic only: squarefree integer
//   base.generators  multiquadratic only: squarefree integers, space separated
//   base.minpoly     monogenic only: integer coefficients, constant term first
//   base.ramified    monogenic only: primes dividing the field discriminant
//   base.omega       monogenic only: `ell:count` place-count overrides
//   top.*            same keys for the top field
//   degree_kf        relative degree [K:F]
//
// Lattice manifest (builds a LatticeDesc), two mutually exclusive shapes:
//
//   rank      = n              followed by
//   generator = n*n integers   row-major, one line per matrix generator
// or
//   perm      = k images       0-based, one line per permutation generator
//   module    = natural | augmentation
//
// Unknown keys are rejected so that typos fail loudly.

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "selbound/lattice.hpp"
#include "selbound/numfield.hpp"

namespace selbound::config {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// throws input_error on lines that are neither blank, comment, nor key=value
KeyValues parse_key_values(std::istream& in);

// throws input_error when the file cannot be read
KeyValues parse_key_values_file(const std::string& path);

numfield::ExtensionDesc extension_from(const KeyValues& kv);
numfield::ExtensionDesc extension_from_file(const std::string& path);

lattice::LatticeDesc lattice_from(const KeyValues& kv);
lattice::LatticeDesc lattice_from_file(const std::string& path);

}  // namespace selbound::config
