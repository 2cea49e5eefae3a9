#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lieord/albert.hpp"
#include "lieord/field.hpp"
#include "lieord/octonion.hpp"

namespace lieord {

struct CompalgReport {
  int samples = 0;
  /// check name -> number of failing samples (every check is listed)
  std::map<std::string, int> failures;
  int e0_dimension = 0;
  std::string q_of_u;  // over Q
  bool ok() const;
};

/// Randomized identities over Q, F_7 and F_11 with a fixed seed: norm
/// multiplicativity, x conj(x) = conj(x) x = N(x), conj anti-automorphism,
/// Jordan commutativity and hermitian closure, agreement of both Q
/// evaluations, Q(u) = 1/2, and the E0 basis (conditions, rank 9, form).
CompalgReport verify_compalg(int samples = 1000, std::uint64_t seed = 20240601);

}  // namespace lieord
