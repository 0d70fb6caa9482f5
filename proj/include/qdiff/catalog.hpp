#pragma once

#include <optional>
#include <string>

#include "qdiff/algebra.hpp"

namespace qdiff {

/// Built-in algebra families.
enum class Family {
    aiii,          ///< quantized n x n matrix algebra, generators Z_{r,c}
    ci,            ///< symmetric-pair family on W_{i,j}, i <= j
    fq,            ///< quantized Heisenberg space on z_0..z_{N-1} and duals
    quantum_plane, ///< two generators with AB = qBA
    symmetric      ///< commutative polynomial algebra
};

struct FamilyId {
    Family family;
    int param = 1; ///< matrix size / index bound / generator count
};

std::string family_to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

/// Construct a catalog family in triangular form.  Generator orders:
/// aiii row-major Z_{1,1}..Z_{n,n}; ci lexicographic on (i,j) with i <= j;
/// fq z_0,..,z_{N-1}, z*_{N-1},..,z*_0 (the order that keeps every tail
/// below its relation's top generator).
AlgebraSpec make_family(const FamilyId& id);

} // namespace qdiff
