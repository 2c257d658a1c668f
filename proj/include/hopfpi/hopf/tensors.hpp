#pragma once

#include "hopfpi/exact/field.hpp"
#include "hopfpi/hopf/object.hpp"

namespace hopfpi::hopf {

using exact::FieldMatrix;

/// Explicit structure constants of a materialized Hopf algebra: the basis is
/// the group elements (kG) or the delta functions (k^G), enumerated in
/// mixed-radix order so tensor products match Kronecker indexing.
struct StructureTensors {
    std::size_t dim = 0;
    FieldMatrix unit;            // dim x 1
    FieldMatrix counit;          // 1 x dim
    FieldMatrix mult;            // dim x dim^2
    FieldMatrix comult;          // dim^2 x dim
    FieldMatrix antipode;        // dim x dim
    FieldMatrix integral;        // dim x 1   (normalized integral sigma_A)
    FieldMatrix cointegral;      // 1 x dim   (normalized cointegral sigma^A)
};

/// Materialization gate: |group| <= 4096.
void require_materializable(const HopfObject& a);

StructureTensors materialize(const HopfObject& a, const Field& k);

/// The linear map of a Hopf morphism on the explicit bases.
FieldMatrix materialize_hom(const HopfMorphism& xi, const Field& k);

/// The normalized generator integral mu_xi : tgt -> src, from the explicit
/// fiber-sum formulas; basis vectors with empty fiber map to zero.
FieldMatrix integral_matrix(const HopfMorphism& xi, const Field& k);

/// All Hopf axioms as exact matrix identities (associativity, counit laws,
/// bialgebra compatibility, antipode, (co)commutativity); throws
/// std::logic_error on the first violation.
void validate_tensors(const StructureTensors& t);

}  // namespace hopfpi::hopf
