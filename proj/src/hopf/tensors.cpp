#include "hopfpi/hopf/tensors.hpp"

#include <stdexcept>

namespace hopfpi::hopf {

namespace {

// Mixed-radix enumeration: first coordinate is the most significant digit.
std::size_t element_index(const FinAbGroup& g, const std::vector<BigInt>& coords) {
    BigInt idx = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) idx = idx * g.orders()[i] + coords[i];
    return idx.convert_to<std::size_t>();
}

std::vector<BigInt> add_coords(const FinAbGroup& g, const std::vector<BigInt>& a,
                               const std::vector<BigInt>& b) {
    std::vector<BigInt> c(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) c[i] = exact::mod_floor(a[i] + b[i], g.orders()[i]);
    return c;
}

std::vector<BigInt> neg_coords(const FinAbGroup& g, const std::vector<BigInt>& a) {
    std::vector<BigInt> c(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) c[i] = exact::mod_floor(-a[i], g.orders()[i]);
    return c;
}

}  // namespace

void require_materializable(const HopfObject& a) {
    if (a.dim() > 4096)
        throw exact::SizeGateExceeded("materialization gated at dimension 4096, got " +
                                      a.dim().str());
}

StructureTensors materialize(const HopfObject& a, const Field& k) {
    require_materializable(a);
    require_finite_volume(a, k);
    const FinAbGroup& g = a.group;
    auto elems = g.elements();
    const std::size_t n = elems.size();
    StructureTensors t;
    t.dim = n;
    t.unit = FieldMatrix(k, n, 1);
    t.counit = FieldMatrix(k, 1, n);
    t.mult = FieldMatrix(k, n, n * n);
    t.comult = FieldMatrix(k, n * n, n);
    t.antipode = FieldMatrix(k, n, n);
    t.integral = FieldMatrix(k, n, 1);
    t.cointegral = FieldMatrix(k, 1, n);
    Scalar one = Scalar::one(k);
    Scalar invn = Scalar::integer_inverse(k, BigInt(n));

    if (a.flavor == Flavor::GroupAlgebra) {
        t.unit.at(0, 0) = one;  // basis element 0 is the group identity
        for (std::size_t i = 0; i < n; ++i) {
            t.counit.at(0, i) = one;
            t.antipode.at(element_index(g, neg_coords(g, elems[i])), i) = one;
            for (std::size_t j = 0; j < n; ++j)
                t.mult.at(element_index(g, add_coords(g, elems[i], elems[j])), i * n + j) = one;
            t.comult.at(i * n + i, i) = one;
            t.integral.at(i, 0) = invn;  // sigma = |G|^{-1} sum_g g
        }
        t.cointegral.at(0, 0) = one;  // coefficient of the identity
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            t.unit.at(i, 0) = one;  // constant function 1
            t.antipode.at(element_index(g, neg_coords(g, elems[i])), i) = one;
            t.mult.at(i, i * n + i) = one;  // pointwise product
            for (std::size_t j = 0; j < n; ++j) {
                // delta_g = sum_{a+b=g} delta_a (x) delta_b
                std::size_t gidx = element_index(g, add_coords(g, elems[i], elems[j]));
                t.comult.at(i * n + j, gidx) = one;
            }
            t.cointegral.at(0, i) = invn;  // averaging functional
        }
        t.counit.at(0, 0) = one;  // evaluation at the identity
        t.integral.at(0, 0) = one;  // delta at the identity
    }
    return t;
}

FieldMatrix materialize_hom(const HopfMorphism& xi, const Field& k) {
    require_materializable(xi.src);
    require_materializable(xi.tgt);
    if (xi.src.flavor == Flavor::GroupAlgebra) {
        auto elems = xi.src.group.elements();
        FieldMatrix m(k, xi.tgt.dim().convert_to<std::size_t>(), elems.size());
        for (std::size_t j = 0; j < elems.size(); ++j)
            m.at(element_index(xi.tgt.group, xi.carrier.apply_coords(elems[j])), j) =
                Scalar::one(k);
        return m;
    }
    // xi = rho^* with rho : tgt.group -> src.group; delta_a pulls back to the
    // sum of delta_b over the fiber rho^{-1}(a).
    auto elems = xi.tgt.group.elements();
    FieldMatrix m(k, elems.size(), xi.src.dim().convert_to<std::size_t>());
    for (std::size_t b = 0; b < elems.size(); ++b)
        m.at(b, element_index(xi.src.group, xi.carrier.apply_coords(elems[b]))) = Scalar::one(k);
    return m;
}

FieldMatrix integral_matrix(const HopfMorphism& xi, const Field& k) {
    require_materializable(xi.src);
    require_materializable(xi.tgt);
    require_finite_volume(xi.src, k);
    require_finite_volume(xi.tgt, k);
    Scalar w = Scalar::integer_inverse(k, finab::kernel(xi.carrier).kernel.order());
    if (xi.src.flavor == Flavor::GroupAlgebra) {
        // mu_xi : kH -> kG, mu(h) = |Ker rho|^{-1} sum_{rho(g)=h} g.
        auto elems = xi.src.group.elements();
        FieldMatrix m(k, elems.size(), xi.tgt.dim().convert_to<std::size_t>());
        for (std::size_t g = 0; g < elems.size(); ++g)
            m.at(g, element_index(xi.tgt.group, xi.carrier.apply_coords(elems[g]))) = w;
        return m;
    }
    // mu_xi : k^{G_B} -> k^{G_A} along rho : G_B -> G_A,
    // (mu f)(h) = |Ker rho|^{-1} sum_{rho(g)=h} f(g).
    auto elems = xi.tgt.group.elements();
    FieldMatrix m(k, xi.src.dim().convert_to<std::size_t>(), elems.size());
    for (std::size_t g = 0; g < elems.size(); ++g)
        m.at(element_index(xi.src.group, xi.carrier.apply_coords(elems[g])), g) = w;
    return m;
}

namespace {

// Apply id (x) tau (x) id to the rows of an n^4-row matrix in place of
// materializing the permutation.
FieldMatrix twist_rows(const FieldMatrix& m, std::size_t n) {
    FieldMatrix r(m.field(), m.rows(), m.cols());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    std::size_t from = ((a * n + b) * n + c) * n + d;
                    std::size_t to = ((a * n + c) * n + b) * n + d;
                    for (std::size_t j = 0; j < m.cols(); ++j) r.at(to, j) = m.at(from, j);
                }
    return r;
}

FieldMatrix flip(const Field& k, std::size_t n) {
    FieldMatrix t(k, n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t.at(b * n + a, a * n + b) = Scalar::one(k);
    return t;
}

}  // namespace

void validate_tensors(const StructureTensors& t) {
    const Field& k = t.unit.field();
    std::size_t n = t.dim;
    FieldMatrix id = FieldMatrix::identity(k, n);
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("Hopf axiom failed: ") + what);
    };
    expect(t.mult * t.unit.kron(id) == id, "left unit");
    expect(t.mult * id.kron(t.unit) == id, "right unit");
    expect(t.counit.kron(id) * t.comult == id, "left counit");
    expect(id.kron(t.counit) * t.comult == id, "right counit");
    expect(t.mult * t.mult.kron(id) == t.mult * id.kron(t.mult), "associativity");
    expect(t.comult.kron(id) * t.comult == id.kron(t.comult) * t.comult, "coassociativity");
    expect(t.mult * flip(k, n) == t.mult, "commutativity");
    expect(flip(k, n) * t.comult == t.comult, "cocommutativity");
    expect(t.comult * t.mult == t.mult.kron(t.mult) * twist_rows(t.comult.kron(t.comult), n),
           "bialgebra compatibility");
    expect(t.mult * t.antipode.kron(id) * t.comult == t.unit * t.counit, "antipode law");
    expect(t.counit * t.integral == FieldMatrix::identity(k, 1), "normalized integral");
    expect(t.cointegral * t.unit == FieldMatrix::identity(k, 1), "normalized cointegral");
    // a * sigma = eps(a) sigma for every basis vector.
    FieldMatrix lhs = t.mult * id.kron(t.integral);
    FieldMatrix rhs = t.integral * t.counit;
    expect(lhs == rhs, "integral absorbs multiplication");
}

}  // namespace hopfpi::hopf
