#include "hopfpi/cat/cochain.hpp"

#include "hopfpi/space/builders.hpp"

namespace hopfpi::cat {

using space::compose_space_cospans;
using space::tensor_space_cospans;

Scalar delta1(const Cochain1& theta, const SpaceCospan& f1, const SpaceCospan& f2) {
    SpaceCospan glued = compose_space_cospans(f1, f2);
    return theta(f2) * theta(glued).inverse() * theta(f1);
}

Scalar delta2_residual(const Cochain2& omega, const SpaceCospan& f1, const SpaceCospan& f2,
                       const SpaceCospan& f3) {
    SpaceCospan f12 = compose_space_cospans(f1, f2);
    SpaceCospan f23 = compose_space_cospans(f2, f3);
    return omega(f2, f3) * omega(f12, f3).inverse() * omega(f1, f23) * omega(f1, f2).inverse();
}

CheckReport normalized_check(const Cochain2& omega, const SpaceCorpus& corpus, Rng& rng, int n) {
    CheckReport r;
    for (int i = 0; i < n; ++i) {
        SpaceCospan f = corpus.random_cospan(rng);
        SpaceCospan id_out = SpaceCospan::identity(f.k1);
        SpaceCospan id_in = SpaceCospan::identity(f.k0);
        if (!omega(id_out, f).is_one())
            r.violations.push_back("omega(id, f) != 1 at sample " + std::to_string(i));
        if (!omega(f, id_in).is_one())
            r.violations.push_back("omega(f, id) != 1 at sample " + std::to_string(i));
        ++r.checked;
    }
    return r;
}

CheckReport monoidal_check(const Cochain2& omega, const SpaceCorpus& corpus, Rng& rng, int n) {
    CheckReport r;
    for (int i = 0; i < n; ++i) {
        auto [f2, f1] = corpus.random_pair(rng);
        auto [g2, g1] = corpus.random_pair(rng);
        Scalar lhs = omega(tensor_space_cospans(f1, g1), tensor_space_cospans(f2, g2));
        Scalar rhs = omega(f1, f2) * omega(g1, g2);
        if (lhs != rhs)
            r.violations.push_back("monoidality failed at sample " + std::to_string(i) + ": " +
                                   lhs.str() + " vs " + rhs.str());
        ++r.checked;
    }
    return r;
}

CheckReport cocycle_check(const Cochain2& omega, const SpaceCorpus& corpus, Rng& rng, int n) {
    CheckReport r;
    for (int i = 0; i < n; ++i) {
        auto triple = corpus.random_triple(rng);
        Scalar res = delta2_residual(omega, triple[2], triple[1], triple[0]);
        if (!res.is_one())
            r.violations.push_back("cocycle residual " + res.str() + " at sample " +
                                   std::to_string(i));
        ++r.checked;
    }
    return r;
}

}  // namespace hopfpi::cat
