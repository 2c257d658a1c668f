#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfpi/pathint/sampler.hpp"

namespace hopfpi::cat {

using exact::Scalar;
using pathint::Rng;
using pathint::SpaceCorpus;
using space::SpaceCospan;

/// Evaluator cochains on the cospan category of spaces; the morphism class
/// is infinite, so cochains are functions and all quantification is seeded
/// sampling.
using Cochain1 = std::function<Scalar(const SpaceCospan&)>;
using Cochain2 = std::function<Scalar(const SpaceCospan& outer, const SpaceCospan& inner)>;

/// (d theta)(f1, f2) = theta(f2) theta(f1 o f2)^{-1} theta(f1), f1 outer.
Scalar delta1(const Cochain1& theta, const SpaceCospan& f1, const SpaceCospan& f2);

/// The 2-cocycle residual
/// w(f2,f3) w(f1 o f2, f3)^{-1} w(f1, f2 o f3) w(f1,f2)^{-1}; the cocycle
/// condition on the triple holds iff this is 1.
Scalar delta2_residual(const Cochain2& omega, const SpaceCospan& f1, const SpaceCospan& f2,
                       const SpaceCospan& f3);

struct CheckReport {
    int checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// w(id, f) = w(f, id) = 1 on sampled composables.
CheckReport normalized_check(const Cochain2& omega, const SpaceCorpus& corpus, Rng& rng, int n);
/// w(f1 x g1, f2 x g2) = w(f1,f2) w(g1,g2) on sampled tensor pairs.
CheckReport monoidal_check(const Cochain2& omega, const SpaceCorpus& corpus, Rng& rng, int n);
/// delta2 residual of omega is 1 on sampled triples.
CheckReport cocycle_check(const Cochain2& omega, const SpaceCorpus& corpus, Rng& rng, int n);

}  // namespace hopfpi::cat
