#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfpi/pathint/theory.hpp"

namespace hopfpi::pathint {

/// Deterministic bounded sampling on top of a seeded generator; all suite
/// randomness funnels through this type so identical seeds reproduce
/// identical reports.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(next() % n) : 0; }

  private:
    std::uint64_t state_;
};

/// Fixed space corpus (builtins, wedges, a Moore space) with a catalog of
/// chain maps between them; random cospans draw legs from the catalog.
class SpaceCorpus {
  public:
    SpaceCorpus();

    const std::vector<ChainComplex>& spaces() const { return spaces_; }
    const std::vector<std::string>& names() const { return names_; }

    /// All registered maps src -> tgt (always contains the zero map).
    std::vector<ChainMap> maps_between(const ChainComplex& src, const ChainComplex& tgt) const;

    ChainMap random_map(Rng& rng, const ChainComplex& src, const ChainComplex& tgt) const;
    SpaceCospan random_cospan(Rng& rng) const;
    /// Composable pair: inner.k1 == outer.k0.
    std::pair<SpaceCospan, SpaceCospan> random_pair(Rng& rng) const;
    std::vector<SpaceCospan> random_triple(Rng& rng) const;

  private:
    std::vector<ChainComplex> spaces_;
    std::vector<std::string> names_;
    struct Entry {
        std::uint64_t src, tgt;
        ChainMap map;
    };
    std::vector<Entry> catalog_;
    void add(const ChainMap& m);
};

/// The genus-one splitting of the three-sphere into two solid tori, as a
/// composable pair of plus-space cospans (inner: empty -> ST <- T^2,
/// outer: T^2 -> ST' <- empty with the meridian/longitude swap).
std::pair<SpaceCospan, SpaceCospan> heegaard_pair();

/// Named cospans for the CLI and fixtures: closed:<space>, id:<space>,
/// heegaard1, heegaard2, ev:<space>, mcg_neg_s1, mcg_swap_s1s1.
SpaceCospan named_cospan(const std::string& name);
std::vector<std::string> named_cospans();

}  // namespace hopfpi::pathint
