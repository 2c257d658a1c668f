#include "hopfpi/space/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfpi::space {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t hash_matrix(std::uint64_t h, const IntMatrix& m) {
    h = fnv1a(h, m.rows());
    h = fnv1a(h, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            BigInt r = exact::mod_floor(m.at(i, j), BigInt(1000000007));
            h = fnv1a(h, r.convert_to<std::uint64_t>());
        }
    return h;
}

}  // namespace

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    boundaries_.resize(ranks_.size());
    for (std::size_t n = 0; n < ranks_.size(); ++n) {
        std::size_t rows = n == 0 ? 0 : ranks_[n - 1];
        if (boundaries_[n].rows() == 0 && boundaries_[n].cols() == 0)
            boundaries_[n] = IntMatrix(rows, ranks_[n]);
        if (boundaries_[n].rows() != rows || boundaries_[n].cols() != ranks_[n])
            throw std::invalid_argument("boundary shape mismatch in degree " + std::to_string(n));
    }
    for (std::size_t n = 1; n + 1 < ranks_.size(); ++n)
        if (!(boundary(n + 1).rows() == 0) && !(boundary(n) * boundary(n + 1)).is_zero())
            throw std::invalid_argument("dd != 0 at degree " + std::to_string(n + 1));
    trim_();
}

void ChainComplex::trim_() {
    while (!ranks_.empty() && ranks_.back() == 0) {
        ranks_.pop_back();
        boundaries_.pop_back();
    }
}

int ChainComplex::dim() const { return static_cast<int>(ranks_.size()) - 1; }

IntMatrix ChainComplex::boundary(std::size_t n) const {
    std::size_t rows = (n == 0 || n - 1 >= ranks_.size()) ? 0 : ranks_[n - 1];
    if (n >= ranks_.size()) return IntMatrix(rows, 0);
    return boundaries_[n];
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (ranks_ != o.ranks_) return false;
    for (std::size_t n = 0; n < ranks_.size(); ++n)
        if (boundary(n) != o.boundary(n)) return false;
    return true;
}

std::uint64_t ChainComplex::digest() const {
    std::uint64_t h = 1469598103934665603ull;
    h = fnv1a(h, ranks_.size());
    for (std::size_t n = 0; n < ranks_.size(); ++n) {
        h = fnv1a(h, ranks_[n]);
        h = hash_matrix(h, boundary(n));
    }
    return h;
}

std::string ChainComplex::str() const {
    std::ostringstream os;
    os << "ranks(";
    for (std::size_t n = 0; n < ranks_.size(); ++n) {
        if (n) os << ",";
        os << ranks_[n];
    }
    os << ")";
    return os.str();
}

ChainMap::ChainMap(ChainComplex src, ChainComplex tgt, std::vector<IntMatrix> components)
    : src_(std::move(src)), tgt_(std::move(tgt)), components_(std::move(components)) {
    std::size_t degs = std::max(src_.degrees(), tgt_.degrees());
    components_.resize(degs);
    for (std::size_t n = 0; n < degs; ++n) {
        if (components_[n].rows() == 0 && components_[n].cols() == 0)
            components_[n] = IntMatrix(tgt_.rank(n), src_.rank(n));
        if (components_[n].rows() != tgt_.rank(n) || components_[n].cols() != src_.rank(n))
            throw std::invalid_argument("chain map component shape mismatch in degree " +
                                        std::to_string(n));
    }
    for (std::size_t n = 1; n < degs; ++n)
        if (tgt_.boundary(n) * component(n) != component(n - 1) * src_.boundary(n))
            throw std::invalid_argument("chain map does not commute with boundaries at degree " +
                                        std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex& k) {
    std::vector<IntMatrix> comps(k.degrees());
    for (std::size_t n = 0; n < k.degrees(); ++n) comps[n] = IntMatrix::identity(k.rank(n));
    return ChainMap(k, k, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& src, const ChainComplex& tgt) {
    return ChainMap(src, tgt, {});
}

IntMatrix ChainMap::component(std::size_t n) const {
    if (n < components_.size()) return components_[n];
    return IntMatrix(tgt_.rank(n), src_.rank(n));
}

ChainMap ChainMap::scaled(const BigInt& c) const {
    std::vector<IntMatrix> comps(components_.size());
    for (std::size_t n = 0; n < components_.size(); ++n) comps[n] = components_[n].scaled(c);
    return ChainMap(src_, tgt_, std::move(comps));
}

bool ChainMap::operator==(const ChainMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) return false;
    std::size_t degs = std::max(components_.size(), o.components_.size());
    for (std::size_t n = 0; n < degs; ++n)
        if (component(n) != o.component(n)) return false;
    return true;
}

std::uint64_t ChainMap::digest() const {
    std::uint64_t h = src_.digest() * 31 + tgt_.digest();
    for (std::size_t n = 0; n < components_.size(); ++n) h = hash_matrix(h, component(n));
    return h;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (f.tgt() != g.src()) throw std::invalid_argument("chain map compose: endpoint mismatch");
    std::size_t degs = std::max(f.src().degrees(), g.tgt().degrees());
    std::vector<IntMatrix> comps(degs);
    for (std::size_t n = 0; n < degs; ++n) comps[n] = g.component(n) * f.component(n);
    return ChainMap(f.src(), g.tgt(), std::move(comps));
}

}  // namespace hopfpi::space
