#include "hopfpi/space/homology.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "hopfpi/exact/congruence.hpp"
#include "hopfpi/space/builders.hpp"

namespace hopfpi::space {

using exact::congruence_kernel;

BlockHomology::BlockHomology(const ChainComplex& k, const BigInt& modulus, int q, bool cohomology) {
    if (q < 0) {
        reps_ = IntMatrix(0, 0);
        return;
    }
    const std::size_t r = k.rank(static_cast<std::size_t>(q));
    if (r == 0) {
        reps_ = IntMatrix(0, 0);
        return;
    }
    IntMatrix out_map = cohomology ? k.boundary(q + 1).transposed() : k.boundary(q);
    IntMatrix in_map = cohomology ? (q >= 1 ? k.boundary(q).transposed() : IntMatrix(r, 0))
                                  : k.boundary(q + 1);
    std::vector<BigInt> moduli(out_map.rows(), modulus);
    IntMatrix cycles = congruence_kernel(out_map, moduli);
    IntMatrix mod_lattice = IntMatrix::diagonal(std::vector<BigInt>(r, modulus));
    IntMatrix big = cycles.hstack(mod_lattice);
    IntMatrix sub = in_map.hstack(mod_lattice);
    lq_ = std::make_shared<finab::LatticeQuotient>(big, sub);
    group_ = lq_->group();
    reps_ = lq_->lift_matrix();
}

IntMatrix BlockHomology::express(const IntMatrix& cycles) const {
    if (!lq_) return IntMatrix(0, cycles.cols());
    return lq_->express_matrix(cycles);
}

HomologyData::HomologyData(const ChainComplex& k, const FinAbGroup& coeff, int q, bool cohomology)
    : complex_(k), q_(q), cohomology_(cohomology) {
    std::vector<FinAbGroup> groups;
    for (const auto& d : coeff.orders()) {
        blocks_.emplace_back(k, d, q, cohomology);
        groups.push_back(blocks_.back().group());
    }
    assembled_ = finab::direct_sum(groups);
}

namespace {

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const HomologyData>> cache;

std::string cache_key(const ChainComplex& k, const FinAbGroup& coeff, int q, bool co) {
    std::ostringstream os;
    os << k.digest() << "|" << coeff.str() << "|" << q << "|" << co;
    return os.str();
}

}  // namespace

std::shared_ptr<const HomologyData> homology_data(const ChainComplex& k, const FinAbGroup& coeff,
                                                  int q, bool cohomology) {
    std::string key = cache_key(k, coeff, q, cohomology);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto data = std::make_shared<const HomologyData>(k, coeff, q, cohomology);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, data);
    return data;
}

FinAbGroup homology(const ChainComplex& k, const FinAbGroup& coeff, int q) {
    return homology_data(k, coeff, q, false)->group();
}

FinAbGroup cohomology(const ChainComplex& k, const FinAbGroup& coeff, int q) {
    return homology_data(k, coeff, q, true)->group();
}

GroupHom induced(const ChainMap& f, const FinAbGroup& coeff, int q, bool cohomology) {
    auto src_data = homology_data(cohomology ? f.tgt() : f.src(), coeff, q, cohomology);
    auto tgt_data = homology_data(cohomology ? f.src() : f.tgt(), coeff, q, cohomology);
    IntMatrix carrier = q >= 0 ? f.component(static_cast<std::size_t>(q)) : IntMatrix(0, 0);
    if (cohomology) carrier = carrier.transposed();
    GroupHom total = GroupHom::zero(src_data->group(), tgt_data->group());
    for (std::size_t j = 0; j < src_data->blocks(); ++j) {
        const BlockHomology& sb = src_data->block(j);
        const BlockHomology& tb = tgt_data->block(j);
        if (sb.group().is_trivial() || tb.group().is_trivial()) continue;
        IntMatrix mapped = carrier * sb.representatives();
        GroupHom blockmap(sb.group(), tb.group(), tb.express(mapped));
        total = total + compose(tgt_data->inj(j), compose(blockmap, src_data->proj(j)));
    }
    return total;
}

GroupHom suspension_iso(const ChainComplex& k, const FinAbGroup& coeff, int q, bool cohomology) {
    ChainComplex sk = suspend(k).suspension;
    auto low = homology_data(k, coeff, q, cohomology);
    auto high = homology_data(sk, coeff, q + 1, cohomology);
    // (SK)_{q+1} = K_q on the nose, so representatives transfer verbatim.
    auto src_data = cohomology ? high : low;
    auto tgt_data = cohomology ? low : high;
    GroupHom total = GroupHom::zero(src_data->group(), tgt_data->group());
    for (std::size_t j = 0; j < src_data->blocks(); ++j) {
        const BlockHomology& sb = src_data->block(j);
        const BlockHomology& tb = tgt_data->block(j);
        if (sb.group().is_trivial() || tb.group().is_trivial()) continue;
        GroupHom blockmap(sb.group(), tb.group(), tb.express(sb.representatives()));
        total = total + compose(tgt_data->inj(j), compose(blockmap, src_data->proj(j)));
    }
    return total;
}

}  // namespace hopfpi::space
