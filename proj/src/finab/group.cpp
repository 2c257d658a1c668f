#include "hopfpi/finab/group.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfpi::finab {

using exact::mod_floor;

FinAbGroup::FinAbGroup(std::vector<BigInt> orders) : orders_(std::move(orders)) {
    for (const auto& d : orders_)
        if (d < 2) throw std::invalid_argument("group orders must be >= 2 (canonicalize first)");
}

BigInt FinAbGroup::order() const {
    BigInt n = 1;
    for (const auto& d : orders_) n *= d;
    return n;
}

bool FinAbGroup::is_canonical() const {
    for (std::size_t i = 0; i + 1 < orders_.size(); ++i)
        if (orders_[i + 1] % orders_[i] != 0) return false;
    return true;
}

std::string FinAbGroup::str() const {
    if (orders_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) os << "+";
        os << "Z/" << orders_[i].str();
    }
    return os.str();
}

FinAbGroup FinAbGroup::parse(const std::string& text) {
    if (text == "0" || text == "1" || text.empty()) return trivial();
    std::vector<BigInt> orders;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.rfind("Z/", 0) != 0 && part.rfind("z/", 0) != 0)
            throw std::invalid_argument("bad group literal: " + text);
        orders.emplace_back(part.substr(2));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return FinAbGroup(orders);
}

std::vector<std::vector<BigInt>> FinAbGroup::elements() const {
    if (order() > 4096) throw std::invalid_argument("element enumeration gated at order 4096");
    std::vector<std::vector<BigInt>> out;
    std::vector<BigInt> cur(rank(), BigInt(0));
    std::size_t total = static_cast<std::size_t>(order());
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        out.push_back(cur);
        for (std::size_t i = rank(); i-- > 0;) {
            cur[i] += 1;
            if (cur[i] < orders_[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

GroupElement make_element(const FinAbGroup& g, std::vector<BigInt> coords) {
    if (coords.size() != g.rank()) throw std::invalid_argument("element coordinate length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], g.orders()[i]);
    return GroupElement{g, std::move(coords)};
}

GroupHom::GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix matrix)
    : src_(std::move(src)), tgt_(std::move(tgt)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != tgt_.rank() || matrix_.cols() != src_.rank())
        throw std::invalid_argument("hom matrix shape mismatch");
    // Well-definedness: matrix[i][j] * d_j = 0 mod e_i.
    for (std::size_t i = 0; i < tgt_.rank(); ++i)
        for (std::size_t j = 0; j < src_.rank(); ++j)
            if (mod_floor(matrix_.at(i, j) * src_.orders()[j], tgt_.orders()[i]) != 0)
                throw std::invalid_argument("hom is not well-defined on the given presentations");
    reduce_();
}

void GroupHom::reduce_() {
    for (std::size_t i = 0; i < tgt_.rank(); ++i)
        for (std::size_t j = 0; j < src_.rank(); ++j)
            matrix_.at(i, j) = mod_floor(matrix_.at(i, j), tgt_.orders()[i]);
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.rank()));
}

GroupHom GroupHom::zero(const FinAbGroup& src, const FinAbGroup& tgt) {
    return GroupHom(src, tgt, IntMatrix(tgt.rank(), src.rank()));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
    if (x.group != src_) throw std::invalid_argument("element not in the hom's source");
    return make_element(tgt_, matrix_.apply(x.coords));
}

std::vector<BigInt> GroupHom::apply_coords(const std::vector<BigInt>& coords) const {
    auto y = matrix_.apply(coords);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod_floor(y[i], tgt_.orders()[i]);
    return y;
}

GroupHom GroupHom::operator-() const { return GroupHom(src_, tgt_, -matrix_); }

GroupHom GroupHom::operator+(const GroupHom& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) throw std::invalid_argument("hom sum endpoint mismatch");
    return GroupHom(src_, tgt_, matrix_ + o.matrix_);
}

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.tgt() != g.src()) throw std::invalid_argument("compose: endpoint mismatch");
    return GroupHom(f.src(), g.tgt(), g.matrix() * f.matrix());
}

}  // namespace hopfpi::finab
