#include "hopfpi/exact/field.hpp"

#include <sstream>

namespace hopfpi::exact {

namespace {

bool is_prime(const BigInt& p) {
    if (p < 2) return false;
    for (BigInt d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    if ((text.size() > 1) && (text[0] == 'F' || text[0] == 'f')) {
        BigInt p(text.substr(1));
        return prime(p);
    }
    throw std::invalid_argument("unknown field literal: " + text);
}

Scalar::Scalar(Field field, Rational value) : field_(field), q_(std::move(value)) { reduce_(); }

void Scalar::reduce_() {
    if (field_.is_rationals()) return;
    const BigInt& p = field_.characteristic();
    BigInt den = denominator(q_);
    BigInt num = numerator(q_);
    BigInt dres = mod_floor(den, p);
    if (dres == 0) throw std::invalid_argument("denominator vanishes in F_p");
    BigInt u, v;
    egcd(dres, p, u, v);
    q_ = Rational(mod_floor(num * u, p));
}

Scalar Scalar::from_integer(const Field& f, const BigInt& n) {
    if (f.is_rationals()) return Scalar(f, Rational(n));
    return Scalar(f, Rational(mod_floor(n, f.characteristic())));
}

Scalar Scalar::integer_inverse(const Field& f, const BigInt& n) {
    Scalar s = from_integer(f, n);
    if (s.is_zero())
        throw NotFiniteVolume("integer " + n.str() + " is not invertible over " + f.str());
    return s.inverse();
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
    return Scalar(field_, q_ + o.q_);
}
Scalar Scalar::operator-(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
    return Scalar(field_, q_ - o.q_);
}
Scalar Scalar::operator*(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
    return Scalar(field_, q_ * o.q_);
}
Scalar Scalar::operator-() const { return Scalar(field_, -q_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    if (field_.is_rationals()) return Scalar(field_, Rational(1) / q_);
    BigInt u, v;
    egcd(numerator(q_), field_.characteristic(), u, v);
    return Scalar(field_, Rational(mod_floor(u, field_.characteristic())));
}

std::string Scalar::str() const {
    BigInt num = numerator(q_), den = denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

FieldMatrix FieldMatrix::identity(const Field& f, std::size_t n) {
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

FieldMatrix FieldMatrix::from_int(const Field& f, const IntMatrix& m) {
    FieldMatrix r(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Scalar::from_integer(f, m.at(i, j));
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("matrix field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    FieldMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        }
    return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    FieldMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix diff shape mismatch");
    FieldMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

FieldMatrix FieldMatrix::scaled(const Scalar& c) const {
    FieldMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = c * entries_[i];
    return r;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldMatrix FieldMatrix::kron(const FieldMatrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("matrix field mismatch");
    FieldMatrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

bool FieldMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::string FieldMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace hopfpi::exact
