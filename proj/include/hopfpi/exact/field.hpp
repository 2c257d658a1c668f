#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfpi/exact/int_matrix.hpp"
#include "hopfpi/exact/integers.hpp"

namespace hopfpi::exact {

/// Raised when a Hopf algebra fails the finite-volume requirement over the
/// working field (the characteristic divides its dimension).
struct NotFiniteVolume : std::runtime_error {
    explicit NotFiniteVolume(const std::string& what) : std::runtime_error(what) {}
};

struct SizeGateExceeded : std::runtime_error {
    explicit SizeGateExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The coefficient field: Q or F_p with p prime.
class Field {
  public:
    static Field rationals() { return Field(BigInt(0)); }
    static Field prime(const BigInt& p);

    /// Parse "Q" or "F<p>".
    static Field parse(const std::string& text);

    bool is_rationals() const { return p_ == 0; }
    const BigInt& characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const { return p_ == 0 ? "Q" : "F" + p_.str(); }

  private:
    explicit Field(BigInt p) : p_(std::move(p)) {}
    BigInt p_;  // 0 for Q
};

/// An exact element of the field: a rational over Q, a residue over F_p.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), q_(0) {}
    Scalar(Field field, Rational value);

    static Scalar zero(const Field& f) { return from_integer(f, 0); }
    static Scalar one(const Field& f) { return from_integer(f, 1); }
    static Scalar from_integer(const Field& f, const BigInt& n);
    /// (n * 1_k)^{-1}; throws NotFiniteVolume when n vanishes in k.
    static Scalar integer_inverse(const Field& f, const BigInt& n);

    const Field& field() const { return field_; }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return field_ == o.field_ && q_ == o.q_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact decimal-free rendering: "3/4", "-2", or a residue like "3".
    std::string str() const;

    const Rational& value() const { return q_; }

  private:
    void reduce_();
    Field field_;
    Rational q_;  // residue (as integer rational) when field is F_p
};

/// Dense matrix over a fixed field.
class FieldMatrix {
  public:
    FieldMatrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
    FieldMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

    static FieldMatrix identity(const Field& f, std::size_t n);
    /// Entrywise reduction of an integer matrix into the field.
    static FieldMatrix from_int(const Field& f, const IntMatrix& m);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix scaled(const Scalar& c) const;
    FieldMatrix transposed() const;
    FieldMatrix kron(const FieldMatrix& o) const;

    bool operator==(const FieldMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    std::string str() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

}  // namespace hopfpi::exact
