#pragma once

// Small exact linear algebra for the oracle: rationals, prime fields, dense
// matrices, and rank by Gaussian elimination. No floating point anywhere;
// the matrices that arise are 0/1 incidence blocks, so int64 rationals never
// grow past a few digits.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace arcmodel::linalg {

class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d)
    {
        if (d == 0)
            throw std::invalid_argument("rational with zero denominator");
        reduce();
    }

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_ == 0; }

    [[nodiscard]] Rational inverse() const
    {
        if (num_ == 0)
            throw std::domain_error("inverse of zero");
        return Rational(den_, num_);
    }

    friend Rational operator+(const Rational& x, const Rational& y)
    {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y)
    {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y)
    {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y)
    {
        return x * y.inverse();
    }
    friend bool operator==(const Rational& x, const Rational& y)
    {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

  private:
    void reduce()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// The field with P elements, P prime.
template <int P>
class Fp {
    static_assert(P >= 2);

  public:
    constexpr Fp() = default;
    constexpr Fp(std::int64_t n) : value_(static_cast<int>(((n % P) + P) % P)) {}

    [[nodiscard]] int value() const { return value_; }
    [[nodiscard]] bool is_zero() const { return value_ == 0; }

    [[nodiscard]] Fp inverse() const
    {
        if (value_ == 0)
            throw std::domain_error("inverse of zero");
        // Fermat: v^(P-2) mod P.
        std::int64_t base = value_, acc = 1;
        for (int e = P - 2; e > 0; e >>= 1) {
            if (e & 1)
                acc = acc * base % P;
            base = base * base % P;
        }
        return Fp(acc);
    }

    friend Fp operator+(Fp x, Fp y) { return Fp(std::int64_t{x.value_} + y.value_); }
    friend Fp operator-(Fp x, Fp y) { return Fp(std::int64_t{x.value_} - y.value_); }
    friend Fp operator*(Fp x, Fp y) { return Fp(std::int64_t{x.value_} * y.value_); }
    friend Fp operator/(Fp x, Fp y) { return x * y.inverse(); }
    friend bool operator==(Fp x, Fp y) { return x.value_ == y.value_; }

  private:
    int value_ = 0;
};

template <class F>
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = F(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    F& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y)
    {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& xik = x.at(i, k);
                if (xik.is_zero())
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    z.at(i, j) = z.at(i, j) + xik * y.at(k, j);
            }
        return z;
    }

    friend bool operator==(const Matrix& x, const Matrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<F> a_;
};

// Row echelon rank; the argument is taken by value and consumed.
template <class F>
std::size_t rank(Matrix<F> m)
{
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(r, j), m.at(pivot, j));
        const F inv = m.at(r, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const F factor = m.at(i, col);
            if (factor.is_zero())
                continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

template <class F>
std::size_t kernel_dim(const Matrix<F>& m)
{
    return m.cols() - rank(m);
}

template <class F>
std::size_t cokernel_dim(const Matrix<F>& m)
{
    return m.rows() - rank(m);
}

} // namespace arcmodel::linalg
