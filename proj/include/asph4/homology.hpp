#pragma once

#include <stdexcept>
#include <vector>

#include "asph4/bigint.hpp"

namespace asph4::mcg {

/// Dense integer matrix, sized for 2g x 2g symplectic work.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows * cols)) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return v_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Int& at(int r, int c) const { return v_[static_cast<std::size_t>(r * cols_ + c)]; }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: size mismatch");
        IntMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
            }
        return out;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: size mismatch");
        IntMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i] - o.v_[i];
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    bool is_zero() const {
        for (const auto& x : v_)
            if (x != 0) return false;
        return true;
    }
    bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

private:
    int rows_, cols_;
    std::vector<Int> v_;
};

/// Integer homology class on a genus-g surface in the symplectic basis
/// a_1, b_1, ..., a_g, b_g.
struct HomologyClass {
    std::vector<Int> v;

    static HomologyClass zero(int g) { return {std::vector<Int>(static_cast<std::size_t>(2 * g))}; }

    /// The class a_i (1-based).
    static HomologyClass a(int i, int g) {
        HomologyClass c = zero(g);
        c.v[static_cast<std::size_t>(2 * (i - 1))] = 1;
        return c;
    }
    /// The class b_i (1-based).
    static HomologyClass b(int i, int g) {
        HomologyClass c = zero(g);
        c.v[static_cast<std::size_t>(2 * (i - 1) + 1)] = 1;
        return c;
    }

    HomologyClass operator+(const HomologyClass& o) const {
        HomologyClass out = *this;
        for (std::size_t i = 0; i < v.size(); ++i) out.v[i] += o.v[i];
        return out;
    }

    bool is_zero() const {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const HomologyClass& o) const { return v == o.v; }
    bool operator!=(const HomologyClass& o) const { return !(*this == o); }
};

/// Standard symplectic form with <a_i, b_i> = +1, as the block matrix J.
inline IntMatrix symplectic_form(int g) {
    IntMatrix j(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j.at(2 * i, 2 * i + 1) = 1;
        j.at(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

/// <x, y> = x^T J y.
inline Int symplectic_pairing(const HomologyClass& x, const HomologyClass& y) {
    if (x.v.size() != y.v.size() || x.v.size() % 2 != 0)
        throw std::invalid_argument("symplectic_pairing: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i + 1 < x.v.size(); i += 2)
        s += x.v[i] * y.v[i + 1] - x.v[i + 1] * y.v[i];
    return s;
}

/// H1 action of the Dehn twist about a curve with class c:
/// x |-> x + <x, c> c. Symplectic, unipotent, fixes c.
inline IntMatrix transvection(const HomologyClass& c, int g) {
    if (c.v.size() != static_cast<std::size_t>(2 * g))
        throw std::invalid_argument("transvection: dimension mismatch");
    IntMatrix t = IntMatrix::identity(2 * g);
    // (Jc) as a row: <x, c> = sum_k x_k (Jc)_k ... with <x,c> = x^T J c
    std::vector<Int> jc(static_cast<std::size_t>(2 * g));
    const IntMatrix j = symplectic_form(g);
    for (int i = 0; i < 2 * g; ++i)
        for (int k = 0; k < 2 * g; ++k) jc[static_cast<std::size_t>(i)] += j.at(i, k) * c.v[static_cast<std::size_t>(k)];
    for (int i = 0; i < 2 * g; ++i)
        for (int k = 0; k < 2 * g; ++k)
            t.at(i, k) += c.v[static_cast<std::size_t>(i)] * jc[static_cast<std::size_t>(k)];
    return t;
}

inline IntMatrix transvection_inverse(const HomologyClass& c, int g) {
    IntMatrix t = IntMatrix::identity(2 * g);
    const IntMatrix plus = transvection(c, g);
    // inverse of I + N with N^2 = 0 is I - N
    for (int i = 0; i < 2 * g; ++i)
        for (int k = 0; k < 2 * g; ++k)
            t.at(i, k) = 2 * t.at(i, k) - plus.at(i, k);
    return t;
}

inline bool is_symplectic(const IntMatrix& m, int g) {
    const IntMatrix j = symplectic_form(g);
    return m.transpose() * j * m == j;
}

/// (M - I)^2 == 0.
inline bool is_unipotent_transvection(const IntMatrix& m) {
    const IntMatrix n = m - IntMatrix::identity(m.rows());
    return (n * n).is_zero();
}

}  // namespace asph4::mcg
