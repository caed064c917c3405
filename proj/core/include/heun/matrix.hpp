#pragma once

#include "heun/complex.hpp"

namespace heun {

struct Matrix2C {
    Complex a11{1.0, 0.0};
    Complex a12{0.0, 0.0};
    Complex a21{0.0, 0.0};
    Complex a22{1.0, 0.0};

    static Matrix2C identity() { return {}; }
    static Matrix2C unipotent(Complex top_right) { return {{1.0, 0.0}, top_right, {0.0, 0.0}, {1.0, 0.0}}; }

    bool is_unipotent_upper() const
    {
        return a11 == Complex{1.0, 0.0} && a22 == Complex{1.0, 0.0} && a21 == Complex{0.0, 0.0};
    }

    friend bool operator==(const Matrix2C&, const Matrix2C&) = default;
};

inline Matrix2C operator*(const Matrix2C& x, const Matrix2C& y)
{
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

inline Matrix2C operator-(const Matrix2C& x, const Matrix2C& y)
{
    return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
}

inline Matrix2C operator+(const Matrix2C& x, const Matrix2C& y)
{
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}

// Largest entrywise modulus.
inline double max_abs(const Matrix2C& m)
{
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

// (M - I)^2 == 0 exactly.
inline bool is_nilpotent_shift(const Matrix2C& m)
{
    const Matrix2C n = m - Matrix2C::identity();
    return n * n == Matrix2C{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
}

} // namespace heun
