#pragma once

#include "heun/complex.hpp"

#include <vector>

namespace testgrid {

// 10 x 10 points with |z| <= 20, no real part integral, no point on the real axis.
inline std::vector<heun::Complex> gamma_grid()
{
    std::vector<heun::Complex> out;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            out.emplace_back(-14.1 + 28.4 * i / 9.0, -13.7 + 27.6 * j / 9.0);
    return out;
}

inline const double ratio_points[] = {100.0, 1000.0, 10000.0};

inline std::vector<heun::Complex> ratio_shifts()
{
    return {{-2.5, 0.0}, {-1.0, 0.0}, {0.5, 0.0}, {1.5, 1.0}, {3.0, 0.0}, {0.0, 2.0}, {-0.7, -2.2}};
}

} // namespace testgrid
