#pragma once
// Generated by tests/oracles/gen_fixtures.py (mpmath, 30 digits). Do not edit.

#include <complex>

namespace fixtures {

struct CC { std::complex<double> z, value; };
struct CCC { std::complex<double> nu, z, value; };

inline const CC log_gamma[] = {
    {{1.0300000000000001e+1, 2.1000000000000001}, {1.3258913882321497e+1, 4.8097274193761094}},
    {{5.0e-1, 0.0}, {5.7236494292470009e-1, 0.0}},
    {{1.0e-3, 1.0e-3}, {6.5606044738375526, -7.8597373492965343e-1}},
    {{3.0e+1, -4.0e+1}, {4.9232808494070299e+1, -1.4383479582266482e+2}},
    {{3.7000000000000002, 1.2e+2}, {-1.7225627717969421e+2, 4.5948324274515953e+2}},
    {{-7.5299999999999997e+1, 4.0000000000000002e-1}, {-2.5263348338910471e+2, -2.364764948173243e+2}},
    {{-3.5, -2.5e-1}, {-1.582356342389297, 1.2218992759711446e+1}},
    {{5.0e+3, 3.0e+2}, {3.7573630809480651e+4, 2.5553077982834567e+3}},
    {{2.5e-1, 5.0e-1}, {3.4025042040841979e-1, -1.1951830098875903}},
};

inline const CC reciprocal_gamma[] = {
    {{1.7, -4.0000000000000002e-1}, {1.1668616195717456, 1.0495552358282393e-1}},
    {{-3.2000000000000002, 0.0}, {1.4512599876819996, 0.0}},
    {{5.05e+1, 0.0}, {2.3307508313871353e-64, 0.0}},
    {{-4.0, 1.0e-8}, {3.6146824042363217e-15, 2.4000000000000001e-7}},
    {{-2.5, 3.0}, {1.5016303879379025e+3, -9.3535151604942379e+2}},
};

inline const CCC bessel_j[] = {
    {{5.0e-1, 0.0}, {2.0, 0.0}, {5.1301613656182775e-1, 0.0}},
    {{1.5, 5.0e-1}, {3.0, -1.0}, {1.0182520505612164, 2.6330036792856449e-1}},
    {{-2.2999999999999998, 0.0}, {1.3, 0.0}, {1.2224061000131386, 0.0}},
    {{0.0, 0.0}, {5.0, 2.0}, {-4.2973398507151403e-1, 1.1922394411295847}},
    {{3.0, 0.0}, {1.0e+1, 0.0}, {5.8379379305186812e-2, 0.0}},
    {{-5.0e-1, 0.0}, {2.0000000000000001e-1, 1.0000000000000001e-1}, {1.6097879196025337, -4.1452008665313522e-1}},
};

inline constexpr double j0_first_zero = 2.4048255576957728;
inline constexpr double log_sqrt_pi = 5.7236494292470009e-1;

struct MuCase { double alpha_re, alpha_im, beta; std::complex<double> gamma, mu; };
inline const MuCase stokes_mu[] = {
    {3.0, 0.0, 1.0, {4.0000000000000002e-1, 0.0}, {-1.4884636883788125e-31, 4.3889732507137085e-1}},
    {5.0e-1, 0.0, 1.0, {2.9999999999999999e-1, 0.0}, {-5.754539388537175, 4.8789445924455919e-31}},
    {0.0, 0.0, 1.0, {4.0000000000000002e-1, 0.0}, {-8.6608607623772015e-31, -5.1075866359402093}},
    {5.0e-1, 0.0, 1.0, {4.0000000000000002e-1, 0.0}, {-5.3448116745554181, 4.5315599141013274e-31}},
    {1.0, 0.0, 1.0, {1.0, 0.0}, {0.0, 1.4067472539132018}},
    {2.5, 0.0, 2.0, {6.9999999999999996e-1, 2.0000000000000001e-1}, {6.4901655036223464e-1, -3.6773431986524157e-1}},
    {-2.0, 0.0, 5.0e-1, {2.9999999999999999e-1, 0.0}, {-6.4129458136202559e-32, -1.2606397613865325e-1}},
    {5.0e-1, 2.9999999999999999e-1, 1.0, {2.9999999999999999e-1, 0.0}, {-1.5532969673033452e+1, 4.3605863171786925e-1}},
};

// sum (-beta gamma)^k / (k! Gamma(c + k)) for S (c = 2 - alpha) and W (c = alpha).
struct SeriesCase { double alpha, beta; std::complex<double> gamma, value; };
inline const SeriesCase series_S[] = {
    {5.0e-1, 1.0, {1.0, 0.0}, {5.1301613656182775e-1, 0.0}},
    {2.5, 2.0, {6.9999999999999996e-1, 2.0000000000000001e-1}, {-2.9216009487356e-1, 1.655386040928066e-1}},
    {-1.25, 5.0e-1, {3.0, 0.0}, {2.4030503395692164e-1, 0.0}},
};
inline const SeriesCase series_W[] = {
    {1.0, 1.0, {1.0, 0.0}, {2.2389077914123567e-1, 0.0}},
    {3.0, 2.0, {2.9999999999999999e-1, -4.0000000000000002e-1}, {3.9541802114560524e-1, 1.1385170746120856e-1}},
    {6.0, 1.0, {5.0, 0.0}, {3.4174481511126992e-3, 0.0}},
};

struct ResidueCase { double alpha, beta; std::complex<double> gamma; double sqrt_eps; std::complex<double> q_R, q_L; };
inline const ResidueCase res1_residues[] = {
    {4.0, 0, {6.9999999999999996e-1, 2.9999999999999999e-1}, 1.0000000000000001e-1, {-2.4948595816130303e+2, 5.6118162532866155e-1}, {2.4951394484893887e+2, -4.9112931111071135e-1}},
    {6.0, 0, {6.9999999999999996e-1, 2.9999999999999999e-1}, 5.0000000000000003e-2, {5.9989999824237544e+5, -1.0494513097684552e+2}, {-5.9989999911323932e+5, 1.0494722298173312e+2}},
    {2.0, 0, {1.5, 0.0}, 1.0000000000000001e-1, {5.8092002613129829, 2.9933717841594499e-38}, {-4.3035183631885246, 1.19734871366378e-37}},
    {8.0, 0, {6.9999999999999996e-1, 2.0000000000000001e-1}, 2.0000000000000001e-1, {-1.2185101841393823e+4, 1.3617077173703851e+1}, {1.2185101925035844e+4, -1.3616870722503508e+1}},
};

struct DLCase { double alpha, beta; std::complex<double> gamma; long m; double sqrt_eps; std::complex<double> d_L; };
inline const DLCase res2_residues[] = {
    {5.0e-1, 1.0, {4.0000000000000002e-1, 0.0}, 1, 6.6666666666666667e-1, {7.3500904400680858e-32, 8.6691668956791932e-1}},
    {5.0e-1, 1.0, {4.0000000000000002e-1, 0.0}, 3, 1.8181818181818182e-1, {3.6159521954357933e-31, 8.5297707081656266e-1}},
    {5.0e-1, 1.0, {4.0000000000000002e-1, 0.0}, 25, 2.0202020202020202e-2, {3.5341027831580632e-30, 8.5068304506739575e-1}},
    {5.0e-1, 1.0, {2.9999999999999999e-1, 0.0}, 20, 2.5316455696202532e-2, {3.0285238863681322e-30, 9.1590636537252859e-1}},
    {3.0, 2.0, {5.0e-1, 0.0}, 4, 4.0e-1, {5.634643541454013e-2, -9.5545835316365356e-33}},
};

inline const std::complex<double> integral_exp_over_z2 = {2.0828703186396735, 0.0};
inline const std::complex<double> w2prime_dche_case = {3.494630485624404e-1, -1.4786587321136354e-1};  // alpha 1.5, beta 1, gamma 0.3, z 2e^(i pi/4)

struct LaplaceCase { double alpha, beta, gamma; std::complex<double> x; double theta; std::complex<double> value; };
inline const LaplaceCase laplace[] = {
    {2.0, 1.0, 2.9999999999999999e-1, {2.5e-1, 0.0}, 2.9999999999999999e-1, {2.130375019888283e-1, -2.4972283052520863e-36}},
    {-1.0, 1.0, 2.9999999999999999e-1, {2.0000000000000001e-1, 0.0}, 0.0, {1.3744149958777485e-1, 0.0}},
    {1.0, 1.0, 0.0, {2.0000000000000001e-1, 0.0}, 0.0, {1.704221762847322e-1, 0.0}},
    {5.0e-1, 1.0, 2.9999999999999999e-1, {1.0000000000000001e-1, 0.0}, 0.0, {9.0295659372846215e-2, 0.0}},
};

} // namespace fixtures
