#pragma once

#include <vector>

// Frozen inputs for the unit-root tests. Drawn once from numpy's default_rng
// (AR(1) with coefficient 0.5; linear trend 5 + 0.3 t plus N(0,1); Gaussian
// random walk) and rounded to six decimals.
namespace fixtures {

inline const std::vector<double> ar1_30 = {
    -0.741827, -0.576265, -1.302214, 0.606324,  0.303903,  0.880159,  -1.004668, -1.468313,
    0.439091,  0.037836,  -1.925780, -1.086943, -0.053422, 0.232578,  -0.309195, -0.625639,
    -0.002936, -1.034381, -0.205522, -1.194414, -2.420442, -1.564634, -1.874150, -2.019580,
    -0.103087, 0.550430,  1.819508,  1.507449,  -0.053578, 1.157990};

inline const std::vector<double> trend_stationary_70 = {
    5.001230,  5.598746,  5.325862,  5.009408,  5.745329,  5.508353,  6.860144,  8.440215,  6.907793,
    7.079525,  8.489842,  8.656887,  8.705414,  7.969532,  9.170748,  10.195303, 8.455785,  9.642384,
    8.498777,  9.410462,  9.158265,  11.064909, 10.332554, 12.171264, 12.356751, 12.313069, 10.283240,
    12.561307, 13.351499, 13.813309, 12.469864, 13.822247, 13.621481, 14.091163, 16.260899, 14.692465,
    15.767478, 16.984390, 15.816400, 16.588298, 17.110464, 17.363782, 16.374944, 17.976140, 19.558823,
    16.952855, 19.659383, 19.219354, 18.758530, 21.700417, 20.762260, 19.100711, 20.674516, 21.476690,
    21.011218, 22.182910, 21.733483, 22.767248, 23.838523, 22.024338, 23.203139, 22.836692, 23.727268,
    22.712805, 23.620698, 24.303804, 25.698764, 26.245222, 24.076472, 24.905358};

inline const std::vector<double> random_walk_70 = {
    0.646903,  -1.345516, -1.808686, -1.905973, -0.648958, 0.040446,  -0.286768, -0.655344, -0.905539,
    0.617990,  0.189965,  -0.113715, 0.238874,  0.118104,  -0.079181, -1.193248, -1.204769, -1.648350,
    -0.482223, 0.170866,  0.146722,  0.815103,  0.475234,  1.527360,  1.521961,  2.105343,  0.814450,
    1.161130,  -0.527074, -2.562403, -2.866880, -3.766808, -3.602755, -1.357998, -2.189722, -2.813665,
    -2.608261, -2.115248, -2.291654, -2.497584, -1.795121, -1.275214, -2.308890, -2.388071, -2.352784,
    -3.407269, -3.147430, -4.005386, -3.033319, -2.840573, -2.751267, -3.342295, -3.460905, -5.458651,
    -6.590059, -6.227219, -8.355786, -7.509178, -9.255274, -8.498536, -9.344033, -8.565042, -8.434090,
    -9.970925, -8.721776, -7.280069, -7.345874, -7.619791, -7.779657, -8.754810};

}  // namespace fixtures
