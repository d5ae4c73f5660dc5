#pragma once

// Reference values produced independently by oracles/compute_oracles.py
// (mpmath / scipy), frozen here before the implementation was exercised.
namespace oracle {

inline constexpr double kGaussLowerN2K10 = 1.097194134155856;
inline constexpr double kWeylCoeffN1P4 = 0.730499243103159;
inline constexpr double kWeylCountN1P4L200 = 24.98272269543870;
inline constexpr double kWeylCountN1P4L50 = 9.914400071942303;
inline constexpr double kPhaseVolumeX6Over4L50 = 9.914400071941772;
inline constexpr double kHarnack11 = 0.3130352854993313;
inline constexpr double kZUpperT2 = 5.335066833753642;
inline constexpr double kWangK100 = 1.6526880468082756;
inline constexpr double kWangK100Topt = 2.29186;
inline constexpr double kWangK10 = 0.7041135085634078;
inline constexpr double kZGauss1T2 = 1.1565176427496657;
inline constexpr double kTraceLambdaK100 = 2.2298783640596165;
inline constexpr double kClrN3Rho2L3 = 50.10680707646875;
inline constexpr double kClrFactorN3 = 0.02452529607809616;
inline constexpr double kStdNormalCdf1 = 0.8413447460685429;
inline constexpr double kInvSqrt2Pi = 0.3989422804014327;
inline constexpr double kExpPower4Norm = 0.3900622510894067;  // c_4 = 1 / int exp(-x^4/4)
inline constexpr unsigned kSphereCountN3L36 = 91;
inline constexpr unsigned kSphereCountN4L100 = 825;
inline constexpr unsigned kNu4DirichletCount200 = 25;  // [-8, 8], N = 4000
inline constexpr double kNu4DirichletFirst[] = {-1.75e-6, 1.36858, 4.45368, 8.25960, 12.75788};

}  // namespace oracle
