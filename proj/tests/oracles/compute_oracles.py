"""Independent reference values frozen into the C++ tests.

Run with: python3 tests/oracles/compute_oracles.py
Everything here uses mpmath/scipy directly, never the C++ code paths.
"""
import itertools
import math

import mpmath as mp
import numpy as np
from scipy import integrate, special
from scipy.linalg import eigh_tridiagonal

mp.mp.dps = 30

# Gaussian eigenvalue lower bound, n=2, k=10.
n, k = 2, 10
print("gauss_lower(2,10) =", max(n / math.e * k ** (1 / n) - n, math.log(k) / math.log((n + 1) * math.e)))

# Multi-index enumeration oracle for the Gaussian counting function.
def enum_count(n, lam):
    return sum(1 for a in itertools.product(range(lam + 1), repeat=n) if sum(a) <= lam)
print("enum_count(3,2) =", enum_count(3, 2))

# Weyl coefficient for nu_p, n=1, p=4.
def weyl_coeff(n, p):
    p = mp.mpf(p)
    return (2 ** (n / (p - 1)) * mp.gamma(1 / (2 * (p - 1)) + 1) ** n
            / (mp.pi ** (mp.mpf(n) / 2) * mp.gamma(mp.mpf(n) / 2 * p / (p - 1) + 1)))
print("weyl_coeff(1,4) =", weyl_coeff(1, 4), " count(200) =", weyl_coeff(1, 4) * mp.mpf(200) ** (mp.mpf(2) / 3))
print("weyl_coeff(1,4)*50^(2/3) =", weyl_coeff(1, 4) * mp.mpf(50) ** (mp.mpf(2) / 3))
# Phase volume (1/pi) int sqrt(50 - x^6/4) dx by quadrature.
xr = (200.0) ** (1 / 6)
pv = integrate.quad(lambda x: math.sqrt(max(50 - x ** 6 / 4, 0)), -xr, xr, limit=200)[0] / math.pi
print("phase_volume(x^6/4, 50) =", pv)

# Harnack factor and z-upper bound.
def h(rho, t):
    x = 2 * rho * t
    return 1.0 if x == 0 else x / math.expm1(x)
print("h(1,1) =", h(1, 1))
s = h(1, 1) / 1
print("z_upper(rho=1,L=1,m2=1,t=2) =", math.exp(2 * s / (1 - 2 * s) * 1))

# Wang-type eigenvalue lower bound by brute-force dense grid in t.
def wang(rho, L, m2, k):
    t = np.exp(np.linspace(math.log(1e-3), math.log(1e3), 2_000_001))
    with np.errstate(over="ignore"):
        s = 2 * rho / np.expm1(rho * t) if rho != 0 else 2 / t
    ok = s < L / 2
    t, s = t[ok], s[ok]
    v = (math.log(k) - 2 * s / (1 - 2 * s / L) * m2) / t
    i = int(np.argmax(v))
    return float(v[i]), float(t[i])
print("wang(1,1,1,100) =", wang(1, 1, 1, 100))
print("wang(1,1,1,10) =", wang(1, 1, 1, 10))

# Heat trace of the 1-D Gaussian spectrum.
print("Z_gauss1(2) =", 1 / (1 - math.exp(-2)))
print("trace_lambda(100, Z(2), 2) =", (math.log(100) - math.log(1 / (1 - math.exp(-2)))) / 2)

# CLR count bound.
C = 4 * 2 / (3 * 1 * 2)
print("clr(3,2,3) =", math.exp(1.5) * (C * 3 + 1) ** 1.5, " C =", C)
print("clr_factor(3) =", (1 - 2 / 3) / (5 * math.e), " threshold =", 6 * (5 * math.e) ** 1.5)

# Normal CDF and profile at the median.
print("Phi(1) =", special.ndtr(1.0), " 1/sqrt(2pi) =", 1 / math.sqrt(2 * math.pi))

# nu_4 normalizer and density at 0.
c4 = 1 / (2 * 4 ** 0.25 * math.gamma(1.25))
print("c_4 =", c4)

# Exact sphere counts (canonical, eigenvalue m(m+n-1)) by summing harmonic dimensions.
def harm_dim(n, m):
    # dimension of degree-m harmonics in n+1 variables
    return math.comb(n + m, n) - (math.comb(n + m - 2, n) if m >= 2 else 0)
def sphere_count(n, lam):
    return sum(harm_dim(n, m) for m in range(0, 1000) if m * (m + n - 1) <= lam)
print("sphere_count(3,36) =", sphere_count(3, 36), " sphere_count(4,100) =", sphere_count(4, 100))

# Discretised nu_4 count at lambda=200 via scipy tridiagonal eigensolver (Dirichlet, [-8,8], N=4000).
N = 4000
xs = np.linspace(-8, 8, N + 2)[1:-1]
hh = xs[1] - xs[0]
W = xs ** 6 / 4 - 1.5 * xs ** 2
ev = eigh_tridiagonal(2 / hh ** 2 + W, -np.ones(N - 1) / hh ** 2, select="v", select_range=(-1e9, 200))[0]
print("nu4 discrete count <= 200:", len(ev), " first:", ev[:5])
