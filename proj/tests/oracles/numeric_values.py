"""mpmath oracles frozen into the C++ unit tests (30 significant digits).

Run: python3 tests/oracles/numeric_values.py
"""
from mpmath import mp, hyperu, gamma, mpf, sqrt, pi, quad, inf, exp

mp.dps = 30


def gjms(g, lam, k, n):
    return (4 * abs(lam)) ** g * gamma((1 + g + 2 * k + n) / mpf(2)) / gamma((1 - g + 2 * k + n) / mpf(2))


def dtn(g, lam, k, n):
    # -2 g' c1 with c1 = Gamma(b-1) Gamma(a-b+1) / (Gamma(a) Gamma(1-b)) |lambda|^g'
    b = 1 - g
    a = (1 - g + 2 * k + n) / mpf(2)
    c1 = gamma(b - 1) * gamma(a - b + 1) / (gamma(a) * gamma(1 - b)) * abs(lam) ** g
    return -2 * g * c1


def c_low(g):
    return 2 ** (1 - 2 * g) * gamma(1 - g) / gamma(g)


def c_high(g):
    f = g - 1
    t = 1 - f
    return 2 ** (3 - 2 * g) * gamma(2 - g) / gamma(g), 2 ** (1 - 2 * t) * (t / (1 - t)) * gamma(-t) / gamma(t)


print("U(1,1,1)", hyperu(1, 1, 1))
print("U(1,1,100)", hyperu(1, 1, 100))
print("U(0.5,0.5,2)", hyperu(0.5, 0.5, 2))
print("U(2.3,-0.4,0.7)", hyperu(mpf("2.3"), mpf("-0.4"), mpf("0.7")))
print("U(0.125,-0.75,3.5)", hyperu(mpf("0.125"), mpf("-0.75"), mpf("3.5")))
print("U(1,1,1) by quadrature", quad(lambda t: exp(-t) / (1 + t), [0, inf]))
print("gjms(0.5; 0.5,0,1)", gjms(mpf("0.5"), mpf("0.5"), 0, 1))
print("2 Gamma(5/4)/Gamma(3/4)", 2 * gamma(mpf(5) / 4) / gamma(mpf(3) / 4))
for args in [(mpf("0.5"), 1, 0, 1), (mpf("0.25"), 2, 3, 2), (mpf("0.75"), mpf("0.5"), 1, 3)]:
    print("dtn", args, dtn(*args))
for g in ["0.25", "0.75"]:
    print("C", g, c_low(mpf(g)))
for g in ["1.25", "1.5", "1.75"]:
    print("C", g, *c_high(mpf(g)))
print("Gamma(1/2)", gamma(mpf(1) / 2), sqrt(pi))
