"""Independent mpmath evaluation of the bound formulas (60 digits).

Produces the reference values frozen in tests/test_bounds.cpp. Written from
the formulas directly, sharing no code with the C++ library.
"""
from mpmath import mp, mpf, sqrt, log, floor, exp

mp.dps = 60


def profile(n):
    p0 = 3 if n <= 8 else 2
    return mpf(n - 2) / 2, p0


def k_const(d, n):
    n_star, p0 = profile(n)
    m = 2 * sqrt(mpf(2 * n) / ((n - 1) * (n - 2)))
    r = mpf("2.032") ** (mpf(1) / n)
    u = sqrt(mpf(2) / ((n - 2) * mpf(p0) ** n))
    return m * (r * (1 + u)) ** d


def q_one(d0, n):
    n_star, p0 = profile(n)
    return mpf(p0) ** (n_star - d0) / k_const(d0, n)


def large(a, b, n):
    L = sqrt(2 * (n + a * a)) / (1 - b)
    D = L / (n - L)
    A = 1 / (a * a)
    E = 1 / (2 * (b * b - a * a))
    chi = D * (A + 1) + 1
    pi = (D * (4 + A) + 2) * log(2) + (D + 1) * log(n) / 2 + n * A * D / 2
    return L, D, A, E, chi, pi


def counts(n, d0, d, a, b):
    L, D, A, E, chi, pi = large(a, b, n)
    first = log(chi * n * (d - 1) / (d0 * (d - 1) + d) + 1) / log(d)
    second = log(pi / log(k_const(d, n) ** (-1 / (d - 1)) * q_one(d0, n)) + 1) / log(d)
    T = int(floor(max(first, second))) + 2
    Z = int(floor((log(E) + 2 * log(n) - log(L - 2)) / log(n - 1))) + 2
    return T, Z


def show(label, value):
    print(f"{label} = {mp.nstr(value, 20)}")


if __name__ == "__main__":
    # Parameters are the binary64 values the library receives.
    f = lambda s: mpf(float(s))
    n = 6
    show("m_6", k_const(0, 6))
    show("K_2(6)", k_const(2, 6))
    show("Q1(0, 6)", q_one(0, 6))
    L, D, A, E, chi, pi = large(f("0.18"), f("0.29"), 6)
    for name, v in zip("L D A E chi pi".split(), (L, D, A, E, chi, pi)):
        show(name + "(6)", v)
    show("a-limit(6, 0.18)", 1 - sqrt(2 * (6 + f("0.18") ** 2) / 36))
    show("log Y_F(H=3)", chi * log(3) + pi)
    print("n=6 T,Z", counts(6, mpf(0), mpf(2), f("0.18"), f("0.29")))
    print("n=219 T,Z", counts(219, f("68.2227"), mpf("108.5"), f("0.399258"), f("0.883258")))
    L18 = large(f("0.27"), f("0.39"), 18)
    print("n=18 Z", int(floor((log(L18[3]) + 2 * log(18) - log(L18[0] - 2)) / log(17))) + 2)
    n_star = mpf(505) / 2
    show("K_{n*/2}(507)", k_const(n_star / 2, 507))
    show("5 e^(1/4)", 5 * exp(mpf(1) / 4))
    show("Q1(n*/2, 507) / (2^(n*/2) / (5 e^(1/4)))", q_one(n_star / 2, 507) / (2 ** (n_star / 2) / (5 * exp(mpf(1) / 4))))
