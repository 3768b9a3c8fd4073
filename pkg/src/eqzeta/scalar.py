"""Truncated power series over the rationals, as lists of Fractions.

A series of order N is a list of N+1 coefficients.  All functions return new
lists and truncate to the shortest operand.
"""
from fractions import Fraction

__all__ = ["one", "mul", "inverse", "exp", "log", "power", "geometric_log"]


def one(N):
    return [Fraction(1)] + [Fraction(0)] * N


def mul(a, b):
    n = min(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j in range(n - i):
            if b[j]:
                out[i + j] += x * b[j]
    return out


def inverse(a):
    if a[0] == 0:
        raise ZeroDivisionError("constant term is zero")
    n = len(a)
    inv0 = 1 / Fraction(a[0])
    out = [inv0] + [Fraction(0)] * (n - 1)
    for k in range(1, n):
        s = sum((a[i] * out[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
        out[k] = -s * inv0
    return out


def exp(g):
    """exp(g) for g with zero constant term."""
    if g[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    n = len(g)
    f = [Fraction(1)] + [Fraction(0)] * (n - 1)
    # k f_k = sum_{j=1..k} j g_j f_{k-j}
    for k in range(1, n):
        s = sum((j * g[j] * f[k - j] for j in range(1, k + 1) if g[j]), Fraction(0))
        f[k] = s / k
    return f


def log(f):
    """log(f) for f with constant term 1."""
    if f[0] != 1:
        raise ValueError("log needs a series with constant term 1")
    n = len(f)
    g = [Fraction(0)] * n
    # k g_k = k f_k - sum_{j=1..k-1} j g_j f_{k-j}
    for k in range(1, n):
        s = sum((j * g[j] * f[k - j] for j in range(1, k) if g[j]), Fraction(0))
        g[k] = (k * f[k] - s) / k
    return g


def power(f, q):
    """f**q for rational q, f with constant term 1."""
    return exp([Fraction(q) * c for c in log(f)])


def geometric_log(a, N, weight=1):
    """weight * log((1 - t^a)^-1) = weight * sum_j t^(a j) / j, to order N."""
    out = [Fraction(0)] * (N + 1)
    w = Fraction(weight)
    for j in range(1, N // a + 1):
        out[a * j] += w / j
    return out
