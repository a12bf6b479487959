#!/usr/bin/env python3
"""Regenerates data/oeis/b*.txt from the sequences' defining formulas.

Independent of the C++ library: plain integer arithmetic only. Offsets
follow the OEIS entries.
"""
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

TERMS = 30


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def flatten(rows):
    out = []
    for row in rows:
        out.extend(row)
    return out


def triangle(entry, row_len, offset=0):
    n = offset
    out = []
    while len(out) < TERMS:
        out.extend(entry(n, k) for k in row_len(n))
        n += 1
    return out[:TERMS]


def a000898():
    a = [1, 2]
    while len(a) < TERMS:
        n = len(a)
        a.append(2 * (a[n - 1] + (n - 1) * a[n - 2]))
    return a


def linear_recurrence(coeffs, initial):
    a = list(initial)
    while len(a) < TERMS:
        a.append(sum(c * a[-1 - i] for i, c in enumerate(coeffs)))
    return a[:TERMS]


def eulerian(n, k):
    # T(n,k), 1 <= k <= n: number of permutations of [n] with k-1 descents.
    return sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))


def double_factorial_odd(k):
    out = 1
    for j in range(1, k + 1):
        out *= 2 * j - 1
    return out


def gamma_eulerian(n, k):
    # gamma-vector of the Eulerian polynomial A_{n+1}: peaks of permutations.
    h = [eulerian(n + 1, j + 1) for j in range(n + 1)]
    g = []
    for kk in range(n // 2 + 1):
        acc = h[kk] - sum(comb(n - 2 * i, kk - i) * g[i] for i in range(kk))
        g.append(acc)
    return g[k]


def a100862(n, k):
    # k-matchings of the corona K'(n): sum_j binom(n, k) binom(k, j) ... via EGF
    total = Fraction(0)
    for j in range(0, min(k, n - k) + 1):
        total += Fraction(comb(k, j), factorial(n - k - j) * 2 ** j)
    return int(total * Fraction(factorial(n), factorial(k)))


def beta(n, k):
    if k == n:
        return 1
    d = n - k
    total = Fraction(0)
    for j in range(d + 1):
        b1 = comb(k + j - 1, j) if k + j - 1 >= 0 else (1 if j == 0 else 0)
        total += Fraction((-1) ** j * j * b1 * comb(2 * d, d - j), d)
    return int(total)


SEQUENCES = {
    "A000108": ("Catalan numbers", 0, [catalan(n) for n in range(TERMS)]),
    "A000898": ("a(n) = 2(a(n-1) + (n-1)a(n-2))", 0, a000898()),
    "A001263": ("Narayana triangle T(n,k) = binom(n-1,k-1) binom(n,k-1)/k", 1,
                triangle(lambda n, k: comb(n - 1, k - 1) * comb(n, k - 1) // k,
                         lambda n: range(1, n + 1), offset=1)),
    "A001591": ("Pentanacci numbers", 0, linear_recurrence([1, 1, 1, 1, 1], [0, 0, 0, 0, 1])),
    "A007318": ("Pascal's triangle", 0,
                triangle(lambda n, k: comb(n, k), lambda n: range(n + 1))),
    "A008288": ("Delannoy numbers by antidiagonals", 0,
                triangle(lambda n, k: sum(comb(k, j) * comb(n - j, k) for j in range(k + 1)),
                         lambda n: range(n + 1))),
    "A008292": ("Eulerian numbers T(n,k), 1 <= k <= n", 1,
                triangle(eulerian, lambda n: range(1, n + 1), offset=1)),
    "A055151": ("n!/((n-2k)! k! (k+1)!)", 0,
                triangle(lambda n, k: factorial(n) // (factorial(n - 2 * k) * factorial(k) * factorial(k + 1)),
                         lambda n: range(n // 2 + 1))),
    "A059344": ("n!/(k! (n-2k)!)", 0,
                triangle(lambda n, k: factorial(n) // (factorial(k) * factorial(n - 2 * k)),
                         lambda n: range(n // 2 + 1))),
    "A077938": ("expansion of 1/(1-2x-x^2-2x^3)", 0, linear_recurrence([2, 1, 2], [1, 2, 5])),
    "A100861": ("Bessel numbers n!/(k! (n-2k)! 2^k)", 0,
                triangle(lambda n, k: factorial(n) // (factorial(k) * factorial(n - 2 * k) * 2 ** k),
                         lambda n: range(n // 2 + 1))),
    "A100862": ("k-matchings of the corona K'(n)", 0,
                triangle(a100862, lambda n: range(n + 1))),
    "A101280": ("gamma-vectors of the Eulerian polynomials", 0,
                triangle(gamma_eulerian, lambda n: range(n // 2 + 1))),
    "A271875": ("Riordan array (1, x/c(x)), c the Catalan gf", 0,
                triangle(beta, lambda n: range(n + 1))),
}


def main():
    out_dir = Path(__file__).resolve().parent.parent / "data" / "oeis"
    out_dir.mkdir(parents=True, exist_ok=True)
    for anum, (name, offset, terms) in SEQUENCES.items():
        assert len(terms) == TERMS, anum
        lines = [f"# {anum}: {name}",
                 "# Terms computed locally from the defining formula (b-file layout).",
                 ""]
        lines += [f"{offset + i} {t}" for i, t in enumerate(terms)]
        (out_dir / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
