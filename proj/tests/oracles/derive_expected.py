"""Independent derivation of the frozen expected values used by the C++ tests.

Uses a dense numpy simulation (explicit matrices) and the closed-form
sin^2((2m+1) theta) solution; neither shares code with the C++ kernels.
Run: python3 tests/oracles/derive_expected.py
"""
import itertools
import math

import numpy as np


def dense_grover(n, targets, m):
    N = 2 ** n
    D = np.full((N, N), 2.0 / N) - np.eye(N)
    O = np.eye(N)
    for t in targets:
        O[t, t] = -1
    v = np.full(N, 1 / math.sqrt(N))
    for _ in range(m):
        v = D @ (O @ v)
    return v


def closed_form_prob(N, M, m):
    theta = math.asin(math.sqrt(M / N))
    return math.sin((2 * m + 1) * theta) ** 2


def halfway(N):
    k = l = 1 / math.sqrt(N)
    m = 0
    while not k > 1 / math.sqrt(2):
        k = -k
        A = (k + (N - 1) * l) / N
        k, l = 2 * A - k, 2 * A - l
        m += 1
    return m


print("W_{3,3} n=2 sign:", (-1) ** bin(3 & 3).count("1") / 2)
print("N=4 trace m=0..2:", [dense_grover(2, [2], m).round(15).tolist() for m in range(3)])
print("N=16 model step from (1/4,1/4):", dense_grover(4, [0], 1)[:2])
for N, M in [(4, 1), (8, 1), (8, 2), (8, 3)]:
    probs = [closed_form_prob(N, M, m) for m in range(6)]
    print(f"small optimum N={N} M={M}:", int(np.argmax(probs)), [round(p, 4) for p in probs])
print("n=10 auto(25) prob:", closed_form_prob(1024, 1, 25))
print("n=20 804 iterations prob:", closed_form_prob(2 ** 20, 1, 804))
print("N=16 M=3 with m=optimal(16,2)=2:", closed_form_prob(16, 3, 2))
for M in (2, 4, 16):
    m = round(math.pi / 4 * math.sqrt(1024 / M))
    print(f"N=1024 M={M} m={m} prob:", closed_form_prob(1024, M, m))
for n in (2, 10, 20):
    print(f"halfway N=2^{n}:", halfway(2 ** n), "limit", math.sqrt(2 * 2 ** n))
# exact mean probe count of a random-order scan, enumerated over positions
for N in (4, 1024):
    print(f"classical mean N={N}:", sum(range(1, N + 1)) / N)
# enumerate all permutations for N=4 as a second route
perms = list(itertools.permutations(range(4)))
print("N=4 permutation enumeration:", sum(p.index(0) + 1 for p in perms) / len(perms))
