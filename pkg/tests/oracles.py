"""Independent reference computations used only by the test-suite.

Nothing here imports the engines it checks: Weyl groups, positive roots and
the partition function are rebuilt from scratch.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _perm_sign(p) -> int:
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


@lru_cache(maxsize=None)
def weyl_group(family: str, n: int) -> tuple:
    """(perm, signs, det) for the Weyl group of gl(n), so(2n+1), sp(2n), so(2n)."""
    out = []
    for p in itertools.permutations(range(n)):
        ps = _perm_sign(p)
        if family == "A":
            out.append((p, (1,) * n, ps))
            continue
        for sg in itertools.product((1, -1), repeat=n):
            neg = sg.count(-1)
            if family == "D" and neg % 2:
                continue
            out.append((p, sg, ps * (-1) ** neg))
    return tuple(out)


def _act(g, v):
    p, sg, _ = g
    return tuple(sg[k] * v[p[k]] for k in range(len(v)))


@lru_cache(maxsize=None)
def doubled_positive_roots(family: str, n: int) -> tuple:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            a = [0] * n
            a[i], a[j] = 2, -2
            roots.append(tuple(a))
            if family != "A":
                b = [0] * n
                b[i], b[j] = 2, 2
                roots.append(tuple(b))
        if family in ("B", "C"):
            c = [0] * n
            c[i] = 2 if family == "B" else 4
            roots.append(tuple(c))
    return tuple(roots)


def doubled_rho(family: str, n: int) -> tuple:
    # half the sum of positive roots, doubled
    roots = doubled_positive_roots(family, n)
    total = [sum(r[k] for r in roots) for k in range(n)]
    return tuple(t // 2 for t in total)


def _height(v) -> int:
    n = len(v)
    return sum((n - k) * x for k, x in enumerate(v))


def partition_function(family: str, v: tuple) -> int:
    """Number of ways to write doubled vector v as a sum of positive roots."""
    return _count(family, len(v), tuple(v), 0)


@lru_cache(maxsize=None)
def _count(family: str, n: int, vec: tuple, idx: int) -> int:
    roots = doubled_positive_roots(family, n)
    if idx == len(roots):
        return 1 if not any(vec) else 0
    total = 0
    a = roots[idx]
    cur = vec
    while _height(cur) >= 0:
        total += _count(family, n, cur, idx + 1)
        cur = tuple(x - y for x, y in zip(cur, a))
    return total


def kostant_multiplicity(family: str, mu: tuple, lam: tuple) -> int:
    """Weight multiplicity from Kostant's alternating sum; doubled coordinates."""
    n = len(mu)
    rho = doubled_rho(family, n)
    mr = tuple(a + b for a, b in zip(mu, rho))
    lr = tuple(a + b for a, b in zip(lam, rho))
    total = 0
    for g in weyl_group(family, n):
        v = tuple(a - b for a, b in zip(_act(g, mr), lr))
        total += g[2] * partition_function(family, v)
    return total


def weyl_dimension(family: str, mu: tuple) -> int:
    from fractions import Fraction

    n = len(mu)
    rho = doubled_rho(family, n)
    out = Fraction(1)
    for a in doubled_positive_roots(family, n):
        out *= Fraction(sum((m + r) * x for m, r, x in zip(mu, rho, a)),
                        sum(r * x for r, x in zip(rho, a)))
    return int(out)


def all_weights(family: str, mu: tuple) -> dict:
    """Every weight of V_mu with its multiplicity, by Kostant's formula.

    Candidates are mu minus nonnegative combinations of simple-root-sized
    steps, bounded by the infinity norm of mu.
    """
    n = len(mu)
    bound = max((abs(x) for x in mu), default=0)
    parity = mu[0] % 2 if mu else 0
    vals = range(-bound, bound + 1)
    out = {}
    for cand in itertools.product(vals, repeat=n):
        if any((c - parity) % 2 for c in cand):
            continue
        m = kostant_multiplicity(family, mu, cand)
        if m:
            out[cand] = m
    return out


def sp_normal_form_diminutive(blocks, rank: int, weight_mult) -> tuple:
    """Diminutive V_(1^{2k}) multiplicities of Ind from a product of U(s) to Sp(2 rank).

    ``blocks`` are (kind, size) with kind TRIV or DET.  Each U(s) character
    is written as sum_{S_s} sgn(w) Ind_T^{U(s)}(nu + rho - w rho) and the
    torus weights are collected under all signed permutations.
    """
    pieces = []
    for kind, s in blocks:
        rho = tuple(2 * (s - 1 - k) for k in range(s))
        nu = (2,) * s if kind == "DET" else (0,) * s
        pieces.append((tuple(a + b for a, b in zip(rho, nu)), rho, s))
    weights: dict = {}
    perms = [list(itertools.permutations(range(s))) for _, _, s in pieces]
    for choice in itertools.product(*perms):
        mu = []
        sign = 1
        for (left, rho, s), p in zip(pieces, choice):
            sign *= _perm_sign(p)
            mu.extend(left[k] - rho[p[k]] for k in range(s))
        key = tuple(sorted((abs(x) for x in mu), reverse=True))
        weights[key] = weights.get(key, 0) + sign
    out = []
    for k in range(rank // 2 + 1):
        hw = tuple([2] * (2 * k) + [0] * (rank - 2 * k))
        out.append(sum(c * weight_mult(hw, w) for w, c in weights.items() if c))
    return tuple(out)
