"""Independent reference values for the unit tests.

Everything here is computed from the definitions by brute force, sharing no
code with the C++ library. Run with `python3 tests/oracles/oracles.py`; the
printed numbers are the constants frozen into tests/unit/*.cpp.
"""

import itertools
import math
from collections import deque

from scipy.optimize import brentq


# Interlaced graphs ----------------------------------------------------------

def adjacent(n, m):
    if n == m:
        return False
    chain = lambda a, b: all(a[i] <= b[i] for i in range(len(a))) and all(
        b[i] <= a[i + 1] for i in range(len(a) - 1))
    return chain(n, m) or chain(m, n)


def bfs(n, m):
    values = sorted(set(n) | set(m))
    k = len(n)
    nodes = list(itertools.combinations(values, k))
    seen = {tuple(n): 0}
    queue = deque([tuple(n)])
    while queue:
        u = queue.popleft()
        if u == tuple(m):
            return seen[u]
        for v in nodes:
            if v not in seen and adjacent(u, v):
                seen[v] = seen[u] + 1
                queue.append(v)
    raise RuntimeError("unreachable")


def profile(n, m):
    top = max(max(n), max(m))
    out, acc = [0], 0
    for j in range(1, top + 1):
        acc += (j in n) - (j in m)
        out.append(acc)
    return out


# James p-variation --------------------------------------------------------

def james(x, p, tail=0.0):
    v = list(x) + [tail]
    best = 0.0
    for r in range(1, len(v) + 1):
        for idx in itertools.combinations(range(len(v)), r):
            s = sum(abs(v[idx[i + 1]] - v[idx[i]]) ** p for i in range(len(idx) - 1))
            best = max(best, s)
    return best ** (1.0 / p)


# Orlicz -------------------------------------------------------------------

def orlicz(x, phi):
    if all(v == 0 for v in x):
        return 0.0
    g = lambda r: sum(phi(abs(v) / r) for v in x) - 1
    return brentq(g, 1e-6, 1e6, xtol=1e-15, rtol=1e-15)


def n_norm(s, phi):
    acc = abs(s[0])
    for t in s[1:]:
        acc = abs(t) if acc == 0 else acc + acc * phi(abs(t) / acc)
    return acc


# James tree ---------------------------------------------------------------

def all_nodes(depth):
    return [''.join(b) for d in range(depth + 1) for b in itertools.product('01', repeat=d)]


def jt(x, depth):
    nodes = all_nodes(depth)
    segs = [frozenset(h[:i] for i in range(len(l), len(h) + 1))
            for l in nodes for h in nodes if h.startswith(l)]
    vals = [sum(x.get(s, 0.0) for s in seg) for seg in segs]
    order = sorted(range(len(segs)), key=lambda i: -abs(vals[i]))
    best = 0.0

    def rec(start, used, acc):
        nonlocal best
        best = max(best, acc)
        for i in range(start, len(segs)):
            if vals[i] != 0 and not (segs[i] & used):
                rec(i + 1, used | segs[i], acc + vals[i] ** 2)

    rec(0, frozenset(), 0.0)
    return math.sqrt(best)


def main():
    print("bfs (1,2,3)->(4,5,6):", bfs((1, 2, 3), (4, 5, 6)))
    print("bfs (1,4)->(2,6):", bfs((1, 4), (2, 6)))
    print("bfs (2,3,5)->(1,4,6):", bfs((2, 3, 5), (1, 4, 6)))
    print("profile (2,3,5),(1,4,6):", profile((2, 3, 5), (1, 4, 6)))
    print("profile (1,4),(2,6):", profile((1, 4), (2, 6)))

    for p in (1.5, 2.0, 3.0):
        print(f"james (0.5,-1,2,0,-0.25) p={p}: {james([0.5, -1, 2, 0, -0.25], p):.15g}")
    print(f"james (1,0,1) p=2: {james([1, 0, 1], 2):.15g}")
    print(f"james (3,-1,2) p=2: {james([3, -1, 2], 2):.15g}")

    t_log = lambda t: t - math.log1p(t)
    soft = lambda t: t * t / (math.sqrt(1 + t * t) + 1)
    print(f"orlicz (1,2) t-log1p: {orlicz([1, 2], t_log):.15g}")
    print(f"orlicz (0.5,-3,1) soft_abs: {orlicz([0.5, -3, 1], soft):.15g}")
    print(f"orlicz (1,2,2) t^3: {orlicz([1, 2, 2], lambda t: t ** 3):.15g}")
    print(f"n_norm (1,2,3) soft_abs: {n_norm([1, 2, 3], soft):.15g}")
    print(f"n_norm (2,-1,0.5) t-log1p: {n_norm([2, -1, 0.5], t_log):.15g}")
    print(f"n_norm (0,3) t-log1p: {n_norm([0, 3], t_log):.15g}")
    print(f"delta rational t=1: {1 - math.log(2):.15g}")
    print(f"delta rational t=2: {2 - math.log(3):.15g}")

    x = {'': 1.0, '0': -2.0, '00': 1.5, '1': 0.5, '10': -1.0}
    print(f"jt mixed: {jt(x, 2):.15g}")
    y = {'0': 1.0, '01': 1.0, '1': -1.0, '11': 2.0, '': 0.5}
    print(f"jt y: {jt(y, 2):.15g}")
    z = {'0': 1.0, '1': 1.0, '00': 1.0, '01': 1.0, '10': 1.0, '11': 1.0}
    print(f"jt z (full depth 2 without root): {jt(z, 2):.15g}")


if __name__ == "__main__":
    main()
