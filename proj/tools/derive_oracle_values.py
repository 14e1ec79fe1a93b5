# Copyright 2026 The spreadlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Recomputes the reference values frozen in the C++ unit tests.

Everything here is plain brute force over small graphs, written without
reference to the C++ code, so the two implementations check each other.
Run: python3 tools/derive_oracle_values.py
"""

from fractions import Fraction
from itertools import combinations, product
from collections import deque


def complete(n):
    return n, [(u, v) for u in range(n) for v in range(u + 1, n)]


def path(n):
    return n, [(i, i + 1) for i in range(n - 1)]


def cycle(n):
    return n, [(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)]


def star(leaves):
    return leaves + 1, [(0, i) for i in range(1, leaves + 1)]


def adjacency(g):
    n, edges = g
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def distances(g, s):
    adj = adjacency(g)
    dist = [None] * g[0]
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g):
    return max(max(distances(g, s)) for s in range(g[0]))


def variance(values):
    n = len(values)
    return Fraction(n * sum(x * x for x in values) - sum(values) ** 2, n * n)


def spread(g):
    n, edges = g
    d = diameter(g)
    best = Fraction(0)
    for rest in product(range(-d, d + 1), repeat=n - 1):
        f = (0,) + rest
        if all(abs(f[u] - f[v]) <= 1 for u, v in edges):
            best = max(best, variance(f))
    return best


def subsets(n):
    for size in range(1, n + 1):
        yield from combinations(range(n), size)


def lex_min(candidates):
    return min(candidates, key=lambda s: list(s))


def cheeger(g):
    n, edges = g
    adj = adjacency(g)
    m = len(edges)
    best, sets = None, []
    for s in subsets(n):
        vol = sum(len(adj[v]) for v in s)
        if vol == 0 or vol > m:
            continue
        inside = set(s)
        boundary = sum((u in inside) != (v in inside) for u, v in edges)
        r = Fraction(boundary, vol)
        if best is None or r < best:
            best, sets = r, [s]
        elif r == best:
            sets.append(s)
    return best, lex_min(sets)


def alpha_ratio(g):
    n, _ = g
    adj = adjacency(g)
    best, sets = None, []
    for w in subsets(n):
        if 2 * len(w) > n:
            continue
        inside = set(w)
        count = sum(1 for v in w if adj[v] - inside)
        r = Fraction(count, len(w))
        if best is None or r < best:
            best, sets = r, [w]
        elif r == best:
            sets.append(w)
    return best, lex_min(sets)


def closed_ratio(g, k):
    n, _ = g
    adj = adjacency(g)
    best, sets = None, []
    for size in range(1, k + 1):
        for t in combinations(range(n), size):
            covered = set(t)
            for v in t:
                covered |= adj[v]
            r = Fraction(len(covered), size)
            if best is None or r < best:
                best, sets = r, [t]
            elif r == best:
                sets.append(t)
    return best, lex_min(sets)


def three_level(g, d):
    n, _ = g
    adj = adjacency(g)
    order = sorted(range(n), key=lambda v: (len(adj[v]), v))
    t = n // (2 * d)
    low = set(order[:t])
    f = [0] * n
    for v in low:
        f[v] = 2
    mid = set()
    for v in low:
        mid |= adj[v] - low
    for v in range(n):
        if len(mid) >= n // 2:
            break
        if v not in low:
            mid.add(v)
    for v in mid:
        f[v] = 1
    bound = Fraction(1, 4) + (Fraction(1, d) - Fraction(2, n)) * (1 - Fraction(1, d))
    return f, variance(f), bound


def upper_from_levels(values):
    ordered = sorted(values)
    m = ordered[(len(values) + 1) // 2 - 1]
    n = len(values)
    total = Fraction(1, 4)
    for i in set(x - m for x in values):
        if i not in (0, 1):
            count = sum(1 for x in values if x - m == i)
            total += Fraction(count, n) * (Fraction(2 * i - 1, 2) ** 2)
    return total


def main():
    print("spread:")
    for n in range(2, 10):
        print(f"  K{n} = {spread(complete(n))}")
    for name, g in [("P3", path(3)), ("C4", cycle(4)), ("P5", path(5)),
                    ("C6", cycle(6)), ("star5", star(5))]:
        print(f"  {name} = {spread(g)}")
    print("variance path (0,1,2) =", variance([0, 1, 2]))
    print("diameter C6 =", diameter(cycle(6)))
    print("cheeger:")
    for name, g in [("K4", complete(4)), ("C4", cycle(4)), ("C6", cycle(6)),
                    ("P6", path(6))]:
        print(f"  {name} = {cheeger(g)}")
    print("alpha ratio P10 =", alpha_ratio(path(10)))
    print("alpha ratio K4 =", alpha_ratio(complete(4)))
    print("closed ratio K25, k=5 =", closed_ratio(complete(25), 5)[0])
    print("closed ratio P30, k=6 =", closed_ratio(path(30), 6))
    print("closed ratio C8, k=3 =", closed_ratio(cycle(8), 3))
    for name, g, d in [("star5", star(5), 2), ("C8", cycle(8), 2)]:
        f, var, bound = three_level(g, d)
        print(f"three-level {name}: f={f} var={var} bound={bound}")
    print("upper from levels (-1,0,0,1) =", upper_from_levels([-1, 0, 0, 1]))
    print("upper from levels (0,0,1,1) =", upper_from_levels([0, 0, 1, 1]))
    print("upper from levels (0,1,2,3,4) =", upper_from_levels([0, 1, 2, 3, 4]))


if __name__ == "__main__":
    main()
