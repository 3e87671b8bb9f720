"""Independent oracles for frozen test values.

Nothing here shares code with the C++ library. Ehrhart counts come from the
integer decomposition property (every lattice point of tP is a sum of t
lattice points of P), polynomials from sympy expansion, and subgraph counts
from exhaustive enumeration of (vertex-set, edge-subset) pairs.

Run: python3 tests/oracles/oracle.py
"""
import itertools
import sympy as sp

z = sp.symbols("z")


def coeffs(expr):
    p = sp.Poly(sp.expand(expr), z)
    return [int(c) for c in reversed(p.all_coeffs())]


def vertices_of(nv, edges):
    """Generators of the polytope plus the unit vectors (all lattice points)."""
    n = nv + len(edges)
    pts = set()
    for k in range(n):
        v = [0] * n
        v[k] = 1
        pts.add(tuple(v))
    for f, (i, j) in enumerate(edges):
        F = nv + f
        for si, sj, sf in ((1, 1, -1), (1, -1, 1), (-1, 1, 1)):
            v = [0] * n
            v[i] += si
            v[j] += sj
            v[F] += sf
            pts.add(tuple(v))
    return sorted(pts)


def dilate_counts(nv, edges, tmax):
    pts = vertices_of(nv, edges)
    n = nv + len(edges)
    out = [1]
    for t in range(1, tmax + 1):
        sums = set()
        for combo in itertools.combinations_with_replacement(pts, t):
            sums.add(tuple(sum(c[k] for c in combo) for k in range(n)))
        out.append(len(sums))
    return out, len(pts)


def hstar_from_counts(N, d, deg):
    from math import comb
    return [sum((-1) ** j * comb(d + 1, j) * N[k - j] for j in range(k + 1)) for k in range(deg + 1)]


def connected(vs, es):
    vs = set(vs)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for (a, b) in es:
            for (p, q) in ((a, b), (b, a)):
                if p == x and q not in seen:
                    seen.add(q)
                    stack.append(q)
    return seen == vs


def connected_subgraph_count(nv, edges):
    cnt = 0
    for r in range(1, nv + 1):
        for vs in itertools.combinations(range(nv), r):
            for mask in range(1 << len(edges)):
                es = [edges[k] for k in range(len(edges)) if mask >> k & 1]
                if all(a in vs and b in vs for a, b in es) and connected(vs, es):
                    cnt += 1
    return cnt


def main():
    B = lambda m: (1 + z) ** m + 2 * m * z * (1 + z) ** (m - 1)
    print("bundle 2", coeffs(B(2)))
    print("bundle 3", coeffs(B(3)))
    mc = B(2) * B(1) * B(1) - (4 * z * (1 + z)) * (2 * z) * (2 * z)
    print("multicycle (2,1,1)", coeffs(mc), "at 1:", sp.expand(mc).subs(z, 1))
    tri = (1 + 3 * z) ** 3 - (2 * z) ** 3
    print("triangle", coeffs(tri))
    print("two triangles", coeffs(tri ** 2))
    print("lower bound triangle", coeffs((1 + 3 * z) ** 2 * (1 + z)))
    print("(1+3z)^4", coeffs((1 + 3 * z) ** 4))

    def theta(k, l, m):
        a = 1 + 3 * z
        b = 2 * z
        return a ** (k + l + m) - b ** (k + l) * a ** m - b ** (k + m) * a ** l - b ** (l + m) * a ** k - b ** (k + l + m) + 3 * b ** (k + l + m)

    print("theta 111", coeffs(theta(1, 1, 1)))
    print("theta 112", coeffs(theta(1, 1, 2)))
    print("theta 222", coeffs(theta(2, 2, 2)), "at 1:", sp.expand(theta(2, 2, 2)).subs(z, 1))

    for name, nv, edges, tmax in [
        ("edge", 2, [(0, 1)], 3),
        ("loop", 1, [(0, 0)], 3),
        ("path2", 3, [(0, 1), (1, 2)], 3),
        ("triangle", 3, [(0, 1), (1, 2), (2, 0)], 4),
        ("bundle2", 2, [(0, 1), (0, 1)], 3),
        ("loop+edge", 2, [(0, 0), (0, 1)], 3),
    ]:
        N, npts = dilate_counts(nv, edges, tmax)
        d = nv + len(edges) - 1
        print(name, "points", npts, "N", N, "h*", hstar_from_counts(N, d, len(edges)))

    print("subgraphs edge", connected_subgraph_count(2, [(0, 1)]))
    print("subgraphs loop", connected_subgraph_count(1, [(0, 0)]))
    print("subgraphs triangle", connected_subgraph_count(3, [(0, 1), (1, 2), (2, 0)]))
    print("subgraphs bundle2", connected_subgraph_count(2, [(0, 1), (0, 1)]))


if __name__ == "__main__":
    main()
