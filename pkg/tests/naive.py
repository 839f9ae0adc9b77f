"""Independent brute-force references the library is cross-checked against.

Everything here is a straight dynamic-programming sieve over the integers;
none of it shares code with the library's Apery or decomposition paths.
"""

from math import gcd


def reachable(gens, limit):
    """reach[v] == 1 iff v is a non-negative combination of gens, v <= limit."""
    reach = bytearray(limit + 1)
    reach[0] = 1
    for g in gens:
        for v in range(g, limit + 1):
            if reach[v - g]:
                reach[v] = 1
    return reach


def frobenius(gens):
    """Largest non-representable integer, certified by a run of min(gens)
    consecutive representable values at the top of the sieve."""
    g = 0
    for v in gens:
        g = gcd(g, v)
    assert g == 1, "needs coprime generators"
    m = min(gens)
    limit = max(gens) * m + m
    while True:
        table = reachable(gens, limit)
        if all(table[limit - i] for i in range(m)):
            for v in range(limit, -1, -1):
                if not table[v]:
                    return v
            raise AssertionError("no gap at all: semigroup is N")
        limit *= 2


def apery(gens, m):
    """Least representable value in each residue class mod m."""
    f = frobenius(gens)
    table = reachable(gens, f + m + 1)
    out = []
    for r in range(m):
        v = r
        while not table[v]:
            v += m
        out.append(v)
    return out


def power_frob(gens, k=2):
    """Largest perfect k-power that is not representable."""
    f = frobenius(gens)
    table = reachable(gens, f)
    m = 1
    while (m + 1) ** k <= f:
        m += 1
    while m >= 1:
        v = m ** k
        if not table[v]:
            return v
        m -= 1
    raise AssertionError("1 is representable")


def min_power(gens, k=2):
    """Smallest positive perfect k-power that is representable."""
    table = reachable(gens, min(gens) ** k)
    m = 1
    while True:
        v = m ** k
        if table[v]:
            return v
        m += 1
