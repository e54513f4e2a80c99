from __future__ import annotations


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller index as root so representatives are canonical
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def reps(self) -> tuple[int, ...]:
        return tuple(self.find(i) for i in range(len(self.parent)))


def close_multiplicative(n: int, mul, gens, pairs) -> tuple[int, ...]:
    """Least multiplicative equivalence on range(n) containing `pairs`.

    Closing the merge edges under multiplication by a generating set is
    enough: every class is spanned by its merge edges.
    """
    uf = UnionFind(n)
    work = []
    for a, b in pairs:
        if uf.union(a, b):
            work.append((a, b))
    while work:
        a, b = work.pop()
        for g in gens:
            x, y = mul(a, g), mul(b, g)
            if uf.union(x, y):
                work.append((x, y))
    return uf.reps()
