"""Finite groups by multiplication table.

Tables are validated eagerly (identity, inverses, associativity).
Constructors cover cyclic groups, direct products and the unitriangular
group over F_p (the smallest interesting nonabelian p-groups); anything
else can be loaded from a table file:

    order: n
    table:
    <n rows of n indices>
"""

from __future__ import annotations

from .errors import GroupTableError, NotAPGroup, NotNormal, ParseError
from .fields import is_prime


class FiniteGroupTable:
    __slots__ = ("order", "labels", "table", "identity", "inverse", "name")

    def __init__(self, table, labels=None, name="G"):
        n = len(table)
        table = tuple(tuple(int(x) for x in row) for row in table)
        for row in table:
            if len(row) != n or any(x < 0 or x >= n for x in row):
                raise GroupTableError("table is not an n×n array of indices")
        labels = tuple(labels) if labels else tuple(f"g{i}" for i in range(n))
        if len(labels) != n:
            raise GroupTableError("label count mismatch")
        ident = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupTableError("no identity element")
        inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == ident and table[b][a] == ident:
                    inverse[a] = b
                    break
            if inverse[a] is None:
                raise GroupTableError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                tab = table[a][b]
                for c in range(n):
                    if table[tab][c] != table[a][table[b][c]]:
                        raise GroupTableError(f"associativity fails at ({a},{b},{c})")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverse", tuple(inverse))
        object.__setattr__(self, "name", name)

    def __setattr__(self, *_):
        raise AttributeError("FiniteGroupTable is immutable")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self):
        return range(self.order)

    def __repr__(self):
        return f"FiniteGroupTable({self.name}, order {self.order})"

    # -- structure -------------------------------------------------------------

    def p_of_order(self) -> int | None:
        """The prime p with |G| = p^k, or None (order 1 gives None too)."""
        n = self.order
        if n == 1:
            return None
        for p in range(2, n + 1):
            if n % p == 0:
                while n % p == 0:
                    n //= p
                return p if n == 1 and is_prime(p) else None
        return None

    def require_p_group(self, p: int | None = None) -> int:
        """Check |G| = p^k; returns p.  Order 1 passes for any prime."""
        if self.order == 1:
            if p is None:
                raise NotAPGroup("trivial group: specify the prime p explicitly")
            return p
        q = self.p_of_order()
        if q is None:
            raise NotAPGroup(f"group order {self.order} is not a prime power")
        if p is not None and p != q:
            raise NotAPGroup(f"group order {self.order} is not a power of {p}")
        return q

    def subgroup_elements(self, seed) -> tuple:
        """Closure of seed ∪ {identity}; raises if the seed indices are bad."""
        cur = {self.identity}
        cur.update(int(x) for x in seed)
        if any(x < 0 or x >= self.order for x in cur):
            raise GroupTableError("subgroup seed index out of range")
        while True:
            nxt = set(cur)
            for a in cur:
                nxt.add(self.inverse[a])
                for b in cur:
                    nxt.add(self.table[a][b])
            if nxt == cur:
                return tuple(sorted(cur))
            cur = nxt

    def is_subgroup(self, elements) -> bool:
        s = set(elements)
        return (self.identity in s
                and all(self.inverse[a] in s for a in s)
                and all(self.table[a][b] in s for a in s for b in s))

    def is_normal(self, elements) -> bool:
        s = set(elements)
        return all(self.table[self.table[g][h]][self.inverse[g]] in s
                   for g in range(self.order) for h in s)

    def quotient(self, subgroup_elements):
        """(G/H table, coset index of each g, representative of each coset)."""
        h = tuple(sorted(set(subgroup_elements)))
        if not self.is_subgroup(h):
            raise GroupTableError("not a subgroup")
        if not self.is_normal(h):
            raise NotNormal("subgroup is not normal")
        coset_of = [None] * self.order
        reps = []
        for g in range(self.order):
            if coset_of[g] is None:
                idx = len(reps)
                reps.append(g)
                for x in h:
                    coset_of[self.table[x][g]] = idx  # left coset Hg
        m = len(reps)
        table = [[coset_of[self.table[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
        labels = tuple(self.labels[r] + "H" for r in reps)
        q = FiniteGroupTable(table, labels, name=f"{self.name}/H")
        return q, tuple(coset_of), tuple(reps)


def trivial_group() -> FiniteGroupTable:
    return FiniteGroupTable(((0,),), ("1",), name="1")


def cyclic(n: int) -> FiniteGroupTable:
    if n < 1:
        raise GroupTableError("cyclic group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = tuple("1" if i == 0 else f"a{i}" for i in range(n))
    return FiniteGroupTable(table, labels, name=f"Z{n}")


def direct_product(g: FiniteGroupTable, h: FiniteGroupTable) -> FiniteGroupTable:
    n, m = g.order, h.order
    idx = lambda a, b: a * m + b
    table = [[0] * (n * m) for _ in range(n * m)]
    for a1 in range(n):
        for b1 in range(m):
            for a2 in range(n):
                for b2 in range(m):
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g.table[a1][a2], h.table[b1][b2])
    labels = tuple(f"({g.labels[a]},{h.labels[b]})" for a in range(n) for b in range(m))
    return FiniteGroupTable(table, labels, name=f"{g.name}x{h.name}")


def unitriangular(p: int) -> FiniteGroupTable:
    """Upper unitriangular 3×3 matrices over F_p; order p³, nonabelian."""
    if not is_prime(p):
        raise GroupTableError("p must be prime")
    elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index = {e: i for i, e in enumerate(elems)}
    # (a,b,c) = I + a·E12 + b·E23 + c·E13
    table = [[index[((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)]
              for (a2, b2, c2) in elems] for (a1, b1, c1) in elems]
    labels = tuple(f"u{a}{b}{c}" for (a, b, c) in elems)
    return FiniteGroupTable(table, labels, name=f"UT3({p})")


_NAMED_CACHE: dict[str, FiniteGroupTable] = {}


def group_by_name(name: str) -> FiniteGroupTable:
    """Named groups: '1', 'Z<n>', products like 'Z2xZ2xZ4', 'UT3(p)'."""
    key = name.strip()
    if key in _NAMED_CACHE:
        return _NAMED_CACHE[key]
    if key == "1":
        g = trivial_group()
    elif key.startswith("UT3(") and key.endswith(")"):
        g = unitriangular(int(key[4:-1]))
    else:
        parts = key.split("x")
        factors = []
        for part in parts:
            if not part.startswith("Z") or not part[1:].isdigit():
                raise GroupTableError(f"unknown group name {name!r}")
            factors.append(cyclic(int(part[1:])))
        g = factors[0]
        for f in factors[1:]:
            g = direct_product(g, f)
        g = FiniteGroupTable(g.table, g.labels, name=key)
    _NAMED_CACHE[key] = g
    return g


def parse_group_table(text: str) -> FiniteGroupTable:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("order:"):
        raise ParseError("expected 'order: n' on the first line", 1)
    n = int(lines[0].split(":", 1)[1])
    if len(lines) < 2 or lines[1] != "table:":
        raise ParseError("expected 'table:' on the second line", 2)
    rows = []
    for i, ln in enumerate(lines[2:2 + n]):
        row = [int(x) for x in ln.split()]
        if len(row) != n:
            raise ParseError(f"expected {n} indices", i + 3)
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"expected {n} table rows")
    return FiniteGroupTable(rows)


def render_group_table(g: FiniteGroupTable) -> str:
    lines = [f"order: {g.order}", "table:"]
    lines += [" ".join(str(x) for x in row) for row in g.table]
    return "\n".join(lines) + "\n"
