"""Finite Cartan matrices, Dynkin classification, positive roots and convex orders.

Convention: ``a[i][j] = <alpha_j, alpha_i^vee>``, so the simple reflection acts by
``s_i(beta) = beta - (sum_j a[i][j] beta_j) alpha_i`` and a vertex with
``a[i][j] = -2`` is the short end of a double bond.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]
Root = tuple[int, ...]


class MalformedCartan(ValueError):
    pass


class NotFiniteType(ValueError):
    def __init__(self, component: Sequence[int], reason: str = "not of finite type") -> None:
        self.component = tuple(component)
        super().__init__(f"component {[v + 1 for v in component]}: {reason}")


def as_matrix(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in a)


def check_gcm(a: Sequence[Sequence[int]]) -> Matrix:
    """Validate the generalized Cartan matrix axioms and return a tuple copy."""
    m = as_matrix(a)
    n = len(m)
    for i, row in enumerate(m):
        if len(row) != n:
            raise MalformedCartan("Cartan matrix must be square")
        if row[i] != 2:
            raise MalformedCartan(f"diagonal entry a[{i + 1}][{i + 1}] = {row[i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if row[j] > 0:
                raise MalformedCartan(f"a[{i + 1}][{j + 1}] = {row[j]} > 0")
            if (row[j] == 0) != (m[j][i] == 0):
                raise MalformedCartan(f"a[{i + 1}][{j + 1}] and a[{j + 1}][{i + 1}] vanish asymmetrically")
    return m


def components(a: Matrix) -> list[list[int]]:
    """Connected components of the Dynkin graph, each sorted, ordered by least vertex."""
    n = len(a)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if w != v and a[v][w] != 0 and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def symmetrizer(a: Matrix, comp: Sequence[int]) -> dict[int, int] | None:
    """Positive integers d_i on ``comp`` with d_i a_ij = d_j a_ji and min d_i = 1."""
    root = comp[0]
    d: dict[int, Fraction] = {root: Fraction(1)}
    stack = [root]
    while stack:
        i = stack.pop()
        for j in comp:
            if j != i and a[i][j] != 0:
                val = d[i] * a[i][j] / a[j][i]
                if j in d:
                    if d[j] != val:
                        return None
                else:
                    d[j] = val
                    stack.append(j)
    low = min(d.values())
    scaled = {i: v / low for i, v in d.items()}
    denom = 1
    for v in scaled.values():
        denom = denom * v.denominator // _gcd(denom, v.denominator)
    return {i: int(v * denom) for i, v in scaled.items()}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def is_finite_component(a: Matrix, comp: Sequence[int]) -> bool:
    d = symmetrizer(a, comp)
    if d is None:
        return False
    sym = [[Fraction(d[i] * a[i][j]) for j in comp] for i in comp]
    return all(_det([row[:k] for row in sym[:k]]) > 0 for k in range(1, len(comp) + 1))


@dataclass(frozen=True)
class ComponentType:
    """A connected component with its Dynkin label.

    ``diagram_order[k]`` is the vertex (0-based) playing the role of the
    k-th simple root in the standard numbering of the type.
    """

    vertices: tuple[int, ...]
    label: str
    diagram_order: tuple[int, ...]

    @property
    def series(self) -> str:
        return self.label[0]


def _path_from(adj: dict[int, list[int]], start: int) -> list[int]:
    path, prev, cur = [start], None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def dynkin_type(a: Matrix, comp: Sequence[int]) -> ComponentType:
    """Dynkin label of a connected finite-type component."""
    comp = list(comp)
    n = len(comp)
    if not is_finite_component(a, comp):
        raise NotFiniteType(comp)
    if n == 1:
        return ComponentType(tuple(comp), "A1", tuple(comp))
    adj = {v: [w for w in comp if w != v and a[v][w] != 0] for v in comp}
    mult = {(v, w): a[v][w] * a[w][v] for v in comp for w in adj[v]}
    d = symmetrizer(a, comp)
    assert d is not None
    ends = sorted(v for v in comp if len(adj[v]) == 1)
    if max(mult.values()) == 3:
        short = min(comp, key=lambda v: d[v])
        return ComponentType(tuple(comp), "G2", (short, adj[short][0]))
    if max(mult.values()) == 2:
        if n == 2:
            short = min(comp, key=lambda v: d[v])
            long_ = adj[short][0]
            return ComponentType(tuple(comp), "B2", (long_, short))
        (u, w) = next(e for e, m in mult.items() if m == 2)
        if n == 4 and len(adj[u]) == 2 and len(adj[w]) == 2:
            longs = [v for v in comp if d[v] == max(d.values())]
            start = next(v for v in ends if v in longs)
            return ComponentType(tuple(comp), "F4", tuple(_path_from(adj, start)))
        short_count = sum(1 for v in comp if d[v] == min(d.values()))
        # the end of the chain away from the double bond is alpha_1
        double_end = u if len(adj[u]) == 1 else w
        start = next(v for v in ends if v != double_end)
        order = tuple(_path_from(adj, start))
        label = ("B" if short_count == 1 else "C") + str(n)
        return ComponentType(tuple(comp), label, order)
    branch = [v for v in comp if len(adj[v]) == 3]
    if not branch:
        return ComponentType(tuple(comp), f"A{n}", tuple(_path_from(adj, ends[0])))
    b = branch[0]
    arms = []
    for first in adj[b]:
        arm, prev, cur = [first], b, first
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=lambda arm: (len(arm), arm[0]))
    lengths = tuple(len(arm) for arm in arms)
    if lengths[:2] == (1, 1):
        long_arm = arms[2]
        order = tuple(reversed(long_arm)) + (b, arms[0][0], arms[1][0])
        return ComponentType(tuple(comp), f"D{n}", order)
    if lengths in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        a2 = arms[0][0]
        a1, a3 = arms[1][1], arms[1][0]
        rest = tuple(arms[2])
        return ComponentType(tuple(comp), f"E{n}", (a1, a2, a3, b) + rest)
    raise NotFiniteType(comp, "unrecognized diagram")


@dataclass(frozen=True)
class Classification:
    components: tuple[ComponentType, ...]

    def labels(self) -> list[str]:
        return [c.label for c in self.components]

    def component_of(self, v: int) -> ComponentType:
        return next(c for c in self.components if v in c.vertices)


def classify(a: Sequence[Sequence[int]]) -> Classification:
    """Finite-type decomposition; raises NotFiniteType naming the offending component."""
    m = check_gcm(a)
    return Classification(tuple(dynkin_type(m, comp) for comp in components(m)))


def is_finite_type(a: Sequence[Sequence[int]]) -> bool:
    try:
        m = check_gcm(a)
    except MalformedCartan:
        return False
    return all(is_finite_component(m, comp) for comp in components(m))


# ---------------------------------------------------------------------------
# roots and the Weyl group


def coroot_pairing(a: Matrix, beta: Root, i: int) -> int:
    """<beta, alpha_i^vee>."""
    return sum(a[i][j] * b for j, b in enumerate(beta) if b)


def reflect(a: Matrix, i: int, beta: Root) -> Root:
    c = coroot_pairing(a, beta, i)
    out = list(beta)
    out[i] -= c
    return tuple(out)


def simple_root(n: int, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(n))


def height(beta: Root) -> int:
    return sum(beta)


def positive_roots(a: Sequence[Sequence[int]], cap: int = 400) -> list[Root]:
    """All positive roots, sorted by height then lexicographically (reversed)."""
    m = check_gcm(a)
    n = len(m)
    for comp in components(m):
        if not is_finite_component(m, comp):
            raise NotFiniteType(comp)
    roots = {simple_root(n, i) for i in range(n)}
    layer = sorted(roots)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                if beta == simple_root(n, i):
                    continue
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in roots:
                        p += 1
                    else:
                        break
                q = p - coroot_pairing(m, beta, i)
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        if len(roots) > cap:
            raise NotFiniteType(list(range(n)), "root closure did not terminate")
        layer = sorted(nxt)
    return sorted(roots, key=lambda r: (height(r), tuple(-x for x in r)))


def _is_positive(beta: Root) -> bool:
    return all(x >= 0 for x in beta) and any(beta)


def longest_word(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Reduced word (0-based letters) for the longest Weyl group element.

    Per component, greedily append the least vertex i with w(alpha_i) > 0;
    components are concatenated in order of their least vertex.
    """
    m = check_gcm(a)
    n = len(m)
    word: list[int] = []
    for comp in components(m):
        if not is_finite_component(m, comp):
            raise NotFiniteType(comp)
        local: list[int] = []
        while True:
            for i in comp:
                img = simple_root(n, i)
                for j in reversed(local):
                    img = reflect(m, j, img)
                if _is_positive(img):
                    local.append(i)
                    break
            else:
                break
        word.extend(local)
    return tuple(word)


def convex_order(a: Sequence[Sequence[int]], word: Sequence[int] | None = None) -> list[Root]:
    """beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}) along a reduced word of w_0."""
    m = check_gcm(a)
    n = len(m)
    if word is None:
        word = longest_word(m)
    out: list[Root] = []
    for k, i in enumerate(word):
        beta = simple_root(n, i)
        for j in reversed(word[:k]):
            beta = reflect(m, j, beta)
        if not _is_positive(beta):
            raise AssertionError(f"reduced word produced non-positive root {beta}")
        if beta in out:
            raise AssertionError(f"reduced word repeats root {beta}")
        out.append(beta)
    return out


@dataclass(frozen=True)
class RootSystemData:
    cartan: Matrix
    positive_roots: tuple[Root, ...]
    reduced_word: tuple[int, ...]
    convex_order: tuple[Root, ...]
    classification: Classification
    per_component: tuple[tuple[str, int], ...] = field(default=())

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def component_index(self, beta: Root) -> int:
        """Index into ``classification.components`` of the support of ``beta``."""
        support = {i for i, b in enumerate(beta) if b}
        for k, comp in enumerate(self.classification.components):
            if support <= set(comp.vertices):
                return k
        raise ValueError(f"root {beta} is not supported in a single component")


def root_system(a: Sequence[Sequence[int]]) -> RootSystemData:
    m = check_gcm(a)
    cls = classify(m)
    roots = positive_roots(m)
    word = longest_word(m)
    order = convex_order(m, word)
    if set(order) != set(roots) or len(order) != len(roots):
        raise AssertionError("convex order is not a numeration of the positive roots")
    per = []
    for comp in cls.components:
        verts = set(comp.vertices)
        count = sum(1 for r in roots if {i for i, b in enumerate(r) if b} <= verts)
        per.append((comp.label, count))
    return RootSystemData(m, tuple(roots), word, tuple(order), cls, tuple(per))


CLASSICAL_COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
                    "D": lambda n: n * (n - 1), "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


def cartan_of_type(label: str) -> Matrix:
    """Cartan matrix of a connected type in its standard numbering."""
    series, n = label[0], int(label[1:])
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j], a[j][i] = aij, aji

    if series in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if series == "B" and n >= 2:
            link(n - 2, n - 1, -1, -2)
        if series == "C" and n >= 2:
            link(n - 2, n - 1, -2, -1)
    elif series == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif series == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif series == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif series == "G":
        link(0, 1, -3, -1)
    else:
        raise ValueError(f"unknown type {label}")
    return as_matrix(a)


def block_diagonal(*blocks: Sequence[Sequence[int]]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return as_matrix(out)
