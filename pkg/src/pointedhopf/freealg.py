"""The smash algebra ``k<a_1..a_theta> # kG`` in normal form ``g * word``.

Group letters are pushed left with ``a_j y = chi_j(y)^{-1} y a_j``, so

    (g u)(h v) = chi_u(h)^{-1} (g h)(u v),

where ``chi_u`` is the product of the characters of the letters of ``u``.
Relations of the lifted algebra live here, and ``truncated_quotient_dim``
computes a degree-truncated quotient of the smash algebra by them.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .abelian import AbelianGroup, BudgetExceeded, Character, GroupElement, pair
from .exactfield import CycloNum, RootOfUnity, RowReducer, lcm
from .nichols import TensorElem

Word = tuple[int, ...]
Key = tuple[tuple[int, ...], Word]  # (group exponents, word)
DEFAULT_QUOTIENT_BUDGET = 1 << 16


class NotBihomogeneous(ValueError):
    pass


class InvalidLinking(ValueError):
    """lambda_ij != 0 on a pair that is not linkable."""


# ---------------------------------------------------------------------------
# context


@dataclass(frozen=True)
class SmashContext:
    group: AbelianGroup
    g: tuple[GroupElement, ...]
    chi: tuple[Character, ...]

    @classmethod
    def of(cls, d) -> SmashContext:
        return cls(d.group, tuple(d.g), tuple(d.chi))

    @property
    def theta(self) -> int:
        return len(self.g)

    @property
    def L(self) -> int:
        return self.group.exponent

    @cached_property
    def chi_exp(self) -> tuple[tuple[int, ...], ...]:
        """``chi_exp[j][h]``: exponent in zeta_L of ``chi_j(Y_h)``."""
        L = self.L
        return tuple(tuple(L // m * c % L for m, c in zip(self.group.orders, ch.exponents)) for ch in self.chi)

    def char_of_word(self, w: Word) -> tuple[int, ...]:
        """Exponent vector (per generator, scaled to L) of ``chi_w``."""
        s = [0] * self.group.rank
        for j in w:
            for h, e in enumerate(self.chi_exp[j]):
                s[h] += e
        return tuple(x % self.L for x in s)

    def char_value(self, w: Word, gexp: Sequence[int]) -> int:
        """Exponent in zeta_L of ``chi_w(g)``."""
        return sum(c * e for c, e in zip(self.char_of_word(w), gexp)) % self.L

    def group_of_word(self, w: Word) -> tuple[int, ...]:
        s = [0] * self.group.rank
        for j in w:
            for h, e in enumerate(self.g[j].exponents):
                s[h] += e
        return tuple(x % m for x, m in zip(s, self.group.orders))

    def gmul(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.group.orders))


@dataclass(frozen=True)
class YDBidegree:
    grp: GroupElement
    chr: Character

    def __mul__(self, other: YDBidegree) -> YDBidegree:
        return YDBidegree(self.grp * other.grp, self.chr * other.chr)

    def __pow__(self, n: int) -> YDBidegree:
        return YDBidegree(self.grp ** n, self.chr ** n)


# ---------------------------------------------------------------------------
# elements


@dataclass
class AlgElem:
    ctx: SmashContext
    terms: dict[Key, CycloNum] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {k: v for k, v in self.terms.items() if not v.is_zero()}

    # constructors
    @classmethod
    def zero(cls, ctx: SmashContext) -> AlgElem:
        return cls(ctx)

    @classmethod
    def monomial(cls, ctx: SmashContext, word: Sequence[int] = (), gexp: Sequence[int] | None = None,
                 coeff: CycloNum | int = 1) -> AlgElem:
        gk = tuple(gexp) if gexp is not None else (0,) * ctx.group.rank
        gk = tuple(e % m for e, m in zip(gk, ctx.group.orders))
        c = coeff if isinstance(coeff, CycloNum) else CycloNum.rational(coeff, ctx.L)
        return cls(ctx, {(gk, tuple(word)): c})

    @classmethod
    def one(cls, ctx: SmashContext) -> AlgElem:
        return cls.monomial(ctx)

    @classmethod
    def a(cls, ctx: SmashContext, i: int) -> AlgElem:
        return cls.monomial(ctx, (i,))

    @classmethod
    def y(cls, ctx: SmashContext, g: GroupElement) -> AlgElem:
        return cls.monomial(ctx, (), g.exponents)

    # arithmetic
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: AlgElem) -> AlgElem:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return AlgElem(self.ctx, out)

    def __neg__(self) -> AlgElem:
        return AlgElem(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: AlgElem) -> AlgElem:
        return self + (-other)

    def scale(self, c: CycloNum | int) -> AlgElem:
        return AlgElem(self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: AlgElem | CycloNum | int) -> AlgElem:
        if not isinstance(other, AlgElem):
            return self.scale(other)
        ctx = self.ctx
        L = ctx.L
        out: dict[Key, CycloNum] = {}
        for (g, u), c in self.terms.items():
            for (h, v), d in other.terms.items():
                e = -ctx.char_value(u, h) % L
                val = c * d
                if e:
                    val = val * CycloNum.root(L, e)
                key = (ctx.gmul(g, h), u + v)
                out[key] = out[key] + val if key in out else val
        return AlgElem(ctx, out)

    __rmul__ = scale

    def __pow__(self, n: int) -> AlgElem:
        out = AlgElem.one(self.ctx)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return (self - other).is_zero()

    # gradings
    def max_degree(self) -> int:
        return max((len(w) for _, w in self.terms), default=0)

    def is_word_homogeneous(self) -> bool:
        return len({len(w) for _, w in self.terms}) <= 1

    def bidegree(self) -> YDBidegree:
        ctx = self.ctx
        seen = set()
        for g, w in self.terms:
            seen.add((ctx.gmul(g, ctx.group_of_word(w)), ctx.char_of_word(w)))
        if len(seen) != 1:
            raise NotBihomogeneous(f"element has {len(seen)} distinct bidegrees")
        grp, chr_scaled = seen.pop()
        L = ctx.L
        chr_exps = tuple(c // (L // m) for c, m in zip(chr_scaled, ctx.group.orders))
        return YDBidegree(ctx.group.element(grp), ctx.group.character(chr_exps))

    def group_free(self) -> bool:
        return all(not any(g) for g, _ in self.terms)

    def to_tensor(self) -> TensorElem:
        """Image in T(V) of a group-free, word-homogeneous element."""
        if not self.group_free() or not self.is_word_homogeneous():
            raise ValueError("only group-free homogeneous elements map to T(V)")
        n = self.max_degree()
        return TensorElem(n, self.ctx.L, {w: c for (_, w), c in self.terms.items()})

    def __str__(self) -> str:
        return format_elem(self)


def format_elem(x: AlgElem) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for (g, w), c in sorted(x.terms.items(), key=lambda kv: (-len(kv[0][1]), kv[0][1], kv[0][0])):
        mon = []
        if any(g):
            mon.append("y(" + ",".join(map(str, g)) + ")")
        mon.extend(f"a{i + 1}" for i in w)
        coeff = str(c)
        body = "*".join(mon) if mon else "1"
        if coeff == "1":
            parts.append(body)
        else:
            parts.append(f"({coeff})*{body}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# braided commutators and root vectors


def braided_commutator(u: AlgElem, v: AlgElem) -> AlgElem:
    """``[u, v]_c = u v - <chi_v, g_u> v u`` for bihomogeneous u, v."""
    bu, bv = u.bidegree(), v.bidegree()
    L = u.ctx.L
    coeff = CycloNum.root(L, pair(bv.chr, bu.grp).exponent_in(L))
    return u * v - (v * u).scale(coeff)


def ad_c_power(i: int, m: int, v: AlgElem) -> AlgElem:
    ai = AlgElem.a(v.ctx, i)
    for _ in range(m):
        v = braided_commutator(ai, v)
    return v


def serre_element(ctx: SmashContext, cartan: Sequence[Sequence[int]], i: int, j: int) -> AlgElem:
    return ad_c_power(i, 1 - cartan[i][j], AlgElem.a(ctx, j))


def root_vectors(d, rs) -> list[AlgElem]:
    """``x_beta`` for the positive roots of ``rs`` in convex order.

    For non-simple beta take the largest i with beta - alpha_i a positive root
    preceding beta in the convex order; bracket the two pieces in convex order.
    """
    ctx = d if isinstance(d, SmashContext) else SmashContext.of(d)
    return [x for _, x in root_vector_table(ctx, rs)]


def root_vector_table(ctx: SmashContext, rs) -> list[tuple[tuple[int, ...], AlgElem]]:
    order = list(rs.convex_order)
    pos = {beta: k for k, beta in enumerate(order)}
    n = len(rs.cartan)
    built: dict[tuple[int, ...], AlgElem] = {}
    for beta in sorted(order, key=lambda r: (sum(r), pos[r])):
        if sum(beta) == 1:
            built[beta] = AlgElem.a(ctx, beta.index(1))
            continue
        cands = []
        for i in range(n):
            if beta[i] == 0:
                continue
            rest = tuple(b - (k == i) for k, b in enumerate(beta))
            if rest in pos:
                cands.append((i, rest))
        preferred = [(i, r) for i, r in cands if pos[r] < pos[beta]]
        i, rest = max(preferred or cands)
        simple = tuple(int(k == i) for k in range(n))
        if pos[rest] < pos[simple]:
            built[beta] = braided_commutator(built[rest], built[simple])
        else:
            built[beta] = braided_commutator(built[simple], built[rest])
    return [(beta, built[beta]) for beta in order]


# ---------------------------------------------------------------------------
# relations


GEN_A = "a"
GEN_Y = "y"


@dataclass(frozen=True)
class Relation:
    """A relation as a sum of coefficient times a word in the generators.

    Letters are ("a", i) or ("y", h) with h a generator index of the group.
    ``element`` is its normal form in the smash algebra (zero for relations
    that the normal form already enforces).
    """

    kind: str
    label: str
    terms: tuple[tuple[CycloNum, tuple[tuple[str, int], ...]], ...]
    element: AlgElem

    def __str__(self) -> str:
        parts = []
        for c, letters in self.terms:
            mon = "*".join(f"{t}{k + 1}" for t, k in letters) or "1"
            parts.append(mon if str(c) == "1" else f"({c})*{mon}")
        return " + ".join(parts) if parts else "0"


def _relation_from_elem(kind: str, label: str, x: AlgElem) -> Relation:
    terms = []
    for (g, w), c in sorted(x.terms.items(), key=lambda kv: (-len(kv[0][1]), kv[0][1], kv[0][0])):
        letters = []
        for h, e in enumerate(g):
            letters.extend([(GEN_Y, h)] * e)
        letters.extend((GEN_A, i) for i in w)
        terms.append((c, tuple(letters)))
    return Relation(kind, label, tuple(terms), x)


@dataclass
class RelationSet:
    relations: list[Relation] = field(default_factory=list)

    def __iter__(self):
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def __add__(self, other: RelationSet) -> RelationSet:
        return RelationSet(self.relations + other.relations)

    def of_kind(self, kind: str) -> list[Relation]:
        return [r for r in self.relations if r.kind == kind]

    def effective(self) -> list[AlgElem]:
        """Relations not already enforced by the normal form."""
        return [r.element for r in self.relations if not r.element.is_zero()]


def group_relations(d) -> RelationSet:
    """``y_h^{M_h} = 1`` and ``y_h a_j = chi_j(y_h) a_j y_h`` (both hold in normal form)."""
    ctx = d if isinstance(d, SmashContext) else SmashContext.of(d)
    G = ctx.group
    L = ctx.L
    out = []
    for h, m in enumerate(G.orders):
        yh = AlgElem.y(ctx, G.generator(h))
        x = yh ** m - AlgElem.one(ctx)
        one = CycloNum.one(L)
        out.append(Relation("group-order", f"y{h + 1}^{m} - 1",
                            ((one, ((GEN_Y, h),) * m), (-one, ())), x))
    for h in range(G.rank):
        yh = AlgElem.y(ctx, G.generator(h))
        for j in range(ctx.theta):
            aj = AlgElem.a(ctx, j)
            c = CycloNum.root(L, ctx.chi_exp[j][h])
            x = yh * aj - (aj * yh).scale(c)
            out.append(Relation("smash", f"y{h + 1} a{j + 1} - chi{j + 1}(y{h + 1}) a{j + 1} y{h + 1}",
                                ((CycloNum.one(L), ((GEN_Y, h), (GEN_A, j))), (-c, ((GEN_A, j), (GEN_Y, h)))), x))
    return RelationSet(out)


def serre_relations(d, cartan: Sequence[Sequence[int]] | None = None, pairs: str = "connected",
                    blocks: Sequence[Sequence[int]] | None = None) -> RelationSet:
    """Quantum Serre elements ``(ad_c a_i)^{1 - a_ij} a_j``.

    ``pairs="connected"`` keeps i ~ j (the lifted algebra); ``"all"`` keeps every
    i != j (the Nichols algebra presentation).
    """
    ctx = d if isinstance(d, SmashContext) else SmashContext.of(d)
    cartan = cartan if cartan is not None else d.cartan
    if blocks is None and pairs == "connected":
        blocks = [list(b) for b in d.components.blocks]
    comp = {}
    for k, blk in enumerate(blocks or []):
        for v in blk:
            comp[v] = k
    out = []
    for i in range(ctx.theta):
        for j in range(ctx.theta):
            if i == j:
                continue
            if pairs == "connected" and comp.get(i) != comp.get(j):
                continue
            x = serre_element(ctx, cartan, i, j)
            out.append(_relation_from_elem("serre", f"(ad a{i + 1})^{1 - cartan[i][j]} a{j + 1}", x))
    return RelationSet(out)


def root_power_relations(d, rs, N: Mapping[tuple[int, ...], int] | None = None) -> RelationSet:
    """``x_beta^{N_I}`` for every positive root."""
    ctx = d if isinstance(d, SmashContext) else SmashContext.of(d)
    out = []
    for beta, x in root_vector_table(ctx, rs):
        n_i = N[beta] if N is not None else d.components.N[rs.component_index(beta)]
        lab = "+".join(f"{c}a{k + 1}" if c > 1 else f"a{k + 1}" for k, c in enumerate(beta) if c)
        out.append(_relation_from_elem("root-power", f"x[{lab}]^{n_i}", x ** n_i))
    return RelationSet(out)


def linking_relations(d, lam: Mapping[tuple[int, int], CycloNum], is_linkable=None) -> RelationSet:
    """``a_i a_j - chi_j(g_i) a_j a_i - lambda_ij (1 - g_i g_j)`` for i < j, i not ~ j."""
    ctx = d if isinstance(d, SmashContext) else SmashContext.of(d)
    L = ctx.L
    for (i, j), v in lam.items():
        v = v if isinstance(v, CycloNum) else CycloNum.rational(v)
        if not v.is_zero() and is_linkable is not None and not is_linkable(i, j):
            raise InvalidLinking(f"lambda_{i + 1}{j + 1} != 0 but vertices {i + 1}, {j + 1} are not linkable")
    out = []
    blocks = d.components.blocks
    comp = {v: k for k, blk in enumerate(blocks) for v in blk}
    for i in range(ctx.theta):
        for j in range(i + 1, ctx.theta):
            if comp[i] == comp[j]:
                continue
            ai, aj = AlgElem.a(ctx, i), AlgElem.a(ctx, j)
            bij = CycloNum.root(L, pair(ctx.chi[j], ctx.g[i]).exponent_in(L))
            x = ai * aj - (aj * ai).scale(bij)
            v = lam.get((i, j), 0)
            v = v if isinstance(v, CycloNum) else CycloNum.rational(v)
            if not v.is_zero():
                gij = ctx.g[i] * ctx.g[j]
                x = x - (AlgElem.one(ctx) - AlgElem.y(ctx, gij)).scale(v)
            out.append(_relation_from_elem("linking", f"a{i + 1} a{j + 1} - b{i + 1}{j + 1} a{j + 1} a{i + 1} = lambda{i + 1}{j + 1}(1 - g{i + 1}g{j + 1})", x))
    return RelationSet(out)


def lifted_relations(d, rs, lam: Mapping[tuple[int, int], CycloNum] | None = None, is_linkable=None) -> RelationSet:
    return (group_relations(d) + serre_relations(d) + linking_relations(d, lam or {}, is_linkable)
            + root_power_relations(d, rs))


def nichols_relations(d, rs) -> RelationSet:
    return serre_relations(d, pairs="all") + root_power_relations(d, rs)


# ---------------------------------------------------------------------------
# truncated quotient
#
# kG is split by the idempotents e_chi.  Writing group letters on the right,
# the slice J e_chi of the ideal is spanned by u r v e_chi for words u, v and
# relations r, and g w v e_chi = chi_w(g) chi_v(g) chi(g) w v e_chi.  So each
# character contributes a subspace of the free algebra, spanned by
# u * r_psi * v where r_psi replaces every g*w by chi_w(g) psi(g) w and
# psi = chi * chi_v.


@dataclass(frozen=True)
class QuotientResult:
    D: int
    dims: tuple[int, ...]
    monomials: int
    stabilized: bool
    previous: tuple[int, ...] | None = None

    @property
    def total(self) -> int:
        return sum(self.dims)


def _specialize(ctx: SmashContext, r: AlgElem, psi: Sequence[int]) -> tuple[tuple[Word, CycloNum], ...]:
    """Terms (word, coeff) of r_psi; psi is given scaled to L."""
    L = ctx.L
    acc: dict[Word, list] = {}
    for (g, w), c in r.terms.items():
        e = (ctx.char_value(w, g) + sum(p * x for p, x in zip(psi, g))) % L
        val = c if not e else c * CycloNum.root(L, e)
        acc[w] = acc[w] + val if w in acc else val
    return tuple((w, v) for w, v in sorted(acc.items()) if not v.is_zero())


def _words_upto(theta: int, D: int) -> list[Word]:
    out: list[Word] = []
    for n in range(D + 1):
        out.extend(itertools.product(range(theta), repeat=n))
    return out


def _grading_map(theta: int, link_pairs: Sequence[tuple[int, int]]):
    """A grading of words that every relation respects.

    It is the multidegree modulo ``e_i + e_j`` over linked pairs: on each
    connected piece of the link graph, a signed degree count for a bipartite
    piece and the parity of the total degree otherwise.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(theta)}
    for i, j in link_pairs:
        adj[i].append(j)
        adj[j].append(i)
    sign: dict[int, int] = {}
    pieces: list[tuple[list[int], bool]] = []
    for start in range(theta):
        if start in sign:
            continue
        sign[start] = 1
        stack, piece, bip = [start], [start], True
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in sign:
                    sign[w] = -sign[v]
                    stack.append(w)
                    piece.append(w)
                elif sign[w] == sign[v]:
                    bip = False
        pieces.append((sorted(piece), bip))

    def grade(w: Word) -> tuple[int, ...]:
        m = [0] * theta
        for i in w:
            m[i] += 1
        out = []
        for piece, bip in pieces:
            if bip:
                out.append(sum(sign[v] * m[v] for v in piece))
            else:
                out.append(sum(m[v] for v in piece) % 2)
        return tuple(out)

    return grade


def _slice_dims(ctx: SmashContext, rels: Sequence[AlgElem], psi0: Sequence[int], D: int,
                link_pairs: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Associated-graded quotient dims for the character slice ``psi0``."""
    theta, L = ctx.theta, ctx.L
    words = _words_upto(theta, D)
    # higher degrees first so leading (top-degree) terms become pivots
    order = sorted(words, key=lambda w: (-len(w), w))
    col = {w: k for k, w in enumerate(order)}
    grade = _grading_map(theta, link_pairs)
    spec_cache: dict[tuple[int, tuple[int, ...]], tuple] = {}
    reducers: dict[tuple[int, ...], RowReducer] = {}
    for ridx, r in enumerate(rels):
        top = r.max_degree()
        for lu in range(D - top + 1):
            for lv in range(D - top - lu + 1):
                for v in itertools.product(range(theta), repeat=lv):
                    cv = ctx.char_of_word(v)
                    psi = tuple((a + b) % L for a, b in zip(psi0, cv))
                    key = (ridx, psi)
                    spec = spec_cache.get(key)
                    if spec is None:
                        spec = spec_cache[key] = _specialize(ctx, r, psi)
                    if not spec:
                        continue
                    for u in itertools.product(range(theta), repeat=lu):
                        row = {}
                        for w, c in spec:
                            row[col[u + w + v]] = c
                        cls = grade(u + spec[0][0] + v)
                        reducers.setdefault(cls, RowReducer()).add(row)
    pivots_by_degree = [0] * (D + 1)
    for red in reducers.values():
        for c in red.pivots:
            pivots_by_degree[len(order[c])] += 1
    return tuple(theta ** n - pivots_by_degree[n] for n in range(D + 1))


def _char_classes(ctx: SmashContext, rels: Sequence[AlgElem]) -> dict[tuple[int, ...], int]:
    """Group characters by their values on the group elements occurring in rels.

    Characters agreeing there produce identical slices.  Returns representative
    (scaled to L) -> multiplicity.
    """
    G = ctx.group
    L = ctx.L
    used = sorted({g for r in rels for g, _ in r.terms if any(g)})
    classes: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}
    for exps in itertools.product(*(range(m) for m in G.orders)):
        psi = tuple(L // m * c % L for m, c in zip(G.orders, exps))
        # values of psi on the subgroup generated by used elements and all chi_w
        sig = tuple(sum(p * x for p, x in zip(psi, g)) % L for g in used)
        if sig in classes:
            rep, k = classes[sig]
            classes[sig] = (rep, k + 1)
        else:
            classes[sig] = (psi, 1)
    return {rep: k for rep, k in classes.values()}


def _check_quotient_budget(ctx: SmashContext, D: int, budget: int) -> None:
    size = ctx.group.size * ctx.theta ** D
    if size > budget:
        raise BudgetExceeded(f"|G| * theta^D = {size} exceeds budget {budget}")


def _quotient_at(ctx: SmashContext, rels: Sequence[AlgElem], D: int, link_pairs, threads: int) -> tuple[int, ...]:
    classes = _char_classes(ctx, rels)
    reps = sorted(classes)

    def run(psi):
        return _slice_dims(ctx, rels, psi, D, link_pairs)

    if threads > 1 and len(reps) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, reps))
    else:
        results = [run(psi) for psi in reps]
    total = [0] * (D + 1)
    for psi, dims in zip(reps, results):
        for n, x in enumerate(dims):
            total[n] += classes[psi] * x
    return tuple(total)


def truncated_quotient_dim(rels: RelationSet | Sequence[AlgElem], d, D: int, top_pbw_degree: int | None = None,
                           budget: int = DEFAULT_QUOTIENT_BUDGET, threads: int = 1) -> QuotientResult:
    """Dimensions per a-degree of the smash algebra modulo the degree-D slice of the ideal.

    ``stabilized`` requires the answers at D and D-1 to agree in degrees < D and
    the top PBW degree (if given) to be below D.
    """
    return truncated_quotient_series(rels, d, D, D, top_pbw_degree, budget, threads)[-1]


def truncated_quotient_series(rels: RelationSet | Sequence[AlgElem], d, D_min: int, D_max: int,
                              top_pbw_degree: int | None = None, budget: int = DEFAULT_QUOTIENT_BUDGET,
                              threads: int = 1) -> list[QuotientResult]:
    """``truncated_quotient_dim`` for D = D_min..D_max, sharing the work between consecutive D."""
    ctx = d if isinstance(d, SmashContext) else SmashContext.of(d)
    _check_quotient_budget(ctx, D_max, budget)
    elems = rels.effective() if isinstance(rels, RelationSet) else [r for r in rels if not r.is_zero()]
    link_pairs = _inhomogeneous_pairs(ctx, elems)
    dims = {}
    for D in range(max(D_min - 1, 0), D_max + 1):
        dims[D] = _quotient_at(ctx, elems, D, link_pairs, threads)
    out = []
    for D in range(D_min, D_max + 1):
        prev = dims.get(D - 1)
        stable = prev is not None and dims[D][:D] == prev
        if top_pbw_degree is not None:
            stable = stable and top_pbw_degree < D
        monomials = ctx.group.size * sum(ctx.theta ** n for n in range(D + 1))
        out.append(QuotientResult(D, dims[D], monomials, stable, prev))
    return out


def _inhomogeneous_pairs(ctx: SmashContext, elems: Iterable[AlgElem]) -> list[tuple[int, int]]:
    """Pairs (i, j) whose degree-2 word meets a degree-0 term in some relation."""
    pairs = set()
    for r in elems:
        degs = {len(w) for _, w in r.terms}
        if len(degs) > 1:
            for _, w in r.terms:
                if len(w) == 2 and w[0] != w[1]:
                    pairs.add(tuple(sorted(w)))
    return sorted(pairs)


def lifted_dimension_formula(group_size: int, rs, N: Sequence[int]) -> int:
    out = group_size
    for beta in rs.positive_roots:
        out *= N[rs.component_index(beta)]
    return out


def top_pbw_degree(rs, N: Sequence[int]) -> int:
    return sum((N[rs.component_index(beta)] - 1) * sum(beta) for beta in rs.positive_roots)
