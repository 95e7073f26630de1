"""Finite abelian groups given as explicit products of cyclic groups.

A group is ``Z/M_1 + ... + Z/M_s``; elements and characters are exponent
vectors.  Group law is written multiplicatively, matching the usual notation
``g_i g_j`` and ``chi_i chi_j``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator, Sequence

from .exactfield import RootOfUnity, lcm

DEFAULT_GROUP_BUDGET = 1_000_000


class GroupMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured size budget."""


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", tuple(int(m) for m in self.orders))
        if any(m < 2 for m in self.orders):
            raise ValueError(f"cyclic factor orders must be >= 2, got {self.orders}")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders)

    def element(self, exps: Sequence[int]) -> GroupElement:
        return GroupElement(self, tuple(exps))

    def character(self, exps: Sequence[int]) -> Character:
        return Character(self, tuple(exps))

    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    def trivial_character(self) -> Character:
        return Character(self, (0,) * self.rank)

    def generator(self, h: int) -> GroupElement:
        e = [0] * self.rank
        e[h] = 1
        return GroupElement(self, tuple(e))

    def __str__(self) -> str:
        if not self.orders:
            return "1"
        return " x ".join(f"Z/{m}" for m in self.orders)


def _reduce(group: AbelianGroup, exps: Sequence[int]) -> tuple[int, ...]:
    if len(exps) != group.rank:
        raise ValueError(f"exponent vector {tuple(exps)} has length {len(exps)}, group rank is {group.rank}")
    return tuple(int(e) % m for e, m in zip(exps, group.orders))


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", _reduce(self.group, self.exponents))

    def _check(self, other: GroupElement) -> None:
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise GroupMismatch("group elements from different groups")

    def __mul__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, n: int) -> GroupElement:
        return GroupElement(self.group, tuple(a * n for a in self.exponents))

    def inverse(self) -> GroupElement:
        return self ** -1

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"


@dataclass(frozen=True)
class Character:
    """``<chi, Y_h> = zeta_{M_h}^{c_h}`` on the chosen generators ``Y_h``."""

    group: AbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", _reduce(self.group, self.exponents))

    def __mul__(self, other: Character) -> Character:
        if not isinstance(other, Character) or other.group != self.group:
            raise GroupMismatch("characters of different groups")
        return Character(self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, n: int) -> Character:
        return Character(self.group, tuple(a * n for a in self.exponents))

    def inverse(self) -> Character:
        return self ** -1

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __call__(self, g: GroupElement) -> RootOfUnity:
        return pair(self, g)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"


def pair(chi: Character, g: GroupElement) -> RootOfUnity:
    """The pairing ``<chi, g>`` as a root of unity of order dividing exp(G)."""
    if chi.group != g.group:
        raise GroupMismatch("character and element belong to different groups")
    L = chi.group.exponent
    k = sum((L // m) * c * e for m, c, e in zip(chi.group.orders, chi.exponents, g.exponents))
    return RootOfUnity(L, k)


def element_order(g: GroupElement) -> int:
    return lcm(*(m // gcd(e, m) for m, e in zip(g.group.orders, g.exponents)))


def character_order(chi: Character) -> int:
    return lcm(*(m // gcd(c, m) for m, c in zip(chi.group.orders, chi.exponents)))


def _check_budget(G: AbelianGroup, budget: int) -> None:
    if G.size > budget:
        raise BudgetExceeded(f"|G| = {G.size} exceeds budget {budget}")


def enumerate_elements(G: AbelianGroup, budget: int = DEFAULT_GROUP_BUDGET) -> Iterator[GroupElement]:
    _check_budget(G, budget)
    for exps in itertools.product(*(range(m) for m in G.orders)):
        yield GroupElement(G, exps)


def enumerate_characters(G: AbelianGroup, budget: int = DEFAULT_GROUP_BUDGET) -> Iterator[Character]:
    _check_budget(G, budget)
    for exps in itertools.product(*(range(m) for m in G.orders)):
        yield Character(G, exps)
