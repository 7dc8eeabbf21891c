"""Finite reduced planar rooted trees: the monomial index set of planar series.

A monomial is the empty tree (unit), the single leaf, or an internal node
with an ordered tuple of at least two children, none of which is the unit.
The degree of a tree is its number of leaves.  Trees are hash-consed, so
structurally equal trees are the same object and hashing is O(arity).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator


class PlanarMonomial:
    """A reduced planar rooted tree (or the unit / the leaf).

    Do not instantiate directly; use ``UNIT``, ``LEAF`` and :func:`node`,
    which intern every tree.
    """

    __slots__ = ("children", "degree", "_hash", "_seq")

    def __init__(self, children, degree):
        self.children = children
        self.degree = degree
        self._hash = hash((degree, children))
        self._seq = None

    @property
    def is_unit(self):
        return self.degree == 0

    @property
    def is_leaf(self):
        return self.degree == 1 and not self.children

    @property
    def is_node(self):
        return bool(self.children)

    @property
    def arity(self):
        return len(self.children)

    @property
    def arity_sequence(self):
        """Preorder child-count sequence; leaf contributes 0, node its arity."""
        if self._seq is None:
            if self.is_unit:
                self._seq = ()
            elif self.is_leaf:
                self._seq = (0,)
            else:
                seq = [len(self.children)]
                for c in self.children:
                    seq.extend(c.arity_sequence)
                self._seq = tuple(seq)
        return self._seq

    def sort_key(self):
        return (self.degree, self.arity_sequence)

    def max_arity(self):
        if not self.children:
            return 0
        return max(len(self.children), max(c.max_arity() for c in self.children))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PlanarMonomial):
            return NotImplemented
        return (self.degree == other.degree
                and self.arity_sequence == other.arity_sequence)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __str__(self):
        return format_tree(self)

    def __repr__(self):
        return "PlanarMonomial(%s)" % format_tree(self)


UNIT = PlanarMonomial((), 0)
LEAF = PlanarMonomial((), 1)

_NODE_CACHE: dict = {}


def node(children: Iterable[PlanarMonomial]) -> PlanarMonomial:
    """Graft the given trees under a new root.  Requires arity >= 2, no units."""
    children = tuple(children)
    cached = _NODE_CACHE.get(children)
    if cached is not None:
        return cached
    if len(children) < 2:
        raise ValueError("a node needs at least 2 children, got %d" % len(children))
    for c in children:
        if not isinstance(c, PlanarMonomial):
            raise TypeError("children must be PlanarMonomial, got %r" % (c,))
        if c.is_unit:
            raise ValueError("the unit cannot appear inside a node")
    tree = PlanarMonomial(children, sum(c.degree for c in children))
    _NODE_CACHE[children] = tree
    return tree


def format_tree(t: PlanarMonomial) -> str:
    if t.is_unit:
        return "1"
    if t.is_leaf:
        return "x"
    return "(" + ",".join(format_tree(c) for c in t.children) + ")"


def parse(text: str) -> PlanarMonomial:
    """Parse the canonical tree grammar: ``1 | x | "(" tree ("," tree)+ ")"``.

    ASCII spaces are tolerated anywhere between tokens.
    """
    s = text.replace(" ", "")
    tree, pos = _parse_at(s, 0)
    if pos != len(s):
        raise ValueError("trailing input at position %d in %r" % (pos, text))
    return tree


def _parse_at(s, pos):
    if pos >= len(s):
        raise ValueError("unexpected end of input in tree %r" % s)
    ch = s[pos]
    if ch == "1":
        return UNIT, pos + 1
    if ch == "x":
        return LEAF, pos + 1
    if ch != "(":
        raise ValueError("unexpected character %r at position %d" % (ch, pos))
    pos += 1
    children = []
    while True:
        child, pos = _parse_at(s, pos)
        if child.is_unit:
            raise ValueError("the unit cannot appear inside a node")
        children.append(child)
        if pos >= len(s):
            raise ValueError("unterminated node in tree %r" % s)
        if s[pos] == ",":
            pos += 1
            continue
        if s[pos] == ")":
            pos += 1
            break
        raise ValueError("unexpected character %r at position %d" % (s[pos], pos))
    if len(children) < 2:
        raise ValueError("a node needs at least 2 children")
    return node(children), pos


# -- enumeration --------------------------------------------------------------

def _compositions(n: int, parts: int) -> Iterator[tuple]:
    """Ordered compositions of n into `parts` positive integers."""
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_trees(n: int, max_arity: int | None = None) -> tuple:
    """All reduced planar trees of degree exactly n, in canonical order.

    With ``max_arity`` set, only trees whose every node has arity at most
    that bound are produced (max_arity=2 gives the binary trees).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return (UNIT,)
    if n == 1:
        return (LEAF,)
    top = n if max_arity is None else min(n, max_arity)
    out = []
    for m in range(2, top + 1):
        for comp in _compositions(n, m):
            pools = [enumerate_trees(d, max_arity) for d in comp]
            for combo in itertools.product(*pools):
                out.append(node(combo))
    out.sort(key=PlanarMonomial.sort_key)
    return tuple(out)


def enumerate(n: int) -> tuple:  # noqa: A001 - conventional short name
    return enumerate_trees(n)


@lru_cache(maxsize=None)
def count_trees(n: int, max_arity: int | None = None) -> int:
    """Number of reduced planar trees of degree n without enumerating them."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n <= 1:
        return 1
    top = n if max_arity is None else min(n, max_arity)
    total = 0
    for m in range(2, top + 1):
        for comp in _compositions(n, m):
            prod = 1
            for d in comp:
                prod *= count_trees(d, max_arity)
            total += prod
    return total


def enumerate_binary(n: int) -> tuple:
    if n < 1:
        raise ValueError("binary enumeration needs degree >= 1")
    return enumerate_trees(n, max_arity=2)


def comb(n: int) -> PlanarMonomial:
    """Right comb of degree n: comb(n+1) = comb(n) grafted with a leaf.

    comb(0) is the unit by convention.
    """
    if n < 0:
        raise ValueError("comb degree must be nonnegative")
    if n == 0:
        return UNIT
    t = LEAF
    for _ in range(n - 1):
        t = node((t, LEAF))
    return t


# -- contraction and planar binomial coefficients -----------------------------

def contract(tree: PlanarMonomial, indices: Iterable[int]) -> PlanarMonomial:
    """Contraction of `tree` to the leaf subset `indices` (0-based, left to right).

    Children with no selected leaf are dropped; a node left with a single
    surviving child is replaced by that child's contraction.  The empty
    subset contracts to the unit.
    """
    idx = sorted(set(indices))
    for i in idx:
        if i < 0 or i >= tree.degree:
            raise ValueError("leaf index %d out of range for degree %d"
                             % (i, tree.degree))
    return _contract(tree, idx, 0)


def _contract(tree, idx, offset):
    # idx is sorted and already restricted to this subtree's window
    if not idx:
        return UNIT
    if tree.is_leaf:
        return LEAF
    parts = []
    lo = 0
    for child in tree.children:
        hi_val = offset + child.degree
        sub = []
        while lo < len(idx) and idx[lo] < hi_val:
            sub.append(idx[lo])
            lo += 1
        if sub:
            parts.append(_contract(child, sub, offset))
        offset = hi_val
    if len(parts) == 1:
        return parts[0]
    return node(parts)


@lru_cache(maxsize=None)
def contraction_table(tree: PlanarMonomial):
    """Map T -> number of leaf subsets of `tree` contracting to T.

    Computed bottom-up: the table of a node is the unit-absorbing graft
    convolution of its children's tables, which matches the subset picture
    because choosing a subset means choosing one in every child.
    """
    if tree.is_unit:
        return {UNIT: 1}
    if tree.is_leaf:
        return {UNIT: 1, LEAF: 1}
    tables = [contraction_table(c) for c in tree.children]
    out: dict = {}

    def rec(i, parts, count):
        if i == len(tables):
            if not parts:
                t = UNIT
            elif len(parts) == 1:
                t = parts[0]
            else:
                t = node(parts)
            out[t] = out.get(t, 0) + count
            return
        for sub, c in tables[i].items():
            if sub.is_unit:
                rec(i + 1, parts, count * c)
            else:
                rec(i + 1, parts + (sub,), count * c)

    rec(0, (), 1)
    return out


def binom(upper: PlanarMonomial, lower: PlanarMonomial) -> int:
    """Planar binomial coefficient: leaf subsets of `upper` contracting to `lower`."""
    if lower.degree > upper.degree:
        return 0
    return contraction_table(upper).get(lower, 0)
