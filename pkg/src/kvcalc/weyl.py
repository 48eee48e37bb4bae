"""Weyl group enumeration: lengths, supports, Coxeter elements, cosets.

Elements are canonicalized by their action matrix on simple-coroot
coordinates; reduced words come from breadth-first search over the Cayley
graph, whose geodesics are exactly the reduced expressions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import linalg
from .errors import SizeGuardError, UsageError
from .rootdata import WEYL_ORDER_CAP, Coweight, RootDatum

Matrix = tuple[tuple[int, ...], ...]


def _identity(r: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    r = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r)) for i in range(r)
    )


@lru_cache(maxsize=None)
def coweight_reflection(rd: RootDatum, i: int) -> Matrix:
    """Matrix of s_i on simple-coroot coordinates."""
    r = rd.rank
    return tuple(
        tuple(int(j == k) - int(j == i) * rd.cartan[k][i] for k in range(r)) for j in range(r)
    )


@lru_cache(maxsize=None)
def root_reflection(rd: RootDatum, i: int) -> Matrix:
    """Matrix of s_i on simple-root coordinates."""
    r = rd.rank
    return tuple(
        tuple(int(j == k) - int(j == i) * rd.cartan[i][k] for k in range(r)) for j in range(r)
    )


@dataclass(frozen=True)
class WeylElement:
    rd: RootDatum
    action: Matrix  # on coweights (simple-coroot coordinates)
    word: tuple[int, ...]  # a reduced word, application order left-to-right

    def __post_init__(self):
        pass

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)

    @property
    def root_action(self) -> Matrix:
        return _root_action(self.rd, self.word)

    def apply(self, v: Coweight) -> Coweight:
        r = self.rd.rank
        return tuple(sum(self.action[i][j] * v[j] for j in range(r)) for i in range(r))

    def apply_root(self, root) -> tuple[int, ...]:
        m = self.root_action
        r = self.rd.rank
        return tuple(sum(m[i][j] * root[j] for j in range(r)) for i in range(r))

    def inverse(self) -> "WeylElement":
        inv = tuple(tuple(int(x) for x in row) for row in linalg.inverse(self.action))
        return WeylElement(self.rd, inv, tuple(reversed(self.word)))

    def order(self) -> int:
        m = self.action
        ident = _identity(self.rd.rank)
        k = 1
        while m != ident:
            m = _mat_mul(m, self.action)
            k += 1
            if k > 2 * WEYL_ORDER_CAP:
                raise AssertionError("element order runaway")
        return k

    def is_identity(self) -> bool:
        return self.action == _identity(self.rd.rank)


@lru_cache(maxsize=None)
def _root_action(rd: RootDatum, word: tuple[int, ...]) -> Matrix:
    m = _identity(rd.rank)
    # word applies left-to-right: w = s_{word[-1]} ... s_{word[0]} as operators
    for i in word:
        m = _mat_mul(root_reflection(rd, i), m)
    return m


def word_to_element(rd: RootDatum, word) -> WeylElement:
    """Element with the given word (not necessarily reduced); the stored
    reduced word is recovered from the enumeration table."""
    m = _identity(rd.rank)
    for i in word:
        if not 0 <= int(i) < rd.rank:
            raise UsageError(f"reflection index {i} out of range for rank {rd.rank}")
        m = _mat_mul(coweight_reflection(rd, int(i)), m)
    table = {e.action: e for e in enumerate_group(rd)}
    return table[m]


def identity_element(rd: RootDatum) -> WeylElement:
    return WeylElement(rd, _identity(rd.rank), ())


@lru_cache(maxsize=None)
def enumerate_group(rd: RootDatum) -> tuple[WeylElement, ...]:
    """Full Weyl group by breadth-first search; identity first, by length."""
    if rd.weyl_order > WEYL_ORDER_CAP:
        raise SizeGuardError(
            f"|W| = {rd.weyl_order} exceeds the enumeration cap {WEYL_ORDER_CAP}"
        )
    r = rd.rank
    ident = identity_element(rd)
    seen = {ident.action: ident}
    out = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(r):
                m = _mat_mul(coweight_reflection(rd, i), w.action)
                if m not in seen:
                    e = WeylElement(rd, m, w.word + (i,))
                    seen[m] = e
                    nxt.append(e)
        nxt.sort(key=lambda e: e.word)
        out.extend(nxt)
        frontier = nxt
    assert len(out) == rd.weyl_order, (len(out), rd.weyl_order)
    return tuple(out)


def longest_element(rd: RootDatum) -> WeylElement:
    table = {e.action: e for e in enumerate_group(rd)}
    return table[rd.w0_matrix]


@lru_cache(maxsize=None)
def coxeter_elements(rd: RootDatum) -> tuple[WeylElement, ...]:
    """Products of all simple reflections in every order, deduplicated."""
    r = rd.rank
    seen = {}
    for perm in permutations(range(r)):
        m = _identity(r)
        for i in perm:
            m = _mat_mul(coweight_reflection(rd, i), m)
        if m not in seen:
            seen[m] = WeylElement(rd, m, perm)
    return tuple(sorted(seen.values(), key=lambda e: e.word))


def coxeter_count(rd: RootDatum) -> int:
    """Predicted |Cox(W,S)|: product of 2^(rank-1) over the simple factors."""
    out = 1
    for _, n in rd.label:
        out *= 2 ** (n - 1)
    return out


@lru_cache(maxsize=None)
def parabolic_subgroup(rd: RootDatum, gens: frozenset[int]) -> tuple[WeylElement, ...]:
    """The standard parabolic subgroup W_J generated by the given indices."""
    ident = identity_element(rd)
    seen = {ident.action: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i in sorted(gens):
                m = _mat_mul(coweight_reflection(rd, i), w.action)
                if m not in seen:
                    e = WeylElement(rd, m, w.word + (i,))
                    seen[m] = e
                    nxt.append(e)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda e: (e.length, e.word)))


def min_double_coset_reps(rd: RootDatum, j1, j2) -> tuple[WeylElement, ...]:
    """Minimal-length representatives of the double cosets W_J1 \\ W / W_J2."""
    j1 = frozenset(int(i) for i in j1)
    j2 = frozenset(int(i) for i in j2)
    for j in (j1, j2):
        if any(not 0 <= i < rd.rank for i in j):
            raise UsageError("parabolic index out of range")
    group = sorted(enumerate_group(rd), key=lambda e: (e.length, e.word))
    left = parabolic_subgroup(rd, j1)
    right = parabolic_subgroup(rd, j2)
    covered = set()
    reps = []
    for w in group:
        if w.action in covered:
            continue
        reps.append(w)
        for a in left:
            aw = _mat_mul(a.action, w.action)
            for b in right:
                covered.add(_mat_mul(aw, b.action))
    return tuple(reps)


def double_coset_size(rd: RootDatum, j1, j2, w: WeylElement) -> int:
    left = parabolic_subgroup(rd, frozenset(int(i) for i in j1))
    right = parabolic_subgroup(rd, frozenset(int(i) for i in j2))
    coset = set()
    for a in left:
        aw = _mat_mul(a.action, w.action)
        for b in right:
            coset.add(_mat_mul(aw, b.action))
    return len(coset)


def fixed_space_dim(w: WeylElement) -> int:
    r = w.rd.rank
    m = tuple(
        tuple(Fraction(w.action[i][j] - int(i == j)) for j in range(r)) for i in range(r)
    )
    return r - linalg.rank(m)


def inversions(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by w."""
    count = 0
    for root in w.rd.positive_roots:
        image = w.apply_root(root)
        if all(x <= 0 for x in image) and any(x < 0 for x in image):
            count += 1
    return count
