"""Root data with exact rational lattice arithmetic.

Coordinate conventions used throughout the package:

* coweights are vectors in the simple-coroot basis (entries are Fractions);
* weights are vectors in the fundamental-weight basis;
* roots are vectors in the simple-root basis;
* the Cartan matrix entry ``cartan[i][j]`` is the pairing of the j-th simple
  root against the i-th simple coroot, so pairings of arbitrary roots with
  arbitrary coweights route through it.

All arithmetic is exact; no floats anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import linalg
from .errors import SizeGuardError, UsageError

Coweight = tuple[Fraction, ...]

#: Hard cap on the Weyl group order for full enumerations (E6 just fits).
WEYL_ORDER_CAP = 51840

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: 36,
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_WEYL_ORDER = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: 51840,
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

_RANK_RANGE = {"A": (1, 6), "B": (2, 6), "C": (2, 6), "D": (4, 6), "E": (6, 6), "F": (4, 4), "G": (2, 2)}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def parse_label(label: str) -> tuple[tuple[str, int], ...]:
    factors = []
    for part in label.split("x"):
        m = re.fullmatch(r"([A-G])([0-9]+)", part.strip())
        if not m:
            raise UsageError(f"cannot parse type label {part!r}")
        letter, n = m.group(1), int(m.group(2))
        lo, hi = _RANK_RANGE.get(letter, (0, -1))
        if not lo <= n <= hi:
            raise UsageError(f"unsupported simple type {part!r} (rank range {lo}..{hi})")
        factors.append((letter, n))
    return tuple(factors)


def _simple_cartan(letter: str, n: int) -> list[list[int]]:
    c = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if letter in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if letter == "B" and n >= 2:
            # last simple root is short: <alpha_{n-1}, alpha_n^vee> = -2
            c[n - 1][n - 2] = -2
        if letter == "C" and n >= 2:
            # last simple root is long
            c[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif letter == "E":
        # Bourbaki E6: node 2 hangs off node 4 (1-indexed 1-3-4-5-6 chain)
        chain = [0, 2, 3, 4, 5]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif letter == "F":
        for i in range(3):
            bond(i, i + 1)
        c[2][1] = -2  # <alpha_2, alpha_3^vee> = -2 (alpha_3, alpha_4 short)
        c[1][2] = -1
    elif letter == "G":
        bond(0, 1, cij=-1, cji=-3)  # alpha_1 long, alpha_2 short
    return c


def _block_diag(blocks: list[list[list[int]]]) -> tuple[tuple[int, ...], ...]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


def _root_closure(cartan):
    """All (root, coroot) pairs, each in simple-root / simple-coroot coords."""
    r = len(cartan)
    seen = {}
    frontier = [(tuple(int(i == j) for j in range(r)),) * 2 for i in range(r)]
    for pair in frontier:
        seen[pair[0]] = pair[1]
    while frontier:
        nxt = []
        for root, coroot in frontier:
            for i in range(r):
                p = sum(cartan[i][j] * root[j] for j in range(r))
                new_root = tuple(root[j] - p * int(i == j) for j in range(r))
                q = sum(cartan[j][i] * coroot[j] for j in range(r))
                new_coroot = tuple(coroot[j] - q * int(i == j) for j in range(r))
                if new_root not in seen:
                    seen[new_root] = new_coroot
                    nxt.append((new_root, new_coroot))
        frontier = nxt
    positives = sorted(rt for rt in seen if all(x >= 0 for x in rt))
    return tuple(positives), tuple(seen[rt] for rt in positives)


_DUAL_LETTER = {"A": "A", "B": "C", "C": "B", "D": "D", "E": "E", "F": "F", "G": "G"}


@dataclass(frozen=True)
class RootDatum:
    label: tuple[tuple[str, int], ...]
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[tuple[int, ...], ...]
    rho_check: Coweight  # half-sum of positive coroots, simple-coroot coords
    w0_matrix: tuple[tuple[int, ...], ...]  # action of w0 on coweights
    iota: tuple[int, ...]  # involution with omega_{iota(i)} = -w0(omega_i)
    isogeny: str
    lattice_basis: tuple[tuple[int, ...], ...]  # columns = generators of Lambda
    # in fundamental-coweight coordinates

    @property
    def label_str(self) -> str:
        return "x".join(f"{l}{n}" for l, n in self.label)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_g(self) -> int:
        return 2 * self.num_positive_roots + self.rank

    @property
    def weyl_order(self) -> int:
        out = 1
        for letter, n in self.label:
            out *= _WEYL_ORDER[letter](n)
        return out

    def dual(self, isogeny: str = "sc") -> "RootDatum":
        return _dual_datum(self, isogeny)


def _simple_reflection_coweight(cartan, i):
    r = len(cartan)
    return tuple(
        tuple(int(j == k) - int(j == i) * cartan[k][i] for k in range(r)) for j in range(r)
    )


def build_root_datum(label: str, isogeny="sc") -> RootDatum:
    """Construct a root datum for a product of simple types.

    ``isogeny`` is "sc", "adjoint", or an explicit list of integer generator
    vectors for the coweight lattice, in fundamental-coweight coordinates.
    """
    factors = parse_label(label)
    cartan = _block_diag([_simple_cartan(l, n) for l, n in factors])
    return _build(factors, cartan, isogeny)


def _build(factors, cartan, isogeny) -> RootDatum:
    r = len(cartan)
    roots, coroots = _root_closure(cartan)
    expected = sum(_POSITIVE_ROOT_COUNT[l](n) for l, n in factors)
    if len(roots) != expected:
        raise AssertionError(
            f"positive root closure for {factors} gave {len(roots)}, expected {expected}"
        )
    two_rho_check = tuple(sum(c[j] for c in coroots) for j in range(r))
    rho_check = tuple(Fraction(x, 2) for x in two_rho_check)
    # sanity: <alpha_i, rho_check> = 1 for every simple root
    for i in range(r):
        assert sum(cartan[j][i] * rho_check[j] for j in range(r)) == 1

    w0 = _longest_element_matrix(cartan)
    iota = []
    for i in range(r):
        img = tuple(-w0[j][i] for j in range(r))  # -w0(alpha_i^vee) in coroot coords
        iota.append(next(k for k in range(r) if img == tuple(int(j == k) for j in range(r))))

    if isogeny == "sc":
        basis = tuple(tuple(cartan[j][i] for j in range(r)) for i in range(r))  # columns = coroots
        iso_name = "sc"
    elif isogeny == "adjoint":
        basis = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        iso_name = "adjoint"
    else:
        gens = [tuple(int(x) for x in g) for g in isogeny]
        if len(gens) != r or any(len(g) != r for g in gens):
            raise UsageError("custom isogeny needs exactly rank-many generator vectors")
        basis = tuple(tuple(gens[j][i] for j in range(r)) for i in range(r))
        iso_name = "custom"
        try:
            b_inv = linalg.inverse(basis)
        except ValueError:
            raise UsageError("isogeny generators are linearly dependent") from None
        for i in range(r):
            coroot_f = tuple(Fraction(cartan[i][j]) for j in range(r))
            if any(x.denominator != 1 for x in linalg.mat_vec(b_inv, coroot_f)):
                raise UsageError("isogeny lattice does not contain the coroot lattice")

    return RootDatum(
        label=factors,
        rank=r,
        cartan=cartan,
        positive_roots=roots,
        positive_coroots=coroots,
        rho_check=rho_check,
        w0_matrix=w0,
        iota=tuple(iota),
        isogeny=iso_name,
        lattice_basis=basis,
    )


def _longest_element_matrix(cartan):
    r = len(cartan)
    # reduce a strictly antidominant coweight to the dominant chamber
    v = tuple(-Fraction(sum(cartan[j][i] for i in range(r)) + 3) for j in range(r))
    # crude strictly dominant seed: use rho_check-like vector instead
    two_rho_check = [0] * r
    _, coroots = _root_closure(cartan)
    for c in coroots:
        for j in range(r):
            two_rho_check[j] += c[j]
    v = tuple(-Fraction(x) for x in two_rho_check)
    mat = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    while True:
        pair = [sum(cartan[j][i] * v[j] for j in range(r)) for i in range(r)]
        i = next((k for k in range(r) if pair[k] < 0), None)
        if i is None:
            break
        s = _simple_reflection_coweight(cartan, i)
        v = tuple(sum(s[a][b] * v[b] for b in range(r)) for a in range(r))
        mat = tuple(
            tuple(sum(s[a][b] * mat[b][c] for b in range(r)) for c in range(r)) for a in range(r)
        )
    out = []
    for row in mat:
        out.append(tuple(int(x) for x in row))
    return tuple(out)


@lru_cache(maxsize=None)
def _dual_datum(rd: RootDatum, isogeny: str = "sc") -> RootDatum:
    """Dual root datum: literally the transposed Cartan matrix, so simple
    coroots of rd are exactly the simple roots of the dual (same indexing)."""
    factors = tuple((_DUAL_LETTER[l], n) for l, n in rd.label)
    cartan_t = tuple(tuple(rd.cartan[j][i] for j in range(rd.rank)) for i in range(rd.rank))
    return _build(factors, cartan_t, isogeny)


# ---------------------------------------------------------------------------
# coweight arithmetic


def coweight(coords) -> Coweight:
    return tuple(Fraction(x) for x in coords)


def zero_coweight(rd: RootDatum) -> Coweight:
    return tuple(Fraction(0) for _ in range(rd.rank))


def add(u: Coweight, v: Coweight) -> Coweight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Coweight, v: Coweight) -> Coweight:
    return tuple(a - b for a, b in zip(u, v))


def simple_pairings(rd: RootDatum, v: Coweight):
    """Pairings <alpha_i, v> for all simple roots alpha_i."""
    r = rd.rank
    return tuple(sum(rd.cartan[j][i] * v[j] for j in range(r)) for i in range(r))


def pair_root(rd: RootDatum, root, v: Coweight):
    """Pairing <alpha, v> of a root (simple-root coords) with a coweight."""
    sp = simple_pairings(rd, v)
    return sum(a * p for a, p in zip(root, sp))


def pair_weight(rd: RootDatum, weight, v: Coweight):
    """Pairing of a weight in fundamental-weight coords with a coweight."""
    return sum(Fraction(a) * b for a, b in zip(weight, v))


def rho_pair(rd: RootDatum, v: Coweight):
    """<rho, v>: sum of the simple-coroot coordinates."""
    return sum(v)


def coweight_height(v: Coweight):
    return sum(v)


def is_dominant(rd: RootDatum, v: Coweight) -> bool:
    return all(p >= 0 for p in simple_pairings(rd, v))


def reflect(rd: RootDatum, i: int, v: Coweight) -> Coweight:
    p = simple_pairings(rd, v)[i]
    return tuple(x - p * int(j == i) for j, x in enumerate(v))


def dominant_reduce(rd: RootDatum, v: Coweight):
    """Dominant representative of the W-orbit of v plus the word reaching it.

    The word lists simple reflections in application order: folding them over
    v from the left reproduces the returned dominant coweight.
    """
    v = coweight(v)
    word = []
    while True:
        pair = simple_pairings(rd, v)
        i = next((k for k in range(rd.rank) if pair[k] < 0), None)
        if i is None:
            return v, tuple(word)
        v = reflect(rd, i, v)
        word.append(i)


def leq_q(rd: RootDatum, nu: Coweight, lam: Coweight) -> bool:
    """Rational dominance: lambda - nu has nonnegative coroot coordinates."""
    return all(a <= b for a, b in zip(nu, lam))


@lru_cache(maxsize=None)
def _lattice_basis_inv(rd: RootDatum):
    return linalg.inverse(linalg.frac_matrix(rd.lattice_basis))


def lattice_coords(rd: RootDatum, v: Coweight):
    """Coordinates of v in the isogeny-lattice basis (rational in general)."""
    f = tuple(p for p in simple_pairings(rd, v))  # fundamental-coweight coords
    return linalg.mat_vec(_lattice_basis_inv(rd), tuple(Fraction(x) for x in f))


def is_integral(rd: RootDatum, v: Coweight) -> bool:
    """Membership of v in the chosen coweight lattice Lambda."""
    return all(x.denominator == 1 for x in lattice_coords(rd, v))


def w0_apply(rd: RootDatum, v: Coweight) -> Coweight:
    r = rd.rank
    return tuple(sum(rd.w0_matrix[i][j] * v[j] for j in range(r)) for i in range(r))


# ---------------------------------------------------------------------------
# fundamental group


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...]
    _u: tuple[tuple[int, ...], ...]
    rd: RootDatum

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def zero(self) -> tuple[int, ...]:
        return tuple(0 for _ in self.invariant_factors)

    def reduce(self, raw: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(x % d for x, d in zip(raw, self.invariant_factors))

    def project(self, v: Coweight) -> tuple[int, ...]:
        x = lattice_coords(self.rd, v)
        if any(c.denominator != 1 for c in x):
            raise UsageError("coweight is not in the isogeny lattice")
        r = self.rd.rank
        raw = tuple(sum(self._u[i][j] * int(x[j]) for j in range(r)) for i in range(r))
        return self.reduce(raw)

    def project_rational(self, v: Coweight):
        """Class of a rational coweight in pi_1(G) tensor Q (always 0 here)."""
        return self.zero() if all(True for _ in v) else self.zero()


@lru_cache(maxsize=None)
def fundamental_group(rd: RootDatum) -> FiniteAbelianGroup:
    """pi_1(G) = Lambda / (coroot lattice), by Smith normal form."""
    r = rd.rank
    b_inv = _lattice_basis_inv(rd)
    cols = []
    for i in range(r):
        coroot_f = tuple(Fraction(rd.cartan[i][j]) for j in range(r))
        x = linalg.mat_vec(b_inv, coroot_f)
        assert all(c.denominator == 1 for c in x), "coroot lattice not inside Lambda"
        cols.append(tuple(int(c) for c in x))
    rel = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
    d, u, _ = linalg.smith_normal_form(rel)
    factors = tuple(d[i][i] for i in range(r))
    return FiniteAbelianGroup(invariant_factors=factors, _u=u, rd=rd)


def parse_kappa(rd: RootDatum, entries) -> tuple[int, ...]:
    grp = fundamental_group(rd)
    entries = list(int(x) for x in entries)
    if len(entries) > rd.rank:
        raise UsageError("kappa has more entries than the rank")
    entries += [0] * (rd.rank - len(entries))
    return grp.reduce(tuple(entries))


# ---------------------------------------------------------------------------
# Weyl dimension formula (for the Langlands dual group)


def weyl_dimension(rd: RootDatum, lam: Coweight) -> int:
    """dim of the dual-group irreducible with highest weight lam.

    lam is a dominant coweight of rd, read as a dominant weight of the dual
    group; the product formula runs over the positive roots of the dual.
    """
    if not is_dominant(rd, lam):
        raise UsageError("weyl_dimension needs a dominant coweight")
    dual = rd.dual()
    num = Fraction(1)
    den = Fraction(1)
    shifted = add(coweight(lam), rd.rho_check)
    for coroot_of_dual in dual.positive_coroots:
        # a positive coroot of the dual group is a positive root of rd;
        # its pairing with a dual weight x (coroot coords of rd) is <root, x>.
        num *= pair_root(rd, coroot_of_dual, shifted)
        den *= pair_root(rd, coroot_of_dual, rd.rho_check)
    val = num / den
    assert val.denominator == 1 and val > 0
    return int(val)


# ---------------------------------------------------------------------------
# parsing helpers shared with the CLI


def parse_coweight(rd: RootDatum, text: str) -> Coweight:
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) != rd.rank:
        raise UsageError(f"expected {rd.rank} coordinates, got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coordinate in {text!r}: {exc}") from None


def format_coweight(v: Coweight) -> str:
    return ",".join(str(x) for x in v)


def dominant_integral_sweep(rd: RootDatum, height_cap, interior=False):
    """Dominant integral coweights with coordinate-sum at most height_cap."""
    r = rd.rank
    out = []
    cap = int(height_cap)
    for coords in product(range(cap + 1), repeat=r):
        if sum(coords) > cap:
            continue
        v = coweight(coords)
        pair = simple_pairings(rd, v)
        if interior and not all(p > 0 for p in pair):
            continue
        if not all(p >= 0 for p in pair):
            continue
        if not is_integral(rd, v):
            continue
        out.append(v)
    out.sort()
    return out
