"""Coweight-polytope and Steinberg-base stratifications.

P_lambda is the set of dominant rational coweights dominated by lambda; its
open stratum removes every smaller polytope in the same lattice class.  The
Steinberg-base strata classify valuation vectors of the characteristic
coordinates (a_i, b_i); the classifying coweight is recovered as a unique
minimal element, never by tie-breaking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import kv, linalg, multiplicity, rootdata
from .errors import UniquenessError, UsageError
from .rootdata import Coweight, RootDatum


class _Infinite:
    """Explicit tag for an identically-zero coordinate (infinite valuation)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


def is_infinite(x) -> bool:
    return x is INFINITE


@dataclass(frozen=True)
class ValuationVector:
    """Valuations of the extended Steinberg-base coordinates.

    b_vals are the abelianization coordinates (finite, >= 0, determined by
    lambda); c_vals are the twisted trace coordinates, INFINITE allowed.
    """

    b_vals: tuple[Fraction, ...]
    c_vals: tuple  # Fractions and/or INFINITE

    def __post_init__(self):
        if any(x < 0 for x in self.b_vals):
            raise UsageError("b-valuations must be nonnegative")


# ---------------------------------------------------------------------------
# dominant coweight polytopes


def polytope_member(rd: RootDatum, nu, lam, open_stratum: bool = False) -> bool:
    """Membership of nu in P_lambda (closed) or its open stratum."""
    nu = rootdata.coweight(nu)
    lam = rootdata.coweight(lam)
    if not rootdata.is_dominant(rd, lam) or not rootdata.is_integral(rd, lam):
        raise UsageError("lambda must be dominant and in the isogeny lattice")
    if not rootdata.is_dominant(rd, nu) or not rootdata.leq_q(rd, nu, lam):
        return False
    if not open_stratum:
        return True
    return kv.best_integral_approx(rd, nu, lam) == lam


def polytope_intersection(rd: RootDatum, lam1, lam2) -> Coweight:
    """The coweight mu with P_lam1 meet P_lam2 = P_mu, constructively.

    Writing lam1 - lam2 in the coroot basis, the positive and negative parts
    have disjoint support; mu = lam1 - (positive part) is the componentwise
    minimum, and is dominant whenever the two classes match.
    """
    lam1 = rootdata.coweight(lam1)
    lam2 = rootdata.coweight(lam2)
    grp = rootdata.fundamental_group(rd)
    for lam in (lam1, lam2):
        if not rootdata.is_dominant(rd, lam) or not rootdata.is_integral(rd, lam):
            raise UsageError("both coweights must be dominant lattice elements")
    if grp.project(lam1) != grp.project(lam2):
        raise UsageError("polytope intersection requires matching pi_1 classes")
    beta1 = tuple(max(x, Fraction(0)) for x in rootdata.sub(lam1, lam2))
    mu = rootdata.sub(lam1, beta1)
    assert mu == tuple(min(a, b) for a, b in zip(lam1, lam2))
    assert rootdata.is_dominant(rd, mu), "intersection coweight must be dominant"
    assert rootdata.leq_q(rd, mu, lam1) and rootdata.leq_q(rd, mu, lam2)
    return mu


def rational_grid(rd: RootDatum, height_cap, denominator: int):
    """Dominant rational coweights with bounded denominator and height."""
    steps = int(height_cap * denominator)
    out = []
    for coords in product(range(steps + 1), repeat=rd.rank):
        v = tuple(Fraction(k, denominator) for k in coords)
        if sum(v) > height_cap:
            continue
        if rootdata.is_dominant(rd, v):
            out.append(v)
    out.sort()
    return out


def open_strata_containing(rd: RootDatum, nu, height_cap):
    """All lambda with height <= cap whose open stratum contains nu."""
    out = []
    for lam in rootdata.dominant_integral_sweep(rd, height_cap):
        if polytope_member(rd, nu, lam, open_stratum=True):
            out.append(lam)
    return out


# ---------------------------------------------------------------------------
# Steinberg-base strata


@lru_cache(maxsize=None)
def fundamental_weight_root_coords(rd: RootDatum, i: int):
    """omega_i of rd in simple-root coordinates (column i of the inverse
    Cartan matrix)."""
    inv = linalg.inverse(linalg.frac_matrix(rd.cartan))
    return tuple(inv[j][i] for j in range(rd.rank))


def generic_char_valuation(rd: RootDatum, mu, i: int) -> Fraction:
    """min over the weights chi of V(omega_i) of <chi, mu>: the generic
    valuation of the i-th trace coordinate at a unit times the mu-cocharacter."""
    mu = rootdata.coweight(mu)
    if not 0 <= i < rd.rank:
        raise UsageError("fundamental index out of range")
    rep_datum = rd.dual("adjoint")
    omega = fundamental_weight_root_coords(rd, i)
    wsys = multiplicity.weight_system(rep_datum, rootdata.coweight(omega))
    return min(Fraction(rootdata.pair_root(rd, chi, mu)) for chi in wsys)


def steinberg_stratum(rd: RootDatum, v: ValuationVector, lam) -> Coweight:
    """The unique minimal dominant lattice mu <= lam with
    val(c_{iota(i)}) >= <lambda - mu, omega_i> for every i."""
    lam = rootdata.coweight(lam)
    if not rootdata.is_dominant(rd, lam) or not rootdata.is_integral(rd, lam):
        raise UsageError("lambda must be dominant and in the isogeny lattice")
    if len(v.c_vals) != rd.rank:
        raise UsageError("need one c-valuation per fundamental coordinate")
    if v.b_vals and tuple(v.b_vals) != tuple(lam[rd.iota[i]] for i in range(rd.rank)):
        raise UsageError("b-valuations are inconsistent with lambda")
    candidates = []
    for mu in multiplicity.dominant_below(rd, lam):
        ok = True
        for i in range(rd.rank):
            a_i = v.c_vals[rd.iota[i]]
            if is_infinite(a_i):
                continue
            if Fraction(a_i) < lam[i] - mu[i]:
                ok = False
                break
        if ok:
            candidates.append(mu)
    if not candidates:
        raise UsageError("valuation vector matches no stratum below lambda")
    minimal = [mu for mu in candidates
               if not any(m != mu and rootdata.leq_q(rd, m, mu) for m in candidates)]
    if len(minimal) != 1:
        raise UniquenessError(
            f"Steinberg stratum below {lam} is not unique: {minimal}"
        )
    return minimal[0]


def valuation_vector_for(rd: RootDatum, lam, mu) -> ValuationVector:
    """The generic valuation vector of a split class with cocharacter mu
    inside the lambda-twisted base: c_val_j = <lambda, omega_{iota(j)}> +
    generic_char_valuation(mu, j)."""
    lam = rootdata.coweight(lam)
    mu = rootdata.coweight(mu)
    b_vals = tuple(lam[rd.iota[i]] for i in range(rd.rank))
    c_vals = tuple(
        Fraction(lam[rd.iota[j]]) + generic_char_valuation(rd, mu, j)
        for j in range(rd.rank)
    )
    return ValuationVector(b_vals=b_vals, c_vals=c_vals)
