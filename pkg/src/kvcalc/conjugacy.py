"""Cameral models of regular semisimple conjugacy classes.

A class is recorded by its twist Weyl element w, splitting degree e,
Galois-stable valuation coweight nu_bar, residual valuations r_alpha on the
roots vanishing on nu_bar, and its fundamental-group class kappa.  All the
numerical invariants (Newton point, discriminant valuation, split-rank defect c,
Levi-relative r_N) are exact rationals computed from these data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import rootdata, weyl
from .errors import InvariantViolation, UsageError
from .rootdata import Coweight, RootDatum


def _neg(root):
    return tuple(-x for x in root)


def _positive(root) -> bool:
    return any(x > 0 for x in root) and all(x >= 0 for x in root)


@dataclass(frozen=True)
class ClassDatum:
    rd: RootDatum
    w: weyl.WeylElement
    e: int
    nu_bar: Coweight
    residual: tuple[tuple[tuple[int, ...], Fraction], ...]  # positive roots only
    kappa: tuple[int, ...]

    def residual_value(self, root) -> Fraction:
        """r_alpha, with the +/- symmetry applied; unspecified roots are 0."""
        key = tuple(root) if _positive(root) else _neg(root)
        for r, v in self.residual:
            if r == key:
                return v
        return Fraction(0)


def make_class(rd: RootDatum, w: weyl.WeylElement, nu_bar, residual=None, kappa=None,
               e=None) -> ClassDatum:
    nu_bar = rootdata.coweight(nu_bar)
    order = w.order()
    res = tuple(sorted((tuple(int(x) for x in r), Fraction(v)) for r, v in
                       (residual or {}).items()))
    if kappa is None:
        kappa = rootdata.fundamental_group(rd).zero()
    cd = ClassDatum(rd=rd, w=w, e=order if e is None else int(e), nu_bar=nu_bar,
                    residual=res, kappa=tuple(kappa))
    errors = validate(cd)
    if errors:
        raise UsageError("invalid class datum: " + "; ".join(errors))
    return cd


def split_class(rd: RootDatum, nu_bar, residual=None, kappa=None) -> ClassDatum:
    return make_class(rd, weyl.identity_element(rd), nu_bar, residual, kappa)


def validate(cd: ClassDatum) -> list[str]:
    """Check every datum invariant; returns a list of violation messages."""
    errors = []
    rd = cd.rd
    if cd.e != cd.w.order():
        errors.append(f"splitting-degree: e={cd.e} but the twist has order {cd.w.order()}")
    if cd.w.apply(cd.nu_bar) != cd.nu_bar:
        errors.append("galois-stability: w(nu_bar) != nu_bar")
    for x in cd.nu_bar:
        if cd.e % x.denominator != 0:
            errors.append(f"newton-denominator: coordinate {x} has denominator not dividing e={cd.e}")
            break
    seen = set()
    for root, val in cd.residual:
        if root not in rd.positive_roots:
            errors.append(f"residual-root: {root} is not a positive root")
            continue
        if root in seen:
            errors.append(f"residual-root: duplicate entry for {root}")
        seen.add(root)
        if rootdata.pair_root(rd, root, cd.nu_bar) != 0:
            errors.append(f"residual-domain: root {root} does not vanish on nu_bar")
        if val < 0:
            errors.append(f"residual-value: r_{root} = {val} is negative")
        if cd.e % Fraction(val).denominator != 0:
            errors.append(f"residual-denominator: r_{root} = {val} has denominator not dividing e={cd.e}")
    # Galois symmetry r_{w(alpha)} = r_alpha (the +/- symmetry is built in)
    for root, val in cd.residual:
        if cd.residual_value(cd.w.apply_root(root)) != val:
            errors.append(f"residual-symmetry: r differs on {root} and its w-image")
    grp = rootdata.fundamental_group(rd)
    if len(cd.kappa) != rd.rank:
        errors.append(f"fundamental-group class: expected {rd.rank} components")
    elif grp.reduce(cd.kappa) != tuple(cd.kappa):
        errors.append("fundamental-group class: entries not reduced modulo the invariant factors")
    # kappa vs Newton point in pi_1 tensor Q: both vanish for semisimple
    # groups, so the compatibility is automatic here.
    if not errors:
        d = disc_valuation(cd, _checked=False)
        if d.denominator != 1:
            errors.append(f"discriminant: d = {d} is not an integer")
    return errors


def newton_point(cd: ClassDatum) -> Coweight:
    nu, _ = rootdata.dominant_reduce(cd.rd, cd.nu_bar)
    return nu


def disc_valuation(cd: ClassDatum, _checked=True):
    """d(gamma) = 2 * sum of residual valuations on the vanishing roots
    minus <2 rho, dominant Newton point>; exact and possibly negative.

    Written in a form invariant under Weyl images of nu_bar: the second term
    is the sum of |<alpha, nu_bar>| over positive roots.
    """
    rd = cd.rd
    total = 2 * sum(v for _, v in cd.residual)
    for root in rd.positive_roots:
        total -= abs(rootdata.pair_root(rd, root, cd.nu_bar))
    total = Fraction(total)
    if _checked and total.denominator != 1:
        raise InvariantViolation(f"discriminant valuation {total} is not an integer")
    return total


def c_invariant(cd: ClassDatum) -> int:
    """Rank minus the dimension of the twist's fixed space."""
    return cd.rd.rank - weyl.fixed_space_dim(cd.w)


def is_split(cd: ClassDatum) -> bool:
    return cd.w.is_identity()


def val_one_minus(cd: ClassDatum, root) -> Fraction:
    """val(1 - alpha(gamma)) for any root alpha."""
    p = rootdata.pair_root(cd.rd, root, cd.nu_bar)
    if p != 0:
        return min(Fraction(p), Fraction(0))
    return cd.residual_value(root)


def r_invariant(cd: ClassDatum) -> Fraction:
    """r(gamma) = sum over positive roots of val(alpha(gamma) - 1)."""
    return sum((val_one_minus(cd, root) for root in cd.rd.positive_roots), Fraction(0))


def r_levi(cd: ClassDatum, levi: frozenset[int] | set[int]):
    """r_N for the standard parabolic with Levi subset I, plus the check
    d_G = d_M + 2 r_N.

    The relation requires the N-part of the Newton pairings to cancel (it
    always does for gamma integral over the Levi, e.g. nu_bar = 0); the
    boolean reports whether it holds for this datum.
    """
    rd = cd.rd
    if not is_split(cd):
        raise UsageError("Levi-relative invariants are implemented for split classes only")
    levi = frozenset(int(i) for i in levi)
    if any(not 0 <= i < rd.rank for i in levi):
        raise UsageError("Levi index out of range")
    phi_n = [a for a in rd.positive_roots if any(a[i] != 0 for i in range(rd.rank) if i not in levi)]
    phi_m = [a for a in rd.positive_roots if a not in phi_n]
    r_n = sum((val_one_minus(cd, a) for a in phi_n), Fraction(0))
    d_m = sum((val_one_minus(cd, a) + val_one_minus(cd, _neg(a)) for a in phi_m), Fraction(0))
    d_g = disc_valuation(cd)
    relation = d_g == d_m + 2 * r_n
    return r_n, relation


def levi_disc_valuation(cd: ClassDatum, levi) -> Fraction:
    levi = frozenset(int(i) for i in levi)
    rd = cd.rd
    total = Fraction(0)
    for a in rd.positive_roots:
        if all(a[i] == 0 for i in range(rd.rank) if i not in levi):
            total += val_one_minus(cd, a) + val_one_minus(cd, _neg(a))
    return total


# ---------------------------------------------------------------------------
# JSON interchange


def _frac_from_json(obj) -> Fraction:
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj.get("den", 1)))
    return Fraction(obj)


def _frac_to_json(x: Fraction):
    return {"num": x.numerator, "den": x.denominator}


def class_from_json(data) -> ClassDatum:
    """Parse a class datum from the JSON schema.

    The reduced word uses 1-based reflection indices; "residual" lists
    positive roots only; a short "kappa" is padded with zeros.
    """
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    try:
        label = data["type"]
        isogeny = data.get("isogeny", "sc")
        word = [int(i) - 1 for i in data.get("w", [])]
        nu = data["nu_bar"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"class JSON missing field: {exc}") from None
    rd = rootdata.build_root_datum(label, isogeny)
    if isinstance(nu, dict):
        den = int(nu.get("den", 1))
        nu_bar = tuple(Fraction(int(n), den) for n in nu["num"])
    else:
        nu_bar = rootdata.coweight(nu)
    if len(nu_bar) != rd.rank:
        raise UsageError("nu_bar has the wrong number of coordinates")
    w = weyl.word_to_element(rd, word)
    residual = {}
    for item in data.get("residual", []):
        try:
            root = tuple(int(x) for x in item["root"])
            residual[root] = _frac_from_json(item["val"])
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed residual entry {item!r}: {exc}") from None
    kappa = rootdata.parse_kappa(rd, data.get("kappa", []))
    e = int(data["e"]) if "e" in data else None
    return make_class(rd, w, nu_bar, residual, kappa, e=e)


def class_to_json(cd: ClassDatum) -> dict:
    num_den = lcm(*(x.denominator for x in cd.nu_bar)) if cd.nu_bar else 1
    return {
        "type": cd.rd.label_str,
        "isogeny": cd.rd.isogeny,
        "w": [i + 1 for i in cd.w.word],
        "e": cd.e,
        "nu_bar": {
            "num": [int(x * num_den) for x in cd.nu_bar],
            "den": num_den,
        },
        "residual": [
            {"root": list(root), "val": _frac_to_json(val)} for root, val in cd.residual
        ],
        "kappa": list(cd.kappa),
    }
