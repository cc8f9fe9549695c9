"""Closed-form generating functions for Deutsch-path counting.

Every formula is expressed in the substitution variable v (recall
z = v/(1+v+v^2)) and is paired here with the combinatorial quantity it
enumerates, so the whole catalog can be checked against the brute-force
and transfer-matrix oracles in ``paths``.

Catalog, with [z^n] meanings (h = height bound, i = end level):

    motzkin_M             1+v+v^2                      Motzkin paths
    phi(h, i)             height <= h, end at i        Deutsch paths
    phi0_bounded(h)       height <= h, end at 0        Deutsch paths
    phi0_limit            end at 0, no bound           Deutsch paths
    closed_height_ge(h)   end at 0, height >= h        Deutsch paths
    open_sum(h)           height <= h, any end         Deutsch paths
    open_sum_limit        any end, no bound            Deutsch paths
    psi0(h)               height <= h, end at 0        reversed paths
    psi(h, i)             height <= h, end at i >= 1   reversed paths
    reversed_sum(h)       height <= h, any end         reversed paths
    reversed_limit_formal  (1+v+v^2)(1-v): formal only, NOT a count
    area_A                total area of closed Deutsch paths
    height_sum_closed(N)  series: total height, closed paths
    height_sum_open(N)    series: total height, open paths

reversed_limit_formal is the h -> infinity substitution into the
reversed_sum expression.  Open reversed paths of a fixed length form an
infinite family, so this is an algebraic identity with no counting
meaning; its z-expansion goes negative (first at z^3) and it is excluded
from the oracle battery.
"""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import (
    KERNEL,
    Poly,
    RatFn,
    Series,
    V,
    compose_with_v,
    expand_in_v,
    expand_in_z,
    trinomial,
)
from .paths import PathFamilyQuery, count_dp, enumerate_paths, total_area_dp, total_height_dp
from .reporting import VerificationReport


class BadParams(ValueError):
    """Formula parameters outside their valid range."""


ONE_PLUS_V = Poly((1, 1))


def _one_minus_v_pow(k: int) -> Poly:
    if k < 1:
        raise BadParams(f"exponent must be positive, got {k}")
    return 1 - Poly.monomial(1, k)


# --- the catalog ------------------------------------------------------------


def motzkin_gf() -> RatFn:
    """Motzkin paths: M(v) = 1 + v + v^2 under z = v/(1+v+v^2)."""
    return RatFn(KERNEL)


def phi(h: int, i: int) -> RatFn:
    """Deutsch paths of height <= h ending at level i."""
    if not 0 <= i <= h:
        raise BadParams(f"phi needs 0 <= i <= h, got h={h}, i={i}")
    num = Poly.monomial(1, i) * KERNEL * _one_minus_v_pow(h - i + 2)
    den = ONE_PLUS_V ** (i + 1) * _one_minus_v_pow(h + 3)
    return RatFn(num, den)


def phi0_bounded(h: int) -> RatFn:
    """Closed Deutsch paths of height <= h."""
    if h < 0:
        raise BadParams(f"height bound must be nonnegative, got {h}")
    return RatFn(KERNEL * _one_minus_v_pow(h + 2), ONE_PLUS_V * _one_minus_v_pow(h + 3))


def phi0_limit() -> RatFn:
    """Closed Deutsch paths, no height bound."""
    return RatFn(KERNEL, ONE_PLUS_V)


def closed_height_ge(h: int) -> RatFn:
    """Closed Deutsch paths of height >= h (h >= 1)."""
    if h < 1:
        raise BadParams(f"closed_height_ge needs h >= 1, got {h}")
    num = KERNEL * Poly.monomial(1, h + 1) * Poly((1, -1))
    den = ONE_PLUS_V * _one_minus_v_pow(h + 2)
    return RatFn(num, den)


def open_sum(h: int) -> RatFn:
    """Deutsch paths of height <= h, any end level (sum of phi(h, i))."""
    if h < 0:
        raise BadParams(f"height bound must be nonnegative, got {h}")
    return RatFn(KERNEL * _one_minus_v_pow(h + 1), _one_minus_v_pow(h + 3))


def open_sum_limit() -> RatFn:
    """Deutsch paths with any end level, no bound: the Motzkin function."""
    return RatFn(KERNEL)


def psi0(h: int) -> RatFn:
    """Closed reversed Deutsch paths of height <= h (equals phi0_bounded)."""
    if h < 0:
        raise BadParams(f"height bound must be nonnegative, got {h}")
    return phi0_bounded(h)


def psi(h: int, i: int) -> RatFn:
    """Reversed Deutsch paths of height <= h ending at level i >= 1.

    At i = 1 the factor (1+v)^(i-2) is a genuine rational function; RatFn
    arithmetic needs no special case.
    """
    if not 1 <= i <= h:
        raise BadParams(f"psi needs 1 <= i <= h, got h={h}, i={i}")
    base = RatFn(V * KERNEL * _one_minus_v_pow(h + 1 - i), _one_minus_v_pow(h + 3))
    return base * RatFn(ONE_PLUS_V) ** (i - 2)


def reversed_sum(h: int) -> RatFn:
    """Reversed Deutsch paths of height <= h, any end level."""
    if h < 0:
        raise BadParams(f"height bound must be nonnegative, got {h}")
    return RatFn(KERNEL * ONE_PLUS_V**h * Poly((1, -1)), _one_minus_v_pow(h + 3))


def reversed_limit_formal() -> RatFn:
    """Formal h -> infinity form of reversed_sum; not a counting series."""
    return RatFn(KERNEL * Poly((1, -1)))


def area_gf() -> RatFn:
    """Total area of closed Deutsch paths: A = v^2(1+v+v^2)^2 / ((1+v)^3 (1-v)^2)."""
    num = Poly.monomial(1, 2) * KERNEL**2
    den = ONE_PLUS_V**3 * Poly((1, -1)) ** 2
    return RatFn(num, den)


def open_height_ge(h: int) -> RatFn:
    """Open Deutsch paths of height >= h (h >= 1): the height_sum_open summand."""
    if h < 1:
        raise BadParams(f"open_height_ge needs h >= 1, got {h}")
    num = KERNEL * Poly((1, 0, -1)) * Poly.monomial(1, h)
    return RatFn(num, _one_minus_v_pow(h + 2))


def _height_sum_series(order: int, summand, min_v_order) -> Series:
    # Sum in the v-coordinate first: the h-th summand has v-order >= h (open)
    # or h+1 (closed), and ord_z(v(z)) = 1, so terms with h > order cannot
    # touch z^0..z^order.  The v-order claim is asserted, not assumed.
    total = [0] * (order + 1)
    for h in range(1, order + 1):
        w = expand_in_v(summand(h), order)
        lead = min_v_order(h)
        for k in range(min(lead, order + 1)):
            if w.coeffs[k] != 0:
                raise AssertionError(
                    f"height summand h={h} has unexpected v^{k} term; truncation unsafe"
                )
        for k in range(order + 1):
            total[k] += w.coeffs[k]
    return compose_with_v(total, order)


def height_sum_closed(order: int) -> Series:
    """Series whose [z^n] is the total height over closed Deutsch paths."""
    if order < 0:
        raise BadParams(f"order must be nonnegative, got {order}")
    return _height_sum_series(order, closed_height_ge, lambda h: h + 1)


def height_sum_open(order: int) -> Series:
    """Series whose [z^n] is the total height over open Deutsch paths."""
    if order < 0:
        raise BadParams(f"order must be nonnegative, got {order}")
    return _height_sum_series(order, open_height_ge, lambda h: h)


# --- formula ids ------------------------------------------------------------

_SPECS = {
    # name: (number of args, constructor)
    "motzkin_M": (0, motzkin_gf),
    "phi": (2, phi),
    "phi0_bounded": (1, phi0_bounded),
    "phi0_limit": (0, phi0_limit),
    "closed_height_ge": (1, closed_height_ge),
    "open_sum": (1, open_sum),
    "open_sum_limit": (0, open_sum_limit),
    "psi0": (1, psi0),
    "psi": (2, psi),
    "reversed_sum": (1, reversed_sum),
    "reversed_limit_formal": (0, reversed_limit_formal),
    "area_A": (0, area_gf),
    "height_sum_closed": (1, height_sum_closed),
    "height_sum_open": (1, height_sum_open),
}

_ID_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\(([-0-9,\s]*)\))?$")


@dataclass(frozen=True)
class FormulaId:
    """A formula name plus its integer parameters, e.g. phi(4, 1)."""

    name: str
    args: tuple[int, ...] = ()

    def __post_init__(self):
        spec = _SPECS.get(self.name)
        if spec is None:
            raise BadParams(f"unknown formula {self.name!r}; known: {', '.join(_SPECS)}")
        if len(self.args) != spec[0]:
            raise BadParams(f"{self.name} takes {spec[0]} parameter(s), got {len(self.args)}")

    @classmethod
    def parse(cls, text: str) -> "FormulaId":
        m = _ID_RE.match(text.strip())
        if not m:
            raise BadParams(f"cannot parse formula id {text!r}")
        name, argtext = m.groups()
        args = ()
        if argtext is not None and argtext.strip():
            args = tuple(int(a) for a in argtext.split(","))
        return cls(name, args)

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({','.join(str(a) for a in self.args)})"


def formula(fid: FormulaId | str):
    """Build the formula: a RatFn, or a Series for the height sums."""
    if isinstance(fid, str):
        fid = FormulaId.parse(fid)
    return _SPECS[fid.name][1](*fid.args)


# --- trinomial coefficient closed forms -------------------------------------


@dataclass(frozen=True)
class CoefficientFormula:
    """Signed sum of trinomials: n -> sum of sign * trinomial(n, n - offset)."""

    name: str
    terms: tuple[tuple[int, int], ...]  # (offset, sign)

    def __call__(self, n: int) -> int:
        if n < 0:
            raise BadParams(f"n must be nonnegative, got {n}")
        return sum(sign * trinomial(n, n - off) for off, sign in self.terms)


#: [z^n] phi0_limit: closed Deutsch paths of length n.
closed_coeff_formula = CoefficientFormula("closed", ((0, 1), (1, -1)))

#: [z^n] open_sum_limit: open Deutsch paths of length n (Motzkin numbers).
open_coeff_formula = CoefficientFormula("open", ((0, 1), (2, -1)))

#: [z^n] reversed_limit_formal: the alternating four-term sum (may be negative).
reversed_formal_coeff_formula = CoefficientFormula(
    "reversed_formal", ((0, 1), (1, -1), (2, -1), (3, 1))
)


def coeff_closed(n: int) -> int:
    return closed_coeff_formula(n)


def coeff_open(n: int) -> int:
    return open_coeff_formula(n)


def coeff_reversed_formal(n: int) -> int:
    return reversed_formal_coeff_formula(n)


# --- the oracle battery -----------------------------------------------------


def combinatorial_ids(h_max: int, series_order: int) -> list[FormulaId]:
    """Every FormulaId with a counting meaning, at bounds h <= h_max."""
    ids = [
        FormulaId("motzkin_M"),
        FormulaId("phi0_limit"),
        FormulaId("open_sum_limit"),
        FormulaId("area_A"),
        FormulaId("height_sum_closed", (series_order,)),
        FormulaId("height_sum_open", (series_order,)),
    ]
    for h in range(h_max + 1):
        ids.append(FormulaId("phi0_bounded", (h,)))
        ids.append(FormulaId("open_sum", (h,)))
        ids.append(FormulaId("psi0", (h,)))
        ids.append(FormulaId("reversed_sum", (h,)))
        for i in range(h + 1):
            ids.append(FormulaId("phi", (h, i)))
            if i >= 1:
                ids.append(FormulaId("psi", (h, i)))
        if h >= 1:
            ids.append(FormulaId("closed_height_ge", (h,)))
    return ids


def _dp_value(fid: FormulaId, n: int) -> int:
    name, args = fid.name, fid.args
    if name == "motzkin_M":
        return count_dp(PathFamilyQuery("motzkin", n))
    if name == "phi0_limit":
        return count_dp(PathFamilyQuery("deutsch", n, end_level=0))
    if name == "open_sum_limit":
        return count_dp(PathFamilyQuery("deutsch", n))
    if name == "phi":
        h, i = args
        return count_dp(PathFamilyQuery("deutsch", n, end_level=i, max_height=h))
    if name == "phi0_bounded":
        return count_dp(PathFamilyQuery("deutsch", n, end_level=0, max_height=args[0]))
    if name == "closed_height_ge":
        h = args[0]
        total = count_dp(PathFamilyQuery("deutsch", n, end_level=0))
        capped = count_dp(PathFamilyQuery("deutsch", n, end_level=0, max_height=h - 1))
        return total - capped
    if name == "open_sum":
        return count_dp(PathFamilyQuery("deutsch", n, max_height=args[0]))
    if name == "psi0":
        return count_dp(PathFamilyQuery("reversed", n, end_level=0, max_height=args[0]))
    if name == "psi":
        h, i = args
        return count_dp(PathFamilyQuery("reversed", n, end_level=i, max_height=h))
    if name == "reversed_sum":
        return count_dp(PathFamilyQuery("reversed", n, max_height=args[0]))
    if name == "area_A":
        return total_area_dp(PathFamilyQuery("deutsch", n, end_level=0))
    if name == "height_sum_closed":
        return total_height_dp(n, "closed")
    if name == "height_sum_open":
        return total_height_dp(n, "open")
    raise BadParams(f"{fid} has no combinatorial meaning")


class _EnumTables:
    """Per-n path statistics gathered once and shared across formula ids."""

    def __init__(self, n_max: int, h_max: int):
        self.n_max = n_max
        self.deutsch: dict[int, list[tuple[int, int, int]]] = {}
        self.reversed_by_h: dict[tuple[int, int], list[int]] = {}
        self.motzkin_counts: dict[int, int] = {}
        for n in range(n_max + 1):
            self.deutsch[n] = [
                (p.end_level, p.height, p.area)
                for p in enumerate_paths(PathFamilyQuery("deutsch", n))
            ]
            self.motzkin_counts[n] = len(enumerate_paths(PathFamilyQuery("motzkin", n)))
            for h in range(h_max + 1):
                self.reversed_by_h[n, h] = [
                    p.end_level
                    for p in enumerate_paths(PathFamilyQuery("reversed", n, max_height=h))
                ]

    def value(self, fid: FormulaId, n: int) -> int:
        name, args = fid.name, fid.args
        deu = self.deutsch[n]
        if name == "motzkin_M":
            return self.motzkin_counts[n]
        if name == "phi0_limit":
            return sum(1 for e, _, _ in deu if e == 0)
        if name == "open_sum_limit":
            return len(deu)
        if name == "phi":
            h, i = args
            return sum(1 for e, ht, _ in deu if e == i and ht <= h)
        if name == "phi0_bounded":
            return sum(1 for e, ht, _ in deu if e == 0 and ht <= args[0])
        if name == "closed_height_ge":
            return sum(1 for e, ht, _ in deu if e == 0 and ht >= args[0])
        if name == "open_sum":
            return sum(1 for _, ht, _ in deu if ht <= args[0])
        if name == "psi0":
            return sum(1 for e in self.reversed_by_h[n, args[0]] if e == 0)
        if name == "psi":
            h, i = args
            return sum(1 for e in self.reversed_by_h[n, h] if e == i)
        if name == "reversed_sum":
            return len(self.reversed_by_h[n, args[0]])
        if name == "area_A":
            return sum(a for e, _, a in deu if e == 0)
        if name == "height_sum_closed":
            return sum(ht for e, ht, _ in deu if e == 0)
        if name == "height_sum_open":
            return sum(ht for _, ht, _ in deu)
        raise BadParams(f"{fid} has no combinatorial meaning")


def oracle_check(
    ids: list[FormulaId] | None = None,
    *,
    enum_max: int = 10,
    dp_max: int = 60,
    h_max: int = 6,
    threads: int = 1,
) -> VerificationReport:
    """Check every combinatorial formula against both counting oracles.

    Series coefficients must equal exhaustive-enumeration statistics for
    n <= enum_max and transfer-matrix DP values for n <= dp_max.  Returns
    the full report; raises MismatchFound (report attached) on the first
    failing cell.
    """
    if ids is None:
        ids = combinatorial_ids(h_max, dp_max)
    report = VerificationReport("formula oracle equivalence")
    tables = _EnumTables(enum_max, h_max)

    def check_one(fid: FormulaId) -> list:
        obj = formula(fid)
        series = obj if isinstance(obj, Series) else expand_in_z(obj, dp_max)
        rows = []
        witness = ""
        for n in range(dp_max + 1):
            want = _dp_value(fid, n)
            got = series.coeff(n)
            if got != want:
                witness = f"[z^{n}] {fid} = {got}, DP oracle = {want}"
                break
        rows.append((f"{fid} vs DP", f"n<={dp_max}", not witness, witness))
        witness = ""
        for n in range(min(enum_max, dp_max) + 1):
            want = tables.value(fid, n)
            got = series.coeff(n)
            if got != want:
                witness = f"[z^{n}] {fid} = {got}, enumeration oracle = {want}"
                break
        rows.append((f"{fid} vs enumeration", f"n<={enum_max}", not witness, witness))
        return rows

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check_one, ids))
    else:
        results = [check_one(fid) for fid in ids]
    for rows in results:
        for name, dim, passed, witness in rows:
            report.add(name, dim, passed, witness)
    report.data["formulas_checked"] = len(ids)
    report.data["cells_checked"] = len(ids) * (dp_max + 1 + min(enum_max, dp_max) + 1)
    report.raise_if_failed()
    return report
