"""Exact arithmetic: polynomials and rational functions in v, series in z.

Everything downstream works in two coordinate systems.  Closed forms live
in the substitution variable v, as dense polynomials (Poly) and normalized
rational functions (RatFn) with arbitrary-precision rational coefficients.
Counting sequences live in the length variable z, as truncated power
series (Series) whose order is tracked explicitly: coefficients beyond the
stored order are unknown and asking for them is an error, never a silent
zero.

The two systems are connected by the kernel substitution

    z = v/(1+v+v^2),    equivalently    v = z*(1+v+v^2),

whose series solution v(z) = z + z^2 + 2z^3 + 4z^4 + ... (shifted Motzkin
numbers) is computed by Newton iteration on integer coefficient lists; no
square roots appear anywhere.  ``expand_in_z`` composes a rational
function with v(z); ``coeff_of_z`` extracts a single z-coefficient
directly through trinomial rows, which is how the large-n statistics
avoid building million-term series.

Trinomial coefficients trinomial(n, k) = [v^k](1+v+v^2)^n are produced a
whole row at a time by an integer three-term recurrence in k, cached in
memory, and optionally persisted to a small versioned JSON cache file
together with the computed prefix of v(z).
"""

from __future__ import annotations

import json
import numbers
import threading
from fractions import Fraction
from pathlib import Path


class DivisionByZero(ZeroDivisionError):
    """Division by the zero polynomial or zero rational function."""


class DivisorNotUnit(ZeroDivisionError):
    """Series division needs a divisor with nonzero constant term."""


class PoleAtOrigin(ValueError):
    """The rational function has a pole at v = 0, so no z-expansion exists."""


def _norm_coeff(c):
    # keep ints as ints so repr/JSON stay clean; Fraction(k, 1) collapses
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    if isinstance(c, numbers.Integral):
        return int(c)
    return c


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Dense univariate polynomial in v with exact rational coefficients.

    Canonical form: no trailing zero coefficients; the zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        return cls((0,) * k + (c,))

    @classmethod
    def geometric(cls, k: int) -> "Poly":
        """1 + v + ... + v^(k-1)."""
        return cls((1,) * k)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def constant(self):
        return self.coeff(0)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial; use RatFn")
        result = Poly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dlead = _as_fraction(other.leading())
        dd = other.degree
        q = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            factor = _as_fraction(rem[i]) / dlead
            q[i - dd] = factor
            for j, c in enumerate(other.coeffs):
                rem[i - dd + j] -= factor * c
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("polynomial division by zero")
            return Poly(tuple(_as_fraction(c) / other for c in self.coeffs))
        if isinstance(other, Poly):
            return RatFn(self, other)
        return NotImplemented

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient that must leave no remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{self!r} not divisible by {other!r}")
        return q

    def __call__(self, x):
        """Evaluate by Horner's rule; x may be a scalar, Poly, or Series."""
        result = x * 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def to_json(self) -> list:
        return [[_as_fraction(c).numerator, _as_fraction(c).denominator] for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        return cls(Fraction(int(p), int(q)) for p, q in data)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            else:
                mono = "v" if k == 1 else f"v^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        out = " + ".join(terms)
        return out.replace("+ -", "- ")


#: The polynomial v.
V = Poly((0, 1))

#: The kernel polynomial 1 + v + v^2.
KERNEL = Poly((1, 1, 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Euclidean gcd, normalized to primitive integer coefficients with the
    lowest-order nonzero coefficient positive (so gcd(1-v^4, 1-v^6) = 1-v^2).
    """
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    fracs = [_as_fraction(c) for c in a.coeffs]
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // _gcd_int(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    content = 0
    for c in ints:
        content = _gcd_int(content, abs(c))
    ints = [c // content for c in ints]
    low = next(c for c in ints if c != 0)
    if low < 0:
        ints = [-c for c in ints]
    return Poly(ints)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class RatFn:
    """Rational function in v, kept in canonical form.

    Canonical form: gcd(num, den) = 1 and den monic (leading coefficient
    1).  Construction from a zero denominator raises DivisionByZero.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly((1,))):
        if isinstance(num, (int, Fraction)):
            num = Poly((num,))
        if isinstance(den, (int, Fraction)):
            den = Poly((den,))
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.coeff(0) != 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading()
            if lead != 1:
                num = num / lead
                den = den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("rational functions are immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFn(other if isinstance(other, Poly) else Poly((other,)))
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFn", self.num, self.den))

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den)

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFn):
            return x
        if isinstance(x, Poly):
            return RatFn(x)
        if isinstance(x, (int, Fraction)):
            return RatFn(Poly((x,)))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "RatFn":
        if e < 0:
            if self.is_zero():
                raise DivisionByZero("negative power of zero")
            return RatFn(self.den, self.num) ** (-e)
        return RatFn(self.num**e, self.den**e)

    def __call__(self, x):
        """Evaluate at an exact scalar."""
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at {x}")
        return _norm_coeff(_as_fraction(self.num(x)) / _as_fraction(d))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"({self.num!r})"
        return f"({self.num!r}) / ({self.den!r})"


class Series:
    """Truncated power series in z with explicit order.

    A Series of order N stores the N+1 coefficients of z^0..z^N.  Binary
    operations return the minimum order of the operands; asking for a
    coefficient beyond the order raises IndexError rather than guessing 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(_norm_coeff(c) for c in coeffs)
        if not cs:
            raise ValueError("a series stores at least the constant term")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("series are immutable")

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((0,) * (order + 1))

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "Series":
        cs = list(p.coeffs[: order + 1])
        cs += [0] * (order + 1 - len(cs))
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient of z^{n} unknown beyond order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise IndexError(f"cannot extend series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Series", self.coeffs))

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series((self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Series)):
            return self + (-other if isinstance(other, Series) else -other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, ca in enumerate(self.coeffs[: n + 1]):
            if ca:
                for j in range(n + 1 - i):
                    cb = other.coeffs[j]
                    if cb:
                        out[i + j] += ca * cb
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisorNotUnit("division of a series by zero")
            return Series(tuple(_as_fraction(c) / other for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        if other.coeffs[0] == 0:
            raise DivisorNotUnit("series divisor has zero constant term")
        n = min(self.order, other.order)
        inv0 = 1 / _as_fraction(other.coeffs[0])
        out = [0] * (n + 1)
        for i in range(n + 1):
            acc = self.coeffs[i]
            for j in range(1, i + 1):
                cb = other.coeffs[j]
                if cb:
                    acc -= cb * out[i - j]
            out[i] = _norm_coeff(acc * inv0)
        return Series(out)

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            raise ValueError("negative series power; divide instead")
        result = Series.from_poly(Poly((1,)), self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [
                [_as_fraction(c).numerator, _as_fraction(c).denominator] for c in self.coeffs
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Series":
        cs = [Fraction(int(p), int(q)) for p, q in data["coefficients"]]
        if len(cs) != data["order"] + 1:
            raise ValueError("series JSON length does not match order")
        return cls(cs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"Series(order={self.order}: [{shown}{more}])"


# --- the substitution v(z) ------------------------------------------------

_V_LOCK = threading.Lock()
_V_PREFIX: list[int] = [0, 1]  # v = z + O(z^2)


def _list_mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ca in enumerate(a[: n + 1]):
        if ca:
            for j in range(min(len(b), n + 1 - i)):
                cb = b[j]
                if cb:
                    out[i + j] += ca * cb
    return out


def _list_div(a: list[int], b: list[int], n: int) -> list[int]:
    # b[0] must be +-1 so the quotient stays integral
    out = [0] * (n + 1)
    inv0 = b[0]
    for i in range(n + 1):
        acc = a[i] if i < len(a) else 0
        for j in range(1, min(i, len(b) - 1) + 1):
            acc -= b[j] * out[i - j]
        out[i] = acc // inv0
    return out


def _extend_v_prefix(order: int) -> None:
    global _V_PREFIX
    m = len(_V_PREFIX) - 1
    v = list(_V_PREFIX)
    while m < order:
        m = min(2 * m, order)
        v = (v + [0] * (m + 1 - len(v)))[: m + 1]
        # Newton step for f(v) = v - z*(1+v+v^2):  v <- v - f(v)/f'(v)
        v2 = _list_mul(v, v, m)
        kern = [1 + v[0] + v2[0]] + [v[k] + v2[k] for k in range(1, m + 1)]
        num = [v[0]] + [v[k] - kern[k - 1] for k in range(1, m + 1)]
        one_plus_2v = [1 + 2 * v[0]] + [2 * v[k] for k in range(1, m + 1)]
        den = [1] + [-one_plus_2v[k] for k in range(m)]  # 1 - z*(1+2v)
        corr = _list_div(num, den, m)
        v = [v[k] - corr[k] for k in range(m + 1)]
    _V_PREFIX = v


def v_of_z(order: int) -> Series:
    """The series v(z) with v = z*(1+v+v^2), v(0) = 0, through z^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    with _V_LOCK:
        if len(_V_PREFIX) - 1 < order:
            _extend_v_prefix(order)
        return Series(_V_PREFIX[: order + 1])


def expand_in_z(f: RatFn | Poly, order: int) -> Series:
    """Compose f (a function of v) with v(z), truncated to the given order."""
    if isinstance(f, Poly):
        f = RatFn(f)
    if f.den.constant() == 0:
        raise PoleAtOrigin("denominator vanishes at v = 0")
    vv = v_of_z(order)
    return f.num(vv) / f.den(vv)


def expand_in_v(f: RatFn | Poly, order: int) -> Series:
    """Power-series expansion of f in the variable v itself."""
    if isinstance(f, Poly):
        f = RatFn(f)
    if f.den.constant() == 0:
        raise PoleAtOrigin("denominator vanishes at v = 0")
    num = Series.from_poly(f.num, order)
    den = Series.from_poly(f.den, order)
    return num / den


def compose_with_v(coeffs_in_v, order: int) -> Series:
    """Substitute v(z) into an explicit v-series prefix (Horner in v)."""
    vv = v_of_z(order)
    result = Series.zero(order)
    for c in reversed(list(coeffs_in_v)):
        result = result * vv + c
    return result


# --- trinomial coefficients ------------------------------------------------

_TRI_LOCK = threading.Lock()
_TRI_ROWS: dict[int, tuple[int, ...]] = {0: (1,)}


def _compute_row(n: int) -> tuple[int, ...]:
    # integer three-term recurrence along the row:
    # (k+1) T(n,k+1) = (n-k) T(n,k) + (2n-k+1) T(n,k-1)
    row = [0] * (2 * n + 1)
    row[0] = 1
    for k in range(2 * n):
        num = (n - k) * row[k] + ((2 * n - k + 1) * row[k - 1] if k >= 1 else 0)
        q, r = divmod(num, k + 1)
        if r:
            raise ArithmeticError(f"trinomial recurrence not integral at n={n}, k={k}")
        row[k + 1] = q
    return tuple(row)


def trinomial_row(n: int) -> tuple[int, ...]:
    """Coefficients of (1+v+v^2)^n: the 2n+1 values trinomial(n, 0..2n)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    with _TRI_LOCK:
        row = _TRI_ROWS.get(n)
        if row is None:
            row = _compute_row(n)
            _TRI_ROWS[n] = row
        return row


def trinomial(n: int, k: int) -> int:
    """[v^k](1+v+v^2)^n; zero outside 0 <= k <= 2n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > 2 * n:
        return 0
    return trinomial_row(n)[k]


def coeff_of_z(f: RatFn | Poly, n: int):
    """Single coefficient [z^n] f(v(z)) without building the z-series.

    Rests on the residue form of the substitution: for n >= 1,
    [z^n] F(v(z)) = [v^n] F(v) * (1 - v^2) * (1+v+v^2)^(n-1).
    """
    if isinstance(f, Poly):
        f = RatFn(f)
    if f.den.constant() == 0:
        raise PoleAtOrigin("denominator vanishes at v = 0")
    if n < 0:
        return 0
    if n == 0:
        return _norm_coeff(_as_fraction(f.num.constant()) / _as_fraction(f.den.constant()))
    w = expand_in_v(f * RatFn(Poly((1, 0, -1))), n)
    row = trinomial_row(n - 1)
    total = 0
    for j in range(n + 1):
        wj = w.coeffs[j]
        if wj:
            k = n - j
            if k <= 2 * (n - 1):
                total += wj * row[k]
    return _norm_coeff(total)


# --- optional disk cache ---------------------------------------------------

CACHE_FORMAT = "deutschpaths-cache"
CACHE_VERSION = 1
CACHE_FILENAME = "algebra_cache.json"


def save_cache(directory: str | Path) -> Path:
    """Persist trinomial rows and the v(z) prefix as versioned JSON."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    with _TRI_LOCK, _V_LOCK:
        payload = {
            "format": CACHE_FORMAT,
            "version": CACHE_VERSION,
            "v_prefix": list(_V_PREFIX),
            "trinomial_rows": {str(n): list(row) for n, row in _TRI_ROWS.items()},
        }
    target = directory / CACHE_FILENAME
    target.write_text(json.dumps(payload))
    return target


def load_cache(directory: str | Path) -> bool:
    """Merge a previously saved cache file; returns True if one was loaded."""
    global _V_PREFIX
    target = Path(directory) / CACHE_FILENAME
    if not target.exists():
        return False
    payload = json.loads(target.read_text())
    if payload.get("format") != CACHE_FORMAT or payload.get("version") != CACHE_VERSION:
        raise ValueError(f"unrecognized cache file {target}")
    with _TRI_LOCK, _V_LOCK:
        for key, row in payload["trinomial_rows"].items():
            n = int(key)
            if len(row) != 2 * n + 1:
                raise ValueError(f"corrupt trinomial row {n} in {target}")
            _TRI_ROWS.setdefault(n, tuple(int(c) for c in row))
        prefix = [int(c) for c in payload["v_prefix"]]
        if len(prefix) > len(_V_PREFIX):
            if prefix[: len(_V_PREFIX)] != _V_PREFIX:
                raise ValueError(f"cache v-prefix disagrees with computed values in {target}")
            _V_PREFIX = prefix
    return True
