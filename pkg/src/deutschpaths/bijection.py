"""Length-preserving bijection between open Deutsch paths and Motzkin paths.

Both families of length n have the same cardinality (the Motzkin number),
and the witness is a first-return recursion.  An open Deutsch path w is
either empty, never returns to the x-axis after its forced initial
up-step (w = U w~ with w~ re-based to level 0), or returns for the first
time via some down-step D_d (w = U w~ D_d x, where w~ re-based ends at
level d-1).  The image is

    empty     -> empty
    U w~      -> F  map(w~)
    U w~ D x  -> U  map(w~)  D  map(x)

and the inverse recomputes the down-step size as d = 1 + end level of the
recovered inner path, which is the only place level arithmetic enters.
Step increments are unaffected by re-basing, so the recursion works on
increment tuples directly.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .paths import (
    DeutschPath,
    MotzkinPath,
    PathError,
    PathFamilyQuery,
    enumerate_paths,
    validate_path,
)
from .reporting import VerificationReport


class NotAPath(ValueError):
    """Input is not a valid path of the required family."""


def _ensure(path, cls, family: str):
    if isinstance(path, cls):
        return path
    if isinstance(path, (str, list, tuple)):
        try:
            return validate_path(path, family)
        except PathError as exc:
            raise NotAPath(f"not a valid {family} path: {exc}") from exc
    raise NotAPath(f"expected a {family} path, got {type(path).__name__}")


@dataclass(frozen=True)
class FirstReturnDecomposition:
    """One recursion step: w = empty, U*tail, or U*inner*D(d)*remainder."""

    kind: str  # empty | no_return | returns
    tail: DeutschPath | None = None
    inner: DeutschPath | None = None
    down_size: int | None = None
    remainder: DeutschPath | None = None


def decompose(w) -> FirstReturnDecomposition:
    """Split an open Deutsch path at its first return to level 0."""
    w = _ensure(w, DeutschPath, "deutsch")
    if len(w) == 0:
        return FirstReturnDecomposition("empty")
    first_return = next((t for t in range(1, len(w) + 1) if w.levels[t] == 0), None)
    if first_return is None:
        return FirstReturnDecomposition("no_return", tail=DeutschPath(w.steps[1:]))
    inner = DeutschPath(w.steps[1 : first_return - 1])
    return FirstReturnDecomposition(
        "returns",
        inner=inner,
        down_size=-w.steps[first_return - 1],
        remainder=DeutschPath(w.steps[first_return:]),
    )


def recompose(d: FirstReturnDecomposition) -> DeutschPath:
    """Inverse of decompose."""
    if d.kind == "empty":
        return DeutschPath()
    if d.kind == "no_return":
        return DeutschPath((1,) + d.tail.steps)
    if d.kind != "returns":
        raise NotAPath(f"unknown decomposition kind {d.kind!r}")
    if d.down_size != 1 + d.inner.end_level:
        raise NotAPath(
            f"down size {d.down_size} inconsistent with inner end level {d.inner.end_level}"
        )
    return DeutschPath((1,) + d.inner.steps + (-d.down_size,) + d.remainder.steps)


def to_motzkin(w) -> MotzkinPath:
    """Map an open Deutsch path to the Motzkin path of the same length."""
    w = _ensure(w, DeutschPath, "deutsch")
    return MotzkinPath(_to_motzkin_steps(w.steps))


def _to_motzkin_steps(steps: tuple[int, ...]) -> tuple[int, ...]:
    if not steps:
        return ()
    level = 0
    first_return = None
    for t, s in enumerate(steps, start=1):
        level += s
        if level == 0:
            first_return = t
            break
    if first_return is None:
        return (0,) + _to_motzkin_steps(steps[1:])
    inner = _to_motzkin_steps(steps[1 : first_return - 1])
    return (1,) + inner + (-1,) + _to_motzkin_steps(steps[first_return:])


def from_motzkin(m) -> DeutschPath:
    """Inverse map; recomputes each down-step size from the inner end level."""
    m = _ensure(m, MotzkinPath, "motzkin")
    steps, end = _from_motzkin_steps(m.steps)
    return DeutschPath(steps)


def _from_motzkin_steps(steps: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    # returns (deutsch increments, end level)
    if not steps:
        return (), 0
    if steps[0] == 0:
        tail, end = _from_motzkin_steps(steps[1:])
        return (1,) + tail, end + 1
    level = 0
    first_return = None
    for t, s in enumerate(steps, start=1):
        level += s
        if level == 0:
            first_return = t
            break
    inner, inner_end = _from_motzkin_steps(steps[1 : first_return - 1])
    d = 1 + inner_end
    rest, rest_end = _from_motzkin_steps(steps[first_return:])
    return (1,) + inner + (-d,) + rest, rest_end


def returns_count(w) -> int:
    """Number of returns-decompositions in w's recursion tree."""
    w = _ensure(w, DeutschPath, "deutsch")
    d = decompose(w)
    if d.kind == "empty":
        return 0
    if d.kind == "no_return":
        return returns_count(d.tail)
    return 1 + returns_count(d.inner) + returns_count(d.remainder)


def certify(n_max: int = 10, threads: int = 1) -> VerificationReport:
    """Exhaustively certify bijectivity and round trips for all n <= n_max.

    Also records (without asserting any correspondence) the joint
    distribution of the Deutsch path's end level against the image's flat
    count, since the matching Motzkin statistic is an open question.
    """
    report = VerificationReport("Deutsch-Motzkin bijection certification")
    counts = []
    joint: dict[tuple[int, int], int] = {}

    def certify_n(n: int):
        rows = []
        domain = enumerate_paths(PathFamilyQuery("deutsch", n))
        codomain = enumerate_paths(PathFamilyQuery("motzkin", n))
        images = [to_motzkin(w) for w in domain]
        lengths_ok = all(len(img) == len(w) for img, w in zip(images, domain))
        rows.append(("length preserved", f"n={n}", lengths_ok, ""))
        injective = len(set(images)) == len(images)
        rows.append(("injective", f"n={n}", injective, ""))
        onto = set(images) == set(codomain)
        rows.append(("image is every Motzkin path", f"n={n}", onto, ""))
        back_ok = all(from_motzkin(img) == w for img, w in zip(images, domain))
        rows.append(("from_motzkin(to_motzkin(w)) = w", f"n={n}", back_ok, ""))
        fwd_ok = all(to_motzkin(from_motzkin(m)) == m for m in codomain)
        rows.append(("to_motzkin(from_motzkin(m)) = m", f"n={n}", fwd_ok, ""))
        counts_ok = len(domain) == len(codomain)
        rows.append((
            "|open Deutsch| = |Motzkin|", f"n={n}", counts_ok,
            "" if counts_ok else f"{len(domain)} vs {len(codomain)}",
        ))
        ups_ok = all(
            sum(1 for s in img.steps if s == 1) == returns_count(w)
            for img, w in zip(images, domain)
        )
        rows.append(("image up-steps = returns in recursion tree", f"n={n}", ups_ok, ""))
        local_joint: dict[tuple[int, int], int] = {}
        for w, img in zip(domain, images):
            flats = sum(1 for s in img.steps if s == 0)
            key = (w.end_level, flats)
            local_joint[key] = local_joint.get(key, 0) + 1
        return n, rows, len(domain), local_joint

    ns = range(n_max + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(certify_n, ns))
    else:
        results = [certify_n(n) for n in ns]
    for n, rows, size, local_joint in results:
        for name, dim, passed, witness in rows:
            report.add(name, dim, passed, witness)
        counts.append(size)
        for key, c in local_joint.items():
            joint[key] = joint.get(key, 0) + c
    report.data["counts"] = counts
    report.data["end_level_vs_flats"] = {f"{e},{f}": c for (e, f), c in sorted(joint.items())}
    report.raise_if_failed()
    return report
