"""Decisiveness of partial two-valued interpretations and minimal decisive sets."""
from __future__ import annotations

import enum

from ._mode import oracle_enabled
from .errors import InstanceError
from .logic import Interpretation, iter_submasks
from .model import AdfInstance


class Decision(str, enum.Enum):
    IN = "decisively-in"
    OUT = "decisively-out"
    UNDECIDED = "undecided"


def decide_masks(D: AdfInstance, i: int, tmask: int, fmask: int) -> Decision:
    """Decisiveness of statement ``i`` under the partial assignment (tmask, fmask)."""
    if oracle_enabled():
        return decide_by_completions(D, i, tmask, fmask)
    known = D.kleene[i](tmask, fmask)
    if known is not None:
        return Decision.IN if known else Decision.OUT
    par = D.par_mask[i]
    free = par & ~(tmask | fmask)
    base = tmask & par
    cond = D.cond[i]
    seen_in = seen_out = False
    for sub in iter_submasks(free):
        if cond(base | sub):
            seen_in = True
        else:
            seen_out = True
        if seen_in and seen_out:
            return Decision.UNDECIDED
    return Decision.IN if seen_in else Decision.OUT


def decide_by_completions(D: AdfInstance, i: int, tmask: int, fmask: int) -> Decision:
    """Definition: evaluate the condition on every completion to the parents."""
    par = D.par_mask[i]
    free = par & ~(tmask | fmask)
    values = {D.cond[i]((tmask & par) | sub) for sub in iter_submasks(free)}
    if values == {True}:
        return Decision.IN
    if values == {False}:
        return Decision.OUT
    return Decision.UNDECIDED


def _index(D: AdfInstance, s: str) -> int:
    try:
        return D.index[s]
    except KeyError:
        raise InstanceError(f"unknown statement {s!r}") from None


def is_decisive(D: AdfInstance, v: Interpretation, s: str) -> Decision:
    v = D.align(v)
    return decide_masks(D, _index(D, s), v.tmask, v.fmask)


def is_decisively_in(D: AdfInstance, v: Interpretation, s: str) -> bool:
    return is_decisive(D, v, s) is Decision.IN


def is_decisively_out(D: AdfInstance, v: Interpretation, s: str) -> bool:
    return is_decisive(D, v, s) is Decision.OUT


def _popcount(m: int) -> int:
    return bin(m).count("1")


def min_dec_masks(D: AdfInstance, x: bool, i: int) -> tuple[tuple[int, int], ...]:
    """Minimal decisively-``x`` assignments over the parents of statement ``i``.

    Scans all 3^|par| partial assignments; results are cached on the instance.
    """
    key = (x, i)
    cached = D._min_dec.get(key)
    if cached is not None:
        return cached
    want = Decision.IN if x else Decision.OUT
    par = D.par_mask[i]
    decisive = []
    for assigned in iter_submasks(par):
        for t in iter_submasks(assigned):
            if decide_masks(D, i, t, assigned & ~t) is want:
                decisive.append((t, assigned & ~t))
    decisive.sort(key=lambda tf: (_popcount(tf[0] | tf[1]), tf[0], tf[1]))
    minimal: list[tuple[int, int]] = []
    for t, f in decisive:
        if not any(kt & ~t == 0 and kf & ~f == 0 for kt, kf in minimal):
            minimal.append((t, f))
    result = tuple(minimal)
    D._min_dec[key] = result
    return result


def min_dec(D: AdfInstance, x: str | bool, s: str) -> list[Interpretation]:
    """The inclusion-minimal interpretations deciding ``s`` as ``x`` ("in"/"out")."""
    if isinstance(x, str):
        if x not in ("in", "out"):
            raise ValueError("x must be 'in' or 'out'")
        x = x == "in"
    return [Interpretation(D.statements, t | f, t) for t, f in min_dec_masks(D, x, _index(D, s))]


def dominates(v: Interpretation, w: Interpretation) -> bool:
    """``v`` is contained in ``w``: v^t within w^t and v^f within w^f."""
    return v.tmask & ~w.tmask == 0 and v.fmask & ~w.fmask == 0
