"""Range and acyclic range interpretations of conflict-free sets."""
from __future__ import annotations

from typing import Iterable

from ._mode import oracle_enabled
from .acyclic import derivable, unblocked_exists_masks
from .decisive import Decision, decide_masks
from .errors import AdfError
from .logic import Interpretation, iter_bits
from .model import AdfInstance


class NotConflictFreeError(AdfError, ValueError):
    pass


def conflict_free_mask(D: AdfInstance, m: int) -> bool:
    return all(D.cond[i](m) for i in iter_bits(m))


def range_masks(D: AdfInstance, m: int) -> tuple[int, int]:
    """(true, false) masks of the range interpretation of ``m``.

    Sweeps are synchronous: statements discarded in one sweep only count
    from the next sweep on.
    """
    fmask = 0
    while True:
        new = 0
        for i in iter_bits(D.full & ~(m | fmask)):
            if decide_masks(D, i, m, fmask) is Decision.OUT:
                new |= 1 << i
        if not new:
            return m, fmask
        fmask |= new


def acyclic_range_masks(D: AdfInstance, m: int) -> tuple[int, int]:
    """(true, false) masks of the acyclic range interpretation of ``m``."""
    fmask = 0
    while True:
        open_ = D.full & ~(m | fmask)
        if oracle_enabled():
            new = 0
            for i in iter_bits(open_):
                if not unblocked_exists_masks(D, D.full, i, m, fmask):
                    new |= 1 << i
        else:
            alive = derivable(D, D.full, rejected=fmask, forbid=m)
            new = open_ & ~alive
        if not new:
            return m, fmask
        fmask |= new


def _checked_mask(D: AdfInstance, E: Iterable[str]) -> int:
    m = D.mask(E)
    if not conflict_free_mask(D, m):
        raise NotConflictFreeError(f"{{{','.join(D.names(m))}}} is not conflict-free")
    return m


def range_interpretation(D: AdfInstance, E: Iterable[str]) -> Interpretation:
    t, f = range_masks(D, _checked_mask(D, E))
    return Interpretation(D.statements, t | f, t)


def acyclic_range_interpretation(D: AdfInstance, E: Iterable[str]) -> Interpretation:
    t, f = acyclic_range_masks(D, _checked_mask(D, E))
    return Interpretation(D.statements, t | f, t)


def discarded_set(D: AdfInstance, E: Iterable[str]) -> frozenset[str]:
    return range_interpretation(D, E).false


def acyclic_discarded_set(D: AdfInstance, E: Iterable[str]) -> frozenset[str]:
    return acyclic_range_interpretation(D, E).false
