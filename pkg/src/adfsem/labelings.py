"""Labeling-based semantics built on the three-valued characteristic operator."""
from __future__ import annotations

from typing import Iterable

from ._mode import oracle_enabled
from .decisive import Decision, decide_masks
from .errors import AdfError, CapExceededError, DomainMismatchError
from .extensions import model_mask
from .logic import Bottom, Interpretation, Value, all_three_valued, iter_bits, iter_submasks, leq_info, substitute
from .model import AdfInstance

DEFAULT_MAX_LABELING_STATEMENTS = 12

LABELING_SEMANTICS = ("model", "admissible", "complete", "preferred", "grounded", "stable")


class NotAModelError(AdfError, ValueError):
    pass


def _total(D: AdfInstance, v: Interpretation) -> Interpretation:
    if set(v.domain) != set(D.statements):
        raise DomainMismatchError("labeling must be defined on every statement of the instance")
    return D.align(v)


def gamma_masks(D: AdfInstance, tmask: int, fmask: int) -> tuple[int, int]:
    if oracle_enabled():
        return gamma_by_expansion(D, tmask, fmask)
    t = f = 0
    for i in range(D.n):
        d = decide_masks(D, i, tmask, fmask)
        if d is Decision.IN:
            t |= 1 << i
        elif d is Decision.OUT:
            f |= 1 << i
    return t, f


def gamma_by_expansion(D: AdfInstance, tmask: int, fmask: int) -> tuple[int, int]:
    """Meet of every condition's value over all two-valued extensions of (tmask, fmask)."""
    free = D.full & ~(tmask | fmask)
    always_in = D.full
    always_out = D.full
    for sub in iter_submasks(free):
        w = tmask | sub
        accepted = 0
        for i in range(D.n):
            if D.cond[i](w):
                accepted |= 1 << i
        always_in &= accepted
        always_out &= ~accepted
    return always_in, always_out & D.full


def gamma(D: AdfInstance, v: Interpretation) -> Interpretation:
    v = _total(D, v)
    t, f = gamma_masks(D, v.tmask, v.fmask)
    return Interpretation(D.statements, t | f, t)


def _is_admissible_masks(D: AdfInstance, t: int, f: int) -> bool:
    gt, gf = gamma_masks(D, t, f)
    return t & ~gt == 0 and f & ~gf == 0


def _is_complete_masks(D: AdfInstance, t: int, f: int) -> bool:
    return gamma_masks(D, t, f) == (t, f)


def is_three_valued_model(D: AdfInstance, v: Interpretation) -> bool:
    """Every decided statement's condition, read with only ``t`` statements true, agrees with it."""
    v = _total(D, v)
    for i in iter_bits(v.assigned):
        if D.cond[i](v.tmask) != bool(v.tmask >> i & 1):
            return False
    return True


def is_admissible_labeling(D: AdfInstance, v: Interpretation) -> bool:
    v = _total(D, v)
    return _is_admissible_masks(D, v.tmask, v.fmask)


def is_complete_labeling(D: AdfInstance, v: Interpretation) -> bool:
    v = _total(D, v)
    return _is_complete_masks(D, v.tmask, v.fmask)


def grounded_labeling(D: AdfInstance) -> Interpretation:
    t = f = 0
    while True:
        nt, nf = gamma_masks(D, t, f)
        if (nt, nf) == (t, f):
            return Interpretation(D.statements, t | f, t)
        t, f = nt, nf


def _check_cap(D: AdfInstance, cap: int) -> None:
    if D.n > cap:
        raise CapExceededError(f"{D.n} statements exceed the labeling-scan cap of {cap}")


def labeling_key(v: Interpretation) -> tuple[int, ...]:
    """Sort key: per-statement value in declaration order, t < f < u."""
    order = {Value.T: 0, Value.F: 1, Value.U: 2}
    return tuple(order[v[s]] for s in v.domain)


def three_valued_models(D: AdfInstance, *, max_statements: int = DEFAULT_MAX_LABELING_STATEMENTS) -> list[Interpretation]:
    _check_cap(D, max_statements)
    return sorted((v for v in all_three_valued(D.statements) if is_three_valued_model(D, v)), key=labeling_key)


def admissible_labelings(D: AdfInstance, *, max_statements: int = DEFAULT_MAX_LABELING_STATEMENTS) -> list[Interpretation]:
    _check_cap(D, max_statements)
    found = [v for v in all_three_valued(D.statements) if _is_admissible_masks(D, v.tmask, v.fmask)]
    return sorted(found, key=labeling_key)


def complete_labelings(D: AdfInstance, *, max_statements: int = DEFAULT_MAX_LABELING_STATEMENTS) -> list[Interpretation]:
    _check_cap(D, max_statements)
    found = [v for v in all_three_valued(D.statements) if _is_complete_masks(D, v.tmask, v.fmask)]
    return sorted(found, key=labeling_key)


def preferred_labelings(D: AdfInstance, *, max_statements: int = DEFAULT_MAX_LABELING_STATEMENTS) -> list[Interpretation]:
    adm = admissible_labelings(D, max_statements=max_statements)
    return [v for v in adm if not any(w != v and leq_info(v, w) for w in adm)]


def reduct(D: AdfInstance, M: Iterable[str]) -> AdfInstance:
    """Restrict ``D`` to the model ``M``; atoms outside ``M`` become the constant false."""
    m = D.mask(M)
    if not model_mask(D, m):
        raise NotAModelError(f"{{{','.join(D.names(m))}}} is not a model")
    kept = D.names(m)
    outside = {s: Bottom() for s in D.statements if s not in set(kept)}
    conditions = {s: substitute(D.conditions[s], outside) for s in kept}
    return AdfInstance(kept, conditions, name=D.name)


def is_stable_model(D: AdfInstance, M: Iterable[str]) -> bool:
    M = frozenset(M)
    if not model_mask(D, D.mask(M)):
        return False
    return grounded_labeling(reduct(D, M)).true == M


def stable_models(D: AdfInstance, *, max_statements: int = 20) -> list[tuple[str, ...]]:
    if D.n > max_statements:
        raise CapExceededError(f"{D.n} statements exceed the subset-scan cap of {max_statements}")
    found = [m for m in range(1 << D.n) if is_stable_model(D, D.names(m))]
    found.sort(key=lambda m: (bin(m).count("1"), tuple(iter_bits(m))))
    return [D.names(m) for m in found]


def labelings(D: AdfInstance, name: str, *, max_statements: int = DEFAULT_MAX_LABELING_STATEMENTS) -> list[Interpretation]:
    """Labelings under ``name``; stable models are returned as two-valued labelings."""
    if name == "model":
        return three_valued_models(D, max_statements=max_statements)
    if name == "admissible":
        return admissible_labelings(D, max_statements=max_statements)
    if name == "complete":
        return complete_labelings(D, max_statements=max_statements)
    if name == "preferred":
        return preferred_labelings(D, max_statements=max_statements)
    if name == "grounded":
        return [grounded_labeling(D)]
    if name == "stable":
        found = [D.interpretation(true=M, false=[s for s in D.statements if s not in M])
                 for M in stable_models(D, max_statements=max_statements)]
        return sorted(found, key=labeling_key)
    raise ValueError(f"unknown labeling semantics {name!r}")
