"""Executable theorem suite, brute-force oracles and random instance generation.

Every check returns a :class:`Report` made of one :class:`Record` per
assertion.  Records carry a theorem id, the instance name, a witness string
and a pass flag, so reports can be gated on in CI or dumped as JSON.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from ._mode import oracle_paths
from .acyclic import _blocked_mask, enumerate_masks, unblocked_exists_masks
from .decisive import Decision, decide_by_completions, decide_masks, min_dec_masks
from .errors import CapExceededError
from .extensions import SEMANTICS, extension_masks, grounded_mask
from .labelings import (
    complete_labelings, gamma_by_expansion, gamma_masks, grounded_labeling,
    is_admissible_labeling, is_complete_labeling, is_three_valued_model,
    preferred_labelings, stable_models, admissible_labelings,
)
from .logic import (
    And, Atom, Bottom, Formula, Iff, Imp, Interpretation, Not, Or, Top,
    all_three_valued, iter_bits, iter_submasks, leq_info,
)
from .model import AdfInstance, DungAf, from_dung_af
from .ranges import acyclic_range_masks, range_masks

DEFAULT_VERIFY_CAP = 8


@dataclass(frozen=True)
class Record:
    theorem: str
    instance: str
    witness: str
    passed: bool

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}\t{self.theorem}\t{self.instance}\t{self.witness}"


@dataclass
class Report:
    records: list[Record] = field(default_factory=list)

    def add(self, theorem: str, instance: str, witness: str, passed: bool) -> None:
        self.records.append(Record(theorem, instance, witness, bool(passed)))

    def extend(self, other: "Report") -> "Report":
        self.records.extend(other.records)
        return self

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.passed]

    def by_theorem(self, theorem: str) -> list[Record]:
        return [r for r in self.records if r.theorem == theorem]

    def to_text(self) -> str:
        lines = [r.to_text() for r in self.records]
        lines.append(f"# {len(self.records)} records, {len(self.failures)} failures")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"ok": self.ok, "records": [asdict(r) for r in self.records]}, indent=2)


def _name(D: AdfInstance) -> str:
    return D.name or "<anonymous>"


def _set(D: AdfInstance, m: int) -> str:
    return "{" + ",".join(D.names(m)) + "}"


def _interp(D: AdfInstance, t: int, f: int) -> Interpretation:
    return Interpretation(D.statements, t | f, t)


def u_completion(v: Interpretation, S: Sequence[str]) -> Interpretation:
    """``v`` extended to ``S`` with every unassigned statement undecided."""
    return v.realign(tuple(S))


# ---------------------------------------------------------------------------
# extension <-> labeling correspondences


def check_correspondences(D: AdfInstance) -> Report:
    rep = Report()
    name = _name(D)
    cf = extension_masks(D, "conflict-free")
    pdcf = set(extension_masks(D, "pd-acyclic-conflict-free"))
    for m in cf:
        t, f = range_masks(D, m)
        rep.add("cf-range-is-3v-model", name, _set(D, m), is_three_valued_model(D, _interp(D, t, f)))
        if m in pdcf:
            ok = is_three_valued_model(D, _interp(D, t, f))
            t, f = acyclic_range_masks(D, m)
            ok = ok and is_three_valued_model(D, _interp(D, t, f))
            rep.add("pdcf-ranges-are-3v-models", name, _set(D, m), ok)

    for prefix, ranges in (("cc", range_masks), ("aa", acyclic_range_masks)):
        for kind, test in (("admissible", is_admissible_labeling), ("complete", is_complete_labeling)):
            for m in extension_masks(D, f"{prefix}-{kind}"):
                v = _interp(D, *ranges(D, m))
                rep.add(f"{prefix}-{kind}-range-is-{kind}-labeling", name, f"{_set(D, m)} -> {v}", test(D, v))

    g_ext = grounded_mask(D)
    g_lab = grounded_labeling(D)
    rep.add("grounded-extension-matches-labeling", name,
            f"{_set(D, g_ext)} vs {g_lab}", g_lab.tmask == g_ext)

    ext_stable = {frozenset(D.names(m)) for m in extension_masks(D, "stable")}
    lab_stable = {frozenset(M) for M in stable_models(D)}
    rep.add("stable-extensions-equal-stable-models", name,
            f"extensions={_sets(ext_stable)} models={_sets(lab_stable)}", ext_stable == lab_stable)

    for prefix, counterparts in preferred_correspondence(D).items():
        # the negative theorem: mismatches are allowed, so these records are observations
        rep.add(f"preferred-correspondence-{prefix}", name,
                f"extensions_without_labeling={counterparts['extensions_without_labeling']} "
                f"labelings_without_extension={counterparts['labelings_without_extension']}", True)
    return rep


def _sets(family: Iterable[frozenset[str]]) -> str:
    return "[" + ",".join("{" + ",".join(sorted(s)) + "}" for s in sorted(family, key=lambda s: (len(s), sorted(s)))) + "]"


def preferred_correspondence(D: AdfInstance) -> dict[str, dict[str, list]]:
    """Which xy-preferred extensions lack a preferred labeling with the same t-set, and vice versa."""
    labs = preferred_labelings(D, max_statements=max(D.n, 12))
    lab_sets = {v.tmask for v in labs}
    out = {}
    for prefix in ("cc", "aa"):
        exts = extension_masks(D, f"{prefix}-preferred")
        out[prefix] = {
            "extensions": [list(D.names(m)) for m in exts],
            "extensions_without_labeling": [list(D.names(m)) for m in exts if m not in lab_sets],
            "labelings_without_extension": [str(v) for v in labs if v.tmask not in set(exts)],
        }
    return out


def check_labeling_theorems(D: AdfInstance) -> Report:
    """Decisiveness characterizations of admissible/complete labelings; grounded is least complete."""
    rep = Report()
    name = _name(D)
    adm_bad = comp_bad = None
    for v in all_three_valued(D.statements):
        t, f = v.tmask, v.fmask
        dec = [decide_masks(D, i, t, f) for i in range(D.n)]
        by_dec = all(dec[i] is Decision.IN for i in iter_bits(t)) and all(dec[i] is Decision.OUT for i in iter_bits(f))
        if by_dec != is_admissible_labeling(D, v) and adm_bad is None:
            adm_bad = v
        by_dec = all((dec[i] is Decision.IN) == bool(t >> i & 1) and (dec[i] is Decision.OUT) == bool(f >> i & 1)
                     for i in range(D.n))
        if by_dec != is_complete_labeling(D, v) and comp_bad is None:
            comp_bad = v
    rep.add("admissible-iff-decisive", name, str(adm_bad) if adm_bad else "all labelings", adm_bad is None)
    rep.add("complete-iff-decisive-closed", name, str(comp_bad) if comp_bad else "all labelings", comp_bad is None)
    g = grounded_labeling(D)
    complete = complete_labelings(D, max_statements=max(D.n, 12))
    rep.add("grounded-least-complete-labeling", name, str(g),
            g in complete and all(leq_info(g, v) for v in complete))
    adm = set(admissible_labelings(D, max_statements=max(D.n, 12)))
    rep.add("complete-labelings-admissible", name, f"{len(complete)} complete",
            all(v in adm for v in complete))
    return rep


# ---------------------------------------------------------------------------
# extension-based properties


def check_fundamental_lemmas(D: AdfInstance) -> Report:
    rep = Report()
    name = _name(D)
    for prefix, ranges in (("cc", range_masks), ("aa", acyclic_range_masks)):
        admissible = set(extension_masks(D, f"{prefix}-admissible"))
        for m in sorted(admissible):
            t, f = ranges(D, m)
            defended = [i for i in range(D.n) if decide_masks(D, i, t, f) is Decision.IN]
            failure = None
            for a in defended:
                grown = m | 1 << a
                if grown not in admissible:
                    failure = f"{_set(D, grown)} not {prefix}-admissible"
                    break
                gt, gf = ranges(D, grown)
                for b in defended:
                    if decide_masks(D, b, gt, gf) is not Decision.IN:
                        failure = f"{D.statements[b]} not decisively in after adding {D.statements[a]}"
                        break
                if failure:
                    break
            rep.add(f"{prefix}-fundamental-lemma", name, f"E={_set(D, m)}" + (f": {failure}" if failure else ""),
                    failure is None)
    return rep


def check_inclusions(D: AdfInstance) -> Report:
    rep = Report()
    name = _name(D)
    fam = {s: set(extension_masks(D, s)) for s in SEMANTICS}

    def subset(theorem, small, big):
        extra = small - big
        rep.add(theorem, name, "ok" if not extra else "extra " + ",".join(_set(D, m) for m in sorted(extra)),
                not extra)

    subset("stable-within-aa-preferred", fam["stable"], fam["aa-preferred"])
    subset("cc-preferred-within-cc-complete", fam["cc-preferred"], fam["cc-complete"])
    subset("aa-preferred-within-aa-complete", fam["aa-preferred"], fam["aa-complete"])
    subset("pd-acyclic-cf-within-cf", fam["pd-acyclic-conflict-free"], fam["conflict-free"])
    subset("stable-within-model", fam["stable"], fam["model"])
    subset("model-within-cf", fam["model"], fam["conflict-free"])
    subset("cc-complete-within-cc-admissible", fam["cc-complete"], fam["cc-admissible"])
    subset("aa-complete-within-aa-admissible", fam["aa-complete"], fam["aa-admissible"])
    (g,) = fam["grounded"]
    rep.add("grounded-least-cc-complete", name, _set(D, g),
            g in fam["cc-complete"] and all(g & ~m == 0 for m in fam["cc-complete"]))
    bad = [m for m in fam["conflict-free"] if range_masks(D, m)[1] & ~acyclic_range_masks(D, m)[1]]
    rep.add("discarded-within-acyclic-discarded", name,
            "ok" if not bad else ",".join(_set(D, m) for m in bad), not bad)
    return rep


def gamma_prime_grounded(D: AdfInstance) -> tuple[int, int]:
    """Least fixpoint of the pair operator (acc, reb), by brute force over intermediate sets."""
    acc = reb = 0
    while True:
        space = D.full & ~reb
        between = [acc | sub for sub in iter_submasks(space & ~acc)] if acc & reb == 0 else []
        new_acc = new_reb = 0
        for r in range(D.n):
            values = {D.cond[r](x) for x in between}
            if values <= {True}:
                new_acc |= 1 << r
            if values <= {False}:
                new_reb |= 1 << r
        if (new_acc, new_reb) == (acc, reb):
            return acc, reb
        acc, reb = new_acc, new_reb


def check_gamma_prime_equivalence(D: AdfInstance) -> Report:
    rep = Report()
    acc, _ = gamma_prime_grounded(D)
    it = grounded_mask(D)
    rep.add("gamma-prime-grounded-equivalence", _name(D), f"pair={_set(D, acc)} iterative={_set(D, it)}", acc == it)
    return rep


# ---------------------------------------------------------------------------
# oracle equivalence


def min_dec_brute(D: AdfInstance, x: bool, i: int) -> set[tuple[int, int]]:
    want = Decision.IN if x else Decision.OUT
    par = D.par_mask[i]
    dec = [(t, a & ~t) for a in iter_submasks(par) for t in iter_submasks(a)
           if decide_by_completions(D, i, t, a & ~t) is want]
    return {(t, f) for t, f in dec
            if not any((t2, f2) != (t, f) and t2 & ~t == 0 and f2 & ~f == 0 for t2, f2 in dec)}


def check_oracle_equivalence(D: AdfInstance, *, semantics: bool = True) -> Report:
    """Compare every optimized path against its definitional counterpart, exhaustively."""
    rep = Report()
    name = _name(D)
    labelings = list(all_three_valued(D.statements))

    bad = next(((i, v) for v in labelings for i in range(D.n)
                if decide_masks(D, i, v.tmask, v.fmask) is not decide_by_completions(D, i, v.tmask, v.fmask)), None)
    rep.add("decisiveness-fast-equals-completions", name,
            f"{D.statements[bad[0]]} under {bad[1]}" if bad else "all", bad is None)

    bad_md = [(x, i) for x in (True, False) for i in range(D.n) if set(min_dec_masks(D, x, i)) != min_dec_brute(D, x, i)]
    rep.add("min-dec-equals-brute-force", name, str(bad_md) if bad_md else "all", not bad_md)

    bad = None
    for a_mask in range(1 << D.n):
        for i in iter_bits(a_mask):
            evaluations = list(enumerate_masks(D, a_mask, i))
            for v in labelings:
                fast = unblocked_exists_masks(D, a_mask, i, v.tmask, v.fmask)
                slow = any(not _blocked_mask(v.tmask, v.fmask, seq, steps) for seq, steps in evaluations)
                if fast != slow:
                    bad = f"A={_set(D, a_mask)} s={D.statements[i]} v={v}"
                    break
            if bad:
                break
        if bad:
            break
    rep.add("fixpoint-equals-enumeration", name, bad or "all", bad is None)

    bad = next((v for v in labelings
                if gamma_masks(D, v.tmask, v.fmask) != gamma_by_expansion(D, v.tmask, v.fmask)), None)
    rep.add("gamma-equals-expansion", name, str(bad) if bad else "all", bad is None)

    if semantics:
        fast = {s: extension_masks(D, s) for s in SEMANTICS}
        with oracle_paths():
            slow = {s: extension_masks(D, s) for s in SEMANTICS}
        diff = [s for s in SEMANTICS if fast[s] != slow[s]]
        rep.add("semantics-fast-equals-oracle", name, ",".join(diff) or "all", not diff)
    return rep


# ---------------------------------------------------------------------------
# Dung AFs


def _attacks(af: DungAf) -> tuple[dict[str, int], dict[int, int]]:
    index = {a: i for i, a in enumerate(af.arguments)}
    attackers = {i: 0 for i in range(len(af.arguments))}
    for a, b in af.attacks:
        attackers[index[b]] |= 1 << index[a]
    return index, attackers


def dung_extensions(af: DungAf, name: str) -> list[frozenset[str]]:
    """Admissible/complete/grounded/preferred/stable sets of ``af`` computed from the classical definitions."""
    n = len(af.arguments)
    _, attackers = _attacks(af)
    full = (1 << n) - 1

    def attacked_by(e: int) -> int:
        return sum(1 << b for b in range(n) if attackers[b] & e)

    def conflict_free(e: int) -> bool:
        return not any(attackers[a] & e for a in iter_bits(e))

    def defended(e: int) -> int:
        hit = attacked_by(e)
        return sum(1 << a for a in range(n) if attackers[a] & ~hit == 0)

    def admissible(e: int) -> bool:
        return conflict_free(e) and e & ~defended(e) == 0

    if name == "grounded":
        e = 0
        while defended(e) != e:
            e = defended(e)
        found = [e]
    elif name == "admissible":
        found = [e for e in range(full + 1) if admissible(e)]
    elif name == "complete":
        found = [e for e in range(full + 1) if admissible(e) and defended(e) == e]
    elif name == "preferred":
        adm = [e for e in range(full + 1) if admissible(e)]
        found = [e for e in adm if not any(o != e and o & e == e for o in adm)]
    elif name == "stable":
        found = [e for e in range(full + 1) if conflict_free(e) and attacked_by(e) | e == full]
    else:
        raise ValueError(f"unknown Dung semantics {name!r}")
    return [frozenset(af.arguments[i] for i in iter_bits(e)) for e in found]


DUNG_COUNTERPARTS = {
    "admissible": ("cc-admissible", "aa-admissible"),
    "complete": ("cc-complete", "aa-complete"),
    "grounded": ("grounded",),
    "preferred": ("cc-preferred", "aa-preferred"),
    "stable": ("stable",),
}


def check_dung_differential(af: DungAf, label: str = "af") -> Report:
    rep = Report()
    D = from_dung_af(af, name=label)
    for dung_name, adf_names in DUNG_COUNTERPARTS.items():
        expected = set(dung_extensions(af, dung_name))
        for adf_name in adf_names:
            got = {frozenset(D.names(m)) for m in extension_masks(D, adf_name)}
            rep.add(f"dung-{dung_name}-vs-{adf_name}", label,
                    f"dung={_sets(expected)} adf={_sets(got)}", got == expected)
    return rep


# ---------------------------------------------------------------------------
# random instances


_CONNECTIVES = ("atom", "top", "bottom", "not", "and", "or", "imp", "iff")


def _random_formula(rng: random.Random, parents: Sequence[str], depth: int) -> Formula:
    if not parents:
        return Top() if rng.random() < 0.5 else Bottom()
    kind = rng.choice(_CONNECTIVES) if depth > 0 else rng.choice(("atom", "atom", "atom", "top", "bottom"))
    if kind == "atom":
        return Atom(rng.choice(parents))
    if kind == "top":
        return Top()
    if kind == "bottom":
        return Bottom()
    if kind == "not":
        return Not(_random_formula(rng, parents, depth - 1))
    if kind in ("and", "or"):
        args = tuple(_random_formula(rng, parents, depth - 1) for _ in range(rng.randint(2, 3)))
        return And(args) if kind == "and" else Or(args)
    left, right = _random_formula(rng, parents, depth - 1), _random_formula(rng, parents, depth - 1)
    return Imp(left, right) if kind == "imp" else Iff(left, right)


def random_instance(n: int, seed: int, density: float = 0.5, max_depth: int = 3) -> AdfInstance:
    """Deterministic random ADF over statements s0..s{n-1}."""
    if n < 1:
        raise ValueError("need at least one statement")
    rng = random.Random(f"adf:{n}:{seed}:{density}")
    statements = [f"s{i}" for i in range(n)]
    for _ in range(50):
        conditions = {}
        for s in statements:
            parents = [p for p in statements if rng.random() < density]
            conditions[s] = _random_formula(rng, parents, max_depth)
        if density == 0 or any(f.atoms() for f in conditions.values()):
            break
    return AdfInstance(statements, conditions, name=f"random-{n}-{seed}-{density}")


def random_af(n: int, seed: int, p_attack: float = 0.3) -> DungAf:
    rng = random.Random(f"af:{n}:{seed}:{p_attack}")
    args = tuple(f"x{i}" for i in range(n))
    attacks = frozenset((a, b) for a, b in itertools.product(args, args) if rng.random() < p_attack)
    return DungAf(args, attacks)


# ---------------------------------------------------------------------------


def run_theorem_suite(D: AdfInstance, *, max_statements: int = DEFAULT_VERIFY_CAP, oracles: bool = False) -> Report:
    """All theorem checks on one instance; oracle comparisons only on request (exponential)."""
    if D.n > max_statements:
        raise CapExceededError(f"{D.n} statements exceed the verification cap of {max_statements}")
    rep = Report()
    rep.extend(check_correspondences(D))
    rep.extend(check_labeling_theorems(D))
    rep.extend(check_fundamental_lemmas(D))
    rep.extend(check_inclusions(D))
    rep.extend(check_gamma_prime_equivalence(D))
    if oracles:
        rep.extend(check_oracle_equivalence(D))
    return rep
