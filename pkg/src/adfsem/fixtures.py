"""Small named instances used throughout the tests and scripts."""
from __future__ import annotations

from .model import AdfInstance, parse_adf

FIXTURE_TEXT = {
    # b -> d, a and c, false, d
    "D0": "s(a). s(b). s(c). s(d). ac(a,imp(b,d)). ac(b,and(a,c)). ac(c,c(f)). ac(d,d).",
    "D1": "s(a). s(b). s(c). ac(a,or(neg(c),b)). ac(b,a). ac(c,c).",
    "D1p": "s(a). s(b). s(c). ac(a,or(neg(c),b)). ac(b,a). ac(c,c(v)).",
    "D2": "s(a). s(b). s(c). s(d). ac(a,neg(b)). ac(b,neg(a)). ac(c,and(b,neg(d))). ac(d,d).",
    "A1": "s(a). s(b). s(c). ac(a,neg(a)). ac(b,a). ac(c,or(neg(b),c)).",
    "A2": "s(a). s(b). s(c). ac(a,and(neg(a),b)). ac(b,a). ac(c,neg(b)).",
}


def fixture(name: str) -> AdfInstance:
    return parse_adf(FIXTURE_TEXT[name], name=name)


def all_fixtures() -> dict[str, AdfInstance]:
    return {name: fixture(name) for name in FIXTURE_TEXT}
