"""Fixed test corpus shared by the acceptance and theorem tests."""

from __future__ import annotations

import random
from dataclasses import dataclass

from gradedhilbert.groups import Group, cyclic, dihedral, klein_four, symmetric


@dataclass(frozen=True)
class Case:
    name: str
    group: Group
    dims: tuple[int, ...]


def _groups() -> dict[str, Group]:
    gs = {f"Z{n}": cyclic(n) for n in range(2, 9)}
    gs["V4"] = klein_four()
    gs["D3"] = dihedral(3)
    gs["D4"] = dihedral(4)
    gs["S3"] = symmetric(3)
    gs["S4"] = symmetric(4)
    return gs


GROUPS = _groups()


def _random_dims(name: str, s: int) -> tuple[int, ...]:
    rng = random.Random(f"corpus-{name}")
    return tuple(rng.randint(0, 3) for _ in range(s))


def _transposition(g: Group) -> int:
    return next(i for i in range(1, g.order) if g.labels[i].count(" ") == 1)


def _build() -> list[Case]:
    cases = []
    for name, g in GROUPS.items():
        s = g.order
        cases.append(Case(f"{name}-ones", g, (1,) * s))
        cases.append(Case(f"{name}-random", g, _random_dims(name, s)))
    # trivial gradings
    z2, z4, z6, s3 = GROUPS["Z2"], GROUPS["Z4"], GROUPS["Z6"], GROUPS["S3"]
    cases += [
        Case("Z2-trivial-x", z2, (0, 2)),
        Case("Z4-trivial-gen", z4, (0, 1, 0, 0)),
        Case("Z4-trivial-order2", z4, (0, 0, 3, 0)),
        Case("Z6-trivial-order3", z6, (0, 0, 2, 0, 0, 0)),
        Case("Z5-trivial-e", GROUPS["Z5"], (3, 0, 0, 0, 0)),
        Case("S3-trivial-transposition", s3, tuple(2 if i == _transposition(s3) else 0 for i in range(6))),
        Case("Z3-zero", GROUPS["Z3"], (0, 0, 0)),
    ]
    # two-block gradings: support exactly {e, x}
    cases += [
        Case("Z2-two-block", z2, (1, 1)),
        Case("Z3-two-block", GROUPS["Z3"], (2, 1, 0)),
        Case("Z4-two-block", z4, (1, 0, 2, 0)),
        Case("Z6-two-block", z6, (2, 3, 0, 0, 0, 0)),
        Case("D4-two-block", GROUPS["D4"], (1, 0, 0, 0, 0, 0, 2, 0)),
        Case("S3-two-block", s3, tuple({0: 1, _transposition(s3): 1}.get(i, 0) for i in range(6))),
        Case("V4-two-block", GROUPS["V4"], (3, 0, 1, 0)),
    ]
    # nontrivial with no identity piece
    cases += [
        Case("Z4-outside", z4, (0, 1, 0, 1)),
        Case("Z3-outside", GROUPS["Z3"], (0, 1, 1)),
    ]
    return cases


CORPUS = _build()
