"""Bundled example states with their exact reference data.

Two distillable NPT examples are transcribed entry by entry: one violates
the reduction criterion, the other satisfies it but is 1-distillable via
an explicit witness.  The subfamily rank point is the parameter choice at
which the Jacobian rank of the fixed-point map is evaluated.
"""

from __future__ import annotations

from fractions import Fraction

from .criteria import WitnessVector
from .family import CheckerParams
from .gaussian import parse_gauss
from .matrices import GMat
from .subfamily import SubfamilyParams


def _params(**tokens) -> CheckerParams:
    return CheckerParams.from_dict({k: parse_gauss(v) for k, v in tokens.items()})


def _matrix(text: str) -> GMat:
    rows = [[parse_gauss(tok) for tok in line.split()] for line in text.strip().splitlines()]
    return GMat.from_rows(rows)


REDUCTION_VIOLATING_PARAMS = _params(
    a="0", b="-1+i", c="-1-i", d="-1+i", e="1-i", f="0", g="1", h="i", i="i",
    j="-1", k="0", l="-1", m="1", n="0", p="1", q="0", r="-1-i", s="0",
)

# N times the state, N = 17.
REDUCTION_VIOLATING_MATRIX = _matrix("""
1  0  -1    0  1     0  0   0  0
0  1  0     0  0     -i 0   -i 0
-1 0  3     0  -1-2i 0  2   0  -2
0  0  0     1  0     0  0   -1+i 0
1  0  -1+2i 0  3     0  2i  0  -2i
0  i  0     0  0     1  0   1  0
0  0  2     0  -2i   0  2   0  -2
0  i  0     -1-i 0   1  0   3  0
0  0  -2    0  2i    0  -2  0  2
""")
REDUCTION_VIOLATING_NORMALIZER = Fraction(17)

ONE_DISTILLABLE_PARAMS = _params(
    a="1", b="1", c="1", d="1+i", e="-1", f="1", g="-i", h="-i", i="-1-i",
    j="1", k="-1+i", l="-1+i", m="1", n="0", p="1", q="i", r="1", s="i",
)

# N times the state, N = 21.
ONE_DISTILLABLE_MATRIX = _matrix("""
2    0    2-i  0    -i 0    -i 0    -1
0    2    0    0    0  2+i  0  1+i  0
2+i  0    3    0    0  0    0  0    -1-i
0    0    0    2    0  -1   0  1+i  0
i    0    0    0    3  0    3  0    -1
0    2-i  0    -1   0  3    0  1    0
i    0    0    0    3  0    3  0    -1
0    1-i  0    1-i  0  1    0  2    0
-1   0    -1+i 0    -1 0    -1 0    1
""")
ONE_DISTILLABLE_NORMALIZER = Fraction(21)

ONE_DISTILLABLE_WITNESS = WitnessVector.from_pairs([
    (
        [parse_gauss("-i"), parse_gauss("1-i"), parse_gauss("1-i")],
        [parse_gauss("1-i"), parse_gauss("-1+i"), parse_gauss("1")],
    ),
    (
        [parse_gauss("1-i"), parse_gauss("i"), parse_gauss("0")],
        [parse_gauss("-1"), parse_gauss("-i"), parse_gauss("1")],
    ),
])

# Parameter point at which the subfamily Jacobian rank is evaluated.
SUBFAMILY_RANK_POINT = SubfamilyParams(
    t=Fraction(1),
    x=Fraction(0),
    y=Fraction(-1),
    a=parse_gauss("-i"),
    b=parse_gauss("1-i"),
    c=parse_gauss("i"),
    f=parse_gauss("1-i"),
    j=parse_gauss("-i"),
    k=parse_gauss("-1+i"),
    l=parse_gauss("0"),
    m=parse_gauss("-1+i"),
    p=parse_gauss("1+i"),
    s=parse_gauss("i"),
)
