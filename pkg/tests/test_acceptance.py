"""One test per acceptance criterion, exact equality throughout.

Each test records a PASS/FAIL line (printed in the terminal summary) with
the measured time against the budget.  Expected values are literals here,
independent of the constants used by ``tropmoduli verify``.
"""

import time

import pytest

from tropmoduli import cli

from .conftest import ACCEPTANCE_LINES

BURKHARDT = (
    (85, 600, 880),
    {"a": 40, "b": 45, "aa": 240, "ab": 360, "aaa": 160, "aab": 720},
    {"a": ([40], [2]), "b": ([45], [2]), "aa": ([240], [3]), "ab": ([360], [3]),
     "aaa": ([160], [3]), "aab": ([720], [4])},
)
IDENTITIES = {name: True for name in (
    "burkhardt_parametrization", "singular_point", "local_rank2", "coble_pfaffian",
    "icosahedral_discriminant", "segre_igusa")}
E6 = (
    [36, 120, 270, 270, 720, 540, 45, 216, 540, 120, 1080, 27, 36, 216, 360],
    750,
    {"a": 36, "b": 40, "c": 270},
    [7, 12],
    346,
    (76, 630, 1620, 1215),
    {"a": 36, "b": 40, "aa": 270, "ab": 360, "aaa": 540, "aab": 1080, "aaaa": 135, "aaab": 1080},
    True,
    (36, 120, 40),
)
E7 = (6091, sorted([63, 336, 630, 36, 2016, 315, 1008]), 1065, 135, {15},
      {"F8=F2+F24": 2016, "F9=F1+F1+F1": 315, "F16=F1+F24": 1008})

CRITERIA = [
    (1, "Berg(M0N(6)) face vector", cli._check_m0n6, (56, 490, 1260, 945), 5),
    (2, "Segre and Igusa images", cli._check_segre_igusa,
     ((25, 105, 105), [1], (25, 105, 105), [2], True, 5), 5),
    (3, "Berg(G32)", cli._check_g32,
     ((170, 1800, 3360), 1729, (40, 90, 40), (480, 1440, 1440), (240, 360, 480, 360, 360)), 60),
    (4, "trop(B)", cli._check_burkhardt, BURKHARDT, 60),
    (5, "group orders", cli._check_groups, (720, 25920), 30),
    (6, "support bijection", cli._check_support, (45, 45, [16], True), 60),
    (7, "balancing", cli._check_balancing, [0, 0, 0], 120),
    (8, "circuit oracle", cli._check_circuits, (0, 0), 120),
    (9, "trees and curves", cli._check_trees, (0, 0, 7, ("2", "4", "6"), 0), 120),
    (10, "Kummer fibers", cli._check_kummer, ((30, 24, 6), (33, 24, 9), 0), 10),
    (11, "identity suite", cli._check_identities, IDENTITIES, 60),
    (12, "E6 suite", cli._check_e6, E6, 30 * 60),
    (13, "E7 suite", cli._check_e7, E7, 12 * 3600),
]


def _param(c):
    marks = [pytest.mark.slow] if c[0] in (12, 13) else []
    return pytest.param(*c, id=f"criterion{c[0]}", marks=marks)


@pytest.mark.parametrize("number,title,check,expected,budget", [_param(c) for c in CRITERIA])
def test_criterion(number, title, check, expected, budget):
    t0 = time.time()
    _, actual = check(0)
    seconds = round(time.time() - t0, 1)
    ok = actual == expected and seconds <= budget
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({seconds}s, budget {budget}s)"
    if actual != expected:
        line += f"\n    expected {expected}\n    actual   {actual}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert actual == expected
    assert seconds <= budget
