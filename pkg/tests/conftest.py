from fractions import Fraction

import pytest

from heckeq import LaurentPoly, YoungDiagram


@pytest.fixture
def q():
    return LaurentPoly.q()


def Y(*rows: int) -> YoungDiagram:
    return YoungDiagram(tuple(rows))


def P(text: str) -> LaurentPoly:
    return LaurentPoly.from_string(text)


def F(*args) -> Fraction:
    return Fraction(*args)
