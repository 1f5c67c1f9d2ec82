import pytest
from hypothesis import settings

from repetend import config
from repetend.group import StarElement
from repetend.words import CircularWord, FiniteWord, char_digit

settings.register_profile("det", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("det")


@pytest.fixture(autouse=True)
def _default_cap():
    config.period_cap = config.DEFAULT_PERIOD_CAP
    yield
    config.period_cap = config.DEFAULT_PERIOD_CAP


def fw(text: str, base: int = 10) -> FiniteWord:
    return FiniteWord(tuple(char_digit(c) for c in text), base)


def cw(text: str, base: int = 10) -> CircularWord:
    return CircularWord(tuple(char_digit(c) for c in text), base)


def star(text: str, base: int = 10) -> StarElement:
    return StarElement.of(cw(text, base))
