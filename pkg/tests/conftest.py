import pytest

from helpers import FIXTURES


@pytest.fixture
def figure1_text():
    return (FIXTURES / "figure1.krn").read_text(encoding="utf-8")


@pytest.fixture
def figure1(figure1_text):
    from durion.kern import parse_kern

    return parse_kern(figure1_text)
