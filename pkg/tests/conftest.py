import numpy as np
import pytest

from szego_model import BlaschkeProduct, CircleGrid

THREE_ZERO = ((0.5, 1), (-0.3 + 0.4j, 2))
TWO_ZERO = ((0.5, 1), (-0.3 + 0.4j, 1))


@pytest.fixture
def B_id():
    return BlaschkeProduct.identity()


@pytest.fixture
def B_half():
    return BlaschkeProduct(((0.5, 1),))


@pytest.fixture
def B_two():
    return BlaschkeProduct(TWO_ZERO)


@pytest.fixture
def B_three():
    return BlaschkeProduct(THREE_ZERO)


@pytest.fixture
def grid():
    return CircleGrid(4096)


@pytest.fixture
def grid8k():
    return CircleGrid(8192)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE: list[tuple[int, str]] = []


@pytest.fixture
def criterion():
    """Print and remember one PASS/FAIL line per acceptance criterion."""
    def record(number: int, title: str, passed: bool, detail: str) -> bool:
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title} | {detail}"
        print(line)
        _ACCEPTANCE.append((number, line))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
