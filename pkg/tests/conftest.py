import pytest

from thg_zigzag.complex import cap_for_dimension
from thg_zigzag.datasets import load_toy
from thg_zigzag.pipeline import complexes_of, snapshots_of
from thg_zigzag.zigzag import interleave


@pytest.fixture
def toy():
    return load_toy()


@pytest.fixture
def toy_sequence(toy):
    return snapshots_of(toy, 2, 2)


@pytest.fixture
def toy_complexes(toy_sequence):
    return complexes_of(toy_sequence, 1)


@pytest.fixture(params=["union", "intersection"])
def toy_filtration(request, toy_sequence, toy_complexes):
    return interleave(toy_complexes, toy_sequence.mids, request.param)


@pytest.fixture
def cap():
    return cap_for_dimension(1)


ACCEPTANCE = []


@pytest.fixture
def verdict(request):
    """Record a one-line pass/fail result for the acceptance summary."""

    def record(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
