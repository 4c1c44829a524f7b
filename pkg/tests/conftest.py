import pytest

from spinmcg import groups as gr


@pytest.fixture(scope="session")
def sp_closures():
    """Packed Sp(2g, Z2) for g = 2, 3 (the g = 3 closure takes a few seconds)."""
    return {g: gr.closure(gr.sp_transvection_generators(g)) for g in (2, 3)}


@pytest.fixture(scope="session")
def orthogonal_codes(sp_closures):
    return {g: gr.form_stabilizer(codes, 2 * g) for g, codes in sp_closures.items()}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS

    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[k])
