import itertools

import pytest
from hypothesis import strategies as st

from sl2tqft.ring import IntPoly, Scalar


def sl2_elements(p):
    """SL(2, F_p) by plain enumeration, independent of sl2tqft.oracle."""
    return [m for m in itertools.product(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p == 1]


def mat2(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def inv2(x, p):
    a, b, c, d = x
    return (d % p, -b % p, -c % p, a % p)


polys = st.lists(st.integers(-6, 6), max_size=5).map(IntPoly)
nonzero_polys = polys.filter(lambda f: not f.is_zero())
scalars = st.builds(Scalar, polys, nonzero_polys)
nonzero_scalars = scalars.filter(lambda s: not s.is_zero())


@pytest.fixture(scope="session")
def ops():
    from sl2tqft.operators import operators

    return operators()


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, passed: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = (passed, detail)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'} {detail}".rstrip())
