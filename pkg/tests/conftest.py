import pytest

from fibvar.closed_form import solve_closed_form
from fibvar.fibonacci import fib
from fibvar.moments import fib_moment_series, moment_table
from fibvar.partitions import r_table


@pytest.fixture(scope="session")
def counts_2000():
    return r_table(2000)


@pytest.fixture(scope="session")
def series_f28():
    """V(F_m) for m = 2..28 from one table build."""
    return fib_moment_series(28)


@pytest.fixture(scope="session")
def moments_f16():
    return moment_table(fib(16))


@pytest.fixture(scope="session")
def solution():
    return solve_closed_form()
