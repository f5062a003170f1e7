import numpy as np
import pytest

from opineq import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    _kernels.warm_up()


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


def random_complex(rng, n):
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def random_hermitian(rng, n):
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (A + A.conj().T)
