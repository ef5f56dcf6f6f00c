from functools import lru_cache

from unitary_simples import kernels

from unitary_simples.abacus import is_unitary
from unitary_simples.partitions import Partition, partitions_of


@lru_cache(maxsize=None)
def unitary_partitions(n: int, e: int) -> tuple[Partition, ...]:
    """All e-unitary partitions of n with fewer than e+1 columns, ambient h = number of columns."""
    return tuple(p for p in partitions_of(n, max_part=e) if p and is_unitary(p, e))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def pytest_addoption(parser) -> None:
    parser.addoption("--backend", choices=kernels.available_backends(), help="kernel backend for the whole run")


def pytest_configure(config) -> None:
    backend = config.getoption("--backend")
    if backend:
        kernels.use_backend(backend)
