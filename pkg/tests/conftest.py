"""Shared fixture loading for the test suite."""

from pathlib import Path

import pytest

from rackkit import LinkDiagram, RackTable, parse_diagram, parse_rack_table

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Pinned fixture contents.  Each test run re-parses the files and checks them
# against these literals so that an edited fixture cannot silently shift the
# frozen expectations elsewhere in the suite.
RACK_TABLES = {
    "ex2": ((3, 3, 3), (1, 1, 1), (2, 2, 2)),
    "ex3": ((2, 2, 2), (1, 1, 1), (3, 3, 3)),
    "T5": (
        (1, 3, 2, 1, 1),
        (3, 2, 1, 2, 2),
        (2, 1, 3, 3, 3),
        (4, 4, 4, 5, 5),
        (5, 5, 5, 4, 4),
    ),
    "Q6": (
        (1, 3, 2, 1, 1, 1),
        (3, 2, 1, 2, 2, 2),
        (2, 1, 3, 3, 3, 3),
        (4, 4, 4, 4, 6, 5),
        (5, 5, 5, 6, 5, 4),
        (6, 6, 6, 5, 4, 6),
    ),
    "R6": (
        (1, 1, 2, 2, 1, 1),
        (2, 2, 1, 1, 2, 2),
        (3, 3, 3, 3, 4, 4),
        (4, 4, 4, 4, 3, 3),
        (6, 6, 5, 5, 5, 5),
        (5, 5, 6, 6, 6, 6),
    ),
    "MX6": (
        (2, 2, 2, 2, 2, 2),
        (1, 1, 1, 1, 1, 1),
        (4, 4, 4, 4, 4, 4),
        (3, 3, 3, 3, 3, 3),
        (6, 6, 6, 6, 6, 6),
        (5, 5, 5, 5, 5, 5),
    ),
    "MY6": (
        (2, 2, 2, 2, 2, 2),
        (3, 3, 3, 3, 3, 3),
        (1, 1, 1, 1, 1, 1),
        (5, 5, 5, 5, 5, 5),
        (6, 6, 6, 6, 6, 6),
        (4, 4, 4, 4, 4, 4),
    ),
    "dihedral3": ((1, 3, 2), (3, 2, 1), (2, 1, 3)),
    "triv1": ((1,),),
    "triv2": ((1, 1), (2, 2)),
}

LINK_NAMES = (
    "trefoil",
    "unknot",
    "hopf",
    "trefoil_kink",
    "trefoil_r2",
    "trefoil_r1pair",
)


def load_rack(name: str) -> RackTable:
    table = parse_rack_table((FIXTURES / f"{name}.rack").read_text())
    assert table.entries == RACK_TABLES[name], f"fixture {name}.rack drifted"
    return table


def load_link(name: str) -> LinkDiagram:
    assert name in LINK_NAMES
    return parse_diagram((FIXTURES / f"{name}.link").read_text())


@pytest.fixture(scope="session")
def racks() -> dict[str, RackTable]:
    return {name: load_rack(name) for name in RACK_TABLES}


@pytest.fixture(scope="session")
def links() -> dict[str, LinkDiagram]:
    return {name: load_link(name) for name in LINK_NAMES}
