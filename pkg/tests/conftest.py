"""Shared fixtures: catalog systems and the pricier derived objects are
session-scoped so the suite builds each of them once."""

import json
from pathlib import Path

import pytest

from jointinv import catalog
from jointinv.documents import parse_system
from jointinv.echelon import rref
from jointinv.liealg import adjoint_fields, coadjoint_fields

DATA_DIR = Path(__file__).parent / "data"


def load_data(name):
    return (DATA_DIR / name).read_text()


@pytest.fixture(scope="session")
def so3():
    return catalog.get("so3").fields


@pytest.fixture(scope="session")
def sl2_triple():
    return catalog.get("sl2_triple").fields


@pytest.fixture(scope="session")
def olver_r4():
    return catalog.get("olver_r4").fields


@pytest.fixture(scope="session")
def sl3_constants():
    return catalog.get("sl3").structure


@pytest.fixture(scope="session")
def sl3_coadjoint(sl3_constants):
    return coadjoint_fields(sl3_constants)


@pytest.fixture(scope="session")
def sl3_adjoint(sl3_constants):
    return adjoint_fields(sl3_constants)


@pytest.fixture(scope="session")
def sl3_coadjoint_echelon(sl3_coadjoint):
    return rref(sl3_coadjoint)


@pytest.fixture(scope="session")
def solvable_r4_system():
    return parse_system(load_data("solvable_r4_system.json"))


@pytest.fixture(scope="session")
def solvable_r4_docs():
    return {
        "i1": json.loads(load_data("solvable_r4_i1.json")),
        "i2": json.loads(load_data("solvable_r4_i2.json")),
        "i2_perturbed": json.loads(load_data("solvable_r4_i2_perturbed.json")),
    }
