import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from ncquadric import (GradedModule, end_algebra, run_pipeline,
                       syzygy_presentation)
from ncquadric.presentation import parse_file

from helpers import load_context

ROOT = pathlib.Path(__file__).resolve().parent.parent
INPUTS = ROOT / "inputs"


@pytest.fixture(scope="session")
def golden_parsed():
    return parse_file(str(INPUTS / "quadric3.pres"))


@pytest.fixture(scope="session")
def golden_report(golden_parsed):
    # degree 8 so the numeric Koszul certificate reaches degree 8
    return run_pipeline(golden_parsed, degree=8, seed=0,
                        input_label="quadric3")


@pytest.fixture(scope="session")
def golden_ctx():
    return load_context(INPUTS / "quadric3.pres", bound=8)


@pytest.fixture(scope="session")
def golden_end(golden_ctx):
    return end_algebra(golden_ctx)


@pytest.fixture(scope="session")
def golden_module(golden_ctx):
    return GradedModule(golden_ctx.quotient, syzygy_presentation(golden_ctx))


@pytest.fixture(scope="session")
def node_ctx():
    return load_context(INPUTS / "node.pres", bound=6)


@pytest.fixture(scope="session")
def nodeq_ctx():
    return load_context(INPUTS / "node_rational.pres", bound=6)


@pytest.fixture(scope="session")
def cusp_ctx():
    return load_context(INPUTS / "cusp.pres", bound=6)
