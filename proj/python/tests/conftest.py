import os
import pathlib

import pytest

DATA = pathlib.Path(os.environ.get("HUEON_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture
def data_dir() -> pathlib.Path:
    return DATA
