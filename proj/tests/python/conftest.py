import os
import shutil
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("ETALE_CLI") or shutil.which("etale") or str(ROOT / "build" / "etale")
    if not Path(path).exists():
        pytest.skip("etale executable not built")
    return path


@pytest.fixture(scope="session")
def catalog():
    return Path(os.environ.get("ETALE_DATA_DIR", ROOT / "data")) / "table_2_1.json"
