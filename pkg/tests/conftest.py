import json
from importlib import resources

import hypothesis
import pytest

hypothesis.settings.register_profile(
    "suite",
    derandomize=True,
    deadline=None,
    max_examples=60,
)
hypothesis.settings.load_profile("suite")


@pytest.fixture(scope="session")
def schema_loader():
    def load(name):
        path = resources.files("cayleypotts").joinpath(f"schemas/{name}")
        return json.loads(path.read_text(encoding="utf-8"))

    return load
