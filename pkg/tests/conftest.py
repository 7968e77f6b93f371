import importlib

import pytest

from stci import _fallback


def available_backends():
    out = [("python", _fallback)]
    try:
        out.append(("cython", importlib.import_module("stci._core")))
    except ImportError:
        pass
    return out


@pytest.fixture(params=[name for name, _ in available_backends()])
def backend(request):
    return dict(available_backends())[request.param]
