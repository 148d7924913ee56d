import pytest

from hbn import arith


@pytest.fixture(autouse=True)
def size_hook(request):
    # Unit tests run with the tsize <= bitsize hook and the loop-measure
    # assertions on.  The acceptance suite measures wall time, so it runs
    # the library as shipped.
    if request.module.__name__.endswith("test_acceptance"):
        yield
        return
    old = arith.DEBUG
    arith.DEBUG = True
    try:
        yield
    finally:
        arith.DEBUG = old
