"""The package namespace re-exports the documented surface."""

import maniquery


def test_all_names_resolve():
    for name in maniquery.__all__:
        assert hasattr(maniquery, name), name


def test_version_string():
    parts = maniquery.__version__.split(".")
    assert len(parts) == 3
    assert all(p.isdigit() for p in parts)
