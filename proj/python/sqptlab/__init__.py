# Copyright 2026 the sqptlab authors
# SPDX-License-Identifier: Apache-2.0
"""Quantum process tomography in the vector representation."""

try:
    from ._core import *  # noqa: F401,F403
    from . import _core as _core  # noqa: F401
except ImportError:  # pragma: no cover - in-build-tree fallback
    # When running from the source tree the extension lives in the CMake
    # build directory; SQPTLAB_CORE_DIR points the loader at it.
    import importlib.util as _ilu
    import os as _os
    import sys as _sys

    _core_dir = _os.environ.get("SQPTLAB_CORE_DIR")
    if not _core_dir:
        raise
    _spec = None
    for _name in _os.listdir(_core_dir):
        if _name.startswith("_core") and _name.endswith((".so", ".pyd")):
            _spec = _ilu.spec_from_file_location(
                "sqptlab._core", _os.path.join(_core_dir, _name)
            )
            break
    if _spec is None:
        raise
    _core = _ilu.module_from_spec(_spec)
    _sys.modules["sqptlab._core"] = _core
    _spec.loader.exec_module(_core)
    for _attr in dir(_core):
        if not _attr.startswith("_"):
            globals()[_attr] = getattr(_core, _attr)

__all__ = [name for name in dir(_core) if not name.startswith("_")]
