"""ORCAS codes: recursive Plotkin concatenations of naturally punctured
repeated simplex codes and their duals, with density-evolution construction,
successive cancellation decoding, a polar-code baseline, and a Monte Carlo
BLER simulator."""

try:
    from ._core import *  # noqa: F401,F403  (installed wheel layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # pragma: no cover - development layout
    import glob as _glob
    import importlib.util as _ilu
    import os as _os

    _ext_dir = _os.environ.get("ORCAS_EXT_DIR", "")
    _candidates = _glob.glob(_os.path.join(_ext_dir, "_core*.so")) if _ext_dir else []
    if not _candidates:
        raise
    _spec = _ilu.spec_from_file_location(__name__ + "._core", _candidates[0])
    _core = _ilu.module_from_spec(_spec)
    _spec.loader.exec_module(_core)
    globals().update({k: v for k, v in vars(_core).items() if not k.startswith("_")})
    __version__ = _core.__version__
