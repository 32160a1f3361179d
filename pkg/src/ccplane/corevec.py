"""Backend selection for the 3-vector kernels.

The compiled extension is preferred when it imported cleanly; the
pure-Python twin is the fallback and is also forced when the
environment variable ``CCPLANE_BACKEND`` is set to ``python``.
"""

import os

_forced = os.environ.get("CCPLANE_BACKEND", "").strip().lower()

if _forced == "python":
    from . import _corevec_py as _impl
elif _forced in ("", "auto", "compiled"):
    try:
        from . import _corevec as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _forced == "compiled":
            raise
        from . import _corevec_py as _impl
else:
    raise ImportError(f"unknown CCPLANE_BACKEND value: {_forced!r}")

BACKEND = "compiled" if _impl.COMPILED else "python"

minner = _impl.minner
mcross = _impl.mcross
mnormalize_point = _impl.mnormalize_point
mnormalize_space = _impl.mnormalize_space
mdist = _impl.mdist
mtangent = _impl.mtangent
mgeo_point = _impl.mgeo_point
mreflect = _impl.mreflect
mfoot = _impl.mfoot
mmid = _impl.mmid

sdot = _impl.sdot
scross = _impl.scross
snormalize = _impl.snormalize
sdist = _impl.sdist
stangent = _impl.stangent
sgeo_point = _impl.sgeo_point
sfoot = _impl.sfoot
smid = _impl.smid
