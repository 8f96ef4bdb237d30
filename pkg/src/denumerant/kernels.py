"""Hot-kernel dispatch.

The compiled extension ``denumerant._kernels`` is used when it imports;
otherwise the pure-Python twins in ``_kernels_py`` are used.  Setting
``DENUMERANT_PURE_PYTHON=1`` forces the fallback.  Call sites go through
this module's attributes so :func:`use` can switch implementations at
runtime (the kernel benchmark relies on that).
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_NAMES = ("mulmod", "dp_count", "cseries_exp", "cseries_log", "residue_scan")

IMPLEMENTATIONS = {"python": _kernels_py}
if _compiled is not None:
    IMPLEMENTATIONS["cython"] = _compiled

ACTIVE = None


def use(name: str) -> None:
    """Bind the kernel functions of implementation ``name`` ("cython" or "python")."""
    global ACTIVE
    try:
        impl = IMPLEMENTATIONS[name]
    except KeyError:
        raise ValueError(
            f"kernel implementation {name!r} unavailable; have {sorted(IMPLEMENTATIONS)}"
        ) from None
    g = globals()
    for fn in _NAMES:
        g[fn] = getattr(impl, fn)
    ACTIVE = name


def available() -> list[str]:
    return sorted(IMPLEMENTATIONS)


if _compiled is not None and os.environ.get("DENUMERANT_PURE_PYTHON", "") in ("", "0"):
    use("cython")
else:
    use("python")
