"""Hot-loop backend selection.

The compiled ``_ckernels`` extension is used when importable; otherwise the
pure-Python ``_pykernels`` implementations are used. ``BACKEND`` names the
active one.
"""

from . import _pykernels

try:
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    _impl = _pykernels
    BACKEND = "python"

LAWS = _pykernels.LAWS

law_witnesses = _impl.law_witnesses
prime_filter_masks = _impl.prime_filter_masks
converse_sweep = _impl.converse_sweep


def backends():
    """Available backend modules keyed by name (pure Python always present)."""
    out = {"python": _pykernels}
    if BACKEND == "cython":
        out["cython"] = _impl
    return out
