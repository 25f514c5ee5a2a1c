"""Import-time choice between the compiled kernel and the pure-Python one."""

try:
    from . import _ckernel as impl
    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _pykernel as impl
    BACKEND = "python"

fm_step = impl.fm_step
reduce_rows = impl.reduce_rows
compose_certs = impl.compose_certs
prepare_rows = impl.prepare_rows
lift_many = impl.lift_many

__all__ = ["BACKEND", "fm_step", "reduce_rows", "compose_certs", "prepare_rows", "lift_many"]
