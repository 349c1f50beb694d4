"""Decision procedures for simplicity, centers and Lie simplicity of Leavitt
path algebras, Steinberg algebras of finite groupoids and Exel-Pardo
algebras, over exact fields."""

from .exactfield import GF, FieldSpec, Matrix, Q, Subspace, in_span, rank, rref
from .verdicts import InvariantBreach, Kind, Verdict

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FieldSpec",
    "InvariantBreach",
    "Kind",
    "Matrix",
    "Q",
    "Subspace",
    "Verdict",
    "in_span",
    "rank",
    "rref",
]
