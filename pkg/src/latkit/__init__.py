"""Exact toolkit for even lattices, their skew group algebras, local modules and
the braided categories of graded vector spaces they reduce to."""

__version__ = "0.1.0"

from .exact import Matrix, Phase, UnitScalar, hnf, snf  # noqa: E402
from .space import QuadraticSpace, Subgroup, grading_group, is_admissible, is_coisotropic  # noqa: E402
from .lattice import (  # noqa: E402
    DiscriminantForm,
    DiscriminantGroup,
    EvenLattice,
    discriminant_form,
    discriminant_group,
    enumerate_simples,
    make_section,
)
from .algebra import TwoCocycle, build_alpha  # noqa: E402

__all__ = [
    "Matrix",
    "Phase",
    "UnitScalar",
    "snf",
    "hnf",
    "QuadraticSpace",
    "Subgroup",
    "grading_group",
    "is_admissible",
    "is_coisotropic",
    "EvenLattice",
    "DiscriminantGroup",
    "DiscriminantForm",
    "discriminant_group",
    "discriminant_form",
    "make_section",
    "enumerate_simples",
    "TwoCocycle",
    "build_alpha",
]
