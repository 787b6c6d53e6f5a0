from .closed_forms import (
    LinearFormValue,
    linear_form,
    type1,
    type1_alt_equivalence,
    type1_meixner1_alt,
    type2,
)
from .params import (
    FAMILY_NAMES,
    Charlier,
    FamilyParams,
    Hahn,
    Kravchuk,
    MeixnerI,
    MeixnerII,
    params_from_json,
)
from .prefactors import PrefactoredPolynomial, PrefactorToken
from .recurrence import RecurrenceCoefficients, nnrc
from .weights import mass_cancellation, weight, weight_mass_token

__all__ = [
    "LinearFormValue", "linear_form", "type1", "type1_alt_equivalence",
    "type1_meixner1_alt", "type2",
    "FAMILY_NAMES", "Charlier", "FamilyParams", "Hahn", "Kravchuk",
    "MeixnerI", "MeixnerII", "params_from_json",
    "PrefactoredPolynomial", "PrefactorToken",
    "RecurrenceCoefficients", "nnrc",
    "mass_cancellation", "weight", "weight_mass_token",
]
