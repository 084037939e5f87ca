from deepind.library.lift.builtins import builtin_lifting
from deepind.library.lift.liftings import LiftingRegistry, derive_data_lifting
from deepind.library.lift.maps import derive_lift_map
from deepind.library.lift.obstruction import check_declaration
from deepind.library.lift.shapes import derive_shape_lifting, lift_type

__all__ = [
    builtin_lifting,
    check_declaration,
    derive_data_lifting,
    derive_lift_map,
    derive_shape_lifting,
    lift_type,
    LiftingRegistry,
]
