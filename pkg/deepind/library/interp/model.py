from pydantic import BaseModel, Field, conint, validator

from deepind.library.config import settings


class FinModel(BaseModel):
    """The bounds of a finite set interpretation.

    Every type variable left free in an enumerated type is interpreted as a
    carrier of ``carrier_size`` atoms, ``String`` as a set of ``string_atoms``
    atoms and ``Bool`` as a set of two. Values of data types are enumerated up
    to ``depth`` nested constructors.
    """

    class Config:
        allow_mutation = False
        extra = "forbid"

    carrier_size: conint(ge=1) = Field(
        settings.CARRIER_SIZE, description="The number of atoms of each carrier."
    )
    depth: conint(ge=1) = Field(
        settings.DEPTH, description="The maximum number of nested constructors."
    )

    function_cap: conint(ge=1) = Field(
        settings.FUNCTION_CAP,
        description="The largest function space which may be enumerated.",
    )
    table_cap: conint(ge=1) = Field(
        settings.TABLE_CAP,
        description="The largest number of predicate tables which may be searched "
        "for a single existentially quantified predicate.",
    )
    string_atoms: conint(ge=1) = Field(
        settings.STRING_ATOMS, description="The number of atoms of ``String``."
    )

    @validator("carrier_size")
    def _validate_carrier_size(cls, value):

        assert value <= settings.CARRIER_CAP, (
            f"carriers may contain at most {settings.CARRIER_CAP} atoms"
        )
        return value
