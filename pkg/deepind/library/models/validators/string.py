from pydantic import constr

NonEmptyStr = constr(min_length=1)

IdentifierStr = constr(min_length=1, regex=r"^[A-Za-z_][A-Za-z0-9_']*$")
