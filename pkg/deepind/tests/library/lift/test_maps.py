import pytest

from deepind.library.core.alpha import alpha_eq
from deepind.library.core.terms import MapCall, PredMapT, SelfCall, subterms
from deepind.library.lift import derive_lift_map
from deepind.library.lift.maps import is_mappable, lift_map_signature, referenced_maps
from deepind.library.models.diagnostics import DiagnosticCode
from deepind.library.utilities.exceptions import DiagnosticError
from deepind.tests.utilities.corpus import load_corpus_declaration
from deepind.tests.utilities.terms import data, lifted, v


@pytest.mark.parametrize(
    "file_name, name, expected",
    [
        ("list", "List", True),
        ("rose", "Rose", True),
        ("ptree", "PTree", True),
        ("bush", "Bush", False),
        ("seq", "Seq", False),
        ("equal", "Equal", False),
        ("nested_gadt", "Nest", False),
    ],
)
def test_is_mappable(file_name, name, expected):

    declaration, _ = load_corpus_declaration(file_name, name)
    assert is_mappable(declaration) == expected


def test_lift_map_signature():

    signature = lift_map_signature("List", 1)

    # The conclusion follows the binders of A, Q, Q' and the morphism premise.
    conclusion = signature.body.body.body.codomain

    assert isinstance(signature.body.body.body.domain, PredMapT)
    assert alpha_eq(
        conclusion,
        PredMapT(
            data("List", v("A")),
            lifted("List", v("A"), v("Q")),
            lifted("List", v("A"), v("Q'")),
        ),
    )


@pytest.mark.parametrize(
    "file_name, name, expected_calls",
    [
        ("list", "List", {"liftListMap"}),
        ("rose", "Rose", {"liftRoseMap", "liftListMap"}),
        ("ptree", "PTree", {"liftPTreeMap"}),
    ],
)
def test_derive_lift_map(file_name, name, expected_calls):

    declaration, environment = load_corpus_declaration(file_name, name)
    lift_map = derive_lift_map(declaration, environment)

    assert lift_map.name == f"lift{name}Map"
    assert len(lift_map.clauses) == len(declaration.constructors)

    calls = {
        node.function
        for clause in lift_map.clauses
        for node in subterms(clause.body)
        if isinstance(node, (MapCall, SelfCall))
    }

    assert calls == expected_calls


@pytest.mark.parametrize(
    "file_name, name, expected",
    [("list", "List", []), ("rose", "Rose", ["liftListMap"]), ("ptree", "PTree", [])],
)
def test_referenced_maps(file_name, name, expected):

    declaration, environment = load_corpus_declaration(file_name, name)
    lift_map = derive_lift_map(declaration, environment)

    assert referenced_maps(clause.body for clause in lift_map.clauses) == expected


@pytest.mark.parametrize(
    "file_name, name", [("seq", "Seq"), ("bush", "Bush"), ("equal", "Equal")]
)
def test_derive_lift_map_unsupported(file_name, name):

    declaration, environment = load_corpus_declaration(file_name, name)

    with pytest.raises(DiagnosticError) as error_info:
        derive_lift_map(declaration, environment)

    assert error_info.value.codes == [DiagnosticCode.UNSUPPORTED_MAP]
