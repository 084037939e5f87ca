import pytest

from deepind.library.core.alpha import alpha_eq
from deepind.library.core.environment import Environment
from deepind.library.core.terms import (
    Clause,
    EqualT,
    FunctionRef,
    KTop,
    Lam,
    MapCall,
    PairI,
    PostulateRef,
    Prod,
    SelfCall,
    SetSort,
    Tt,
    apply,
    subterms,
    telescope,
)
from deepind.library.induct import (
    check_coverage,
    check_descent,
    check_scope,
    derive_kt_witness,
)
from deepind.library.induct.kt import kt_signature
from deepind.library.models.diagnostics import DiagnosticCode
from deepind.library.syntax import parse_module
from deepind.library.utilities.exceptions import DiagnosticError
from deepind.tests.utilities.corpus import (
    CORPUS_DECLARATIONS,
    load_corpus_declaration,
)
from deepind.tests.utilities.terms import data, lifted, v


def test_kt_signature(seq_environment):

    expected = telescope(
        [("A", SetSort()), ("x", data("Seq", v("A")))],
        lifted("Seq", v("A"), KTop(v("A")), v("x")),
    )

    assert alpha_eq(kt_signature(seq_environment["Seq"]), expected)


def test_seq_kt(seq_environment):

    witness = derive_kt_witness(seq_environment["Seq"], seq_environment)

    assert witness.function.name == "Seq^KT"
    assert [postulate.name for postulate in witness.postulates] == ["Equal^PairKT"]
    assert witness.equal_map is None

    # forall A B C (e : Equal A (B * C)) ->
    #     Equal^ A (B * C) (K_T A) (Pair^ B C (K_T B) (K_T C)) e
    expected = telescope(
        [
            ("A", SetSort()),
            ("B", SetSort()),
            ("C", SetSort()),
            ("e", EqualT(v("A"), Prod(v("B"), v("C")))),
        ],
        lifted(
            "Equal",
            v("A"),
            Prod(v("B"), v("C")),
            KTop(v("A")),
            lifted("Pair", v("B"), v("C"), KTop(v("B")), KTop(v("C"))),
            v("e"),
        ),
    )

    assert alpha_eq(witness.postulates[0].signature, expected)

    pair_clause = witness.function.clauses[1]

    assert any(
        node == PostulateRef("Equal^PairKT") for node in subterms(pair_clause.body)
    )


def test_lterm_kt(lterm_environment):

    witness = derive_kt_witness(lterm_environment["LTerm"], lterm_environment)

    assert {postulate.name for postulate in witness.postulates} == {
        "Equal^ArrKT",
        "Equal^ListKT",
    }

    # app : LTerm (B -> A) -> ... needs the equality map of the GADT itself.
    assert witness.equal_map is not None
    assert witness.equal_map.name == "LTerm^EqualMap"


def test_ltype_kt(lterm_environment):

    witness = derive_kt_witness(lterm_environment["LType"], lterm_environment)

    # bool : Equal A Bool is discharged by reflexivity.
    assert {postulate.name for postulate in witness.postulates} == {
        "Equal^ArrKT",
        "Equal^ListKT",
    }
    assert witness.equal_map is None


def test_equal_kt():

    declaration, environment = load_corpus_declaration("equal", "Equal")
    witness = derive_kt_witness(declaration, environment)

    assert witness.function.name == "Equal^KT"
    assert witness.postulates == ()


def _clause(function, constructor: str) -> Clause:

    (clause,) = [
        clause
        for clause in function.clauses
        if clause.patterns[-1].constructor == constructor
    ]

    return clause


def _argument_names(clause: Clause):
    return [pattern.name for pattern in clause.patterns[-1].args]


def test_list_kt():

    declaration, environment = load_corpus_declaration("list", "List")
    witness = derive_kt_witness(declaration, environment)

    assert witness.dependencies == ()
    assert _clause(witness.function, "nil").body == Tt()

    clause = _clause(witness.function, "cons")
    (index,) = [pattern.name for pattern in clause.patterns[:-1]]
    _, tail = _argument_names(clause)

    # The lifting of the head is Q_A a, which holds trivially at K_T.
    assert clause.body == PairI((Tt(), SelfCall("List^KT", (v(index),), v(tail))))


def test_rose_kt():

    declaration, environment = load_corpus_declaration("rose", "Rose")
    witness = derive_kt_witness(declaration, environment)

    assert [item.name for item in witness.dependencies] == [
        "List^KT",
        "liftListMap",
    ]

    clause = _clause(witness.function, "node")
    (index,) = [pattern.name for pattern in clause.patterns[:-1]]
    _, children = _argument_names(clause)

    rose = data("Rose", v(index))

    expected = PairI(
        (
            Tt(),
            MapCall(
                "liftListMap",
                (
                    rose,
                    KTop(rose),
                    lifted("Rose", v(index), KTop(v(index))),
                    Lam("z", Lam("_", SelfCall("Rose^KT", (v(index),), v("z")))),
                ),
                v(children),
                apply(FunctionRef("List^KT"), rose, v(children)),
            ),
        )
    )

    assert alpha_eq(clause.body, expected)


ARROW_MODULE = """
data Inf : Set -> Set where
  leaf : forall {A : Set} . A -> Inf A
  branch : forall {A : Set} (B : Set) . (B -> Inf A) -> Inf A
  flags : forall {A : Set} . (Bool -> Inf A) -> Inf A
"""


def test_arrow_argument_kt():

    environment = Environment.from_module(parse_module(ARROW_MODULE))
    witness = derive_kt_witness(environment["Inf"], environment)

    assert witness.dependencies == ()

    # branch: exists Q_B . forall z -> Q_B z -> Inf^ A Q_A (f z)
    clause = _clause(witness.function, "branch")
    (index,) = [pattern.name for pattern in clause.patterns[:-1]]
    binder, function = _argument_names(clause)

    expected = PairI(
        (
            KTop(v(binder)),
            Lam(
                "z",
                Lam(
                    "u",
                    SelfCall("Inf^KT", (v(index),), apply(v(function), v("z"))),
                ),
            ),
        )
    )

    assert alpha_eq(clause.body, expected)

    # flags: forall z -> Inf^ A Q_A (f z), the domain evidence is not bound.
    clause = _clause(witness.function, "flags")
    (function,) = _argument_names(clause)

    expected = Lam("z", SelfCall("Inf^KT", (v(index),), apply(v(function), v("z"))))

    assert alpha_eq(clause.body, expected)


@pytest.mark.parametrize(
    "file_name, name, expected",
    [
        ("seq", "Seq", []),
        ("ptree", "PTree", ["liftPTreeMap"]),
        ("lterm", "LType", []),
        ("lterm", "LTerm", ["LType^KT", "List^KT", "liftListMap"]),
    ],
)
def test_kt_dependencies(file_name, name, expected):

    declaration, environment = load_corpus_declaration(file_name, name)
    witness = derive_kt_witness(declaration, environment)

    assert [item.name for item in witness.dependencies] == expected


@pytest.mark.parametrize("file_name, name", CORPUS_DECLARATIONS)
def test_kt_checks(file_name, name):

    declaration, environment = load_corpus_declaration(file_name, name)
    witness = derive_kt_witness(declaration, environment)

    assert check_coverage(witness.function, declaration) == []
    assert check_scope(witness.function) == []
    assert check_descent(witness.function) == []

    for postulate in witness.postulates:
        assert check_scope(postulate) == []

    for function in witness.dependencies:
        assert check_scope(function) == []


@pytest.mark.parametrize(
    "file_name, name, expected_code",
    [
        ("bush", "Bush", DiagnosticCode.TRULY_NESTED_TYPE),
        ("nested_gadt", "Nest", DiagnosticCode.TRULY_NESTED_GADT),
    ],
)
def test_kt_error(file_name, name, expected_code):

    declaration, environment = load_corpus_declaration(file_name, name)

    with pytest.raises(DiagnosticError) as error_info:
        derive_kt_witness(declaration, environment)

    assert error_info.value.codes == [expected_code]
