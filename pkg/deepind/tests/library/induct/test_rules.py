import pytest

from deepind.library.core.alpha import alpha_eq
from deepind.library.core.terms import (
    App,
    Arr,
    CtorRef,
    EqualT,
    HypRef,
    Lam,
    Pi,
    Prod,
    RuleKind,
    SetSort,
    apply,
    telescope,
)
from deepind.library.induct import (
    derive_deep_rule,
    derive_hypotheses,
    derive_structural_hypotheses,
    derive_structural_rule,
)
from deepind.library.induct.rules import deep_conclusion
from deepind.library.lift.liftings import lifting_signature
from deepind.library.models.diagnostics import DiagnosticCode
from deepind.library.utilities.exceptions import DiagnosticError
from deepind.tests.utilities.corpus import (
    CORPUS_DECLARATIONS,
    load_corpus_declaration,
)
from deepind.tests.utilities.terms import data, lifted, predicate_type, v


def test_seq_hypotheses(seq_environment):

    hypotheses = derive_hypotheses(seq_environment["Seq"], seq_environment)

    assert [hypothesis.name for hypothesis in hypotheses] == [
        "dIndConst",
        "dIndPair",
    ]

    # forall A Q_A (a : A) -> Q_A a -> P A Q_A (const a)
    expected_const = Lam(
        "P",
        telescope(
            [("A", SetSort()), ("Q_A", predicate_type("A")), ("a", v("A"))],
            Arr(
                apply(v("Q_A"), v("a")),
                apply(v("P"), v("A"), v("Q_A"), apply(CtorRef("const"), v("a"))),
            ),
        ),
        lifting_signature("Seq", 1),
    )

    assert alpha_eq(hypotheses[0].term, expected_const)

    expected_pair = Lam(
        "P",
        telescope(
            [
                ("A", SetSort()),
                ("B", SetSort()),
                ("C", SetSort()),
                ("Q_A", predicate_type("A")),
                ("Q_B", predicate_type("B")),
                ("Q_C", predicate_type("C")),
                ("e", EqualT(v("A"), Prod(v("B"), v("C")))),
                ("s_B", data("Seq", v("B"))),
                ("s_C", data("Seq", v("C"))),
            ],
            Arr(
                lifted(
                    "Equal",
                    v("A"),
                    Prod(v("B"), v("C")),
                    v("Q_A"),
                    lifted("Pair", v("B"), v("C"), v("Q_B"), v("Q_C")),
                    v("e"),
                ),
                Arr(
                    apply(v("P"), v("B"), v("Q_B"), v("s_B")),
                    Arr(
                        apply(v("P"), v("C"), v("Q_C"), v("s_C")),
                        apply(
                            v("P"),
                            v("A"),
                            v("Q_A"),
                            apply(
                                CtorRef("pair"),
                                v("B"),
                                v("C"),
                                v("e"),
                                v("s_B"),
                                v("s_C"),
                            ),
                        ),
                    ),
                ),
            ),
        ),
        lifting_signature("Seq", 1),
    )

    assert alpha_eq(hypotheses[1].term, expected_pair)


def test_seq_deep_rule(seq_environment):

    rule = derive_deep_rule(seq_environment["Seq"], seq_environment)

    assert rule.name == "dIndSeq"
    assert rule.kind == RuleKind.DEEP
    assert [hypothesis.name for hypothesis in rule.hypotheses] == [
        "dIndConst",
        "dIndPair",
    ]

    expected = Pi(
        "P",
        lifting_signature("Seq", 1),
        Arr(
            App(HypRef("dIndConst"), (v("P"),)),
            Arr(
                App(HypRef("dIndPair"), (v("P"),)),
                deep_conclusion(seq_environment["Seq"], "P"),
            ),
        ),
    )

    assert alpha_eq(rule.statement, expected)


def test_deep_conclusion(seq_environment):

    expected = telescope(
        [
            ("A", SetSort()),
            ("Q_A", predicate_type("A")),
            ("s", data("Seq", v("A"))),
        ],
        Arr(
            lifted("Seq", v("A"), v("Q_A"), v("s")),
            apply(v("P"), v("A"), v("Q_A"), v("s")),
        ),
    )

    assert alpha_eq(deep_conclusion(seq_environment["Seq"], "P"), expected)


def test_seq_structural_rule(seq_environment):

    rule = derive_structural_rule(seq_environment["Seq"], seq_environment)

    assert rule.name == "indSeq"
    assert rule.kind == RuleKind.STRUCTURAL

    hypotheses = derive_structural_hypotheses(seq_environment["Seq"], seq_environment)
    assert [hypothesis.name for hypothesis in hypotheses] == ["sIndConst", "sIndPair"]

    # forall A (a : A) -> P A (const a)
    expected_const = telescope(
        [("A", SetSort()), ("a", v("A"))],
        apply(v("P"), v("A"), apply(CtorRef("const"), v("a"))),
    )

    assert alpha_eq(hypotheses[0].term.body, expected_const)


def test_equal_rule():

    declaration, environment = load_corpus_declaration("equal", "Equal")
    rule = derive_deep_rule(declaration, environment)

    assert rule.name == "dIndEqual"
    assert [hypothesis.name for hypothesis in rule.hypotheses] == ["dIndRefl"]


@pytest.mark.parametrize("file_name, name", CORPUS_DECLARATIONS)
def test_derive_corpus_rules(file_name, name):

    declaration, environment = load_corpus_declaration(file_name, name)

    deep = derive_deep_rule(declaration, environment)
    structural = derive_structural_rule(declaration, environment)

    assert deep.name == f"dInd{name}"
    assert structural.name == f"ind{name}"

    assert len(deep.hypotheses) == len(declaration.constructors)
    assert len(structural.hypotheses) == len(declaration.constructors)


def test_monomorphic_list_rule():

    declaration, environment = load_corpus_declaration("list", "List")

    rule = derive_structural_rule(declaration, environment, monomorphic=True)

    # forall A (P : List A -> Set) -> P nil ->
    #     (forall a l -> P l -> P (cons a l)) -> forall l -> P l
    expected = telescope(
        [("A", SetSort()), ("P", Arr(data("List", v("A")), SetSort()))],
        Arr(
            apply(v("P"), CtorRef("nil")),
            Arr(
                telescope(
                    [("a", v("A")), ("l_A", data("List", v("A")))],
                    Arr(
                        apply(v("P"), v("l_A")),
                        apply(v("P"), apply(CtorRef("cons"), v("a"), v("l_A"))),
                    ),
                ),
                Pi("l", data("List", v("A")), apply(v("P"), v("l"))),
            ),
        ),
    )

    assert rule.hypotheses == ()
    assert alpha_eq(rule.statement, expected)


def test_monomorphic_gadt_falls_back(seq_environment):

    polymorphic = derive_deep_rule(seq_environment["Seq"], seq_environment)
    monomorphic = derive_deep_rule(
        seq_environment["Seq"], seq_environment, monomorphic=True
    )

    assert alpha_eq(polymorphic, monomorphic)


@pytest.mark.parametrize(
    "file_name, name, expected_code",
    [
        ("nested_gadt", "Nest", DiagnosticCode.TRULY_NESTED_GADT),
    ],
)
def test_derive_rule_error(file_name, name, expected_code):

    declaration, environment = load_corpus_declaration(file_name, name)

    with pytest.raises(DiagnosticError) as error_info:
        derive_deep_rule(declaration, environment)

    assert error_info.value.codes == [expected_code]
