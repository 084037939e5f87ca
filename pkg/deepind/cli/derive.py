import logging
import os
from typing import List, Optional, Tuple

import click
from click_option_group import optgroup

from deepind.cli.utilities import generate_click_command
from deepind.library.core.environment import Environment
from deepind.library.emit import emit_json, emit_text
from deepind.library.induct import (
    derive_deep_rule,
    derive_kt_witness,
    derive_structural_rule,
    synth_witness,
)
from deepind.library.lift import LiftingRegistry, derive_lift_map
from deepind.library.lift.maps import is_mappable
from deepind.library.syntax import parse_module
from deepind.library.utilities.exceptions import DiagnosticError

logger = logging.getLogger(__name__)


def derive_artifacts(
    name: str,
    environment: Environment,
    rule: str = "deep",
    witness: bool = False,
    kt: bool = False,
    lift_map: bool = False,
    monomorphic: bool = False,
) -> List[Tuple[str, object]]:
    """Derives the requested artifacts of a declaration as ``(label, artifact)``
    pairs, the lifting first.

    Raises
    ------
    DiagnosticError
        If any requested artifact cannot be derived.
    """

    declaration = environment[name]

    artifacts = [("lifting", LiftingRegistry(environment).lifting(name))]

    if rule in ("deep", "both"):
        artifacts.append(
            ("deep", derive_deep_rule(declaration, environment, monomorphic))
        )
    if rule in ("structural", "both"):
        artifacts.append(
            (
                "structural",
                derive_structural_rule(declaration, environment, monomorphic),
            )
        )

    if witness:
        artifacts.append(("witness", synth_witness(declaration, environment)))
    if kt:
        artifacts.append(("kt", derive_kt_witness(declaration, environment)))
    if lift_map:
        artifacts.append(("map", derive_lift_map(declaration, environment)))

    return artifacts


def _derive_options() -> List[click.option]:

    return [
        click.option(
            "--decl",
            "declaration_name",
            default=None,
            type=click.STRING,
            help="The declaration to derive artifacts for. By default every "
            "declaration of the file with at least one index is used.",
        ),
        optgroup.group("Artifacts", help="The artifacts to derive."),
        optgroup.option(
            "--rule",
            default="deep",
            type=click.Choice(["deep", "structural", "both", "none"]),
            help="The induction rule(s) to derive.",
            show_default=True,
        ),
        optgroup.option(
            "--witness/--no-witness",
            default=False,
            help="Whether to also synthesize the soundness witness of the deep "
            "induction rule.",
            show_default=True,
        ),
        optgroup.option(
            "--kt/--no-kt",
            default=False,
            help="Whether to also derive the witness that the lifting holds for "
            "the constantly true predicates.",
            show_default=True,
        ),
        optgroup.option(
            "--map/--no-map",
            "lift_map",
            default=False,
            help="Whether to also derive the map function of the lifting.",
            show_default=True,
        ),
        optgroup.option(
            "--monomorphic/--polymorphic",
            default=False,
            help="Whether to fix the indices of an ADT outside of the rule "
            "predicate.",
            show_default=True,
        ),
        optgroup.group("Output", help="How the artifacts are emitted."),
        optgroup.option(
            "--format",
            "output_format",
            default="text",
            type=click.Choice(["text", "json"]),
            help="The format to emit the artifacts in.",
            show_default=True,
        ),
        optgroup.option(
            "--unicode/--ascii",
            default=False,
            help="Whether to use unicode symbols in text output.",
            show_default=True,
        ),
        optgroup.option(
            "--out",
            "output_directory",
            default=None,
            type=click.Path(file_okay=False),
            help="The directory to write one file per declaration and artifact "
            "to. By default the artifacts are written to the standard output.",
        ),
    ]


def derive_command():
    def base_function(
        source: str,
        file_path: str,
        declaration_name: Optional[str],
        rule: str,
        witness: bool,
        kt: bool,
        lift_map: bool,
        monomorphic: bool,
        output_format: str,
        unicode: bool,
        output_directory: Optional[str],
    ):

        module = parse_module(source)
        environment = Environment.from_module(module)

        if declaration_name is None:

            names = [
                declaration.name
                for declaration in module.declarations
                if declaration.arity > 0
            ]

        elif declaration_name not in environment.module_names:

            raise click.BadParameter(
                f"{declaration_name} is not declared in {file_path}",
                param_hint="--decl",
            )

        else:
            names = [declaration_name]

        if output_directory is not None:
            os.makedirs(output_directory, exist_ok=True)

        extension = "txt" if output_format == "text" else "json"

        outputs, diagnostics = [], []

        for name in names:

            include_map = lift_map and (
                declaration_name is not None or is_mappable(environment[name])
            )

            try:
                artifacts = derive_artifacts(
                    name,
                    environment,
                    rule,
                    witness,
                    kt,
                    include_map,
                    monomorphic,
                )
            except DiagnosticError as error:
                diagnostics.extend(error.diagnostics)
                continue

            for label, artifact in artifacts:

                content = (
                    emit_text(artifact, unicode)
                    if output_format == "text"
                    else emit_json(artifact)
                )

                if output_directory is None:
                    outputs.append(content)
                    continue

                output_path = os.path.join(
                    output_directory, f"{name}.{label}.{extension}"
                )

                with open(output_path, "w", encoding="utf-8") as file:
                    file.write(f"{content}\n")

                logger.info(f"wrote {output_path}")

        if len(outputs) > 0:
            click.echo(("\n\n" if output_format == "text" else "\n").join(outputs))

        if len(diagnostics) > 0:
            raise DiagnosticError(diagnostics)

    return generate_click_command(
        click.command(
            "derive",
            help="Derive the lifting, induction rules and witnesses of the "
            "declarations of FILE.",
        ),
        _derive_options(),
        base_function,
    )
