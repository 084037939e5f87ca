def capitalize_first(string: str) -> str:
    """Upper-cases only the first character of a string.

    E.g. "pair" -> "Pair", "lType" -> "LType"
    """
    return string[:1].upper() + string[1:]


def subscript_name(base: str, index: int) -> str:
    """Returns ``base`` for index zero and ``base`` followed by the
    index otherwise, e.g. ("A", 2) -> "A2".
    """
    return base if index == 0 else f"{base}{index}"
