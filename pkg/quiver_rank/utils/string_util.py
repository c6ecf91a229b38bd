import re
from typing import Optional, Tuple, List


def capture(input: str, regex: str, pattern_flags: int = 0, groupnum: int = 1, fail_gently: bool = False) -> Optional[str]:
    pattern = re.compile(regex, pattern_flags)
    match = pattern.fullmatch(input)
    if match is None:
        if not fail_gently:
            raise ValueError(f'Attempt to match {regex} on {input} at group {groupnum} failed.')
        return None
    captured_text = match.group(groupnum)
    return captured_text


RATIONAL_LITERAL = r'\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*'


def split_rational(literal: str) -> Tuple[int, int]:
    """
    Splits a rational literal such as '-3/4' or '5' into (numerator, denominator).
    Raises ValueError on anything else, including a zero denominator.
    """
    numerator = int(capture(literal, RATIONAL_LITERAL, groupnum=1))
    denominator = capture(literal, RATIONAL_LITERAL, groupnum=2, fail_gently=True)
    denominator = 1 if denominator is None else int(denominator)
    if denominator == 0:
        raise ValueError(f'Zero denominator in {literal}.')
    return numerator, denominator


def split_names(text: str) -> List[str]:
    # "1, 3 ,a" -> ['1', '3', 'a']; empty pieces are dropped
    return [piece.strip() for piece in text.split(',') if len(piece.strip()) > 0]
