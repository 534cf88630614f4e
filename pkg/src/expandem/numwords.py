"""Integer <-> English cardinal word conversion for 0..9999."""

from __future__ import annotations

from .errors import OutOfRange, Unparseable

ONES = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen",
]

TENS = ["twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"]

ORDINAL_ONES = [
    "zeroth", "first", "second", "third", "fourth", "fifth", "sixth", "seventh",
    "eighth", "ninth", "tenth", "eleventh", "twelfth", "thirteenth", "fourteenth",
    "fifteenth", "sixteenth", "seventeenth", "eighteenth", "nineteenth",
]

_ONES_MAP = {w: i for i, w in enumerate(ONES)}
_TENS_MAP = {w: (i + 2) * 10 for i, w in enumerate(TENS)}

MAX_WORDABLE = 9999


def _under_hundred(n: int) -> str:
    if n < 20:
        return ONES[n]
    tens, ones = divmod(n, 10)
    word = TENS[tens - 2]
    return f"{word}-{ONES[ones]}" if ones else word


def number_to_words(n: int) -> str:
    """Render 0..9999 as English words with hyphenated tens."""
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= MAX_WORDABLE:
        raise OutOfRange(f"number_to_words supports 0..{MAX_WORDABLE}, got {n!r}")
    if n == 0:
        return "zero"
    parts = []
    thousands, rest = divmod(n, 1000)
    hundreds, under = divmod(rest, 100)
    if thousands:
        parts.append(f"{ONES[thousands]} thousand")
    if hundreds:
        parts.append(f"{ONES[hundreds]} hundred")
    if under:
        parts.append(_under_hundred(under))
    return " ".join(parts)


def words_to_number(text: str) -> int:
    """Invert number_to_words; raises Unparseable on anything else."""
    tokens = text.strip().lower().replace("-", " ").split()
    if not tokens:
        raise Unparseable("empty number text")
    if tokens == ["zero"]:
        return 0
    total = 0
    current = 0
    expect = "unit"  # ones value awaiting a possible scale word
    for tok in tokens:
        if tok in ("thousand", "hundred"):
            scale = 1000 if tok == "thousand" else 100
            if current == 0:
                raise Unparseable(f"dangling scale word in {text!r}")
            total += current * scale
            current = 0
            expect = "unit"
        elif tok in _TENS_MAP:
            if current:
                raise Unparseable(f"unexpected tens word in {text!r}")
            current = _TENS_MAP[tok]
            expect = "ones"
        elif tok in _ONES_MAP:
            value = _ONES_MAP[tok]
            if expect == "ones" and value >= 10:
                raise Unparseable(f"unexpected teens after tens in {text!r}")
            if expect == "ones":
                current += value
            else:
                if current:
                    raise Unparseable(f"unexpected ones word in {text!r}")
                current = value
            expect = "scale"
        else:
            raise Unparseable(f"unknown number word {tok!r}")
    total += current
    if total > MAX_WORDABLE:
        raise Unparseable(f"{text!r} exceeds the supported range")
    return total


def ordinal_words(n: int) -> str:
    """English ordinal words for 0..9999 ("fifteenth", "ninety-first")."""
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= MAX_WORDABLE:
        raise OutOfRange(f"ordinal_words supports 0..{MAX_WORDABLE}, got {n!r}")
    cardinal = number_to_words(n)
    head, _, last = cardinal.rpartition(" ")
    hyphen_head, _, hyphen_last = last.rpartition("-")
    word = hyphen_last
    if word in _ONES_MAP:
        ordinal = ORDINAL_ONES[_ONES_MAP[word]]
    elif word.endswith("y"):
        ordinal = word[:-1] + "ieth"
    else:
        ordinal = word + "th"
    rebuilt = f"{hyphen_head}-{ordinal}" if hyphen_head else ordinal
    return f"{head} {rebuilt}" if head else rebuilt


def ordinal_digits(n: int) -> str:
    """Digit ordinal like 1st, 2nd, 3rd, 12th."""
    if 10 <= n % 100 <= 20:
        suffix = "th"
    else:
        suffix = {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")
    return f"{n}{suffix}"
